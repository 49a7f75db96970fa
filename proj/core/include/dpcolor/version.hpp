#ifndef DPCOLOR_VERSION_HPP
#define DPCOLOR_VERSION_HPP

namespace dpcolor {

inline constexpr const char* toolkit_version = "0.1.0";
inline constexpr int schema_version = 1;

} // namespace dpcolor

#endif
