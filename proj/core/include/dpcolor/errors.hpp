#ifndef DPCOLOR_ERRORS_HPP
#define DPCOLOR_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace dpcolor {

/// Thrown when an exact search exceeds its configured node or cover budget.
/// The toolkit never degrades to an approximate answer; it fails loudly instead.
class resource_limit_error : public std::runtime_error {
public:
    explicit resource_limit_error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Thrown on malformed input files; the message names the offending field or line.
class parse_error : public std::runtime_error {
public:
    explicit parse_error(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace dpcolor

#endif
