#ifndef DPCOLOR_IO_HPP
#define DPCOLOR_IO_HPP

#include <string>

#include "dpcolor/bounds.hpp"
#include "dpcolor/constructions.hpp"
#include "dpcolor/cover.hpp"
#include "dpcolor/graph.hpp"
#include "dpcolor/solver.hpp"

namespace dpcolor {

// Graph formats.
//
// Edge-list text: first line "n m", then m lines "u v" (0-indexed); output is
// canonicalized with u < v. JSON: {"n": int, "edges": [[u,v], ...]}.
// load_graph picks the format by extension (.json vs anything else).

std::string graph_to_edge_list(const Graph& g);
Graph graph_from_edge_list(const std::string& text);
std::string graph_to_json(const Graph& g);
Graph graph_from_json(const std::string& text);
Graph load_graph(const std::string& path);

// Cover JSON: {"base": <graph>, "lists": [[ids...] per base vertex],
// "h_edges": [[x,y], ...]}. Intra-list clique edges are implicit; explicit
// ones are rejected by the parser.

std::string cover_to_json(const Cover& c);
Cover cover_from_json(const std::string& text);
Cover load_cover(const std::string& path);

// List assignments: {"lists": [[colors...] per vertex]}.

std::string list_assignment_to_json(const ListAssignment& la);
ListAssignment list_assignment_from_json(const std::string& text);
ListAssignment load_list_assignment(const std::string& path);

// Reports. All emission is deterministic: object keys are sorted and no
// timing data is included.

std::string solve_result_to_json(const SolveResult& r);
std::string validation_to_json(const CoverValidation& v);
std::string bounds_report_to_json(const BoundsReport& b, const ZdpNBounds& nb);
std::string sigma_report_to_json(const SigmaReport& s);
std::string hard_report_to_json(const HardInstanceReport& r);
std::string hard_labels_to_json(const HardInstance& h);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

} // namespace dpcolor

#endif
