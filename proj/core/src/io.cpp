#include "dpcolor/io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include "dpcolor/errors.hpp"
#include "json.hpp"

namespace dpcolor {

using nlohmann::json;

namespace {

std::string dump(const json& j) { return j.dump(2) + "\n"; }

json parse_json(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw parse_error(std::string("not valid JSON: ") + e.what());
    }
}

int get_nonneg_int(const json& j, const std::string& field) {
    if (!j.contains(field) || !j[field].is_number_integer() || j[field].get<long long>() < 0)
        throw parse_error("field '" + field + "' must be a nonnegative integer");
    return j[field].get<int>();
}

std::pair<int, int> get_int_pair(const json& e, const std::string& where) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
        !e[1].is_number_integer())
        throw parse_error(where + " must be a pair of integers");
    return {e[0].get<int>(), e[1].get<int>()};
}

json graph_to_json_obj(const Graph& g) {
    json j;
    j["n"] = g.n;
    j["edges"] = json::array();
    for (auto [u, v] : g.edges) j["edges"].push_back({u, v});
    return j;
}

Graph graph_from_json_obj(const json& j, const std::string& prefix) {
    if (!j.is_object()) throw parse_error(prefix + "graph must be a JSON object");
    int n = get_nonneg_int(j, "n");
    if (!j.contains("edges") || !j["edges"].is_array())
        throw parse_error(prefix + "field 'edges' must be an array");
    std::vector<std::pair<int, int>> edges;
    for (std::size_t i = 0; i < j["edges"].size(); ++i)
        edges.push_back(get_int_pair(j["edges"][i], prefix + "edges[" + std::to_string(i) + "]"));
    return make_graph(n, std::move(edges));
}

std::vector<std::vector<int>> get_int_lists(const json& j, const std::string& field) {
    if (!j.contains(field) || !j[field].is_array())
        throw parse_error("field '" + field + "' must be an array of integer arrays");
    std::vector<std::vector<int>> out;
    for (std::size_t u = 0; u < j[field].size(); ++u) {
        const json& row = j[field][u];
        std::string where = field + "[" + std::to_string(u) + "]";
        if (!row.is_array()) throw parse_error(where + " must be an array of integers");
        std::vector<int> ids;
        for (const json& x : row) {
            if (!x.is_number_integer() || x.get<long long>() < 0)
                throw parse_error(where + " must hold nonnegative integers");
            ids.push_back(x.get<int>());
        }
        out.push_back(std::move(ids));
    }
    return out;
}

} // namespace

std::string graph_to_edge_list(const Graph& g) {
    std::ostringstream out;
    out << g.n << ' ' << g.m() << '\n';
    for (auto [u, v] : g.edges) out << u << ' ' << v << '\n';
    return out.str();
}

Graph graph_from_edge_list(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0, n = -1;
    long long m = -1, seen = 0;
    std::vector<std::pair<int, int>> edges;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.find_first_not_of(" \t") == std::string::npos) continue;
        std::istringstream ls(line);
        long long a, b;
        std::string extra;
        if (!(ls >> a >> b) || (ls >> extra))
            throw parse_error("line " + std::to_string(lineno) + ": expected two integers");
        if (n < 0) {
            if (a < 0 || b < 0)
                throw parse_error("line " + std::to_string(lineno) +
                                  ": header 'n m' must be nonnegative");
            n = static_cast<int>(a);
            m = b;
        } else {
            if (++seen > m)
                throw parse_error("line " + std::to_string(lineno) + ": more than " +
                                  std::to_string(m) + " edges");
            edges.emplace_back(static_cast<int>(a), static_cast<int>(b));
        }
    }
    if (n < 0) throw parse_error("empty edge-list input, expected a header line 'n m'");
    if (seen != m)
        throw parse_error("header announced " + std::to_string(m) + " edges but " +
                          std::to_string(seen) + " followed");
    return make_graph(n, std::move(edges));
}

std::string graph_to_json(const Graph& g) { return dump(graph_to_json_obj(g)); }

Graph graph_from_json(const std::string& text) {
    return graph_from_json_obj(parse_json(text), "");
}

Graph load_graph(const std::string& path) {
    std::string text = read_file(path);
    if (path.size() >= 5 && path.compare(path.size() - 5, 5, ".json") == 0)
        return graph_from_json(text);
    return graph_from_edge_list(text);
}

std::string cover_to_json(const Cover& c) {
    json j;
    j["base"] = graph_to_json_obj(c.base);
    j["lists"] = json::array();
    for (const auto& L : c.lists) j["lists"].push_back(L);
    j["h_edges"] = json::array();
    for (auto [x, y] : c.h_edges) j["h_edges"].push_back({x, y});
    return dump(j);
}

Cover cover_from_json(const std::string& text) {
    json j = parse_json(text);
    if (!j.is_object()) throw parse_error("cover must be a JSON object");
    if (!j.contains("base")) throw parse_error("field 'base' missing");
    Cover c;
    c.base = graph_from_json_obj(j["base"], "base: ");
    c.lists = get_int_lists(j, "lists");
    if (static_cast<int>(c.lists.size()) != c.base.n)
        throw parse_error("field 'lists' must have one entry per base vertex (" +
                          std::to_string(c.base.n) + ")");
    // first ownership; cross-list duplicates are left for axiom validation
    std::map<int, int> owner;
    for (int u = 0; u < c.base.n; ++u) {
        auto& L = c.lists[u];
        std::sort(L.begin(), L.end());
        if (std::adjacent_find(L.begin(), L.end()) != L.end())
            throw parse_error("lists[" + std::to_string(u) + "] repeats a cover vertex");
        for (int x : L) owner.insert({x, u});
    }
    if (!j.contains("h_edges") || !j["h_edges"].is_array())
        throw parse_error("field 'h_edges' must be an array");
    for (std::size_t i = 0; i < j["h_edges"].size(); ++i) {
        std::string where = "h_edges[" + std::to_string(i) + "]";
        auto [x, y] = get_int_pair(j["h_edges"][i], where);
        if (x == y) throw parse_error(where + " is a loop");
        auto ox = owner.find(x), oy = owner.find(y);
        if (ox != owner.end() && oy != owner.end() && ox->second == oy->second)
            throw parse_error(where + " lies inside L(" + std::to_string(ox->second) +
                              "); intra-list cliques are implicit and must not be stored");
        c.h_edges.emplace_back(std::min(x, y), std::max(x, y));
    }
    std::sort(c.h_edges.begin(), c.h_edges.end());
    c.h_edges.erase(std::unique(c.h_edges.begin(), c.h_edges.end()), c.h_edges.end());
    return c;
}

Cover load_cover(const std::string& path) { return cover_from_json(read_file(path)); }

std::string list_assignment_to_json(const ListAssignment& la) {
    json j;
    j["lists"] = json::array();
    for (const auto& L : la.lists) j["lists"].push_back(L);
    return dump(j);
}

ListAssignment list_assignment_from_json(const std::string& text) {
    json j = parse_json(text);
    if (!j.is_object()) throw parse_error("list assignment must be a JSON object");
    ListAssignment la;
    if (!j.contains("lists") || !j["lists"].is_array())
        throw parse_error("field 'lists' must be an array of integer arrays");
    for (std::size_t u = 0; u < j["lists"].size(); ++u) {
        const json& row = j["lists"][u];
        std::string where = "lists[" + std::to_string(u) + "]";
        if (!row.is_array()) throw parse_error(where + " must be an array of integers");
        std::vector<int> colors;
        for (const json& x : row) {
            if (!x.is_number_integer())
                throw parse_error(where + " must hold integers");
            colors.push_back(x.get<int>());
        }
        la.lists.push_back(std::move(colors));
    }
    return la;
}

ListAssignment load_list_assignment(const std::string& path) {
    return list_assignment_from_json(read_file(path));
}

namespace {

json solve_result_obj(const SolveResult& r) {
    json j;
    j["status"] = r.satisfiable ? "sat" : "unsat";
    j["nodes"] = r.stats.nodes;
    if (r.witness)
        j["witness"] = *r.witness;
    else
        j["witness"] = nullptr;
    return j;
}

} // namespace

std::string solve_result_to_json(const SolveResult& r) { return dump(solve_result_obj(r)); }

std::string validation_to_json(const CoverValidation& v) {
    json j;
    j["ok"] = v.ok();
    j["empty_lists"] = v.empty_lists;
    j["violations"] = json::array();
    for (const auto& viol : v.violations)
        j["violations"].push_back({{"axiom", viol.axiom}, {"detail", viol.detail}});
    return dump(j);
}

std::string bounds_report_to_json(const BoundsReport& b, const ZdpNBounds& nb) {
    json j;
    j["formulas"]["basic"] = "3m";
    j["formulas"]["refined"] = "3m - (3/2)(k-1)n, valid when min_degree >= k-1";
    j["formulas"]["n_upper"] = "floor(3n^2/2)";
    j["formulas"]["n_lower"] = "n^2/4 - n, even n >= 6";
    j["inputs"] = {{"n", b.n}, {"m", b.m}, {"chi", b.k}, {"min_degree", b.delta}};
    j["upper_basic"] = b.upper_basic;
    j["refined_applicable"] = b.refined_applicable;
    j["refined_twice"] = b.refined_twice;
    j["upper_refined"] = b.upper_refined;
    j["n_bounds"]["upper"] = nb.upper;
    if (nb.lower)
        j["n_bounds"]["lower"] = *nb.lower;
    else
        j["n_bounds"]["lower"] = nullptr;
    return dump(j);
}

std::string sigma_report_to_json(const SigmaReport& s) {
    json j;
    j["formula"] = "sigma(v) = max(deg(v) + |A| - |L(v)| + 1, 0)";
    j["condition"] = "2|A| >= 3*sigma_total";
    j["list_guard_condition"] = "every dominating list size >= |A| + k";
    j["inputs"] = {{"a_size", s.a_size}, {"chi", s.k}};
    j["per_vertex"] = s.per_vertex;
    j["sigma_total"] = s.total;
    j["condition_holds"] = s.condition_holds;
    j["list_guard"] = s.list_guard;
    j["certified"] = s.certified();
    return dump(j);
}

std::string hard_report_to_json(const HardInstanceReport& r) {
    json j;
    j["n"] = r.n;
    j["k"] = r.k;
    j["a_size"] = r.a_size;
    j["list_size"] = r.list_size;
    j["chi_join"] = r.chi_join;
    j["axioms_ok"] = r.axioms_ok;
    j["matchings_perfect"] = r.matchings_perfect;
    j["list_size_equals_chi"] = r.list_size_equals_chi;
    j["structure_ok"] = r.structure_ok();
    j["refuted"] = r.refuted;
    if (r.refutation)
        j["refutation"] = solve_result_obj(*r.refutation);
    else
        j["refutation"] = nullptr;
    j["certified_uncolorable"] = r.certified_uncolorable();
    return dump(j);
}

std::string hard_labels_to_json(const HardInstance& h) {
    json j;
    j["n"] = h.n;
    j["k"] = h.k;
    json labels = json::object();
    for (int u = 0; u < h.base.n; ++u)
        for (int id : h.cover.lists[u]) {
            auto d = h.decode(id);
            labels[std::to_string(id)] = {h.vertex_names[d[0]], d[1], d[2]};
        }
    j["labels"] = std::move(labels);
    return dump(j);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw parse_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << content;
    if (!out) throw std::runtime_error("write failed: " + path);
}

} // namespace dpcolor
