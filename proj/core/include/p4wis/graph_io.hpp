#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "p4wis/graph.hpp"
#include "p4wis/recognition.hpp"
#include "p4wis/solve_result.hpp"
#include "p4wis/solver.hpp"

namespace p4wis {

/// Reads the text format
///
///   p wis <n> <m>
///   v <id> <weight>     (n lines, ids 1..n)
///   e <u> <v>           (m lines)
///
/// Lines starting with '#' and blank lines are skipped. Every vertex must be
/// declared exactly once. Throws ParseError carrying the 1-based line number.
Graph parse_graph(std::string_view text);
Graph read_graph_file(const std::string& path);

/// Inverse of parse_graph; edges in lexicographic order.
std::string format_graph(const Graph& g);

// JSON renderings used by the command line tool. Vertex ids are 1-based.
// Keys are emitted in a fixed order so equal inputs give equal bytes.
std::string solve_json(const Graph& g, const SolveResult& r);
std::string check_json(const Graph& g, const MembershipVerdict& v);
std::string cover_json(const Graph& g, const CoverResult& c, bool bipartite_ok,
                       std::uint64_t budget);

}  // namespace p4wis
