#pragma once

#include <vector>

#include "p4wis/graph.hpp"
#include "p4wis/solve_options.hpp"
#include "p4wis/solve_result.hpp"

namespace p4wis {

/// Maximum weight independent set of a (P4+P4, Triangle)-free graph.
///
/// For every induced P4 (a, b, c, d) three candidates are formed: the best
/// set containing {a, c}, the best containing {b, d}, and the best set inside
/// {a, d} ∪ L ∪ A(V(P)), where L holds the vertices of S_b ∪ S_c isolated in
/// G[S_b ∪ S_c ∪ A(V(P))]. The answer is the best of those candidates and the
/// best set avoiding every vertex that lies on an induced P4.
///
/// Throws ClassViolation on a triangle or when the case analysis meets an
/// induced P4+P4. With `options.record_leaves` the result carries one
/// LeafRecord per base case. The result does not depend on `options.jobs`.
SolveResult solve(const Graph& g, const SolveOptions& options = {});

/// Vertex subsets, each inducing a bipartite subgraph, such that every
/// maximal independent set lies inside some member.
struct CoverFamily {
  std::vector<VertexSet> members;  ///< sorted, duplicate-free
};

struct CoverResult {
  SolveResult result;  ///< leaves always populated
  CoverFamily family;
};

/// solve() with leaf recording where the {a, d} candidate is widened: for
/// every b' in S_b \ L an extra constrained solve over sets containing
/// {a, b', d}, and symmetrically {d, c', a} for every c' in S_c \ L.
CoverResult solve_with_cover(const Graph& g, const SolveOptions& options = {});

/// Engineering budget for the family size, 10 * n^8 (saturating).
std::uint64_t cover_budget(std::size_t n);

}  // namespace p4wis
