#pragma once

#include "p4wis/graph.hpp"
#include "p4wis/solve_result.hpp"

namespace p4wis {

/// Maximum weight independent set of G[host] when every nontrivial component
/// is complete bipartite: take each singleton and, per nontrivial component,
/// the heavier side (ties go to the side holding the smallest id). Linear in
/// the size of G[host]. Relies on weights being nonnegative.
///
/// Throws StructureViolation when some nontrivial component is not complete
/// bipartite.
SolveResult solve_cb_components(const Graph& g, const VertexSet& host);

/// Maximum weight independent set of an arbitrary bipartite G[host] through
/// a minimum vertex cover cut. Throws StructureViolation when G[host] has an
/// odd cycle.
SolveResult solve_bipartite(const Graph& g, const VertexSet& host);

}  // namespace p4wis
