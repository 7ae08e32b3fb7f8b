#pragma once

#include "p4wis/graph.hpp"
#include "p4wis/recognition.hpp"
#include "p4wis/solve_options.hpp"
#include "p4wis/solve_result.hpp"

namespace p4wis {

/// Maximum weight independent set of G[host] among those containing
/// {p.a, p.c}. G[host] must be (P4+P4, Triangle)-free; violations that the
/// case analysis trips over surface as ClassViolation/StructureViolation.
SolveResult solve_containing_ac(const Graph& g, const VertexSet& host,
                                const InducedP4& p,
                                const SolveOptions& options = {});

/// Same for {p.b, p.d}; equals solve_containing_ac on the reversed path.
SolveResult solve_containing_bd(const Graph& g, const VertexSet& host,
                                const InducedP4& p,
                                const SolveOptions& options = {});

/// Branch vertex rule of the pair chain: among `candidates`, maximize the
/// number of component-sets of G[t] (trivial ones included) contacted; among
/// those, take one whose t-neighborhood is not strictly contained in another
/// maximizer's; ties go to the smallest id. `candidates` must be nonempty.
Vertex select_branch_vertex(const Graph& g, const VertexSet& candidates,
                            const VertexSet& t);

}  // namespace p4wis
