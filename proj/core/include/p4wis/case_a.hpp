#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "p4wis/graph.hpp"
#include "p4wis/solve_result.hpp"
#include "p4wis/solve_options.hpp"

namespace p4wis {

/// The facilitated instance: V = S ⊎ T with S independent and every
/// nontrivial component of G[T] complete bipartite (G[T] is P4-free).
struct CaseAInstance {
  const Graph& graph;
  VertexSet s_part;
  VertexSet t_part;
};

/// Throws InputError unless the instance invariants hold.
void validate(const CaseAInstance& inst);

/// u < v iff v is bi-partial to at least two nontrivial component-sets of
/// G[T \ N(u)].
bool order_less(const CaseAInstance& inst, Vertex u, Vertex v);

/// Directed graph on S with an arc (u, v) whenever u < v.
struct PartialOrderDigraph {
  std::vector<Vertex> nodes;                     ///< ascending
  std::vector<std::pair<Vertex, Vertex>> arcs;   ///< sorted

  /// Nodes with no outgoing arc, ascending.
  std::vector<Vertex> sinks() const;
  /// Some directed cycle (as a vertex sequence) if the digraph has one.
  std::optional<std::vector<Vertex>> find_cycle() const;
};

PartialOrderDigraph build_order_digraph(const CaseAInstance& inst);

/// Maximum weight independent set of G[S ∪ T].
SolveResult solve_case_a(const CaseAInstance& inst,
                         const SolveOptions& options = {});

}  // namespace p4wis
