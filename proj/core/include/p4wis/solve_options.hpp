#pragma once

#include <cstdint>

namespace p4wis {

/// Counters describing how a solve went. Summed across worker threads.
struct SolveStats {
  std::uint64_t nodes = 0;             ///< dispatcher nodes visited
  std::uint64_t complete_bipartite_leaves = 0;     ///< complete bipartite base cases
  std::uint64_t bipartite_leaves = 0;  ///< bipartite (flow) base cases
  std::uint64_t single_contact_nodes = 0;
  std::uint64_t multi_contact_nodes = 0;
  std::uint64_t single_bipartial_nodes = 0;
  std::uint64_t order_sink_nodes = 0;
  std::uint64_t component_pair_branches = 0;
  std::uint64_t merged_entries = 0;        ///< no bi-partial D-vertex; D merged into T
  std::uint64_t two_sided_entries = 0;
  std::uint64_t two_sided_fallback_branches = 0;

  SolveStats& operator+=(const SolveStats& o) {
    nodes += o.nodes;
    complete_bipartite_leaves += o.complete_bipartite_leaves;
    bipartite_leaves += o.bipartite_leaves;
    single_contact_nodes += o.single_contact_nodes;
    multi_contact_nodes += o.multi_contact_nodes;
    single_bipartial_nodes += o.single_bipartial_nodes;
    order_sink_nodes += o.order_sink_nodes;
    component_pair_branches += o.component_pair_branches;
    merged_entries += o.merged_entries;
    two_sided_entries += o.two_sided_entries;
    two_sided_fallback_branches += o.two_sided_fallback_branches;
    return *this;
  }
};

struct SolveOptions {
  /// Record a LeafRecord for every base case reached.
  bool record_leaves = false;
  /// Worker threads for the per-P4 loop of the top-level solver.
  unsigned jobs = 1;
  /// Optional sink for counters.
  SolveStats* stats = nullptr;
};

}  // namespace p4wis
