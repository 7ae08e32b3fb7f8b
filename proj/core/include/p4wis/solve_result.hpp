#pragma once

#include <atomic>
#include <cstdint>
#include <optional>
#include <vector>

#include "p4wis/graph.hpp"

namespace p4wis {

/// One base case reached by the branching: the vertices forced along the
/// path plus the bipartite residual the base case was solved on.
struct LeafRecord {
  VertexSet forced;
  VertexSet residual;

  VertexSet members() const { return forced | residual; }
  friend bool operator==(const LeafRecord&, const LeafRecord&) = default;
};

struct SolveResult {
  VertexSet chosen;
  Weight weight = 0;
  std::optional<std::vector<LeafRecord>> leaves;
};

/// Checks that `result.chosen` is independent in `g` and that `weight` is its
/// member sum; throws InternalError otherwise. Every public solver entry
/// point passes its result through here before returning it.
const SolveResult& certify(const Graph& g, const SolveResult& result);

/// Number of results that have gone through certify() in this process.
std::uint64_t certified_result_count() noexcept;

}  // namespace p4wis
