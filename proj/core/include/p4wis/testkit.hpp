#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "p4wis/graph.hpp"
#include "p4wis/solve_result.hpp"

namespace p4wis::testkit {

/// xoshiro256** seeded through splitmix64. The stream is fixed by the test
/// vectors in tests/testkit_test.cpp so generators reproduce across ports.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);

  std::uint64_t next();
  /// Uniform in [0, bound) by rejection on the low residue; bound > 0.
  std::uint64_t below(std::uint64_t bound);
  /// Uniform double in [0, 1) from the top 53 bits.
  double unit();

 private:
  std::uint64_t s_[4];
};

/// Exact maximum weight independent set by include/exclude branching on a
/// maximum-degree vertex. Among optimal sets it returns the one that, at the
/// smallest vertex where two optima differ, contains that vertex.
/// Throws GuardError when n > guard_n (at most 64).
SolveResult oracle_wis(const Graph& g, std::size_t guard_n = 30);

/// Exhaustive 2^n subset scan, used to cross-check oracle_wis. n <= 24.
SolveResult oracle_wis_subset_scan(const Graph& g);

/// Best independent set containing `forced`. InputError if `forced` is not
/// independent.
SolveResult oracle_wis_containing(const Graph& g, const VertexSet& forced,
                                  std::size_t guard_n = 30);

/// Every maximal independent set, sorted (Bron-Kerbosch with pivoting on
/// the complement). n <= 20.
std::vector<VertexSet> enumerate_maximal_is(const Graph& g);

enum class Model { kClustered, kRejection };

Model parse_model(std::string_view name);
std::string_view model_name(Model model);

/// Deterministic (P4+P4, Triangle)-free instance with weights in [0, 100].
///
/// kClustered plants the induced path 0-1-2-3, fills the remaining vertices
/// with disjoint complete bipartite blocks, then offers every other vertex
/// pair in random order; each is kept with probability `density` provided
/// the graph stays in the class. kRejection draws random bipartite graphs
/// until one is (P4+P4)-free, falling back to kClustered after 1000 tries.
Graph gen_instance(Model model, std::size_t n, double density, std::uint64_t seed);

}  // namespace p4wis::testkit
