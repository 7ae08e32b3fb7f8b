#include "p4wis/solver.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <limits>
#include <thread>

#include "engine.hpp"
#include "lemma1_internal.hpp"
#include "p4wis/recognition.hpp"

namespace p4wis {

namespace {

using detail::Best;
using detail::Engine;
using detail::keep_better;

struct TaskOutput {
  Best best;
  std::vector<LeafRecord> leaves;
  SolveStats stats;
  std::exception_ptr error;
};

// Vertices of S_b ∪ S_c with no neighbor in S_b ∪ S_c ∪ A(V(P)).
VertexSet isolated_middle(const Graph& g, const NeighborhoodPartition& part) {
  const VertexSet middle = part.s_b | part.s_c;
  const VertexSet around = middle | part.anti;
  VertexSet out = g.empty_set();
  for (Vertex v : middle)
    if (!g.neighbors(v).intersects(around)) out.insert(v);
  return out;
}

// Best set containing {x, y} of the induced P4 (x, m, y, z) restricted to
// V \ N[keep], with `keep` forced as well.
Best widened_candidate(Engine& engine, const InducedP4& path, Vertex keep) {
  const Graph& g = engine.graph();
  const VertexSet host = g.vertices() - g.neighbors(keep).with(keep);
  const NeighborhoodPartition part = neighborhood_partition(g, path, host);
  detail::require_certified_anti(g, path, part);
  return detail::containing_ac(engine, part,
                               VertexSet(g.order(), {path.a, path.c, keep}));
}

Best solve_for_p4(Engine& engine, const InducedP4& p, bool cover) {
  const Graph& g = engine.graph();
  const VertexSet all = g.vertices();
  const NeighborhoodPartition part = neighborhood_partition(g, p, all);
  detail::require_certified_anti(g, p, part);

  Best best = detail::containing_ac(engine, part, VertexSet(g.order(), {p.a, p.c}));
  const NeighborhoodPartition reversed = neighborhood_partition(g, p.reversed(), all);
  keep_better(best, detail::containing_ac(engine, reversed,
                                          VertexSet(g.order(), {p.b, p.d})));

  const VertexSet lone = isolated_middle(g, part);
  VertexSet region = part.anti | lone;
  region.insert(p.a);
  region.insert(p.d);
  keep_better(best, engine.leaf_strict(region, g.empty_set()));

  if (cover) {
    const VertexSet busy = (part.s_b | part.s_c) - lone;
    // Any neighbor of b' in S_c ∪ A(V(P)) completes a, b, b' to an induced P4.
    for (Vertex bp : busy & part.s_b) {
      const Vertex tail = *(g.neighbors(bp) & (part.s_c | part.anti)).first();
      keep_better(best, widened_candidate(engine, {p.a, p.b, bp, tail}, p.d));
    }
    for (Vertex cp : busy & part.s_c) {
      const Vertex tail = *(g.neighbors(cp) & (part.s_b | part.anti)).first();
      keep_better(best, widened_candidate(engine, {p.d, p.c, cp, tail}, p.a));
    }
  }
  return best;
}

SolveResult run(const Graph& g, const SolveOptions& options, bool cover) {
  const bool record = options.record_leaves || cover;
  SolveResult result{g.empty_set(), 0, std::nullopt};
  if (record) result.leaves.emplace();
  if (g.order() == 0) return certify(g, result);

  if (auto tri = find_triangle(g))
    throw ClassViolation("graph contains a triangle", {(*tri)[0], (*tri)[1], (*tri)[2]});

  const std::vector<InducedP4> paths = enumerate_induced_p4(g, g.vertices());
  std::vector<TaskOutput> outputs(paths.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < paths.size();) {
      Engine engine(g, record);
      try {
        outputs[i].best = solve_for_p4(engine, paths[i], cover);
      } catch (...) {
        outputs[i].error = std::current_exception();
      }
      outputs[i].leaves = std::move(engine.leaves());
      outputs[i].stats = engine.stats();
    }
  };
  const unsigned jobs = std::max(1u, std::min<unsigned>(
                                         options.jobs, static_cast<unsigned>(paths.size())));
  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
  }

  Best best;
  SolveStats stats;
  VertexSet on_paths = g.empty_set();
  for (std::size_t i = 0; i < paths.size(); ++i) {
    if (outputs[i].error) std::rethrow_exception(outputs[i].error);
    keep_better(best, std::move(outputs[i].best));
    stats += outputs[i].stats;
    if (record)
      for (auto& leaf : outputs[i].leaves) result.leaves->push_back(std::move(leaf));
    on_paths |= paths[i].as_set(g.order());
  }

  // Vertices on no induced P4 induce a P4-free, triangle-free graph.
  Engine engine(g, record);
  keep_better(best, engine.leaf_strict(g.vertices() - on_paths, g.empty_set()));
  stats += engine.stats();
  if (record)
    for (auto& leaf : engine.leaves()) result.leaves->push_back(std::move(leaf));

  if (options.stats) *options.stats += stats;
  result.chosen = std::move(best.chosen);
  result.weight = best.weight;
  return certify(g, result);
}

}  // namespace

SolveResult solve(const Graph& g, const SolveOptions& options) {
  return run(g, options, false);
}

CoverResult solve_with_cover(const Graph& g, const SolveOptions& options) {
  CoverResult out{run(g, options, true), {}};
  auto& members = out.family.members;
  for (const LeafRecord& leaf : *out.result.leaves) members.push_back(leaf.members());
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  return out;
}

std::uint64_t cover_budget(std::size_t n) {
  constexpr auto cap = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t budget = 10;
  for (int i = 0; i < 8; ++i) {
    if (n != 0 && budget > cap / n) return cap;
    budget *= n;
  }
  return budget;
}

}  // namespace p4wis
