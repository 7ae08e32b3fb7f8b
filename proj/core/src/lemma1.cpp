#include "p4wis/lemma1.hpp"

#include "engine.hpp"
#include "lemma1_internal.hpp"

namespace p4wis {

Vertex select_branch_vertex(const Graph& g, const VertexSet& candidates,
                            const VertexSet& t) {
  if (candidates.empty()) throw InputError("no candidate branch vertex");
  const ComponentStructure cs = components_with_certificates(g, t);
  std::vector<Vertex> maximizers;
  std::size_t most = 0;
  for (Vertex v : candidates) {
    std::size_t touched = 0;
    for (const Component& c : cs.components)
      if (g.neighbors(v).intersects(c.members)) ++touched;
    if (touched > most) {
      most = touched;
      maximizers.clear();
    }
    if (touched == most) maximizers.push_back(v);
  }
  for (Vertex v : maximizers) {
    const VertexSet nv = g.neighbors(v) & t;
    bool dominated = false;
    for (Vertex u : maximizers) {
      if (u == v) continue;
      const VertexSet nu = g.neighbors(u) & t;
      if (nv.is_subset_of(nu) && nv != nu) {
        dominated = true;
        break;
      }
    }
    if (!dominated) return v;
  }
  throw InternalError("strict containment among finitely many sets has no maximal element");
}

namespace detail {

namespace {

// One pair (s_b*, s_d*): branch on v' in S'_b ∪ S'_d one at a time (v' in,
// then v' out), ending with the split case on S'_bd ∪ T'.
Best pair_chain(Engine& engine, VertexSet sb, VertexSet sd, const VertexSet& sbd,
                const VertexSet& t, const VertexSet& forced) {
  const Graph& g = engine.graph();
  Best best;
  for (;;) {
    const VertexSet candidates = sb | sd;
    if (candidates.empty()) {
      keep_better(best, engine.case_a(Frame{sbd, g.empty_set(), t, forced}, 1));
      return best;
    }
    const Vertex v = select_branch_vertex(g, candidates, t);
    const bool in_b = sb.contains(v);
    const VertexSet& own = in_b ? sb : sd;
    const VertexSet& other = in_b ? sd : sb;
    const VertexSet& nv = g.neighbors(v);
    VertexSet x = (own.without(v) - nv) | (sbd - nv);
    VertexSet d = other - nv;
    keep_better(best, engine.two_sided_entry(x, d, t, t - nv, forced.with(v), 1));
    (in_b ? sb : sd).erase(v);
  }
}

}  // namespace

Best containing_ac(Engine& engine, const NeighborhoodPartition& part,
                   const VertexSet& forced) {
  const Graph& g = engine.graph();
  const VertexSet& t = part.anti;
  const VertexSet none = g.empty_set();

  // U avoids S_b and S_d; U meets S_d only; U meets S_b only.
  Best best = engine.case_a(Frame{part.s_bd, none, t, forced}, 0);
  keep_better(best, engine.case_a(Frame{part.s_d | part.s_bd, none, t, forced}, 0));
  keep_better(best, engine.case_a(Frame{part.s_b | part.s_bd, none, t, forced}, 0));

  // U meets both: fix a non-adjacent pair (s_b*, s_d*).
  for (Vertex sb : part.s_b) {
    for (Vertex sd : part.s_d) {
      if (g.adjacent(sb, sd)) continue;
      VertexSet removed = g.neighbors(sb) | g.neighbors(sd);
      removed.insert(sb);
      removed.insert(sd);
      VertexSet pair_forced = forced;
      pair_forced.insert(sb);
      pair_forced.insert(sd);
      keep_better(best, pair_chain(engine, part.s_b - removed, part.s_d - removed,
                                   part.s_bd - removed, t - removed, pair_forced));
    }
  }
  return best;
}

void require_certified_anti(const Graph& g, const InducedP4& p,
                            const NeighborhoodPartition& part) {
  for (const Component& c : components_with_certificates(g, part.anti).components) {
    if (c.certified()) continue;
    std::vector<Vertex> witness;
    for (Vertex v : p.vertices()) witness.push_back(v);
    if (auto q = find_induced_p4(g, c.members))
      for (Vertex v : q->vertices()) witness.push_back(v);
    throw ClassViolation("anti-neighborhood of an induced P4 contains an induced P4",
                         std::move(witness));
  }
}

}  // namespace detail

SolveResult solve_containing_ac(const Graph& g, const VertexSet& host,
                                const InducedP4& p, const SolveOptions& options) {
  if (host.universe() != g.order())
    throw InputError("host does not belong to this graph");
  const NeighborhoodPartition part = neighborhood_partition(g, p, host);
  detail::require_certified_anti(g, p, part);

  detail::Engine engine(g, options.record_leaves);
  detail::Best best =
      detail::containing_ac(engine, part, VertexSet(g.order(), {p.a, p.c}));
  if (options.stats) *options.stats += engine.stats();
  SolveResult result{std::move(best.chosen), best.weight, std::nullopt};
  if (options.record_leaves) result.leaves = std::move(engine.leaves());
  return certify(g, result);
}

SolveResult solve_containing_bd(const Graph& g, const VertexSet& host,
                                const InducedP4& p, const SolveOptions& options) {
  return solve_containing_ac(g, host, p.reversed(), options);
}

}  // namespace p4wis
