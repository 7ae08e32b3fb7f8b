#include "p4wis/testkit.hpp"

#include <bit>
#include <string>

#include "p4wis/recognition.hpp"

namespace p4wis::testkit {

namespace {

std::uint64_t splitmix64(std::uint64_t& x) {
  std::uint64_t z = (x += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace

Rng::Rng(std::uint64_t seed) {
  for (auto& word : s_) word = splitmix64(seed);
}

std::uint64_t Rng::next() {
  const std::uint64_t result = std::rotl(s_[1] * 5, 7) * 9;
  const std::uint64_t t = s_[1] << 17;
  s_[2] ^= s_[0];
  s_[3] ^= s_[1];
  s_[1] ^= s_[2];
  s_[0] ^= s_[3];
  s_[2] ^= t;
  s_[3] = std::rotl(s_[3], 45);
  return result;
}

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) throw InputError("Rng::below needs a positive bound");
  const std::uint64_t threshold = (0 - bound) % bound;
  for (;;) {
    const std::uint64_t r = next();
    if (r >= threshold) return r % bound;
  }
}

double Rng::unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

// ---------------------------------------------------------------------------
// Oracles

namespace {

using Mask = std::uint64_t;

struct Candidate {
  Mask mask = 0;
  Weight weight = 0;
};

// Heavier wins; on equal weight, the set holding the smallest vertex of the
// symmetric difference wins. Adding a common vertex keeps this order.
bool preferred(const Candidate& x, const Candidate& y) {
  if (x.weight != y.weight) return x.weight > y.weight;
  const Mask diff = x.mask ^ y.mask;
  return diff && (x.mask & diff & (~diff + 1));
}

struct MaskGraph {
  std::vector<Mask> adj;
  std::vector<Weight> w;

  explicit MaskGraph(const Graph& g) : adj(g.order()), w(g.weights()) {
    for (Vertex v = 0; v < g.order(); ++v)
      for (Vertex u : g.neighbors(v)) adj[v] |= Mask{1} << u;
  }

  Candidate best(Mask avail) const {
    if (!avail) return {};
    int pick = -1, degree = -1;
    for (Mask m = avail; m; m &= m - 1) {
      const int v = std::countr_zero(m);
      const int d = std::popcount(adj[v] & avail);
      if (d > degree) {
        degree = d;
        pick = v;
      }
    }
    if (degree == 0) {
      Candidate all{avail, 0};
      for (Mask m = avail; m; m &= m - 1) all.weight += w[std::countr_zero(m)];
      return all;
    }
    const Mask bit = Mask{1} << pick;
    Candidate with = best(avail & ~adj[pick] & ~bit);
    with.mask |= bit;
    with.weight += w[pick];
    const Candidate without = best(avail & ~bit);
    return preferred(with, without) ? with : without;
  }
};

SolveResult to_result(const Graph& g, Mask mask) {
  SolveResult r{g.empty_set(), 0, std::nullopt};
  for (Mask m = mask; m; m &= m - 1) r.chosen.insert(static_cast<Vertex>(std::countr_zero(m)));
  r.weight = g.weight_of(r.chosen);
  return certify(g, r);
}

void check_guard(const Graph& g, std::size_t guard_n) {
  if (g.order() > guard_n || g.order() > 64)
    throw GuardError("oracle refuses n=" + std::to_string(g.order()) +
                     " (guard " + std::to_string(guard_n) + ")");
}

}  // namespace

SolveResult oracle_wis(const Graph& g, std::size_t guard_n) {
  check_guard(g, guard_n);
  const MaskGraph mg(g);
  const Mask all = g.order() == 64 ? ~Mask{0} : (Mask{1} << g.order()) - 1;
  return to_result(g, mg.best(all).mask);
}

SolveResult oracle_wis_subset_scan(const Graph& g) {
  check_guard(g, 24);
  const std::size_t n = g.order();
  const MaskGraph mg(g);
  const Mask total = Mask{1} << n;
  std::vector<bool> independent(total, true);
  std::vector<Weight> weight(total, 0);
  Candidate best;
  for (Mask m = 1; m < total; ++m) {
    const int v = std::countr_zero(m);
    const Mask rest = m & (m - 1);
    independent[m] = independent[rest] && !(mg.adj[v] & rest);
    weight[m] = weight[rest] + mg.w[v];
    if (independent[m]) {
      const Candidate c{m, weight[m]};
      if (preferred(c, best)) best = c;
    }
  }
  return to_result(g, best.mask);
}

SolveResult oracle_wis_containing(const Graph& g, const VertexSet& forced,
                                  std::size_t guard_n) {
  check_guard(g, guard_n);
  if (!g.is_independent(forced)) throw InputError("forced set is not independent");
  const MaskGraph mg(g);
  Mask avail = g.order() == 64 ? ~Mask{0} : (Mask{1} << g.order()) - 1;
  Mask pinned = 0;
  for (Vertex v : forced) {
    pinned |= Mask{1} << v;
    avail &= ~mg.adj[v];
  }
  avail &= ~pinned;
  return to_result(g, mg.best(avail).mask | pinned);
}

std::vector<VertexSet> enumerate_maximal_is(const Graph& g) {
  check_guard(g, 20);
  const std::size_t n = g.order();
  const Mask all = (Mask{1} << n) - 1;
  std::vector<Mask> non_adj(n);
  for (Vertex v = 0; v < n; ++v) {
    Mask a = 0;
    for (Vertex u : g.neighbors(v)) a |= Mask{1} << u;
    non_adj[v] = all & ~a & ~(Mask{1} << v);
  }
  std::vector<VertexSet> out;
  // Maximal cliques of the complement.
  auto expand = [&](auto& self, Mask r, Mask p, Mask x) -> void {
    if (!p && !x) {
      VertexSet s(n);
      for (Mask m = r; m; m &= m - 1) s.insert(static_cast<Vertex>(std::countr_zero(m)));
      out.push_back(std::move(s));
      return;
    }
    int pivot = std::countr_zero(p | x), most = -1;
    for (Mask m = p | x; m; m &= m - 1) {
      const int u = std::countr_zero(m);
      const int c = std::popcount(p & non_adj[u]);
      if (c > most) {
        most = c;
        pivot = u;
      }
    }
    for (Mask m = p & ~non_adj[pivot]; m; m &= m - 1) {
      const int v = std::countr_zero(m);
      const Mask bit = Mask{1} << v;
      self(self, r | bit, p & non_adj[v], x & non_adj[v]);
      p &= ~bit;
      x |= bit;
    }
  };
  expand(expand, 0, all, 0);
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// Generators

Model parse_model(std::string_view name) {
  if (name == "clustered") return Model::kClustered;
  if (name == "rejection") return Model::kRejection;
  throw InputError("unknown model '" + std::string(name) + "'");
}

std::string_view model_name(Model model) {
  return model == Model::kClustered ? "clustered" : "rejection";
}

namespace {

// Whether some induced P4 through the edge uv has an induced P4 in its
// anti-neighborhood. Only such P4+P4 can appear when uv is added to a graph
// of the class.
bool creates_double_p4(const Graph& g, Vertex u, Vertex v) {
  auto blocked = [&](const InducedP4& p) {
    return find_induced_p4(g, anti_neighborhood(g, p.as_set(g.order()))).has_value();
  };
  const VertexSet& nu = g.neighbors(u);
  const VertexSet& nv = g.neighbors(v);
  // uv in the middle: x-u-v-y.
  for (Vertex x : nu - nv) {
    if (x == v) continue;
    for (Vertex y : nv - nu - g.neighbors(x)) {
      if (y == u || y == x) continue;
      if (blocked({x, u, v, y})) return true;
    }
  }
  // uv at an end: u-v-y-z and v-u-y-z.
  for (auto [p, q] : {std::pair{u, v}, std::pair{v, u}}) {
    const VertexSet& np = g.neighbors(p);
    const VertexSet& nq = g.neighbors(q);
    for (Vertex y : nq - np) {
      if (y == p) continue;
      for (Vertex z : g.neighbors(y) - np - nq) {
        if (z == p || z == q) continue;
        if (blocked({p, q, y, z})) return true;
      }
    }
  }
  return false;
}

bool try_add(GraphBuilder& builder, Vertex u, Vertex v) {
  const Graph& g = builder.view();
  if (g.adjacent(u, v)) return false;
  if (g.neighbors(u).intersects(g.neighbors(v))) return false;  // triangle
  builder.add_edge(u, v);
  if (creates_double_p4(builder.view(), u, v)) {
    builder.remove_edge(u, v);
    return false;
  }
  return true;
}

void shuffle(std::vector<Edge>& items, Rng& rng) {
  for (std::size_t i = items.size(); i > 1; --i)
    std::swap(items[i - 1], items[rng.below(i)]);
}

std::vector<Weight> draw_weights(std::size_t n, Rng& rng) {
  std::vector<Weight> w(n);
  for (auto& x : w) x = static_cast<Weight>(rng.below(101));
  return w;
}

Graph clustered(std::size_t n, double density, Rng& rng, std::vector<Weight> weights) {
  GraphBuilder builder(std::move(weights));
  Vertex start = 0;
  if (n >= 4) {
    builder.add_edge(0, 1);
    builder.add_edge(1, 2);
    builder.add_edge(2, 3);
    start = 4;
  }
  // Disjoint complete bipartite blocks K_{p,q}, p in [1,3], q in [0,3].
  for (Vertex v = start; v < n;) {
    const std::size_t p = std::min<std::size_t>(1 + rng.below(3), n - v);
    const std::size_t q = std::min<std::size_t>(rng.below(4), n - v - p);
    for (std::size_t i = 0; i < p; ++i)
      for (std::size_t j = 0; j < q; ++j)
        builder.add_edge(v + static_cast<Vertex>(i), v + static_cast<Vertex>(p + j));
    v += static_cast<Vertex>(p + q);
  }

  std::vector<Edge> offers;
  // Pairs inside the planted path are never offered, so it stays induced.
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = std::max<Vertex>(u + 1, start); v < n; ++v)
      if (!builder.view().adjacent(u, v)) offers.push_back({u, v});
  shuffle(offers, rng);
  for (const Edge& e : offers)
    if (rng.unit() < density) try_add(builder, e.u, e.v);
  return std::move(builder).build();
}

}  // namespace

Graph gen_instance(Model model, std::size_t n, double density, std::uint64_t seed) {
  if (n < 1) throw InputError("generator needs n >= 1");
  if (!(density >= 0.0 && density <= 1.0)) throw InputError("density must lie in [0, 1]");
  if (n > 4096) throw InputError("generator n is unreasonably large");

  Rng rng(seed);
  std::vector<Weight> weights = draw_weights(n, rng);
  if (model == Model::kRejection) {
    for (int attempt = 0; attempt < 1000; ++attempt) {
      std::vector<int> side(n);
      for (auto& s : side) s = static_cast<int>(rng.below(2));
      std::vector<Edge> edges;
      for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
          if (side[u] != side[v] && rng.unit() < density) edges.push_back({u, v});
      Graph g(weights, edges);
      if (is_class_member(g).member) return g;
    }
  }
  Graph g = clustered(n, density, rng, std::move(weights));
  if (!is_class_member(g).member)
    throw InternalError("clustered generator produced a non-member");
  return g;
}

}  // namespace p4wis::testkit
