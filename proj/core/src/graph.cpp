#include "p4wis/graph.hpp"

#include <algorithm>
#include <string>

#include "p4wis/solve_result.hpp"

namespace p4wis {

Graph::Graph(std::vector<Weight> weights, std::span<const Edge> edges)
    : weights_(std::move(weights)) {
  const std::size_t n = weights_.size();
  for (std::size_t v = 0; v < n; ++v) {
    if (weights_[v] < 0)
      throw InputError("negative weight on vertex " + std::to_string(v));
  }
  rows_.assign(n, VertexSet(n));
  for (const Edge& e : edges) {
    if (e.u >= n || e.v >= n)
      throw InputError("edge endpoint out of range");
    if (e.u == e.v)
      throw InputError("self-loop on vertex " + std::to_string(e.u));
    if (!rows_[e.u].contains(e.v)) {
      rows_[e.u].insert(e.v);
      rows_[e.v].insert(e.u);
      ++edge_count_;
    }
  }
}

Weight Graph::weight_of(const VertexSet& set) const {
  Weight total = 0;
  for (Vertex v : set) total += weights_.at(v);
  return total;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < order(); ++u)
    for (Vertex v : rows_[u])
      if (u < v) out.push_back({u, v});
  return out;
}

bool Graph::is_independent(const VertexSet& set) const {
  for (Vertex v : set)
    if (rows_.at(v).intersects(set)) return false;
  return true;
}

GraphBuilder::GraphBuilder(std::vector<Weight> weights)
    : graph_(std::move(weights), std::span<const Edge>{}) {}

void GraphBuilder::add_edge(Vertex u, Vertex v) {
  if (u >= graph_.order() || v >= graph_.order() || u == v)
    throw InputError("invalid edge");
  if (graph_.rows_[u].contains(v)) return;
  graph_.rows_[u].insert(v);
  graph_.rows_[v].insert(u);
  ++graph_.edge_count_;
}

void GraphBuilder::remove_edge(Vertex u, Vertex v) {
  if (u >= graph_.order() || v >= graph_.order())
    throw InputError("invalid edge");
  if (!graph_.rows_[u].contains(v)) return;
  graph_.rows_[u].erase(v);
  graph_.rows_[v].erase(u);
  --graph_.edge_count_;
}

VertexSet neighborhood(const Graph& g, const VertexSet& u) {
  if (u.universe() != g.order())
    throw InputError("vertex set does not belong to this graph");
  VertexSet out = g.empty_set();
  for (Vertex v : u) out |= g.neighbors(v);
  return out - u;
}

VertexSet anti_neighborhood(const Graph& g, const VertexSet& u) {
  return g.vertices() - u - neighborhood(g, u);
}

bool ComponentStructure::all_certified() const {
  return std::all_of(components.begin(), components.end(),
                     [](const Component& c) { return c.certified(); });
}

std::vector<const Component*> ComponentStructure::nontrivial() const {
  std::vector<const Component*> out;
  for (const auto& c : components)
    if (!c.trivial()) out.push_back(&c);
  return out;
}

std::optional<std::size_t> ComponentStructure::index_of(Vertex v) const {
  for (std::size_t i = 0; i < components.size(); ++i)
    if (components[i].members.contains(v)) return i;
  return std::nullopt;
}

namespace {

// Breadth-first layering of the component of `start` inside `host`; even
// layers go to `even`, odd layers to `odd`.
void layer_component(const Graph& g, const VertexSet& host, Vertex start,
                     VertexSet& even, VertexSet& odd) {
  VertexSet seen = g.empty_set();
  VertexSet frontier = g.empty_set();
  frontier.insert(start);
  seen.insert(start);
  bool parity = false;
  while (!frontier.empty()) {
    (parity ? odd : even) |= frontier;
    VertexSet next = g.empty_set();
    for (Vertex v : frontier) next |= g.neighbors(v);
    next &= host;
    next -= seen;
    seen |= next;
    frontier = std::move(next);
    parity = !parity;
  }
}

}  // namespace

ComponentStructure components_with_certificates(const Graph& g,
                                                const VertexSet& host) {
  if (host.universe() != g.order())
    throw InputError("vertex set does not belong to this graph");
  ComponentStructure out;
  VertexSet remaining = host;
  while (auto start = remaining.first()) {
    VertexSet even = g.empty_set(), odd = g.empty_set();
    layer_component(g, host, *start, even, odd);
    Component comp{even | odd, std::nullopt};
    remaining -= comp.members;
    if (!comp.trivial()) {
      bool complete = true;
      auto sees_exactly = [&](Vertex v, const VertexSet& side) {
        return side.is_subset_of(g.neighbors(v)) &&
               g.neighbors(v).count_common(comp.members) == side.size();
      };
      for (Vertex v : even)
        if (!sees_exactly(v, odd)) { complete = false; break; }
      if (complete)
        for (Vertex v : odd)
          if (!sees_exactly(v, even)) { complete = false; break; }
      if (complete) comp.sides = Bipartition{std::move(even), std::move(odd)};
    }
    out.components.push_back(std::move(comp));
  }
  return out;
}

Contact contact_class(const Graph& g, Vertex v, const Component& comp) {
  if (!comp.sides)
    throw InputError("contact_class needs a certified component");
  if (comp.members.contains(v))
    throw InputError("vertex lies inside the component");
  const VertexSet& row = g.neighbors(v);
  const auto& [a, b] = *comp.sides;
  const std::size_t in_a = row.count_common(a);
  const std::size_t in_b = row.count_common(b);
  if (in_a == 0 && in_b == 0) return Contact::kNone;
  if (in_a && in_b) {
    // x in one side and its neighbor y in the other close a triangle with v.
    std::vector<Vertex> tri{v, *(row & a).first(), *(row & b).first()};
    std::sort(tri.begin(), tri.end());
    throw ClassViolation("vertex " + std::to_string(v) +
                             " contacts both sides of a complete bipartite "
                             "component",
                         std::move(tri));
  }
  const std::size_t side = in_a ? a.size() : b.size();
  const std::size_t hit = in_a ? in_a : in_b;
  return hit == side ? Contact::kBiUniversal : Contact::kBiPartial;
}

std::optional<Bipartition> two_coloring(const Graph& g, const VertexSet& host) {
  VertexSet a = g.empty_set(), b = g.empty_set();
  VertexSet remaining = host;
  while (auto start = remaining.first()) {
    VertexSet even = g.empty_set(), odd = g.empty_set();
    layer_component(g, host, *start, even, odd);
    for (Vertex v : even)
      if (g.neighbors(v).intersects(even)) return std::nullopt;
    for (Vertex v : odd)
      if (g.neighbors(v).intersects(odd)) return std::nullopt;
    remaining -= even;
    remaining -= odd;
    a |= even;
    b |= odd;
  }
  return Bipartition{std::move(a), std::move(b)};
}

namespace {
std::atomic<std::uint64_t> g_certified{0};
}

const SolveResult& certify(const Graph& g, const SolveResult& result) {
  if (result.chosen.universe() != g.order())
    throw InternalError("result is over a different vertex universe");
  if (!g.is_independent(result.chosen))
    throw InternalError("returned set is not independent");
  if (g.weight_of(result.chosen) != result.weight)
    throw InternalError("returned weight does not match member sum");
  g_certified.fetch_add(1, std::memory_order_relaxed);
  return result;
}

std::uint64_t certified_result_count() noexcept {
  return g_certified.load(std::memory_order_relaxed);
}

}  // namespace p4wis
