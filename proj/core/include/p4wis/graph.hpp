#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "p4wis/errors.hpp"
#include "p4wis/vertex_set.hpp"

namespace p4wis {

struct Edge {
  Vertex u;
  Vertex v;
  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Simple undirected vertex-weighted graph on vertices 0..n-1 with a
/// bit-matrix adjacency. Immutable once built; use GraphBuilder to grow one.
class Graph {
 public:
  Graph() = default;
  /// Throws InputError on self-loops, out-of-range ids or negative weights.
  /// Duplicate edges are collapsed.
  Graph(std::vector<Weight> weights, std::span<const Edge> edges);

  std::size_t order() const noexcept { return weights_.size(); }
  std::size_t edge_count() const noexcept { return edge_count_; }

  bool adjacent(Vertex u, Vertex v) const { return rows_.at(u).contains(v); }
  const VertexSet& neighbors(Vertex v) const { return rows_.at(v); }
  Weight weight(Vertex v) const { return weights_.at(v); }
  const std::vector<Weight>& weights() const noexcept { return weights_; }

  Weight weight_of(const VertexSet& set) const;
  VertexSet vertices() const { return VertexSet::full(order()); }
  VertexSet empty_set() const { return VertexSet(order()); }

  /// Edges with u < v in lexicographic order.
  std::vector<Edge> edges() const;
  bool is_independent(const VertexSet& set) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  friend class GraphBuilder;

  std::vector<Weight> weights_;
  std::vector<VertexSet> rows_;
  std::size_t edge_count_ = 0;
};

/// Mutable staging area used by generators. `view()` exposes the graph
/// under construction so recognition routines can inspect it.
class GraphBuilder {
 public:
  explicit GraphBuilder(std::vector<Weight> weights);

  void add_edge(Vertex u, Vertex v);
  void remove_edge(Vertex u, Vertex v);
  const Graph& view() const noexcept { return graph_; }
  Graph build() && { return std::move(graph_); }

 private:
  Graph graph_;
};

/// N(U): vertices outside `u` adjacent to some member of `u`.
VertexSet neighborhood(const Graph& g, const VertexSet& u);
/// A(U) = V \ (U ∪ N(U)).
VertexSet anti_neighborhood(const Graph& g, const VertexSet& u);

struct Bipartition {
  VertexSet side_a;  ///< side holding the smallest member
  VertexSet side_b;
};

struct Component {
  VertexSet members;
  /// Present iff the component induces a complete bipartite graph.
  std::optional<Bipartition> sides;

  bool trivial() const { return members.size() == 1; }
  bool certified() const { return trivial() || sides.has_value(); }
};

struct ComponentStructure {
  std::vector<Component> components;  ///< ordered by smallest member

  /// True when every nontrivial component is complete bipartite.
  bool all_certified() const;
  std::vector<const Component*> nontrivial() const;
  /// Index of the component holding `v`, if any.
  std::optional<std::size_t> index_of(Vertex v) const;
};

/// Components of G[host]. Each nontrivial component gets a complete-bipartite
/// certificate when, and only when, it is complete bipartite.
ComponentStructure components_with_certificates(const Graph& g,
                                                const VertexSet& host);

enum class Contact { kNone, kBiPartial, kBiUniversal };

/// How `v` touches a certified complete bipartite component. Throws
/// ClassViolation when `v` sees both sides (that closes a triangle).
Contact contact_class(const Graph& g, Vertex v, const Component& comp);

/// Two-coloring of G[host]; nullopt when G[host] has an odd cycle.
std::optional<Bipartition> two_coloring(const Graph& g, const VertexSet& host);

}  // namespace p4wis
