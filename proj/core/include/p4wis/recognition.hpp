#pragma once

#include <array>
#include <compare>
#include <optional>
#include <utility>
#include <vector>

#include "p4wis/graph.hpp"

namespace p4wis {

/// Induced path a-b-c-d. Canonical orientation has a < d.
struct InducedP4 {
  Vertex a, b, c, d;

  InducedP4 reversed() const { return {d, c, b, a}; }
  InducedP4 canonical() const { return a < d ? *this : reversed(); }
  std::array<Vertex, 4> vertices() const { return {a, b, c, d}; }
  VertexSet as_set(std::size_t universe) const {
    return VertexSet(universe, {a, b, c, d});
  }

  friend auto operator<=>(const InducedP4&, const InducedP4&) = default;
};

/// True iff a-b-c-d is an induced path of g with all four inside `host`.
bool is_induced_p4(const Graph& g, const InducedP4& p, const VertexSet& host);

using Triangle = std::array<Vertex, 3>;

/// Lexicographically least triangle of g, if any.
std::optional<Triangle> find_triangle(const Graph& g);

/// All induced P4s of G[host], canonical and sorted.
std::vector<InducedP4> enumerate_induced_p4(const Graph& g,
                                            const VertexSet& host);
/// Some induced P4 of G[host]; the first one enumerate_induced_p4 would list.
std::optional<InducedP4> find_induced_p4(const Graph& g, const VertexSet& host);

struct MembershipVerdict {
  bool member = true;
  std::optional<Triangle> triangle;
  std::optional<std::pair<InducedP4, InducedP4>> p4_pair;

  /// Witness vertices: 3 for a triangle, 8 for P4+P4, empty for members.
  std::vector<Vertex> witness() const;
};

/// Membership in the (P4+P4, Triangle)-free class: triangle scan, then for
/// every induced P4 a P4-freeness test of its anti-neighborhood.
MembershipVerdict is_class_member(const Graph& g);

/// Split of N(V(P)) ∩ host by adjacency trace on (a, b, c, d), plus the
/// anti-neighborhood A(V(P)) ∩ host.
struct NeighborhoodPartition {
  VertexSet s_a, s_b, s_c, s_d, s_ac, s_ad, s_bd;
  VertexSet anti;
};

/// Throws InputError when `p` is not induced in G[host] and ClassViolation
/// when some vertex sees two consecutive path vertices.
NeighborhoodPartition neighborhood_partition(const Graph& g, const InducedP4& p,
                                             const VertexSet& host);

}  // namespace p4wis
