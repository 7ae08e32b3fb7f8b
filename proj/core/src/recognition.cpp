#include "p4wis/recognition.hpp"

#include <algorithm>
#include <string>

namespace p4wis {

bool is_induced_p4(const Graph& g, const InducedP4& p, const VertexSet& host) {
  const auto vs = p.vertices();
  for (std::size_t i = 0; i < 4; ++i) {
    if (vs[i] >= g.order() || !host.contains(vs[i])) return false;
    for (std::size_t j = i + 1; j < 4; ++j) {
      if (vs[i] == vs[j]) return false;
      if (g.adjacent(vs[i], vs[j]) != (j == i + 1)) return false;
    }
  }
  return true;
}

std::optional<Triangle> find_triangle(const Graph& g) {
  for (Vertex u = 0; u < g.order(); ++u) {
    for (Vertex v : g.neighbors(u)) {
      if (v <= u) continue;
      for (Vertex w : g.neighbors(u) & g.neighbors(v))
        if (w > v) return Triangle{u, v, w};
    }
  }
  return std::nullopt;
}

namespace {

// Visits induced P4s of G[host] in lexicographic (a, b, c, d) order with
// a < d; stops as soon as `visit` returns false.
template <typename Visit>
void for_each_induced_p4(const Graph& g, const VertexSet& host, Visit&& visit) {
  for (Vertex a : host) {
    const VertexSet& na = g.neighbors(a);
    for (Vertex b : na & host) {
      const VertexSet& nb = g.neighbors(b);
      for (Vertex c : nb & host) {
        if (c == a || na.contains(c)) continue;
        VertexSet ds = g.neighbors(c) & host;
        ds -= na;
        ds -= nb;
        for (Vertex d : ds) {
          if (d <= a || d == b) continue;
          if (!visit(InducedP4{a, b, c, d})) return;
        }
      }
    }
  }
}

}  // namespace

std::vector<InducedP4> enumerate_induced_p4(const Graph& g,
                                            const VertexSet& host) {
  std::vector<InducedP4> out;
  for_each_induced_p4(g, host, [&](const InducedP4& p) {
    out.push_back(p);
    return true;
  });
  return out;
}

std::optional<InducedP4> find_induced_p4(const Graph& g,
                                         const VertexSet& host) {
  std::optional<InducedP4> found;
  for_each_induced_p4(g, host, [&](const InducedP4& p) {
    found = p;
    return false;
  });
  return found;
}

std::vector<Vertex> MembershipVerdict::witness() const {
  if (triangle) return {triangle->begin(), triangle->end()};
  if (p4_pair) {
    std::vector<Vertex> out;
    for (Vertex v : p4_pair->first.vertices()) out.push_back(v);
    for (Vertex v : p4_pair->second.vertices()) out.push_back(v);
    return out;
  }
  return {};
}

MembershipVerdict is_class_member(const Graph& g) {
  MembershipVerdict verdict;
  if (auto tri = find_triangle(g)) {
    verdict.member = false;
    verdict.triangle = tri;
    return verdict;
  }
  const VertexSet all = g.vertices();
  for_each_induced_p4(g, all, [&](const InducedP4& p) {
    VertexSet anti = anti_neighborhood(g, p.as_set(g.order()));
    if (auto q = find_induced_p4(g, anti)) {
      verdict.member = false;
      verdict.p4_pair = std::make_pair(p, *q);
      return false;
    }
    return true;
  });
  return verdict;
}

NeighborhoodPartition neighborhood_partition(const Graph& g, const InducedP4& p,
                                             const VertexSet& host) {
  if (!is_induced_p4(g, p, host))
    throw InputError("path is not an induced P4 of the host subgraph");
  const std::size_t n = g.order();
  NeighborhoodPartition part{VertexSet(n), VertexSet(n), VertexSet(n),
                             VertexSet(n), VertexSet(n), VertexSet(n),
                             VertexSet(n), VertexSet(n)};
  const auto path = p.vertices();
  VertexSet rest = host - p.as_set(n);
  for (Vertex v : rest) {
    unsigned trace = 0;
    for (unsigned i = 0; i < 4; ++i)
      if (g.adjacent(v, path[i])) trace |= 1u << i;
    switch (trace) {
      case 0b0000: part.anti.insert(v); break;
      case 0b0001: part.s_a.insert(v); break;
      case 0b0010: part.s_b.insert(v); break;
      case 0b0100: part.s_c.insert(v); break;
      case 0b1000: part.s_d.insert(v); break;
      case 0b0101: part.s_ac.insert(v); break;
      case 0b1001: part.s_ad.insert(v); break;
      case 0b1010: part.s_bd.insert(v); break;
      default: {
        // Some consecutive pair of the path is seen by v.
        unsigned i = 0;
        while (!((trace >> i) & 1u) || !((trace >> (i + 1)) & 1u)) ++i;
        std::vector<Vertex> tri{v, path[i], path[i + 1]};
        std::sort(tri.begin(), tri.end());
        throw ClassViolation("vertex " + std::to_string(v) +
                                 " closes a triangle with the induced P4",
                             std::move(tri));
      }
    }
  }
  return part;
}

}  // namespace p4wis
