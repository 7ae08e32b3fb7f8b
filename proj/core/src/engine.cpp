#include "engine.hpp"

#include <algorithm>
#include <string>

#include "p4wis/bipartite_wis.hpp"
#include "p4wis/recognition.hpp"

namespace p4wis::detail {

namespace {

std::vector<Vertex> p4_witness(const Graph& g, const VertexSet& host) {
  std::vector<Vertex> out;
  if (auto p = find_induced_p4(g, host))
    for (Vertex v : p->vertices()) out.push_back(v);
  return out;
}

// Nontrivial components of G[t] must be complete bipartite for every
// routine below; t is P4-free by construction.
ComponentStructure certified_components(const Graph& g, const VertexSet& t) {
  ComponentStructure cs = components_with_certificates(g, t);
  for (const Component& c : cs.components)
    if (!c.certified())
      throw StructureViolation("P4-free T", "component of G[T] is not complete bipartite",
                               p4_witness(g, c.members));
  return cs;
}

}  // namespace

bool ContactTable::any_bipartial() const {
  return std::any_of(rows.begin(), rows.end(),
                     [](const Row& r) { return !r.bipartial.empty(); });
}

bool ContactTable::bipartial_at_most_one() const {
  return std::all_of(rows.begin(), rows.end(),
                     [](const Row& r) { return r.bipartial.size() <= 1; });
}

ContactTable build_contact_table(const Graph& g, const VertexSet& active,
                                 const VertexSet& t) {
  ContactTable table;
  table.t_comps = certified_components(g, t);
  table.hs = table.t_comps.nontrivial();
  for (Vertex v : active) {
    ContactTable::Row row{v, {}, {}};
    for (std::size_t i = 0; i < table.hs.size(); ++i) {
      switch (contact_class(g, v, *table.hs[i])) {
        case Contact::kNone: break;
        case Contact::kBiPartial:
          row.bipartial.push_back(i);
          row.contacted.push_back(i);
          break;
        case Contact::kBiUniversal: row.contacted.push_back(i); break;
      }
    }
    table.rows.push_back(std::move(row));
  }
  return table;
}

PartialOrderDigraph build_order_digraph(const Graph& g, const VertexSet& active,
                                        const VertexSet& t) {
  PartialOrderDigraph dg;
  dg.nodes = active.to_vector();
  for (Vertex u : active) {
    const ComponentStructure cs = certified_components(g, t - g.neighbors(u));
    const auto zs = cs.nontrivial();
    for (Vertex v : active) {
      if (v == u) continue;
      int bipartial = 0;
      for (const Component* z : zs)
        if (contact_class(g, v, *z) == Contact::kBiPartial && ++bipartial == 2)
          break;
      if (bipartial >= 2) dg.arcs.emplace_back(u, v);
    }
  }
  return dg;
}

void Engine::guard(unsigned depth) const {
  if (depth > g_.order() + 1)
    throw InternalError("branching depth exceeded the vertex count");
}

Best Engine::record_leaf(const VertexSet& live, const VertexSet& forced,
                         const SolveResult& base) {
  if (record_) leaves_.push_back(LeafRecord{forced, live});
  return Best{base.chosen | forced, base.weight + g_.weight_of(forced)};
}

Best Engine::leaf_strict(const VertexSet& live, const VertexSet& forced) {
  ++stats_.complete_bipartite_leaves;
  return record_leaf(live, forced, solve_cb_components(g_, live));
}

Best Engine::leaf_any(const VertexSet& live, const VertexSet& forced) {
  if (components_with_certificates(g_, live).all_certified())
    return leaf_strict(live, forced);
  ++stats_.bipartite_leaves;
  return record_leaf(live, forced, solve_bipartite(g_, live));
}

Best Engine::dispatch(Level level, const Frame& frame, unsigned depth) {
  return level == Level::kSplit ? case_a(frame, depth) : two_sided_node(frame, depth);
}

Best Engine::case_a(const Frame& frame, unsigned depth) {
  guard(depth);
  ++stats_.nodes;
  const VertexSet live = frame.live();
  if (components_with_certificates(g_, live).all_certified())
    return leaf_strict(live, frame.forced);

  const ContactTable table = build_contact_table(g_, frame.active, frame.t);
  if (!table.any_bipartial()) return no_bipartial(frame, table, depth);
  if (table.bipartial_at_most_one()) return single_bipartial(Level::kSplit, frame, table, depth);
  return order_sink(Level::kSplit, frame, depth);
}

// No S-vertex is bi-partial: each component H acts as one edge between its
// two side-sums, since any S-neighbor of a side sees that whole side.
Best Engine::no_bipartial(const Frame& frame, const ContactTable& table, unsigned depth) {
  const bool single_contact = std::all_of(
      table.rows.begin(), table.rows.end(),
      [](const ContactTable::Row& r) { return r.contacted.size() <= 1; });

  if (single_contact) {
    ++stats_.single_contact_nodes;
    std::vector<std::size_t> doubles;
    for (std::size_t i = 0; i < table.hs.size(); ++i) {
      const auto& [side_a, side_b] = *table.hs[i]->sides;
      bool on_a = false, on_b = false;
      for (const auto& row : table.rows) {
        if (row.contacted.empty() || row.contacted.front() != i) continue;
        (g_.neighbors(row.v).intersects(side_a) ? on_a : on_b) = true;
      }
      if (on_a && on_b) doubles.push_back(i);
    }
    const VertexSet live = frame.live();
    if (doubles.size() > 1) {
      std::vector<Vertex> witness;
      for (std::size_t k = 0; k < 2; ++k) {
        const Component& h = *table.hs[doubles[k]];
        witness.push_back(*h.sides->side_a.first());
        witness.push_back(*h.sides->side_b.first());
      }
      throw StructureViolation(
          "doubly attached component",
          "two components of G[T] have S-neighbors on both sides", witness);
    }
    if (doubles.empty()) return leaf_any(live, frame.forced);

    // Branch on the contracted side: keep it (drop its neighborhood) or drop it.
    const VertexSet& side = table.hs[doubles.front()]->sides->side_a;
    Best best = leaf_any(live - neighborhood(g_, side), frame.forced);
    keep_better(best, leaf_any(live - side, frame.forced));
    return best;
  }

  ++stats_.multi_contact_nodes;
  const ContactTable::Row* pick = nullptr;
  for (const auto& row : table.rows)
    if (!pick || row.contacted.size() > pick->contacted.size()) pick = &row;
  Best best = case_a(frame.force(g_, pick->v), depth + 1);
  keep_better(best, case_a(frame.drop_active(pick->v), depth + 1));
  return best;
}

// Every active vertex is bi-partial to at most one component.
Best Engine::single_bipartial(Level level, const Frame& frame, const ContactTable& table,
                 unsigned depth) {
  ++stats_.single_bipartial_nodes;
  const ContactTable::Row* pick = nullptr;
  for (const auto& row : table.rows) {
    if (row.bipartial.size() != 1) continue;
    if (!pick || row.contacted.size() > pick->contacted.size()) pick = &row;
  }
  const Vertex chosen = pick->v;
  const Component& h_prime = *table.hs[pick->bipartial.front()];

  const Frame forced = frame.force(g_, chosen);
  const ComponentStructure rest = certified_components(g_, forced.t);

  // Z: nontrivial components of G[(T \ H') \ N(v')] with a bi-partial
  // active vertex. At most one exists.
  std::vector<const Component*> zs;
  for (const Component* z : rest.nontrivial()) {
    if (z->members.intersects(h_prime.members)) continue;
    for (Vertex u : forced.active) {
      if (contact_class(g_, u, *z) == Contact::kBiPartial) {
        zs.push_back(z);
        break;
      }
    }
  }
  if (zs.size() > 1) {
    throw StructureViolation(
        "single bi-partial component", "two components off H' \\ N(v') carry bi-partial vertices",
        {chosen, *zs[0]->members.first(), *zs[1]->members.first()});
  }

  const VertexSet h_live_prime = h_prime.members & forced.t;
  VertexSet h_live = g_.empty_set();
  if (!zs.empty()) {
    const auto idx = table.t_comps.index_of(*zs.front()->members.first());
    h_live = table.t_comps.components[*idx].members & forced.t;
  }

  // U misses H and H', meets one vertex of H', one of H, or one of each.
  Best best = dispatch(level, forced.minus(h_live | h_live_prime), depth + 1);
  ++stats_.component_pair_branches;
  for (Vertex hp : h_live_prime) {
    keep_better(best, dispatch(level, forced.minus(g_.neighbors(hp)), depth + 1));
    ++stats_.component_pair_branches;
  }
  for (Vertex h : h_live) {
    keep_better(best, dispatch(level, forced.minus(g_.neighbors(h)), depth + 1));
    ++stats_.component_pair_branches;
  }
  for (Vertex h : h_live) {
    for (Vertex hp : h_live_prime) {
      if (g_.adjacent(h, hp)) continue;
      keep_better(best, dispatch(level,
                                 forced.minus(g_.neighbors(h) | g_.neighbors(hp)),
                                 depth + 1));
      ++stats_.component_pair_branches;
    }
  }

  keep_better(best, dispatch(level, frame.drop_active(chosen), depth + 1));
  return best;
}

// Some active vertex is bi-partial to two components: branch on a maximal
// element of the order, i.e. a sink of the order digraph.
Best Engine::order_sink(Level level, const Frame& frame, unsigned depth) {
  ++stats_.order_sink_nodes;
  const PartialOrderDigraph dg = build_order_digraph(g_, frame.active, frame.t);
  if (auto cycle = dg.find_cycle())
    throw StructureViolation("acyclic order", "order digraph has a cycle", *cycle);
  const auto sinks = dg.sinks();
  if (sinks.empty())
    throw StructureViolation("acyclic order", "order digraph has no sink",
                             frame.active.to_vector());
  const Vertex top = sinks.front();
  Best best = dispatch(level, frame.force(g_, top), depth + 1);
  keep_better(best, dispatch(level, frame.drop_active(top), depth + 1));
  return best;
}

Best Engine::two_sided_entry(const VertexSet& x, const VertexSet& d,
                     const VertexSet& t_before, const VertexSet& t_after,
                     const VertexSet& forced, unsigned depth) {
  guard(depth);
  // The bi-partial test is taken against the components of G[T'], not G[T''].
  const ComponentStructure hs_prime = certified_components(g_, t_before);
  bool bipartial = false;
  for (Vertex u : d) {
    for (const Component* h : hs_prime.nontrivial()) {
      if (contact_class(g_, u, *h) == Contact::kBiPartial) {
        bipartial = true;
        break;
      }
    }
    if (bipartial) break;
  }

  if (!bipartial) {
    ++stats_.merged_entries;
    const VertexSet merged = d | t_after;
    if (!components_with_certificates(g_, merged).all_certified())
      throw StructureViolation("merged part P4-free", "G[S''_d ∪ T''] has an induced P4",
                               p4_witness(g_, merged));
    return case_a(Frame{x, g_.empty_set(), merged, forced}, depth);
  }
  ++stats_.two_sided_entries;
  return two_sided_node(Frame{d, x, t_after, forced}, depth);
}

Best Engine::two_sided_node(const Frame& frame, unsigned depth) {
  guard(depth);
  ++stats_.nodes;
  const VertexSet merged = frame.active | frame.t;
  if (components_with_certificates(g_, merged).all_certified())
    return case_a(Frame{frame.passive, g_.empty_set(), merged, frame.forced}, depth);

  const ContactTable table = build_contact_table(g_, frame.active, frame.t);
  if (table.any_bipartial()) {
    if (table.bipartial_at_most_one()) return single_bipartial(Level::kTwoSided, frame, table, depth);
    return order_sink(Level::kTwoSided, frame, depth);
  }

  // No bi-partial vertex left but G[D ∪ T] still has a P4: plain branching on
  // the D-vertex touching the most components of G[T].
  ++stats_.two_sided_fallback_branches;
  Vertex pick = *frame.active.first();
  std::size_t most = 0;
  for (Vertex v : frame.active) {
    std::size_t touched = 0;
    for (const Component& c : table.t_comps.components)
      if (g_.neighbors(v).intersects(c.members)) ++touched;
    if (touched > most) {
      most = touched;
      pick = v;
    }
  }
  Best best = two_sided_node(frame.force(g_, pick), depth + 1);
  keep_better(best, two_sided_node(frame.drop_active(pick), depth + 1));
  return best;
}

}  // namespace p4wis::detail
