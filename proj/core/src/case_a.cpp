#include "p4wis/case_a.hpp"

#include <algorithm>
#include <functional>

#include "engine.hpp"

namespace p4wis {

void validate(const CaseAInstance& inst) {
  const Graph& g = inst.graph;
  if (inst.s_part.universe() != g.order() || inst.t_part.universe() != g.order())
    throw InputError("instance parts do not belong to this graph");
  if (inst.s_part.intersects(inst.t_part))
    throw InputError("S and T overlap");
  if (!g.is_independent(inst.s_part))
    throw InputError("S is not independent");
  if (!components_with_certificates(g, inst.t_part).all_certified())
    throw InputError("G[T] has a component that is not complete bipartite");
}

bool order_less(const CaseAInstance& inst, Vertex u, Vertex v) {
  const Graph& g = inst.graph;
  if (!inst.s_part.contains(u) || !inst.s_part.contains(v) || u == v)
    throw InputError("order_less needs two distinct vertices of S");
  const ComponentStructure cs =
      components_with_certificates(g, inst.t_part - g.neighbors(u));
  int bipartial = 0;
  for (const Component* z : cs.nontrivial())
    if (contact_class(g, v, *z) == Contact::kBiPartial) ++bipartial;
  return bipartial >= 2;
}

std::vector<Vertex> PartialOrderDigraph::sinks() const {
  std::vector<Vertex> out;
  for (Vertex v : nodes) {
    const bool has_out = std::any_of(arcs.begin(), arcs.end(),
                                     [v](const auto& a) { return a.first == v; });
    if (!has_out) out.push_back(v);
  }
  return out;
}

std::optional<std::vector<Vertex>> PartialOrderDigraph::find_cycle() const {
  enum class Mark { kWhite, kGray, kBlack };
  std::vector<Mark> mark(nodes.size(), Mark::kWhite);
  std::vector<std::size_t> parent(nodes.size());
  auto index = [&](Vertex v) {
    return static_cast<std::size_t>(
        std::lower_bound(nodes.begin(), nodes.end(), v) - nodes.begin());
  };
  std::vector<std::vector<std::size_t>> out(nodes.size());
  for (const auto& [u, v] : arcs) out[index(u)].push_back(index(v));

  std::optional<std::vector<Vertex>> cycle;
  std::function<bool(std::size_t)> visit = [&](std::size_t u) {
    mark[u] = Mark::kGray;
    for (std::size_t v : out[u]) {
      if (mark[v] == Mark::kGray) {
        std::vector<Vertex> path{nodes[v]};
        for (std::size_t w = u; w != v; w = parent[w]) path.push_back(nodes[w]);
        std::reverse(path.begin() + 1, path.end());
        cycle = std::move(path);
        return true;
      }
      if (mark[v] == Mark::kWhite) {
        parent[v] = u;
        if (visit(v)) return true;
      }
    }
    mark[u] = Mark::kBlack;
    return false;
  };
  for (std::size_t i = 0; i < nodes.size(); ++i)
    if (mark[i] == Mark::kWhite && visit(i)) break;
  return cycle;
}

PartialOrderDigraph build_order_digraph(const CaseAInstance& inst) {
  validate(inst);
  return detail::build_order_digraph(inst.graph, inst.s_part, inst.t_part);
}

SolveResult solve_case_a(const CaseAInstance& inst, const SolveOptions& options) {
  validate(inst);
  const Graph& g = inst.graph;
  detail::Engine engine(g, options.record_leaves);
  detail::Best best = engine.case_a(
      detail::Frame{inst.s_part, g.empty_set(), inst.t_part, g.empty_set()}, 0);
  if (options.stats) *options.stats += engine.stats();
  SolveResult result{std::move(best.chosen), best.weight, std::nullopt};
  if (options.record_leaves) result.leaves = std::move(engine.leaves());
  return certify(g, result);
}

}  // namespace p4wis
