#include "p4wis/bipartite_wis.hpp"

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boykov_kolmogorov_max_flow.hpp>

#include <limits>
#include <unordered_map>

#include "p4wis/recognition.hpp"

namespace p4wis {

SolveResult solve_cb_components(const Graph& g, const VertexSet& host) {
  const ComponentStructure cs = components_with_certificates(g, host);
  SolveResult result{g.empty_set(), 0, std::nullopt};
  for (const Component& comp : cs.components) {
    if (comp.trivial()) {
      result.chosen |= comp.members;
      continue;
    }
    if (!comp.sides) {
      std::vector<Vertex> witness;
      if (auto p = find_induced_p4(g, comp.members)) {
        for (Vertex v : p->vertices()) witness.push_back(v);
      } else {
        witness = comp.members.to_vector();
      }
      throw StructureViolation("complete bipartite certificate",
                               "component is not complete bipartite",
                               std::move(witness));
    }
    const auto& [a, b] = *comp.sides;
    result.chosen |= g.weight_of(a) >= g.weight_of(b) ? a : b;
  }
  result.weight = g.weight_of(result.chosen);
  return certify(g, result);
}

namespace {

using Traits =
    boost::adjacency_list_traits<boost::vecS, boost::vecS, boost::directedS>;
using FlowGraph = boost::adjacency_list<
    boost::vecS, boost::vecS, boost::directedS,
    boost::property<
        boost::vertex_index_t, long,
        boost::property<
            boost::vertex_color_t, boost::default_color_type,
            boost::property<boost::vertex_distance_t, long,
                            boost::property<boost::vertex_predecessor_t,
                                            Traits::edge_descriptor>>>>,
    boost::property<
        boost::edge_capacity_t, Weight,
        boost::property<boost::edge_residual_capacity_t, Weight,
                        boost::property<boost::edge_reverse_t,
                                        Traits::edge_descriptor>>>>;

void add_arc(FlowGraph& net, std::size_t from, std::size_t to, Weight cap) {
  auto capacity = boost::get(boost::edge_capacity, net);
  auto reverse = boost::get(boost::edge_reverse, net);
  auto [e, ok1] = boost::add_edge(from, to, net);
  auto [r, ok2] = boost::add_edge(to, from, net);
  capacity[e] = cap;
  capacity[r] = 0;
  reverse[e] = r;
  reverse[r] = e;
}

}  // namespace

SolveResult solve_bipartite(const Graph& g, const VertexSet& host) {
  auto coloring = two_coloring(g, host);
  if (!coloring)
    throw StructureViolation("bipartite residual", "residual has an odd cycle",
                             host.to_vector());
  const auto& [left, right] = *coloring;

  const std::vector<Vertex> members = host.to_vector();
  std::unordered_map<Vertex, std::size_t> index;
  for (std::size_t i = 0; i < members.size(); ++i) index[members[i]] = i;
  const std::size_t source = members.size(), sink = members.size() + 1;

  Weight total = 0;
  for (Vertex v : members) total += g.weight(v);
  const Weight infinite = total + 1;

  FlowGraph net(members.size() + 2);
  for (Vertex u : left) {
    add_arc(net, source, index[u], g.weight(u));
    for (Vertex v : g.neighbors(u) & right) add_arc(net, index[u], index[v], infinite);
  }
  for (Vertex v : right) add_arc(net, index[v], sink, g.weight(v));

  const Weight cover = boost::boykov_kolmogorov_max_flow(net, source, sink);

  // Source side of the minimum cut is the black (source-tree) region.
  auto color = boost::get(boost::vertex_color, net);
  const auto black = boost::color_traits<boost::default_color_type>::black();
  SolveResult result{g.empty_set(), 0, std::nullopt};
  for (Vertex u : left)
    if (color[index[u]] == black) result.chosen.insert(u);
  for (Vertex v : right)
    if (color[index[v]] != black) result.chosen.insert(v);
  result.weight = g.weight_of(result.chosen);
  if (result.weight != total - cover)
    throw InternalError("bipartite cut does not match the flow value");
  return certify(g, result);
}

}  // namespace p4wis
