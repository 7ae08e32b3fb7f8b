#include "p4wis/graph_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include <json.hpp>

namespace p4wis {

namespace {

std::vector<std::string_view> split(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

std::int64_t number(std::string_view tok, std::size_t line) {
  std::int64_t value = 0;
  auto [end, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || end != tok.data() + tok.size())
    throw ParseError(line, "expected an integer, got '" + std::string(tok) + "'");
  return value;
}

Vertex vertex_id(std::string_view tok, std::size_t n, std::size_t line) {
  const std::int64_t id = number(tok, line);
  if (id < 1 || static_cast<std::uint64_t>(id) > n)
    throw ParseError(line, "vertex id " + std::string(tok) + " out of range 1.." +
                               std::to_string(n));
  return static_cast<Vertex>(id - 1);
}

nlohmann::ordered_json one_based(const VertexSet& s) {
  auto arr = nlohmann::ordered_json::array();
  for (Vertex v : s) arr.push_back(v + 1);
  return arr;
}

nlohmann::ordered_json one_based(const std::vector<Vertex>& s) {
  auto arr = nlohmann::ordered_json::array();
  for (Vertex v : s) arr.push_back(v + 1);
  return arr;
}

}  // namespace

Graph parse_graph(std::string_view text) {
  std::size_t lineno = 0;
  bool header = false;
  std::size_t n = 0, m = 0, edges_seen = 0;
  std::vector<Weight> weights;
  std::vector<bool> declared;
  std::vector<Edge> edges;

  while (!text.empty()) {
    const std::size_t nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++lineno;

    const auto tok = split(line);
    if (tok.empty() || tok[0].front() == '#') continue;

    if (tok[0] == "p") {
      if (header) throw ParseError(lineno, "duplicate problem line");
      if (tok.size() != 4 || tok[1] != "wis")
        throw ParseError(lineno, "expected 'p wis <n> <m>'");
      const std::int64_t nn = number(tok[2], lineno), mm = number(tok[3], lineno);
      if (nn < 0 || mm < 0) throw ParseError(lineno, "negative count");
      if (nn > (1 << 24)) throw ParseError(lineno, "vertex count too large");
      n = static_cast<std::size_t>(nn);
      m = static_cast<std::size_t>(mm);
      weights.assign(n, 0);
      declared.assign(n, false);
      header = true;
    } else if (!header) {
      throw ParseError(lineno, "content before the 'p wis' line");
    } else if (tok[0] == "v") {
      if (tok.size() != 3) throw ParseError(lineno, "expected 'v <id> <weight>'");
      const Vertex v = vertex_id(tok[1], n, lineno);
      const std::int64_t w = number(tok[2], lineno);
      if (w < 0) throw ParseError(lineno, "negative weight");
      if (declared[v]) throw ParseError(lineno, "vertex declared twice");
      declared[v] = true;
      weights[v] = w;
    } else if (tok[0] == "e") {
      if (tok.size() != 3) throw ParseError(lineno, "expected 'e <u> <v>'");
      const Vertex u = vertex_id(tok[1], n, lineno);
      const Vertex v = vertex_id(tok[2], n, lineno);
      if (u == v) throw ParseError(lineno, "self-loop");
      if (++edges_seen > m) throw ParseError(lineno, "more edge lines than declared");
      edges.push_back({u, v});
    } else {
      throw ParseError(lineno, "unknown line type '" + std::string(tok[0]) + "'");
    }
  }
  if (!header) throw ParseError(lineno, "missing 'p wis' line");
  for (std::size_t v = 0; v < n; ++v)
    if (!declared[v])
      throw ParseError(lineno, "vertex " + std::to_string(v + 1) + " never declared");
  if (edges_seen != m)
    throw ParseError(lineno, "declared " + std::to_string(m) + " edges, found " +
                                 std::to_string(edges_seen));
  return Graph(std::move(weights), edges);
}

Graph read_graph_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_graph(buf.str());
}

std::string format_graph(const Graph& g) {
  const auto edges = g.edges();
  std::ostringstream out;
  out << "p wis " << g.order() << ' ' << edges.size() << '\n';
  for (Vertex v = 0; v < g.order(); ++v) out << "v " << v + 1 << ' ' << g.weight(v) << '\n';
  for (const Edge& e : edges) out << "e " << e.u + 1 << ' ' << e.v + 1 << '\n';
  return out.str();
}

std::string solve_json(const Graph& g, const SolveResult& r) {
  nlohmann::ordered_json j;
  j["weight"] = r.weight;
  j["vertices"] = one_based(r.chosen);
  j["independent"] = g.is_independent(r.chosen);
  return j.dump();
}

std::string check_json(const Graph&, const MembershipVerdict& v) {
  nlohmann::ordered_json j;
  j["member"] = v.member;
  j["kind"] = v.triangle ? "triangle" : v.p4_pair ? "p4+p4" : "none";
  j["witness"] = one_based(v.witness());
  return j.dump();
}

std::string cover_json(const Graph& g, const CoverResult& c, bool bipartite_ok,
                       std::uint64_t budget) {
  nlohmann::ordered_json j;
  j["weight"] = c.result.weight;
  j["vertices"] = one_based(c.result.chosen);
  j["independent"] = g.is_independent(c.result.chosen);
  j["family_size"] = c.family.members.size();
  j["budget"] = budget;
  j["within_budget"] = c.family.members.size() <= budget;
  j["all_bipartite"] = bipartite_ok;
  auto members = nlohmann::ordered_json::array();
  for (const VertexSet& s : c.family.members) members.push_back(one_based(s));
  j["members"] = std::move(members);
  return j.dump();
}

}  // namespace p4wis
