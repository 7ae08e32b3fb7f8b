#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "p4wis/graph_io.hpp"
#include "p4wis/recognition.hpp"
#include "p4wis/solver.hpp"
#include "p4wis/testkit.hpp"

namespace {

using namespace p4wis;

enum Exit { kOk = 0, kFailure = 1, kClass = 2, kParse = 3, kGuard = 4 };

struct Flags {
  std::string file;
  std::string format = "text";
  std::string model = "clustered";
  std::string out;
  std::uint64_t seed = 1;
  std::size_t n = 20;
  std::vector<std::size_t> sizes{10, 20, 30};
  double density = 0.5;
  unsigned jobs = 1;
  std::size_t guard_n = 30;
  int repeat = 1;
  bool stats = false;
};

bool json(const Flags& f) { return f.format == "json"; }

std::string join_one_based(const std::vector<Vertex>& vs) {
  std::string s;
  for (Vertex v : vs) s += (s.empty() ? "" : " ") + std::to_string(v + 1);
  return s;
}

void print_stats(const SolveStats& s) {
  std::cerr << "nodes " << s.nodes << "\n"
            << "complete-bipartite leaves " << s.complete_bipartite_leaves << "\n"
            << "bipartite leaves " << s.bipartite_leaves << "\n"
            << "single-contact nodes " << s.single_contact_nodes << "\n"
            << "multi-contact nodes " << s.multi_contact_nodes << "\n"
            << "single bi-partial nodes " << s.single_bipartial_nodes << "\n"
            << "order sink nodes " << s.order_sink_nodes << "\n"
            << "component pair branches " << s.component_pair_branches << "\n"
            << "merged / two-sided entries " << s.merged_entries << " / "
            << s.two_sided_entries << "\n"
            << "two-sided fallback branches " << s.two_sided_fallback_branches << "\n";
}

int cmd_solve(const Flags& f) {
  const Graph g = read_graph_file(f.file);
  SolveStats stats;
  SolveOptions opt;
  opt.jobs = f.jobs;
  opt.stats = &stats;
  const SolveResult r = solve(g, opt);
  if (json(f)) {
    std::cout << solve_json(g, r) << "\n";
  } else {
    std::cout << "weight " << r.weight << "\n"
              << "vertices " << join_one_based(r.chosen.to_vector()) << "\n";
  }
  if (f.stats) print_stats(stats);
  return kOk;
}

int cmd_oracle(const Flags& f) {
  const Graph g = read_graph_file(f.file);
  const SolveResult r = testkit::oracle_wis(g, f.guard_n);
  if (json(f))
    std::cout << solve_json(g, r) << "\n";
  else
    std::cout << "weight " << r.weight << "\n"
              << "vertices " << join_one_based(r.chosen.to_vector()) << "\n";
  return kOk;
}

int cmd_check(const Flags& f) {
  const Graph g = read_graph_file(f.file);
  const MembershipVerdict v = is_class_member(g);
  if (json(f)) {
    std::cout << check_json(g, v) << "\n";
  } else if (v.member) {
    std::cout << "MEMBER\n";
  } else {
    std::cout << "NOT_MEMBER\n"
              << (v.triangle ? "triangle " : "p4+p4 ") << join_one_based(v.witness())
              << "\n";
  }
  return v.member ? kOk : kClass;
}

int cmd_cover(const Flags& f) {
  const Graph g = read_graph_file(f.file);
  SolveOptions opt;
  opt.jobs = f.jobs;
  const CoverResult c = solve_with_cover(g, opt);
  bool bipartite = true;
  for (const VertexSet& m : c.family.members)
    if (!two_coloring(g, m)) bipartite = false;
  const std::uint64_t budget = cover_budget(g.order());

  // Maximal sets are only enumerable for small inputs.
  std::size_t maximal = 0, uncovered = 0;
  const bool enumerated = g.order() <= 20;
  if (enumerated) {
    for (const VertexSet& s : testkit::enumerate_maximal_is(g)) {
      ++maximal;
      bool hit = false;
      for (const VertexSet& m : c.family.members)
        if (s.is_subset_of(m)) {
          hit = true;
          break;
        }
      if (!hit) ++uncovered;
    }
  }

  if (json(f)) {
    auto j = nlohmann::ordered_json::parse(cover_json(g, c, bipartite, budget));
    if (enumerated) {
      j["maximal_sets"] = maximal;
      j["uncovered"] = uncovered;
    }
    std::cout << j.dump() << "\n";
  } else {
    std::cout << "weight " << c.result.weight << "\n"
              << "family " << c.family.members.size() << " (budget " << budget << ")\n";
    for (const VertexSet& m : c.family.members)
      std::cout << "  " << join_one_based(m.to_vector()) << "\n";
    std::cout << "members bipartite: " << (bipartite ? "yes" : "NO") << "\n";
    if (enumerated)
      std::cout << "maximal independent sets covered: " << maximal - uncovered << "/"
                << maximal << "\n";
    else
      std::cout << "maximal independent sets: not enumerated (n > 20)\n";
  }
  return bipartite && uncovered == 0 ? kOk : kFailure;
}

int cmd_gen(const Flags& f) {
  const Graph g = testkit::gen_instance(testkit::parse_model(f.model), f.n, f.density, f.seed);
  std::ostringstream text;
  text << "# model " << f.model << " n " << f.n << " density " << f.density << " seed "
       << f.seed << "\n"
       << format_graph(g);
  if (f.out.empty()) {
    std::cout << text.str();
  } else {
    std::ofstream out(f.out, std::ios::binary);
    if (!(out << text.str())) throw InputError("cannot write " + f.out);
  }
  return kOk;
}

int cmd_bench(const Flags& f) {
  const testkit::Model model = testkit::parse_model(f.model);
  auto rows = nlohmann::ordered_json::array();
  if (!json(f))
    std::cout << std::setw(6) << "n" << std::setw(8) << "edges" << std::setw(10) << "weight"
              << std::setw(12) << "nodes" << std::setw(12) << "seconds" << "\n";
  for (std::size_t n : f.sizes) {
    const Graph g = testkit::gen_instance(model, n, f.density, f.seed);
    double best = 0;
    SolveResult r;
    SolveStats stats;
    for (int i = 0; i < f.repeat; ++i) {
      SolveStats run_stats;
      SolveOptions opt;
      opt.jobs = f.jobs;
      opt.stats = &run_stats;
      const auto t0 = std::chrono::steady_clock::now();
      r = solve(g, opt);
      const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      if (i == 0 || s < best) best = s;
      stats = run_stats;
    }
    if (json(f)) {
      rows.push_back({{"n", n}, {"edges", g.edge_count()}, {"weight", r.weight},
                      {"nodes", stats.nodes}, {"seconds", best}});
    } else {
      std::cout << std::setw(6) << n << std::setw(8) << g.edge_count() << std::setw(10)
                << r.weight << std::setw(12) << stats.nodes << std::setw(12)
                << std::fixed << std::setprecision(3) << best << "\n";
    }
  }
  if (json(f)) std::cout << rows.dump() << "\n";
  return kOk;
}

int report(const Flags& f, int code, const std::string& kind, const std::string& what,
           const std::vector<Vertex>* witness = nullptr) {
  if (json(f)) {
    nlohmann::ordered_json j;
    j["error"] = kind;
    j["message"] = what;
    if (witness) {
      auto w = nlohmann::ordered_json::array();
      for (Vertex v : *witness) w.push_back(v + 1);
      j["witness"] = w;
    }
    std::cout << j.dump() << "\n";
  } else {
    std::cerr << kind << ": " << what << "\n";
    if (witness) std::cerr << "witness " << join_one_based(*witness) << "\n";
  }
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact maximum weight independent set for (P4+P4, triangle)-free graphs"};
  app.require_subcommand(1);
  Flags f;

  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", f.format, "Output format")
        ->check(CLI::IsMember({"text", "json"}));
  };
  auto add_file = [&](CLI::App* sub) {
    sub->add_option("file", f.file, "Graph file")->required();
  };
  auto add_gen = [&](CLI::App* sub) {
    sub->add_option("--model", f.model, "Generator model")
        ->check(CLI::IsMember({"clustered", "rejection"}));
    sub->add_option("--density", f.density, "Edge density")->check(CLI::Range(0.0, 1.0));
    sub->add_option("--seed", f.seed, "Generator seed");
  };

  auto* solve_cmd = app.add_subcommand("solve", "Maximum weight independent set");
  add_file(solve_cmd);
  add_format(solve_cmd);
  solve_cmd->add_option("--jobs", f.jobs, "Worker threads")->check(CLI::PositiveNumber);
  solve_cmd->add_flag("--stats", f.stats, "Print branching counters to stderr");

  auto* check_cmd = app.add_subcommand("check", "Class membership test");
  add_file(check_cmd);
  add_format(check_cmd);

  auto* oracle_cmd = app.add_subcommand("oracle", "Brute-force reference solver");
  add_file(oracle_cmd);
  add_format(oracle_cmd);
  oracle_cmd->add_option("--guard-n", f.guard_n, "Refuse inputs larger than this")
      ->check(CLI::Range(0, 64));

  auto* cover_cmd = app.add_subcommand("cover", "Bipartite cover of all maximal independent sets");
  add_file(cover_cmd);
  add_format(cover_cmd);
  cover_cmd->add_option("--jobs", f.jobs, "Worker threads")->check(CLI::PositiveNumber);

  auto* gen_cmd = app.add_subcommand("gen", "Generate a class member");
  add_gen(gen_cmd);
  gen_cmd->add_option("--n", f.n, "Vertex count")->check(CLI::PositiveNumber);
  gen_cmd->add_option("-o,--output", f.out, "Write to this file instead of stdout");

  auto* bench_cmd = app.add_subcommand("bench", "Time solve over generated sizes");
  add_gen(bench_cmd);
  add_format(bench_cmd);
  bench_cmd->add_option("--n", f.sizes, "Vertex counts")->check(CLI::PositiveNumber);
  bench_cmd->add_option("--jobs", f.jobs, "Worker threads")->check(CLI::PositiveNumber);
  bench_cmd->add_option("--repeat", f.repeat, "Runs per size (best is kept)")
      ->check(CLI::PositiveNumber);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*solve_cmd) return cmd_solve(f);
    if (*check_cmd) return cmd_check(f);
    if (*oracle_cmd) return cmd_oracle(f);
    if (*cover_cmd) return cmd_cover(f);
    if (*gen_cmd) return cmd_gen(f);
    if (*bench_cmd) return cmd_bench(f);
  } catch (const ClassViolation& e) {
    return report(f, kClass, "class violation", e.what(), &e.witness());
  } catch (const StructureViolation& e) {
    return report(f, kClass, "structure violation", e.what(), &e.witness());
  } catch (const ParseError& e) {
    return report(f, kParse, "parse error", e.what());
  } catch (const GuardError& e) {
    return report(f, kGuard, "guard", e.what());
  } catch (const std::exception& e) {
    return report(f, kFailure, "error", e.what());
  }
  return kFailure;
}
