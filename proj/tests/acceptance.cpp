// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "p4wis/case_a.hpp"
#include "p4wis/graph_io.hpp"
#include "p4wis/lemma1.hpp"
#include "p4wis/recognition.hpp"
#include "p4wis/solver.hpp"
#include "p4wis/testkit.hpp"

namespace {

using namespace p4wis;
using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

// Structural errors seen anywhere in the run, and solver returns audited here.
std::size_t structural_errors = 0;
std::size_t audited = 0;
std::size_t audit_failures = 0;
std::string first_structural;

void audit(const Graph& g, const SolveResult& r) {
  ++audited;
  if (!g.is_independent(r.chosen) || g.weight_of(r.chosen) != r.weight) ++audit_failures;
}

// Runs `body`, turning class/structure errors on class members into counted
// failures instead of aborting the criterion.
bool guarded(const std::function<void()>& body) {
  try {
    body();
    return true;
  } catch (const StructureViolation& e) {
    if (first_structural.empty()) first_structural = e.what();
    ++structural_errors;
  } catch (const ClassViolation& e) {
    if (first_structural.empty()) first_structural = e.what();
    ++structural_errors;
  }
  return false;
}

testkit::Model model_for(std::uint64_t i) {
  return i % 2 ? testkit::Model::kRejection : testkit::Model::kClustered;
}

double density_for(std::uint64_t i) { return 0.1 + 0.1 * static_cast<double>(i % 9); }

int failures = 0;

void report(int id, bool pass, const std::string& name, const std::string& detail) {
  std::printf("[%s] %d %s: %s\n", pass ? "PASS" : "FAIL", id, name.c_str(), detail.c_str());
  std::fflush(stdout);
  if (!pass) ++failures;
}

template <typename... Args>
std::string fmt(const char* f, Args... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

void oracle_equivalence() {
  const auto t0 = Clock::now();
  int agree = 0, total = 0;
  for (std::uint64_t i = 0; i < 1000; ++i) {
    const Graph g = testkit::gen_instance(model_for(i), 8 + i % 11, density_for(i), 10000 + i);
    ++total;
    guarded([&] {
      const SolveResult r = solve(g);
      audit(g, r);
      const SolveResult o = testkit::oracle_wis(g);
      audit(g, o);
      agree += r.weight == o.weight;
    });
  }
  const double s = seconds_since(t0);
  report(1, agree == total && s < 300, "oracle equivalence",
         fmt("%d/%d instances match, %.1f s (limit 300 s)", agree, total, s));
}

void containing_pair_equivalence() {
  const auto t0 = Clock::now();
  std::size_t checks = 0, agree = 0;
  for (std::uint64_t i = 0; i < 200; ++i) {
    const Graph g = testkit::gen_instance(model_for(i), 6 + i % 9, density_for(i), 20000 + i);
    guarded([&] {
      for (const InducedP4& p : enumerate_induced_p4(g, g.vertices())) {
        for (const InducedP4& q : {p, p.reversed()}) {
          const SolveResult ac = solve_containing_ac(g, g.vertices(), q);
          const SolveResult bd = solve_containing_bd(g, g.vertices(), q);
          audit(g, ac);
          audit(g, bd);
          checks += 2;
          agree += ac.weight ==
                       testkit::oracle_wis_containing(g, VertexSet(g.order(), {q.a, q.c})).weight &&
                   ac.chosen.contains(q.a) && ac.chosen.contains(q.c);
          agree += bd.weight ==
                       testkit::oracle_wis_containing(g, VertexSet(g.order(), {q.b, q.d})).weight &&
                   bd.chosen.contains(q.b) && bd.chosen.contains(q.d);
        }
      }
    });
  }
  report(2, checks > 0 && agree == checks, "containing-pair equivalence",
         fmt("%zu/%zu constrained solves match on 200 instances, %.1f s", agree, checks,
             seconds_since(t0)));
}

void cover_completeness() {
  const auto t0 = Clock::now();
  std::size_t instances = 0, complete = 0, maximal = 0, largest = 0;
  bool bipartite = true, within_budget = true;
  for (std::uint64_t i = 0; i < 200; ++i) {
    const Graph g = testkit::gen_instance(model_for(i), 6 + i % 9, density_for(i), 30000 + i);
    ++instances;
    guarded([&] {
      const CoverResult c = solve_with_cover(g);
      audit(g, c.result);
      largest = std::max(largest, c.family.members.size());
      within_budget &= c.family.members.size() <= cover_budget(g.order());
      for (const VertexSet& m : c.family.members) bipartite &= two_coloring(g, m).has_value();
      bool all = true;
      for (const VertexSet& s : testkit::enumerate_maximal_is(g)) {
        ++maximal;
        all &= std::any_of(c.family.members.begin(), c.family.members.end(),
                           [&](const VertexSet& m) { return s.is_subset_of(m); });
      }
      complete += all;
    });
  }
  report(4, complete == instances && bipartite && within_budget, "cover completeness",
         fmt("%zu/%zu instances fully covered (%zu maximal sets), members bipartite: %s, "
             "largest family %zu, within 10*n^8: %s, %.1f s",
             complete, instances, maximal, bipartite ? "yes" : "no", largest,
             within_budget ? "yes" : "no", seconds_since(t0)));
}

// Hand-built inputs on which each asserted claim is actually exercised.
struct ClaimCase {
  std::string name;
  std::function<SolveStats()> run;
  std::function<bool(const SolveStats&)> exercised;
};

Graph graph(std::vector<Weight> w, std::vector<Edge> e) { return Graph(std::move(w), e); }

SolveStats run_case_a(const Graph& g, std::initializer_list<Vertex> s,
                      std::initializer_list<Vertex> t) {
  SolveStats stats;
  SolveOptions opt;
  opt.stats = &stats;
  const SolveResult r =
      solve_case_a({g, VertexSet(g.order(), s), VertexSet(g.order(), t)}, opt);
  audit(g, r);
  return stats;
}

SolveStats run_all_pairs(const Graph& g) {
  SolveStats stats;
  SolveOptions opt;
  opt.stats = &stats;
  for (const InducedP4& p : enumerate_induced_p4(g, g.vertices())) {
    audit(g, solve_containing_ac(g, g.vertices(), p, opt));
    audit(g, solve_containing_bd(g, g.vertices(), p, opt));
  }
  return stats;
}

std::vector<Weight> unit(std::size_t n) { return std::vector<Weight>(n, 1); }

void structural_claims() {
  const std::vector<ClaimCase> cases = {
      {"single bi-partial component",
       [] {
         const Graph g = graph({1, 5, 5, 4, 2, 2, 3}, {{0, 1}, {0, 2}, {3, 1}, {4, 5}, {6, 4}});
         return run_case_a(g, {3, 6}, {0, 1, 2, 4, 5});
       },
       [](const SolveStats& s) { return s.single_bipartial_nodes > 0; }},
      {"acyclic order",
       [] {
         const Graph g = graph({3, 2, 2, 3, 2, 2, 4, 1},
                               {{0, 1}, {0, 2}, {3, 4}, {3, 5}, {6, 1}, {6, 4}});
         return run_case_a(g, {6, 7}, {0, 1, 2, 3, 4, 5});
       },
       [](const SolveStats& s) { return s.order_sink_nodes > 0; }},
      {"doubly attached component",
       [] {
         const Graph g = graph({3, 3, 2, 2}, {{0, 1}, {2, 0}, {3, 1}});
         return run_case_a(g, {2, 3}, {0, 1});
       },
       [](const SolveStats& s) { return s.single_contact_nodes > 0; }},
      {"bipartite residual",
       [] {
         const Graph g = graph({4, 1, 1, 4}, {{0, 1}, {0, 2}, {2, 3}});
         return run_case_a(g, {0}, {1, 2, 3});
       },
       [](const SolveStats& s) { return s.bipartite_leaves > 0; }},
      {"merged part P4-free",
       [] {
         return run_all_pairs(
             graph(unit(7), {{0, 1}, {0, 4}, {2, 5}, {3, 5}, {4, 5}, {5, 6}}));
       },
       [](const SolveStats& s) { return s.merged_entries > 0; }},
      {"two-sided entry",
       [] {
         return run_all_pairs(graph(unit(11), {{0, 10}, {1, 10}, {2, 4}, {2, 7}, {3, 7}, {4, 6},
                                               {4, 9}, {5, 6}, {7, 8}, {8, 10}, {9, 10}}));
       },
       [](const SolveStats& s) { return s.two_sided_entries > 0; }},
  };
  std::size_t exercised = 0;
  for (const ClaimCase& c : cases)
    guarded([&] { exercised += c.exercised(c.run()); });

  const bool pass = structural_errors == 0 && exercised == cases.size();
  std::string detail = fmt("%zu structural/class errors on class members, %zu/%zu hand-built "
                           "claims exercised",
                           structural_errors, exercised, cases.size());
  if (!first_structural.empty()) detail += " (first: " + first_structural + ")";
  report(5, pass, "structural claims", detail);
}

bool brute_triangle(const Graph& g) {
  const std::size_t n = g.order();
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b)
      for (Vertex c = b + 1; c < n; ++c)
        if (g.adjacent(a, b) && g.adjacent(b, c) && g.adjacent(a, c)) return true;
  return false;
}

bool quad_is_p4(const Graph& g, const Vertex* q) {
  int edges = 0, deg[4] = {0, 0, 0, 0};
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (g.adjacent(q[i], q[j])) {
        ++edges;
        ++deg[i];
        ++deg[j];
      }
  std::sort(deg, deg + 4);
  return edges == 3 && deg[0] == 1 && deg[1] == 1 && deg[2] == 2 && deg[3] == 2;
}

bool brute_double_p4(const Graph& g) {
  const std::size_t n = g.order();
  if (n < 8) return false;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (std::popcount(mask) != 8) continue;
    Vertex s[8];
    int k = 0;
    for (Vertex v = 0; v < n; ++v)
      if (mask >> v & 1) s[k++] = v;
    for (unsigned split = 0; split < 256; ++split) {
      if (std::popcount(split) != 4 || !(split & 1)) continue;
      Vertex x[4], y[4];
      int xi = 0, yi = 0;
      for (int i = 0; i < 8; ++i) (split >> i & 1 ? x[xi++] : y[yi++]) = s[i];
      if (!quad_is_p4(g, x) || !quad_is_p4(g, y)) continue;
      bool cross = false;
      for (Vertex u : x)
        for (Vertex v : y) cross |= g.adjacent(u, v);
      if (!cross) return true;
    }
  }
  return false;
}

void recognition() {
  const auto t0 = Clock::now();
  std::mt19937_64 rng(40000);
  int agree = 0, members = 0, total = 500;
  for (int i = 0; i < total; ++i) {
    const std::size_t n = 4 + i % 9;
    // Half uniform over labelled graphs, half sparse so that members and
    // P4+P4 witnesses both show up.
    const double p = i % 2 ? 0.5 : 0.08 + 0.04 * (i / 2 % 6);
    std::bernoulli_distribution coin(p);
    std::vector<Edge> e;
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v)
        if (coin(rng)) e.push_back({u, v});
    const Graph g(std::vector<Weight>(n, 1), e);
    const bool expect = !brute_triangle(g) && !brute_double_p4(g);
    const bool got = is_class_member(g).member;
    agree += got == expect;
    members += expect;
  }
  report(6, agree == total, "recognition",
         fmt("%d/%d verdicts match 3-subset and 8-subset scans (%d members), %.1f s", agree,
             total, members, seconds_since(t0)));
}

// A single instance makes a poor growth estimate (one unusually easy graph
// inflates the ratio), so each size is timed on a fixed set of seeds.
void scaling() {
  std::vector<double> totals;
  std::string detail;
  bool ok = true;
  double slowest = 0;
  for (std::size_t n : {30, 45, 60}) {
    double total = 0;
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
      const Graph g = testkit::gen_instance(testkit::Model::kClustered, n, 0.5, seed);
      const auto t0 = Clock::now();
      guarded([&] { audit(g, solve(g)); });
      const double s = seconds_since(t0);
      total += s;
      slowest = std::max(slowest, s);
      ok &= s < 60;
    }
    totals.push_back(total);
    detail += fmt("n=%zu %.2f s over 5 seeds; ", n, total);
  }
  for (std::size_t i = 1; i < totals.size(); ++i) {
    const double ratio = totals[i] / std::max(totals[i - 1], 1e-3);
    ok &= ratio < 50;
    detail += fmt("ratio %.1fx; ", ratio);
  }
  detail += fmt("slowest instance %.2f s; limits 60 s each, ratio < 50x", slowest);
  report(7, ok, "polynomial scaling", detail);
}

void determinism() {
  int identical = 0, total = 0;
  for (std::uint64_t i = 0; i < 30; ++i) {
    const Graph g = testkit::gen_instance(model_for(i), 10 + i % 9, density_for(i), 50000 + i);
    guarded([&] {
      std::vector<std::string> solves, covers;
      for (unsigned jobs : {1u, 1u, 2u, 4u}) {
        SolveOptions opt;
        opt.jobs = jobs;
        const SolveResult r = solve(g, opt);
        audit(g, r);
        solves.push_back(solve_json(g, r));
        const CoverResult c = solve_with_cover(g, opt);
        bool bip = true;
        for (const VertexSet& m : c.family.members) bip &= two_coloring(g, m).has_value();
        covers.push_back(cover_json(g, c, bip, cover_budget(g.order())));
      }
      ++total;
      identical += std::all_of(solves.begin(), solves.end(),
                               [&](const std::string& s) { return s == solves[0]; }) &&
                   std::all_of(covers.begin(), covers.end(),
                               [&](const std::string& s) { return s == covers[0]; });
    });
  }
  report(8, total == 30 && identical == total, "determinism",
         fmt("%d/%d instances give byte-identical solve and cover JSON across jobs 1,1,2,4",
             identical, total));
}

}  // namespace

int main() {
  const auto before = certified_result_count();
  const auto t0 = Clock::now();

  oracle_equivalence();
  containing_pair_equivalence();
  cover_completeness();
  structural_claims();
  recognition();
  scaling();
  determinism();

  const auto certified = certified_result_count() - before;
  report(3, audited > 0 && audit_failures == 0 && certified >= audited, "self-certification",
         fmt("%zu returns re-audited, %zu failures; %llu results passed in-process "
             "certification",
             audited, audit_failures, static_cast<unsigned long long>(certified)));

  std::printf("total %.1f s, %d criteria failed\n", seconds_since(t0), failures);
  return failures == 0 ? 0 : 1;
}
