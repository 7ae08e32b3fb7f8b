#pragma once

// Branching engine shared by the split-case, containing-pair and top-level
// solvers.
//
// Every routine returns the best independent set of its live subgraph
// united with the forced vertices accumulated on the way down. Branching is
// always of the form "some vertex set X is removed" where the union of the
// sibling subgraphs contains every independent set of the parent, so the
// maximum over siblings is the parent optimum whatever case was detected.

#include <cstdint>
#include <vector>

#include "p4wis/case_a.hpp"
#include "p4wis/graph.hpp"
#include "p4wis/solve_options.hpp"
#include "p4wis/solve_result.hpp"

namespace p4wis::detail {

struct Best {
  VertexSet chosen;
  Weight weight = -1;  ///< -1 marks "no candidate yet"
};

/// Replaces `best` only on a strictly heavier candidate; first found wins.
inline void keep_better(Best& best, Best&& candidate) {
  if (candidate.weight > best.weight) best = std::move(candidate);
}

/// A subproblem: `active` is the independent set being branched on,
/// `passive` an independent set carried along (two-sided case only), `t` the P4-free
/// part. `forced` vertices are already in the solution and removed.
struct Frame {
  VertexSet active;
  VertexSet passive;
  VertexSet t;
  VertexSet forced;

  VertexSet live() const { return active | passive | t; }
  Frame minus(const VertexSet& removed) const {
    return {active - removed, passive - removed, t - removed, forced};
  }
  Frame drop_active(Vertex v) const {
    return {active.without(v), passive, t, forced};
  }
  /// v joins the solution; v and N(v) leave the subproblem.
  Frame force(const Graph& g, Vertex v) const {
    VertexSet removed = g.neighbors(v).with(v);
    Frame f = minus(removed);
    f.forced.insert(v);
    return f;
  }
};

enum class Level { kSplit, kTwoSided };

/// Per active vertex: which nontrivial components of G[t] it contacts and to
/// which of them it is bi-partial (indices into `hs`).
struct ContactTable {
  ComponentStructure t_comps;
  std::vector<const Component*> hs;
  struct Row {
    Vertex v;
    std::vector<std::size_t> contacted;
    std::vector<std::size_t> bipartial;
  };
  std::vector<Row> rows;

  bool any_bipartial() const;
  bool bipartial_at_most_one() const;
};

class Engine {
 public:
  Engine(const Graph& g, bool record_leaves) : g_(g), record_(record_leaves) {}

  const Graph& graph() const { return g_; }
  SolveStats& stats() { return stats_; }
  std::vector<LeafRecord>& leaves() { return leaves_; }

  /// Base case via the complete bipartite side rule; fails loudly otherwise.
  Best leaf_strict(const VertexSet& live, const VertexSet& forced);
  /// Base case that also accepts bipartite residuals that are not a union of
  /// complete bipartite components.
  Best leaf_any(const VertexSet& live, const VertexSet& forced);

  /// Split-case dispatcher on frame {active = S, t = T}; passive must be empty.
  Best case_a(const Frame& frame, unsigned depth);

  /// Two-sided case after a chain vertex v' has been fixed: `x` is the
  /// independent side that rides along, `d` the opposite class, `t_before`
  /// = T' and `t_after` = T'' = T' \ N(v').
  Best two_sided_entry(const VertexSet& x, const VertexSet& d,
                       const VertexSet& t_before, const VertexSet& t_after,
                       const VertexSet& forced, unsigned depth);

  Best dispatch(Level level, const Frame& frame, unsigned depth);

 private:
  Best two_sided_node(const Frame& frame, unsigned depth);
  Best no_bipartial(const Frame& frame, const ContactTable& table, unsigned depth);
  Best single_bipartial(Level level, const Frame& frame,
                        const ContactTable& table, unsigned depth);
  Best order_sink(Level level, const Frame& frame, unsigned depth);
  Best record_leaf(const VertexSet& live, const VertexSet& forced,
                   const SolveResult& base);
  void guard(unsigned depth) const;

  const Graph& g_;
  bool record_;
  SolveStats stats_;
  std::vector<LeafRecord> leaves_;
};

ContactTable build_contact_table(const Graph& g, const VertexSet& active,
                                 const VertexSet& t);

PartialOrderDigraph build_order_digraph(const Graph& g, const VertexSet& active,
                                        const VertexSet& t);

}  // namespace p4wis::detail
