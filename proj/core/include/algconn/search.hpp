#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "algconn/digraph.hpp"

namespace algconn {

/// Deterministic enumerator of all simple digraphs with n vertices and m
/// arcs: the m-subsets of the n(n-1) arc slots in lexicographic
/// combination order. Supports unranking for range splitting.
class GraphEnumerator {
public:
  GraphEnumerator(int n, int m);

  std::uint64_t total() const { return total_; }
  int order() const { return n_; }
  int arc_count() const { return m_; }

  /// Combination at rank `index` (combinatorial number system).
  std::vector<int> combination_at(std::uint64_t index) const;

  /// Advances `comb` to the next combination in lexicographic order;
  /// returns false when comb was the last one.
  bool next_combination(std::vector<int>& comb) const;

  DiGraph graph_for(const std::vector<int>& comb) const;

  /// The arc slots, lexicographically sorted.
  const std::vector<Arc>& slots() const { return slots_; }

private:
  int n_;
  int m_;
  std::vector<Arc> slots_;
  std::uint64_t total_;
};

std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

struct SearchOptions {
  int workers = 0;                 // 0 = hardware concurrency
  double budget_seconds = 0;       // 0 = unlimited
  bool prune = true;               // skip unrooted graphs once best > 0
  double tie_tol = 1e-6;           // relative witness tolerance
  std::size_t witness_cap = 10000;
};

struct SearchResult {
  int n = 0;
  int m = 0;
  double best_value = 0;
  std::vector<DiGraph> witnesses;
  std::uint64_t graphs_examined = 0;
  std::uint64_t graphs_pruned = 0;
  bool exhaustive = false;
  double wall_time_seconds = 0;

  std::string to_json() const;
};

/// Maximal algebraic connectivity over all simple digraphs with n
/// vertices and m arcs, with witness collection. Deterministic in
/// best_value and witness set regardless of worker count.
SearchResult max_connectivity(int n, int m, const SearchOptions& opts = {});

struct TheoremReport {
  std::string name;
  bool passed = false;
  bool skipped = false;  // budget exhausted before the search finished
  std::string detail;
  SearchResult search;
};

/// Sparse optimum: max over m = n-1 is 1 and the witnesses are exactly
/// the directed trees (rooted graphs with n-1 arcs).
TheoremReport verify_sparse_theorem(int n, const SearchOptions& opts = {});

/// Dense optimum for (n-1)^2 <= m < n(n-1): max is n-1 and witnesses are
/// exactly the graphs whose complement is a directed forest with
/// m - n(n-2) trees.
TheoremReport verify_dense_theorem(int n, int m,
                                   const SearchOptions& opts = {});

/// Star unions: every union of l distinct-rooted full stars attains
/// connectivity l; for small n the searched max over m = l(n-1) is l.
TheoremReport verify_star_union_theorem(int n, int l, bool run_search = true,
                                        const SearchOptions& opts = {});

/// Structural predicate: g is a directed forest (acyclic, every vertex
/// in-degree <= 1) with exactly `trees` trees.
bool is_directed_forest(const DiGraph& g, int trees);

/// g is a directed tree: rooted with n-1 arcs.
bool is_directed_tree(const DiGraph& g);

}  // namespace algconn
