#pragma once

#include <set>
#include <vector>

#include "algconn/digraph.hpp"
#include "algconn/spectra.hpp"

namespace algconn {
namespace forest_oracle {

/// Cost caps for brute-force enumeration. Exceeding either throws
/// SizeCapError; the oracle never silently samples.
inline constexpr int kMaxOracleVertices = 6;
inline constexpr int kMaxOracleArcs = 16;

/// A spanning directed forest: each non-root vertex has exactly one
/// incoming arc, roots have none, and the arc set is acyclic.
struct ForestCertificate {
  std::set<int> root_set;
  std::vector<Arc> arc_subset;
  int tree_count = 0;
};

/// Exact principal minor of M with the rows/columns in `removed`
/// (1-indexed) deleted; fraction-free elimination over big integers.
BigInt principal_minor_exact(const IntMatrix& M, const std::set<int>& removed);

/// Spanning directed forests of g with trees rooted precisely at `roots`.
BigInt count_forests_rooted(const DiGraph& g, const std::set<int>& roots);

/// All spanning directed forests, with certificates.
std::vector<ForestCertificate> enumerate_forests_rooted(
    const DiGraph& g, const std::set<int>& roots);

/// Sum of count_forests_rooted over all k-subsets of vertices.
BigInt count_forests_k(const DiGraph& g, int k);

/// Smallest k with count_forests_k(g, k) > 0.
int min_tree_count(const DiGraph& g);

/// Both routes of the matrix-tree identity for one root set:
/// enumeration count and the exact principal minor.
struct RootedCountCheck {
  BigInt enumerated;
  BigInt principal_minor;
  bool agree() const { return enumerated == principal_minor; }
};
RootedCountCheck verify_rooted_count(const DiGraph& g,
                                     const std::set<int>& roots);

}  // namespace forest_oracle
}  // namespace algconn
