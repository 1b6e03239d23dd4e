#include "algconn/forest_oracle.hpp"

#include <algorithm>

namespace algconn {
namespace forest_oracle {

namespace {

void check_caps(const DiGraph& g) {
  if (g.order() > kMaxOracleVertices)
    throw SizeCapError("forest oracle capped at n <= " +
                       std::to_string(kMaxOracleVertices));
  if (g.arc_count() > kMaxOracleArcs)
    throw SizeCapError("forest oracle capped at m <= " +
                       std::to_string(kMaxOracleArcs));
}

void check_roots(const DiGraph& g, const std::set<int>& roots) {
  if (roots.empty()) throw GraphError("root set must be nonempty");
  for (int r : roots)
    if (r < 1 || r > g.order())
      throw VertexOutOfRange("root outside 1.." + std::to_string(g.order()));
}

// Parent assignments give a functional graph on the non-roots; a cycle
// among non-roots is the only way acyclicity can fail.
bool assignment_acyclic(const std::vector<int>& parent, int n) {
  std::vector<int> state(n + 1, 0);  // 0 unseen, 1 in progress, 2 done
  for (int v = 1; v <= n; ++v) {
    if (state[v] != 0) continue;
    int u = v;
    std::vector<int> path;
    while (u != 0 && state[u] == 0) {
      state[u] = 1;
      path.push_back(u);
      u = parent[u];
    }
    if (u != 0 && state[u] == 1) return false;
    for (int w : path) state[w] = 2;
  }
  return true;
}

template <typename Visit>
void for_each_forest(const DiGraph& g, const std::set<int>& roots,
                     Visit&& visit) {
  const int n = g.order();
  std::vector<std::vector<int>> in_tails(n + 1);
  for (const auto& [t, h] : g.arcs()) in_tails[h].push_back(t);

  std::vector<int> non_roots;
  for (int v = 1; v <= n; ++v)
    if (!roots.contains(v)) non_roots.push_back(v);
  for (int v : non_roots)
    if (in_tails[v].empty()) return;  // no forest can cover v

  // parent[v] = chosen tail of v's incoming arc, 0 for roots.
  std::vector<int> parent(n + 1, 0);
  std::vector<size_t> choice(non_roots.size(), 0);
  size_t depth = 0;
  while (true) {
    if (depth == non_roots.size()) {
      if (assignment_acyclic(parent, n)) visit(parent, non_roots);
      if (depth == 0) return;
      --depth;
      ++choice[depth];
    }
    while (true) {
      int v = non_roots[depth];
      if (choice[depth] < in_tails[v].size()) {
        parent[v] = in_tails[v][choice[depth]];
        ++depth;
        if (depth < non_roots.size()) choice[depth] = 0;
        break;
      }
      if (depth == 0) return;
      --depth;
      ++choice[depth];
    }
  }
}

}  // namespace

BigInt principal_minor_exact(const IntMatrix& M, const std::set<int>& removed) {
  std::vector<int> keep;
  for (int i = 1; i <= M.order(); ++i)
    if (!removed.contains(i)) keep.push_back(i);
  const int k = static_cast<int>(keep.size());
  if (k == 0) return 1;  // minor of order zero

  // Bareiss fraction-free elimination.
  std::vector<std::vector<BigInt>> a(k, std::vector<BigInt>(k));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) a[i][j] = M.at(keep[i] - 1, keep[j] - 1);

  BigInt prev = 1;
  int sign = 1;
  for (int p = 0; p < k - 1; ++p) {
    if (a[p][p] == 0) {
      int swap_row = -1;
      for (int r = p + 1; r < k; ++r)
        if (a[r][p] != 0) {
          swap_row = r;
          break;
        }
      if (swap_row == -1) return 0;
      std::swap(a[p], a[swap_row]);
      sign = -sign;
    }
    for (int i = p + 1; i < k; ++i)
      for (int j = p + 1; j < k; ++j)
        a[i][j] = (a[i][j] * a[p][p] - a[i][p] * a[p][j]) / prev;
    prev = a[p][p];
  }
  return sign * a[k - 1][k - 1];
}

BigInt count_forests_rooted(const DiGraph& g, const std::set<int>& roots) {
  check_caps(g);
  check_roots(g, roots);
  BigInt count = 0;
  for_each_forest(g, roots, [&](const auto&, const auto&) { ++count; });
  return count;
}

std::vector<ForestCertificate> enumerate_forests_rooted(
    const DiGraph& g, const std::set<int>& roots) {
  check_caps(g);
  check_roots(g, roots);
  std::vector<ForestCertificate> out;
  for_each_forest(g, roots,
                  [&](const std::vector<int>& parent,
                      const std::vector<int>& non_roots) {
                    ForestCertificate cert;
                    cert.root_set = roots;
                    cert.tree_count = static_cast<int>(roots.size());
                    for (int v : non_roots)
                      cert.arc_subset.emplace_back(parent[v], v);
                    std::sort(cert.arc_subset.begin(), cert.arc_subset.end());
                    out.push_back(std::move(cert));
                  });
  return out;
}

BigInt count_forests_k(const DiGraph& g, int k) {
  check_caps(g);
  const int n = g.order();
  if (k < 1 || k > n) throw GraphError("tree count k must satisfy 1 <= k <= n");

  BigInt total = 0;
  std::vector<int> pick(k);
  for (int i = 0; i < k; ++i) pick[i] = i + 1;
  while (true) {
    total += count_forests_rooted(g, std::set<int>(pick.begin(), pick.end()));
    int i = k - 1;
    while (i >= 0 && pick[i] == n - (k - 1 - i)) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
  return total;
}

int min_tree_count(const DiGraph& g) {
  check_caps(g);
  for (int k = 1; k <= g.order(); ++k)
    if (count_forests_k(g, k) > 0) return k;
  throw GraphError("no spanning forest found");  // unreachable: k = n works
}

RootedCountCheck verify_rooted_count(const DiGraph& g,
                                     const std::set<int>& roots) {
  RootedCountCheck check;
  check.enumerated = count_forests_rooted(g, roots);
  check.principal_minor = principal_minor_exact(g.laplacian(), roots);
  return check;
}

}  // namespace forest_oracle
}  // namespace algconn
