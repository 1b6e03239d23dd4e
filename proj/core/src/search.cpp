#include "algconn/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <functional>
#include <sstream>
#include <thread>

#include "algconn/spectra.hpp"

namespace algconn {

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  std::uint64_t result = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    result = result / i * (n - k + i) + result % i * (n - k + i) / i;
  }
  return result;
}

GraphEnumerator::GraphEnumerator(int n, int m) : n_(n), m_(m) {
  if (n < 2 || n > kMaxVertices) throw GraphError("enumerator requires 2 <= n <= 64");
  if (m < 0 || m > n * (n - 1))
    throw GraphError("arc count must satisfy 0 <= m <= n(n-1)");
  for (int t = 1; t <= n; ++t)
    for (int h = 1; h <= n; ++h)
      if (t != h) slots_.emplace_back(t, h);
  total_ = binomial(slots_.size(), m);
}

std::vector<int> GraphEnumerator::combination_at(std::uint64_t index) const {
  const int s = static_cast<int>(slots_.size());
  std::vector<int> comb(m_);
  std::uint64_t r = index;
  int c = 0;
  for (int p = 0; p < m_; ++p) {
    while (true) {
      std::uint64_t below = binomial(s - c - 1, m_ - p - 1);
      if (below > r) break;
      r -= below;
      ++c;
    }
    comb[p] = c++;
  }
  return comb;
}

bool GraphEnumerator::next_combination(std::vector<int>& comb) const {
  const int s = static_cast<int>(slots_.size());
  int i = m_ - 1;
  while (i >= 0 && comb[i] == s - m_ + i) --i;
  if (i < 0) return false;
  ++comb[i];
  for (int j = i + 1; j < m_; ++j) comb[j] = comb[j - 1] + 1;
  return true;
}

DiGraph GraphEnumerator::graph_for(const std::vector<int>& comb) const {
  std::vector<Arc> arcs;
  arcs.reserve(comb.size());
  for (int idx : comb) arcs.push_back(slots_[idx]);
  return DiGraph(n_, std::move(arcs));
}

std::string SearchResult::to_json() const {
  std::ostringstream out;
  out.precision(17);
  out << "{\"n\":" << n << ",\"m\":" << m << ",\"best_value\":" << best_value
      << ",\"witness_count\":" << witnesses.size()
      << ",\"graphs_examined\":" << graphs_examined
      << ",\"graphs_pruned\":" << graphs_pruned << ",\"exhaustive\":"
      << (exhaustive ? "true" : "false") << ",\"seconds\":" << wall_time_seconds
      << "}";
  return out.str();
}

namespace {

double tie_window(double best, double rel_tol) {
  return std::max(rel_tol * std::abs(best), 1e-12);
}

struct ChunkResult {
  double best = -1.0;
  std::vector<std::pair<double, DiGraph>> witnesses;  // enumeration order
  std::uint64_t examined = 0;
  std::uint64_t pruned = 0;
};

void atomic_max(std::atomic<double>& target, double value) {
  double cur = target.load(std::memory_order_relaxed);
  while (value > cur &&
         !target.compare_exchange_weak(cur, value, std::memory_order_relaxed)) {
  }
}

constexpr std::uint64_t kChunkSize = 32768;

}  // namespace

SearchResult max_connectivity(int n, int m, const SearchOptions& opts) {
  const auto start = std::chrono::steady_clock::now();
  GraphEnumerator enumerator(n, m);

  const std::uint64_t total = enumerator.total();
  const std::uint64_t chunk_count = (total + kChunkSize - 1) / kChunkSize;

  int workers = opts.workers > 0
                    ? opts.workers
                    : std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<int>(
      std::min<std::uint64_t>(workers, std::max<std::uint64_t>(chunk_count, 1)));

  std::vector<ChunkResult> chunks(chunk_count);
  std::atomic<std::uint64_t> next_chunk{0};
  std::atomic<double> shared_best{-1.0};  // advisory only

  auto elapsed = [&] {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                         start)
        .count();
  };

  auto run_chunk = [&](std::uint64_t ci) {
    ChunkResult& out = chunks[ci];
    const std::uint64_t begin = ci * kChunkSize;
    const std::uint64_t end = std::min(begin + kChunkSize, total);
    std::vector<int> comb = enumerator.combination_at(begin);
    for (std::uint64_t r = begin; r < end; ++r) {
      DiGraph g = enumerator.graph_for(comb);
      double hint = shared_best.load(std::memory_order_relaxed);
      bool skip = false;
      if (opts.prune && hint > 1e-6 && !g.is_rooted()) {
        // Lemma-1 prune: unrooted graphs have connectivity 0 and cannot
        // beat a positive incumbent.
        ++out.pruned;
        skip = true;
      }
      if (!skip) {
        ++out.examined;
        double value = algebraic_connectivity(g);
        atomic_max(shared_best, value);
        if (value > out.best) {
          out.best = value;
          double w = tie_window(out.best, opts.tie_tol);
          std::erase_if(out.witnesses,
                        [&](const auto& p) { return p.first < out.best - w; });
        }
        if (value >= out.best - tie_window(out.best, opts.tie_tol) &&
            out.witnesses.size() < opts.witness_cap) {
          out.witnesses.emplace_back(value, std::move(g));
        }
      }
      if (r + 1 < end) enumerator.next_combination(comb);
    }
  };

  auto worker_loop = [&] {
    while (true) {
      if (opts.budget_seconds > 0 && elapsed() > opts.budget_seconds) return;
      std::uint64_t ci = next_chunk.fetch_add(1);
      if (ci >= chunk_count) return;
      run_chunk(ci);
    }
  };

  if (workers <= 1 || chunk_count <= 1) {
    worker_loop();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) pool.emplace_back(worker_loop);
    for (auto& t : pool) t.join();
  }

  SearchResult result;
  result.n = n;
  result.m = m;
  // Deterministic merge in chunk order.
  double best = -1.0;
  for (const auto& c : chunks) {
    result.graphs_examined += c.examined;
    result.graphs_pruned += c.pruned;
    best = std::max(best, c.best);
  }
  result.best_value = std::max(best, 0.0);
  double w = tie_window(result.best_value, opts.tie_tol);
  for (const auto& c : chunks) {
    for (const auto& [value, g] : c.witnesses) {
      if (value >= result.best_value - w &&
          result.witnesses.size() < opts.witness_cap)
        result.witnesses.push_back(g);
    }
  }
  result.exhaustive = result.graphs_examined + result.graphs_pruned == total;
  result.wall_time_seconds = elapsed();
  return result;
}

bool is_directed_tree(const DiGraph& g) {
  return g.arc_count() == g.order() - 1 && g.is_rooted();
}

namespace {

bool is_acyclic(const DiGraph& g) {
  const int n = g.order();
  std::vector<std::vector<int>> adj(n + 1);
  std::vector<int> indeg(n + 1, 0);
  for (const auto& [t, h] : g.arcs()) {
    adj[t].push_back(h);
    ++indeg[h];
  }
  std::vector<int> queue;
  for (int v = 1; v <= n; ++v)
    if (indeg[v] == 0) queue.push_back(v);
  size_t removed = 0;
  while (!queue.empty()) {
    int v = queue.back();
    queue.pop_back();
    ++removed;
    for (int h : adj[v])
      if (--indeg[h] == 0) queue.push_back(h);
  }
  return removed == static_cast<size_t>(n);
}

}  // namespace

bool is_directed_forest(const DiGraph& g, int trees) {
  if (g.order() - g.arc_count() != trees) return false;
  for (int d : g.in_degrees())
    if (d > 1) return false;
  return is_acyclic(g);
}

namespace {

std::vector<DiGraph> graphs_matching(int n, int m,
                                     const std::function<bool(const DiGraph&)>& pred) {
  GraphEnumerator e(n, m);
  std::vector<DiGraph> out;
  if (e.total() == 0) return out;
  std::vector<int> comb(m);
  for (int i = 0; i < m; ++i) comb[i] = i;
  while (true) {
    DiGraph g = e.graph_for(comb);
    if (pred(g)) out.push_back(std::move(g));
    if (!e.next_combination(comb)) break;
  }
  return out;
}

bool same_graph_set(std::vector<DiGraph> a, std::vector<DiGraph> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

}  // namespace

TheoremReport verify_sparse_theorem(int n, const SearchOptions& opts) {
  TheoremReport report;
  report.name = "sparse optimum (m = n-1)";
  report.search = max_connectivity(n, n - 1, opts);
  if (!report.search.exhaustive) {
    report.skipped = true;
    report.detail = "search budget exhausted";
    return report;
  }
  bool max_ok = std::abs(report.search.best_value - 1.0) <= 1e-8;
  auto expected = graphs_matching(n, n - 1, is_directed_tree);
  bool set_ok = same_graph_set(report.search.witnesses, expected);
  report.passed = max_ok && set_ok;
  std::ostringstream d;
  d << "n=" << n << " max=" << report.search.best_value << " witnesses="
    << report.search.witnesses.size() << " directed trees=" << expected.size();
  report.detail = d.str();
  return report;
}

TheoremReport verify_dense_theorem(int n, int m, const SearchOptions& opts) {
  TheoremReport report;
  report.name = "dense optimum ((n-1)^2 <= m < n(n-1))";
  if (m < (n - 1) * (n - 1) || m >= n * (n - 1))
    throw GraphError("dense theorem requires (n-1)^2 <= m < n(n-1)");
  const int trees = m - n * (n - 2);
  report.search = max_connectivity(n, m, opts);
  if (!report.search.exhaustive) {
    report.skipped = true;
    report.detail = "search budget exhausted";
    return report;
  }
  bool max_ok = std::abs(report.search.best_value - (n - 1)) <= 1e-8;
  auto expected = graphs_matching(n, m, [&](const DiGraph& g) {
    return is_directed_forest(g.complement(), trees);
  });
  bool set_ok = same_graph_set(report.search.witnesses, expected);
  bool attain_ok = true;
  for (const auto& g : expected) {
    if (std::abs(algebraic_connectivity(g) - (n - 1)) > 1e-8) {
      attain_ok = false;
      break;
    }
  }
  report.passed = max_ok && set_ok && attain_ok;
  std::ostringstream d;
  d << "n=" << n << " m=" << m << " max=" << report.search.best_value
    << " witnesses=" << report.search.witnesses.size()
    << " forest-complement graphs=" << expected.size();
  report.detail = d.str();
  return report;
}

namespace {

DiGraph full_star(int n, int root) {
  std::vector<Arc> arcs;
  for (int v = 1; v <= n; ++v)
    if (v != root) arcs.emplace_back(root, v);
  return DiGraph(n, std::move(arcs));
}

}  // namespace

TheoremReport verify_star_union_theorem(int n, int l, bool run_search,
                                        const SearchOptions& opts) {
  TheoremReport report;
  report.name = "star union (m = l(n-1))";
  if (l < 1 || l > n) throw GraphError("star count l must satisfy 1 <= l <= n");

  // Every union of l distinct-rooted full stars attains l.
  bool unions_ok = true;
  std::vector<int> roots(l);
  for (int i = 0; i < l; ++i) roots[i] = i + 1;
  while (unions_ok) {
    DiGraph g(n);
    for (int r : roots) g = graph_union(g, full_star(n, r));
    if (std::abs(algebraic_connectivity(g) - l) > 1e-8) unions_ok = false;
    int i = l - 1;
    while (i >= 0 && roots[i] == n - (l - 1 - i)) --i;
    if (i < 0) break;
    ++roots[i];
    for (int j = i + 1; j < l; ++j) roots[j] = roots[j - 1] + 1;
  }

  bool max_ok = true;
  if (run_search) {
    report.search = max_connectivity(n, l * (n - 1), opts);
    if (!report.search.exhaustive) {
      report.skipped = true;
      report.detail = "search budget exhausted";
      return report;
    }
    max_ok = std::abs(report.search.best_value - l) <= 1e-8;
  }
  report.passed = unions_ok && max_ok;
  std::ostringstream d;
  d << "n=" << n << " l=" << l << " star unions attain l: "
    << (unions_ok ? "yes" : "no");
  if (run_search) d << " searched max=" << report.search.best_value;
  report.detail = d.str();
  return report;
}

}  // namespace algconn
