#include "algconn/digraph.hpp"

#include <algorithm>

namespace algconn {

long long IntMatrix::trace() const {
  long long t = 0;
  for (int i = 0; i < order_; ++i) t += at(i, i);
  return t;
}

bool IntMatrix::has_zero_row_sums() const {
  for (int i = 0; i < order_; ++i) {
    long long s = 0;
    for (int j = 0; j < order_; ++j) s += at(i, j);
    if (s != 0) return false;
  }
  return true;
}

DiGraph::DiGraph(int n) : n_(n) {
  if (n < 1) throw GraphError("vertex count must be positive");
  if (n > kMaxVertices)
    throw SizeCapError("vertex count exceeds cap of " +
                       std::to_string(kMaxVertices));
}

DiGraph::DiGraph(int n, std::vector<Arc> arcs) : DiGraph(n) {
  for (const auto& [t, h] : arcs) check_endpoints(t, h);
  std::sort(arcs.begin(), arcs.end());
  if (std::adjacent_find(arcs.begin(), arcs.end()) != arcs.end())
    throw DuplicateArcError("duplicate arc in arc list");
  arcs_ = std::move(arcs);
}

void DiGraph::check_endpoints(int tail, int head) const {
  if (tail < 1 || tail > n_ || head < 1 || head > n_)
    throw VertexOutOfRange("arc endpoint outside 1.." + std::to_string(n_));
  if (tail == head)
    throw SelfArcError("self-arc at vertex " + std::to_string(tail));
}

bool DiGraph::has_arc(int tail, int head) const {
  return std::binary_search(arcs_.begin(), arcs_.end(), Arc{tail, head});
}

DiGraph DiGraph::with_arc(int tail, int head) const {
  check_endpoints(tail, head);
  Arc a{tail, head};
  auto pos = std::lower_bound(arcs_.begin(), arcs_.end(), a);
  if (pos != arcs_.end() && *pos == a)
    throw DuplicateArcError("arc (" + std::to_string(tail) + "," +
                            std::to_string(head) + ") already present");
  DiGraph g(n_);
  g.arcs_.reserve(arcs_.size() + 1);
  g.arcs_.assign(arcs_.begin(), pos);
  g.arcs_.push_back(a);
  g.arcs_.insert(g.arcs_.end(), pos, arcs_.end());
  return g;
}

std::vector<int> DiGraph::in_degrees() const {
  std::vector<int> deg(n_, 0);
  for (const auto& [t, h] : arcs_) ++deg[h - 1];
  return deg;
}

int DiGraph::max_in_degree() const {
  auto deg = in_degrees();
  return *std::max_element(deg.begin(), deg.end());
}

IntMatrix DiGraph::laplacian() const {
  IntMatrix L(n_);
  for (const auto& [t, h] : arcs_) {
    L.at(h - 1, t - 1) -= 1;
    L.at(h - 1, h - 1) += 1;
  }
  return L;
}

DiGraph DiGraph::complement() const {
  std::vector<Arc> out;
  out.reserve(static_cast<size_t>(n_) * (n_ - 1) - arcs_.size());
  for (int t = 1; t <= n_; ++t)
    for (int h = 1; h <= n_; ++h)
      if (t != h && !has_arc(t, h)) out.emplace_back(t, h);
  return DiGraph(n_, std::move(out));
}

DiGraph DiGraph::transpose() const {
  std::vector<Arc> out;
  out.reserve(arcs_.size());
  for (const auto& [t, h] : arcs_) out.emplace_back(h, t);
  return DiGraph(n_, std::move(out));
}

namespace {

// Iterative Tarjan; returns the SCC id of each vertex (0-based), ids
// assigned in reverse topological order of the condensation.
std::vector<int> scc_ids(int n, const std::vector<std::vector<int>>& adj,
                         int& scc_count) {
  std::vector<int> index(n, -1), lowlink(n, 0), comp(n, -1);
  std::vector<bool> on_stack(n, false);
  std::vector<int> stack;
  int next_index = 0;
  scc_count = 0;

  struct Frame {
    int v;
    size_t child;
  };
  std::vector<Frame> call;

  for (int root = 0; root < n; ++root) {
    if (index[root] != -1) continue;
    call.push_back({root, 0});
    while (!call.empty()) {
      auto& [v, child] = call.back();
      if (child == 0) {
        index[v] = lowlink[v] = next_index++;
        stack.push_back(v);
        on_stack[v] = true;
      }
      bool descended = false;
      while (child < adj[v].size()) {
        int w = adj[v][child++];
        if (index[w] == -1) {
          call.push_back({w, 0});
          descended = true;
          break;
        }
        if (on_stack[w]) lowlink[v] = std::min(lowlink[v], index[w]);
      }
      if (descended) continue;
      if (lowlink[v] == index[v]) {
        int w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          comp[w] = scc_count;
        } while (w != v);
        ++scc_count;
      }
      int finished = v;
      call.pop_back();
      if (!call.empty()) {
        int parent = call.back().v;
        lowlink[parent] = std::min(lowlink[parent], lowlink[finished]);
      }
    }
  }
  return comp;
}

}  // namespace

int DiGraph::source_scc_count() const {
  std::vector<std::vector<int>> adj(n_);
  for (const auto& [t, h] : arcs_) adj[t - 1].push_back(h - 1);
  int count = 0;
  auto comp = scc_ids(n_, adj, count);
  std::vector<bool> has_incoming(count, false);
  for (const auto& [t, h] : arcs_) {
    if (comp[t - 1] != comp[h - 1]) has_incoming[comp[h - 1]] = true;
  }
  int sources = 0;
  for (int c = 0; c < count; ++c)
    if (!has_incoming[c]) ++sources;
  return sources;
}

bool DiGraph::is_rooted() const { return source_scc_count() == 1; }

DiGraph graph_union(const DiGraph& a, const DiGraph& b) {
  if (a.order() != b.order())
    throw GraphError("union requires equal vertex counts");
  std::vector<Arc> merged;
  merged.reserve(a.arcs().size() + b.arcs().size());
  std::set_union(a.arcs().begin(), a.arcs().end(), b.arcs().begin(),
                 b.arcs().end(), std::back_inserter(merged));
  return DiGraph(a.order(), std::move(merged));
}

}  // namespace algconn
