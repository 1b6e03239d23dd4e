#include "algconn/random.hpp"

#include <algorithm>

namespace algconn {

DiGraph random_graph(int n, int m, std::mt19937_64& rng) {
  std::vector<Arc> slots;
  for (int t = 1; t <= n; ++t)
    for (int h = 1; h <= n; ++h)
      if (t != h) slots.emplace_back(t, h);
  if (m < 0 || m > static_cast<int>(slots.size()))
    throw GraphError("arc count out of range for random graph");
  std::shuffle(slots.begin(), slots.end(), rng);
  slots.resize(m);
  return DiGraph(n, std::move(slots));
}

DiGraph random_graph_uniform_arcs(int n, int min_arcs, int max_arcs,
                                  std::mt19937_64& rng) {
  std::uniform_int_distribution<int> dist(min_arcs, max_arcs);
  return random_graph(n, dist(rng), rng);
}

DiGraph random_acyclic_graph(int n, double arc_probability,
                             std::mt19937_64& rng) {
  std::bernoulli_distribution coin(arc_probability);
  std::vector<Arc> arcs;
  for (int t = 1; t <= n; ++t)
    for (int h = t + 1; h <= n; ++h)
      if (coin(rng)) arcs.emplace_back(t, h);
  return DiGraph(n, std::move(arcs));
}

}  // namespace algconn
