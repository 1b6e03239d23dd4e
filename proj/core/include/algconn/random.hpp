#pragma once

#include <random>

#include "algconn/digraph.hpp"

namespace algconn {

/// Uniform random simple digraph with n vertices and exactly m arcs.
DiGraph random_graph(int n, int m, std::mt19937_64& rng);

/// Random graph with m drawn uniformly from [min_arcs, max_arcs].
DiGraph random_graph_uniform_arcs(int n, int min_arcs, int max_arcs,
                                  std::mt19937_64& rng);

/// Random acyclic graph: arcs oriented from lower to higher labels.
DiGraph random_acyclic_graph(int n, double arc_probability,
                             std::mt19937_64& rng);

}  // namespace algconn
