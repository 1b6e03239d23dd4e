#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "algconn/builder.hpp"
#include "algconn/consensus.hpp"
#include "algconn/digraph.hpp"
#include "algconn/random.hpp"
#include "algconn/spectra.hpp"

using namespace algconn;

namespace {

DiGraph complete(int n) {
  std::vector<Arc> arcs;
  for (int t = 1; t <= n; ++t)
    for (int h = 1; h <= n; ++h)
      if (t != h) arcs.emplace_back(t, h);
  return DiGraph(n, std::move(arcs));
}

std::vector<double> random_state(int n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  std::vector<double> x(n);
  for (double& v : x) v = dist(rng);
  return x;
}

}  // namespace

TEST_CASE("stable step honors the Gershgorin bound") {
  DiGraph g = complete(4);
  double dt = stable_step(g);
  CHECK(dt * 2 * 3 <= 0.5 + 1e-15);
  CHECK(dt > 0);
}

TEST_CASE("simulate argument validation") {
  DiGraph g(2, {{1, 2}});
  CHECK_THROWS_AS(simulate(g, {1, 0}, -0.1, 1.0), GraphError);
  CHECK_THROWS_AS(simulate(g, {1, 0}, 0.1, 0.0), GraphError);
  CHECK_THROWS_AS(simulate(g, {1.0}, 0.1, 1.0), GraphError);
}

TEST_CASE("star root state is invariant and sets the consensus value") {
  DiGraph star(4, {{1, 2}, {1, 3}, {1, 4}});
  SimTrace trace = simulate(star, {1, 0, 0, 0}, stable_step(star), 30.0);
  const auto& last = trace.states.back();
  CHECK(last[0] == doctest::Approx(1.0).epsilon(1e-12));
  for (int i = 1; i < 4; ++i) CHECK(last[i] == doctest::Approx(1.0).epsilon(1e-6));
  CHECK(trace.disagreement.back() < 1e-6);
}

TEST_CASE("constant initial state stays constant") {
  DiGraph g = build(5, 9);
  SimTrace trace = simulate(g, {3, 3, 3, 3, 3}, stable_step(g), 5.0);
  for (const auto& x : trace.states)
    for (double v : x) CHECK(v == doctest::Approx(3.0).epsilon(1e-12));
}

TEST_CASE("unrooted graphs never reach consensus") {
  DiGraph g(4, {{1, 2}, {3, 4}});
  SimTrace trace = simulate(g, {1, 1, -1, -1}, stable_step(g), 40.0);
  CHECK(trace.disagreement.back() > 1.0);
}

TEST_CASE("complete graph conserves the state mean") {
  DiGraph g = complete(5);
  std::mt19937_64 rng(41);
  std::vector<double> x0 = random_state(5, rng);
  double mean0 = 0;
  for (double v : x0) mean0 += v / 5;
  SimTrace trace = simulate(g, x0, stable_step(g), 3.0);
  for (const auto& x : trace.states) {
    double mean = 0;
    for (double v : x) mean += v / 5;
    CHECK(std::abs(mean - mean0) < 1e-9);
  }
}

TEST_CASE("linearity") {
  DiGraph g = build(4, 5);
  std::mt19937_64 rng(42);
  std::vector<double> x0 = random_state(4, rng);
  double alpha = 1.7, beta = -0.4;
  std::vector<double> y0(4);
  for (int i = 0; i < 4; ++i) y0[i] = alpha * x0[i] + beta;
  SimTrace a = simulate(g, x0, stable_step(g), 4.0);
  SimTrace b = simulate(g, y0, stable_step(g), 4.0);
  for (size_t s = 0; s < a.states.size(); ++s)
    for (int i = 0; i < 4; ++i)
      CHECK(std::abs(b.states[s][i] - (alpha * a.states[s][i] + beta)) < 1e-9);
}

TEST_CASE("estimated rate matches connectivity on closed-form graphs") {
  std::mt19937_64 rng(43);

  DiGraph tree(5, {{1, 2}, {2, 3}, {2, 4}, {4, 5}});
  SimTrace t1 = simulate(tree, random_state(5, rng), stable_step(tree), 25.0);
  CHECK(estimate_rate(t1) == doctest::Approx(1.0).epsilon(0.05));

  DiGraph g59 = build(5, 9);
  SimTrace t2 = simulate(g59, random_state(5, rng), stable_step(g59), 14.0);
  CHECK(estimate_rate(t2) == doctest::Approx(2.0).epsilon(0.05));

  DiGraph k4 = complete(4);
  SimTrace t3 = simulate(k4, random_state(4, rng), stable_step(k4), 7.0);
  CHECK(estimate_rate(t3) == doctest::Approx(4.0).epsilon(0.05));
}

TEST_CASE("rate estimation reports underflow") {
  DiGraph k4 = complete(4);
  SimTrace trace = simulate(k4, {1, 0, 0, 0}, stable_step(k4), 60.0);
  CHECK_THROWS_AS(estimate_rate(trace), GraphError);
}

TEST_CASE("consensus iff rooted (random graphs)") {
  std::mt19937_64 rng(44);
  for (int trial = 0; trial < 40; ++trial) {
    DiGraph g = random_graph_uniform_arcs(5, 0, 20, rng);
    double a = algebraic_connectivity(g);
    double t_end = 40.0 / std::max(a, 1.5);
    SimTrace trace = simulate(g, random_state(5, rng), stable_step(g), t_end);
    if (g.is_rooted()) {
      CHECK(trace.disagreement.back() < trace.disagreement.front() + 1e-12);
    } else {
      CHECK(trace.disagreement.back() > 1e-6);
    }
  }
}

TEST_CASE("rate matching on random rooted graphs with a simple slow mode") {
  std::mt19937_64 rng(45);
  int checked = 0;
  while (checked < 15) {
    DiGraph g = random_graph_uniform_arcs(5, 5, 14, rng);
    if (!g.is_rooted()) continue;
    Spectrum s = eigenvalues(g.laplacian());
    double a = algebraic_connectivity(g);
    // Require a simple, strictly real slow eigenvalue well separated from
    // the rest of the spectrum so the log-slope is clean.
    int near = 0;
    bool complex_slow = false;
    double next_re = 1e9;
    for (const auto& v : s.values) {
      if (std::abs(v.real() - a) < 0.2) {
        ++near;
        if (std::abs(v.imag()) > 1e-9) complex_slow = true;
      } else if (v.real() > a) {
        next_re = std::min(next_re, v.real());
      }
    }
    if (near != 1 || complex_slow || next_re < a + 0.5 || a < 0.3) continue;
    ++checked;
    double t_end = std::min(25.0 / a, 30.0 / std::max(a, 1.0));
    SimTrace trace = simulate(g, random_state(5, rng), stable_step(g), t_end);
    CHECK(estimate_rate(trace) == doctest::Approx(a).epsilon(0.10));
  }
}
