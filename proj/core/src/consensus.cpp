#include "algconn/consensus.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Dense>

namespace algconn {

double stable_step(const DiGraph& g) {
  return 0.5 / (2.0 * std::max(g.max_in_degree(), 1));
}

SimTrace simulate(const DiGraph& g, const std::vector<double>& x0, double dt,
                  double t_end) {
  if (dt <= 0 || t_end <= 0)
    throw GraphError("dt and t_end must be positive");
  const int n = g.order();
  if (static_cast<int>(x0.size()) != n)
    throw GraphError("initial state size must equal vertex count");

  Eigen::MatrixXd minus_l = Eigen::MatrixXd::Zero(n, n);
  IntMatrix L = g.laplacian();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      minus_l(i, j) = -static_cast<double>(L.at(i, j));

  Eigen::VectorXd x(n);
  for (int i = 0; i < n; ++i) x(i) = x0[i];

  const auto steps = static_cast<std::size_t>(std::ceil(t_end / dt));
  SimTrace trace;
  trace.times.reserve(steps + 1);
  trace.states.reserve(steps + 1);
  trace.disagreement.reserve(steps + 1);

  auto record = [&](double t) {
    trace.times.push_back(t);
    trace.states.emplace_back(x.data(), x.data() + n);
    trace.disagreement.push_back(x.maxCoeff() - x.minCoeff());
  };

  record(0.0);
  for (std::size_t s = 1; s <= steps; ++s) {
    double h = std::min(dt, t_end - trace.times.back());
    Eigen::VectorXd k1 = minus_l * x;
    Eigen::VectorXd k2 = minus_l * (x + 0.5 * h * k1);
    Eigen::VectorXd k3 = minus_l * (x + 0.5 * h * k2);
    Eigen::VectorXd k4 = minus_l * (x + h * k3);
    x += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    record(trace.times.back() + h);
  }
  return trace;
}

double estimate_rate(const SimTrace& trace, double window) {
  if (trace.times.size() < 4)
    throw GraphError("trace too short for rate estimation");
  if (window <= 0 || window > 1)
    throw GraphError("window must be a fraction in (0, 1]");

  const std::size_t count = trace.times.size();
  const auto first =
      static_cast<std::size_t>(std::floor((1.0 - window) * (count - 1)));

  // The span of a unit-scale state cannot be resolved below ~1e2 * eps.
  constexpr double kFloor = 1e-14;
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  std::size_t used = 0;
  for (std::size_t i = first; i < count; ++i) {
    double d = trace.disagreement[i];
    if (d < kFloor)
      throw GraphError(
          "disagreement underflow in the fit window; use a larger x0 spread "
          "or a shorter t_end");
    double t = trace.times[i];
    double y = std::log(d);
    sx += t;
    sy += y;
    sxx += t * t;
    sxy += t * y;
    ++used;
  }
  double denom = used * sxx - sx * sx;
  if (denom == 0) throw GraphError("degenerate fit window");
  double slope = (used * sxy - sx * sy) / denom;
  return -slope;
}

}  // namespace algconn
