#pragma once

#include <vector>

#include "algconn/digraph.hpp"

namespace algconn {

/// Trace of the linear consensus flow dx/dt = -L x.
struct SimTrace {
  std::vector<double> times;
  std::vector<std::vector<double>> states;
  std::vector<double> disagreement;  // max_i x_i - min_i x_i per sample
};

/// Largest fixed step honoring dt * rho(L) <= 0.5 with the Gershgorin
/// bound rho(L) <= 2 * max in-degree.
double stable_step(const DiGraph& g);

/// Classical fixed-step RK4 integration of dx/dt = -L x from x0 to t_end.
SimTrace simulate(const DiGraph& g, const std::vector<double>& x0, double dt,
                  double t_end);

/// Negated least-squares slope of log(disagreement) over the trailing
/// `window` fraction of samples; estimates the algebraic connectivity for
/// rooted graphs. Throws if the disagreement underflowed before the
/// window starts.
double estimate_rate(const SimTrace& trace, double window = 0.25);

}  // namespace algconn
