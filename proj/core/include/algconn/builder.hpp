#pragma once

#include <optional>
#include <vector>

#include "algconn/digraph.hpp"
#include "algconn/spectra.hpp"

namespace algconn {

/// Parameters of the incremental almost-regular construction.
/// kappa = floor(m / (n-1)), nu = floor(m / n).
struct BuildParams {
  int n;
  int m;
  int kappa;
  int nu;

  BuildParams(int n, int m);
};

/// The i-th arc of the construction sequence:
/// (ceil(i / (n-1)), n - ((i-1) mod n)), 1 <= i <= n(n-1).
Arc arc_for_index(int n, int i);

/// Graph whose arc set is {arc_for_index(n, i) : i = 1..m}; O(m).
DiGraph build(int n, int m);

/// Nondecreasing in-degree sequence: n(nu+1)-m entries of nu followed by
/// m-n*nu entries of nu+1.
std::vector<int> predicted_in_degrees(int n, int m);

/// Closed-form spectrum {0} + kappa with multiplicity (kappa+1)(n-1)-m
/// + (kappa+1) with multiplicity m-kappa(n-1). All zeros when m = 0.
Spectrum predicted_spectrum(int n, int m);

/// predicted_spectrum expanded as an exact monic integer polynomial:
/// lambda (lambda-kappa)^((kappa+1)(n-1)-m) (lambda-kappa-1)^(m-kappa(n-1)).
CharPoly predicted_char_poly(int n, int m);

/// Algebraic connectivity of build(n, m): floor(m / (n-1)).
int predicted_connectivity(int n, int m);

struct StarDecomposition {
  std::vector<int> full_star_roots;       // 1..kappa
  std::optional<int> partial_star_root;   // kappa+1, when it exists
  int partial_star_size = 1;              // vertex count of the partial star
};

/// build(n, m) as a union of kappa full stars plus one partial star.
StarDecomposition star_decomposition(int n, int m);

/// Sufficient condition for build(n1, m1) to be a subgraph of
/// build(n2, m2): n1 <= n2, q1 <= q2 and n1-r1 >= n2-r2 where (q_i, r_i)
/// is the quotient/remainder of m_i by n_i.
bool nesting_holds(int n1, int m1, int n2, int m2);

}  // namespace algconn
