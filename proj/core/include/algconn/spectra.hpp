#pragma once

#include <complex>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "algconn/digraph.hpp"

namespace algconn {

using BigInt = boost::multiprecision::cpp_int;

/// Global numeric tolerances. Integer Laplacians of order <= 64 are well
/// within double-precision reach, so these defaults are generous.
struct Tolerances {
  double integer = 1e-8;   // equality-to-integer checks
  double multiset = 1e-6;  // cross-method multiset comparisons
};
Tolerances& tolerances();

/// Multiset of complex eigenvalues sorted ascending by (Re, Im).
struct Spectrum {
  std::vector<std::complex<double>> values;
  int order = 0;

  static Spectrum from_values(std::vector<std::complex<double>> v);

  /// JSON array of [re, im] pairs in sorted order.
  std::string to_json() const;
};

bool multiset_close(const Spectrum& a, const Spectrum& b, double tol);

/// Exact monic integer characteristic polynomial det(lambda*I - L),
/// coefficients c_0..c_n with p(lambda) = sum c_k lambda^k.
struct CharPoly {
  std::vector<BigInt> coeffs;

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }

  /// JSON array of decimal-string coefficients c_0..c_n.
  std::string to_json() const;

  bool operator==(const CharPoly&) const = default;
};

/// Size cap for the exact characteristic-polynomial path.
inline constexpr int kExactCharPolyCap = 16;

/// All n complex eigenvalues of a Laplacian, sorted by (Re, Im).
/// Rejects matrices with nonzero row sums.
Spectrum eigenvalues(const IntMatrix& L);

/// Second smallest real part among all Laplacian eigenvalues.
double algebraic_connectivity(const DiGraph& g);

/// Division-free (Berkowitz) characteristic polynomial over exact
/// integers; order capped at kExactCharPolyCap.
CharPoly char_poly_exact(const IntMatrix& M);

/// a_1..a_n where a_k counts the spanning directed forests of g composed
/// of exactly k directed trees; extracted from the exact char poly via
/// a_k = (-1)^(n-k) c_k.
std::vector<BigInt> forest_counts(const DiGraph& g);

/// Algebraic multiplicity of eigenvalue 0, decided on the exact path.
int zero_multiplicity(const DiGraph& g);

/// Maps the spectrum {0, l_2..l_n} of a graph to the spectrum
/// {0, n-l_n, ..., n-l_2} of its complement.
Spectrum complement_spectrum(const Spectrum& s);

struct SpreadResult {
  double sigma2 = 0.0;  // normalized spread of the n-1 retained eigenvalues
  double score = 0.0;   // sigma2 * n^2 / m^2
};

/// Excludes exactly one zero eigenvalue, takes the complex mean of the
/// rest, and averages squared moduli of deviations.
SpreadResult normalized_spread(const Spectrum& s, int arc_count);

}  // namespace algconn
