#include "algconn/builder.hpp"

namespace algconn {

namespace {

void check_range(int n, int m) {
  if (n < 2) throw GraphError("builder requires n >= 2");
  if (n > kMaxVertices)
    throw SizeCapError("builder capped at n <= " + std::to_string(kMaxVertices));
  if (m < 0 || m > n * (n - 1))
    throw GraphError("arc count must satisfy 0 <= m <= n(n-1)");
}

}  // namespace

BuildParams::BuildParams(int n, int m) : n(n), m(m) {
  check_range(n, m);
  kappa = m / (n - 1);
  nu = m / n;
}

Arc arc_for_index(int n, int i) {
  check_range(n, 1);
  if (i < 1 || i > n * (n - 1))
    throw GraphError("arc index must satisfy 1 <= i <= n(n-1)");
  int tail = (i + n - 2) / (n - 1);  // ceil(i / (n-1))
  int head = n - ((i - 1) % n);
  return {tail, head};
}

DiGraph build(int n, int m) {
  check_range(n, m);
  std::vector<Arc> arcs;
  arcs.reserve(m);
  for (int i = 1; i <= m; ++i) arcs.push_back(arc_for_index(n, i));
  return DiGraph(n, std::move(arcs));
}

std::vector<int> predicted_in_degrees(int n, int m) {
  BuildParams p(n, m);
  std::vector<int> deg(n);
  int low_count = n * (p.nu + 1) - m;
  for (int i = 0; i < n; ++i) deg[i] = i < low_count ? p.nu : p.nu + 1;
  return deg;
}

Spectrum predicted_spectrum(int n, int m) {
  BuildParams p(n, m);
  std::vector<std::complex<double>> vals;
  vals.reserve(n);
  vals.emplace_back(0.0, 0.0);
  if (m > 0) {
    int mult_kappa = (p.kappa + 1) * (n - 1) - m;
    int mult_kappa1 = m - p.kappa * (n - 1);
    for (int i = 0; i < mult_kappa; ++i) vals.emplace_back(p.kappa, 0.0);
    for (int i = 0; i < mult_kappa1; ++i) vals.emplace_back(p.kappa + 1, 0.0);
  } else {
    for (int i = 1; i < n; ++i) vals.emplace_back(0.0, 0.0);
  }
  return Spectrum::from_values(std::move(vals));
}

CharPoly predicted_char_poly(int n, int m) {
  BuildParams p(n, m);
  std::vector<BigInt> poly = {1};  // ascending coefficients
  auto mul_root = [&](long long root) {
    std::vector<BigInt> next(poly.size() + 1, 0);
    for (size_t i = 0; i < poly.size(); ++i) {
      next[i + 1] += poly[i];
      next[i] -= BigInt(root) * poly[i];
    }
    poly = std::move(next);
  };
  mul_root(0);
  int mult_kappa = m > 0 ? (p.kappa + 1) * (n - 1) - m : n - 1;
  int mult_kappa1 = m > 0 ? m - p.kappa * (n - 1) : 0;
  for (int i = 0; i < mult_kappa; ++i) mul_root(m > 0 ? p.kappa : 0);
  for (int i = 0; i < mult_kappa1; ++i) mul_root(p.kappa + 1);
  CharPoly cp;
  cp.coeffs = std::move(poly);
  return cp;
}

int predicted_connectivity(int n, int m) { return BuildParams(n, m).kappa; }

StarDecomposition star_decomposition(int n, int m) {
  BuildParams p(n, m);
  StarDecomposition d;
  for (int r = 1; r <= p.kappa; ++r) d.full_star_roots.push_back(r);
  d.partial_star_size = m - p.kappa * (n - 1) + 1;
  if (p.kappa < n) d.partial_star_root = p.kappa + 1;
  return d;
}

bool nesting_holds(int n1, int m1, int n2, int m2) {
  check_range(n1, m1);
  check_range(n2, m2);
  int q1 = m1 / n1, r1 = m1 % n1;
  int q2 = m2 / n2, r2 = m2 % n2;
  return n1 <= n2 && q1 <= q2 && n1 - r1 >= n2 - r2;
}

}  // namespace algconn
