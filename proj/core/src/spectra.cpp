#include "algconn/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

namespace algconn {

Tolerances& tolerances() {
  static Tolerances t;
  return t;
}

Spectrum Spectrum::from_values(std::vector<std::complex<double>> v) {
  std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  });
  Spectrum s;
  s.order = static_cast<int>(v.size());
  s.values = std::move(v);
  return s;
}

std::string Spectrum::to_json() const {
  std::ostringstream out;
  out.precision(17);
  out << "[";
  for (size_t i = 0; i < values.size(); ++i) {
    if (i) out << ",";
    out << "[" << values[i].real() << "," << values[i].imag() << "]";
  }
  out << "]";
  return out.str();
}

bool multiset_close(const Spectrum& a, const Spectrum& b, double tol) {
  if (a.values.size() != b.values.size()) return false;
  // Greedy nearest matching. A plain positional comparison of the sorted
  // lists can pair conjugates wrongly when distinct eigenvalues share a
  // real part up to rounding, so each value claims its closest unused
  // partner instead.
  std::vector<bool> used(b.values.size(), false);
  for (const auto& v : a.values) {
    double best = tol;
    int pick = -1;
    for (size_t j = 0; j < b.values.size(); ++j) {
      if (used[j]) continue;
      double d = std::abs(v - b.values[j]);
      if (d <= best) {
        best = d;
        pick = static_cast<int>(j);
      }
    }
    if (pick < 0) return false;
    used[pick] = true;
  }
  return true;
}

std::string CharPoly::to_json() const {
  std::ostringstream out;
  out << "[";
  for (size_t i = 0; i < coeffs.size(); ++i) {
    if (i) out << ",";
    out << "\"" << coeffs[i].str() << "\"";
  }
  out << "]";
  return out.str();
}

namespace {

// Strongly connected components of the off-diagonal nonzero pattern
// (iterative Tarjan). The Laplacian is block triangular under any
// SCC-respecting ordering, so its spectrum is the union of the spectra of
// the principal submatrices indexed by the components.
std::vector<std::vector<int>> pattern_sccs(const IntMatrix& M) {
  const int n = M.order();
  std::vector<std::vector<int>> adj(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && M.at(i, j) != 0) adj[j].push_back(i);

  std::vector<int> index(n, -1), low(n, 0), stack;
  std::vector<bool> on_stack(n, false);
  std::vector<std::vector<int>> comps;
  int next_index = 0;

  struct Frame {
    int v;
    size_t edge;
  };
  for (int start = 0; start < n; ++start) {
    if (index[start] != -1) continue;
    std::vector<Frame> frames{{start, 0}};
    index[start] = low[start] = next_index++;
    stack.push_back(start);
    on_stack[start] = true;
    while (!frames.empty()) {
      Frame& f = frames.back();
      if (f.edge < adj[f.v].size()) {
        int w = adj[f.v][f.edge++];
        if (index[w] == -1) {
          index[w] = low[w] = next_index++;
          stack.push_back(w);
          on_stack[w] = true;
          frames.push_back({w, 0});
        } else if (on_stack[w]) {
          low[f.v] = std::min(low[f.v], index[w]);
        }
      } else {
        int v = f.v;
        frames.pop_back();
        if (!frames.empty())
          low[frames.back().v] = std::min(low[frames.back().v], low[v]);
        if (low[v] == index[v]) {
          std::vector<int> comp;
          while (true) {
            int w = stack.back();
            stack.pop_back();
            on_stack[w] = false;
            comp.push_back(w);
            if (w == v) break;
          }
          comps.push_back(std::move(comp));
        }
      }
    }
  }
  return comps;
}

// Descending-coefficient Horner evaluation at an integer point.
BigInt eval_at(const std::vector<BigInt>& desc, long long x) {
  BigInt acc = 0;
  for (const auto& c : desc) acc = acc * x + c;
  return acc;
}

// Exact synthetic division of a monic polynomial by (x - k).
void divide_root(std::vector<BigInt>& desc, long long k) {
  std::vector<BigInt> q(desc.size() - 1);
  q[0] = desc[0];
  for (size_t i = 1; i < q.size(); ++i) q[i] = desc[i] + k * q[i - 1];
  desc = std::move(q);
}

void numeric_block_eigenvalues(const IntMatrix& L, const std::vector<int>& idx,
                               std::vector<std::complex<double>>& out) {
  const int b = static_cast<int>(idx.size());
  Eigen::MatrixXd M(b, b);
  for (int i = 0; i < b; ++i)
    for (int j = 0; j < b; ++j)
      M(i, j) = static_cast<double>(L.at(idx[i], idx[j]));
  Eigen::EigenSolver<Eigen::MatrixXd> solver(M, /*computeEigenvectors=*/false);
  if (solver.info() != Eigen::Success)
    throw GraphError("eigenvalue iteration failed to converge");
  for (int i = 0; i < b; ++i) out.push_back(solver.eigenvalues()(i));
}

// Exact-first path for a small block: deflate all integer eigenvalues of
// the characteristic polynomial exactly (repeated integer eigenvalues of
// defective blocks come out with no rounding at all), then hand only the
// non-integer remainder to a dense companion-matrix solve.
void exact_block_eigenvalues(const IntMatrix& L, const std::vector<int>& idx,
                             std::vector<std::complex<double>>& out) {
  const int b = static_cast<int>(idx.size());
  IntMatrix sub(b);
  long long max_diag = 0;
  for (int i = 0; i < b; ++i) {
    for (int j = 0; j < b; ++j) sub.at(i, j) = L.at(idx[i], idx[j]);
    max_diag = std::max(max_diag, sub.at(i, i));
  }

  std::vector<BigInt> desc = char_poly_exact(sub).coeffs;
  std::reverse(desc.begin(), desc.end());

  // Gershgorin: every eigenvalue satisfies |lambda - d_i| <= d_i, so all
  // integer roots lie in [0, 2 max_diag].
  for (long long k = 0; k <= 2 * max_diag && desc.size() > 1; ++k) {
    while (desc.size() > 1 && eval_at(desc, k) == 0) {
      divide_root(desc, k);
      out.emplace_back(static_cast<double>(k), 0.0);
    }
  }

  const int r = static_cast<int>(desc.size()) - 1;
  if (r == 0) return;
  if (r == 1) {
    out.emplace_back(-desc[1].convert_to<double>(), 0.0);
    return;
  }
  Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(r, r);
  for (int i = 1; i < r; ++i) companion(i, i - 1) = 1.0;
  for (int i = 0; i < r; ++i)
    companion(i, r - 1) = -desc[r - i].convert_to<double>();
  Eigen::EigenSolver<Eigen::MatrixXd> solver(companion,
                                             /*computeEigenvectors=*/false);
  if (solver.info() != Eigen::Success)
    throw GraphError("eigenvalue iteration failed to converge");
  for (int i = 0; i < r; ++i) out.push_back(solver.eigenvalues()(i));
}

}  // namespace

Spectrum eigenvalues(const IntMatrix& L) {
  if (L.order() > kMaxVertices)
    throw SizeCapError("eigenvalue path capped at order " +
                       std::to_string(kMaxVertices));
  if (!L.has_zero_row_sums())
    throw GraphError("matrix is not a Laplacian: row sums are nonzero");

  std::vector<std::complex<double>> vals;
  vals.reserve(L.order());
  for (const auto& comp : pattern_sccs(L)) {
    if (comp.size() == 1) {
      vals.emplace_back(static_cast<double>(L.at(comp[0], comp[0])), 0.0);
    } else if (static_cast<int>(comp.size()) <= kExactCharPolyCap) {
      std::vector<int> idx(comp.begin(), comp.end());
      std::sort(idx.begin(), idx.end());
      exact_block_eigenvalues(L, idx, vals);
    } else {
      std::vector<int> idx(comp.begin(), comp.end());
      std::sort(idx.begin(), idx.end());
      numeric_block_eigenvalues(L, idx, vals);
    }
  }
  return Spectrum::from_values(std::move(vals));
}

double algebraic_connectivity(const DiGraph& g) {
  if (g.order() < 2)
    throw GraphError("algebraic connectivity needs at least 2 vertices");
  Spectrum s = eigenvalues(g.laplacian());
  return s.values[1].real();
}

CharPoly char_poly_exact(const IntMatrix& M) {
  const int n = M.order();
  if (n > kExactCharPolyCap)
    throw SizeCapError("exact characteristic polynomial capped at order " +
                       std::to_string(kExactCharPolyCap));

  auto a = [&](int i, int j) { return BigInt(M.at(i, j)); };

  // Berkowitz iteration; poly holds coefficients in descending degree.
  std::vector<BigInt> poly = {BigInt(1), -a(0, 0)};
  for (int i = 1; i < n; ++i) {
    // Toeplitz column [1, -A_ii, -s_0, ..., -s_{i-1}] where
    // s_j = row_i * (leading i x i block)^j * col_i.
    std::vector<BigInt> tcol(i + 2);
    tcol[0] = 1;
    tcol[1] = -a(i, i);
    std::vector<BigInt> v(i);
    for (int k = 0; k < i; ++k) v[k] = a(k, i);
    for (int j = 0; j < i; ++j) {
      BigInt s = 0;
      for (int k = 0; k < i; ++k) s += a(i, k) * v[k];
      tcol[j + 2] = -s;
      if (j + 1 < i) {
        std::vector<BigInt> w(i, 0);
        for (int r = 0; r < i; ++r)
          for (int k = 0; k < i; ++k) w[r] += a(r, k) * v[k];
        v = std::move(w);
      }
    }
    std::vector<BigInt> next(i + 2, 0);
    for (int k = 0; k < i + 2; ++k)
      for (int t = 0; t <= k && t < static_cast<int>(poly.size()); ++t)
        next[k] += tcol[k - t] * poly[t];
    poly = std::move(next);
  }

  CharPoly p;
  p.coeffs.resize(n + 1);
  for (int k = 0; k <= n; ++k) p.coeffs[k] = poly[n - k];
  return p;
}

std::vector<BigInt> forest_counts(const DiGraph& g) {
  const int n = g.order();
  CharPoly p = char_poly_exact(g.laplacian());
  std::vector<BigInt> a(n);
  for (int k = 1; k <= n; ++k) {
    BigInt v = p.coeffs[k];
    if ((n - k) % 2 != 0) v = -v;
    a[k - 1] = v;
  }
  return a;
}

int zero_multiplicity(const DiGraph& g) {
  CharPoly p = char_poly_exact(g.laplacian());
  for (int k = 0; k < static_cast<int>(p.coeffs.size()); ++k)
    if (p.coeffs[k] != 0) return k;
  throw GraphError("zero characteristic polynomial");
}

Spectrum complement_spectrum(const Spectrum& s) {
  const int n = s.order;
  auto vals = s.values;
  auto zero_it =
      std::min_element(vals.begin(), vals.end(), [](const auto& a, const auto& b) {
        return std::abs(a) < std::abs(b);
      });
  if (zero_it == vals.end() || std::abs(*zero_it) > tolerances().integer)
    throw GraphError("spectrum has no zero eigenvalue");
  vals.erase(zero_it);
  for (auto& v : vals) v = std::complex<double>(n, 0) - v;
  vals.emplace_back(0.0, 0.0);
  return Spectrum::from_values(std::move(vals));
}

SpreadResult normalized_spread(const Spectrum& s, int arc_count) {
  const int n = s.order;
  if (n < 2) throw GraphError("normalized spread needs at least 2 eigenvalues");
  if (arc_count < 1) throw GraphError("normalized spread needs m >= 1");

  auto vals = s.values;
  auto zero_it =
      std::min_element(vals.begin(), vals.end(), [](const auto& a, const auto& b) {
        return std::abs(a) < std::abs(b);
      });
  vals.erase(zero_it);

  std::complex<double> mean(0, 0);
  for (const auto& v : vals) mean += v;
  mean /= static_cast<double>(n - 1);

  double sigma2 = 0;
  for (const auto& v : vals) sigma2 += std::norm(v - mean);
  sigma2 /= static_cast<double>(n - 1);

  SpreadResult r;
  r.sigma2 = sigma2;
  r.score = sigma2 * static_cast<double>(n) * n /
            (static_cast<double>(arc_count) * arc_count);
  return r;
}

}  // namespace algconn
