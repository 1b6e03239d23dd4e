#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "algconn/builder.hpp"
#include "algconn/digraph.hpp"
#include "algconn/spectra.hpp"

using namespace algconn;

TEST_CASE("build params") {
  BuildParams p(5, 9);
  CHECK(p.kappa == 2);
  CHECK(p.nu == 1);
  CHECK_THROWS_AS(BuildParams(1, 0), GraphError);
  CHECK_THROWS_AS(BuildParams(4, 13), GraphError);
  CHECK_THROWS_AS(BuildParams(4, -1), GraphError);

  // nu is kappa or kappa-1 for every m >= 1.
  for (int n = 2; n <= 12; ++n) {
    for (int m = 1; m <= n * (n - 1); ++m) {
      BuildParams q(n, m);
      CHECK((q.kappa - q.nu == 0 || q.kappa - q.nu == 1));
      CHECK(q.kappa >= 0);
      CHECK(q.kappa <= n);
    }
  }
}

TEST_CASE("arc_for_index formula values") {
  CHECK(arc_for_index(4, 1) == Arc{1, 4});
  CHECK(arc_for_index(4, 4) == Arc{2, 1});
  CHECK(arc_for_index(5, 9) == Arc{3, 2});
  CHECK_THROWS_AS(arc_for_index(4, 0), GraphError);
  CHECK_THROWS_AS(arc_for_index(4, 13), GraphError);
}

TEST_CASE("arc sequence is distinct and exhaustive") {
  for (int n = 2; n <= 12; ++n) {
    std::set<Arc> seen;
    for (int i = 1; i <= n * (n - 1); ++i) {
      Arc a = arc_for_index(n, i);
      CHECK(a.first != a.second);
      CHECK(a.first >= 1);
      CHECK(a.first <= n);
      CHECK(a.second >= 1);
      CHECK(a.second <= n);
      CHECK(seen.insert(a).second);
    }
    CHECK(static_cast<int>(seen.size()) == n * (n - 1));
  }
}

TEST_CASE("build on reference cases") {
  CHECK(build(4, 3) == DiGraph(4, {{1, 2}, {1, 3}, {1, 4}}));
  DiGraph g59(5, {{1, 2}, {1, 3}, {1, 4}, {1, 5},
                  {2, 1}, {2, 3}, {2, 4}, {2, 5}, {3, 2}});
  CHECK(build(5, 9) == g59);
  CHECK(build(4, 12).arc_count() == 12);
  CHECK(build(4, 0) == DiGraph(4));
  CHECK(build(4, 3).is_rooted());
}

TEST_CASE("prefix property") {
  for (int n : {3, 5, 7}) {
    for (int m = 1; m <= n * (n - 1); ++m) {
      CHECK(build(n, m) == build(n, m - 1).with_arc(arc_for_index(n, m).first,
                                                    arc_for_index(n, m).second));
    }
  }
}

TEST_CASE("predicted in-degrees") {
  CHECK(predicted_in_degrees(5, 9) == std::vector<int>{1, 2, 2, 2, 2});
  CHECK(predicted_in_degrees(6, 0) == std::vector<int>(6, 0));
  CHECK(predicted_in_degrees(4, 8) == std::vector<int>{2, 2, 2, 2});

  for (int n = 2; n <= 12; ++n) {
    for (int m = 0; m <= n * (n - 1); ++m) {
      auto predicted = predicted_in_degrees(n, m);
      auto actual = build(n, m).in_degrees();
      std::sort(actual.begin(), actual.end());
      CHECK(predicted == actual);
      CHECK(actual.back() - actual.front() <= 1);
    }
  }
}

TEST_CASE("predicted spectrum reference values") {
  std::vector<double> g59;
  for (const auto& v : predicted_spectrum(5, 9).values) g59.push_back(v.real());
  CHECK(g59 == std::vector<double>{0, 2, 2, 2, 3});

  std::vector<double> g617;
  for (const auto& v : predicted_spectrum(6, 17).values) g617.push_back(v.real());
  CHECK(g617 == std::vector<double>{0, 3, 3, 3, 4, 4});
  CHECK(multiset_close(predicted_spectrum(6, 17),
                       eigenvalues(build(6, 17).laplacian()), 1e-6));

  std::vector<double> complete4;
  for (const auto& v : predicted_spectrum(4, 12).values)
    complete4.push_back(v.real());
  CHECK(complete4 == std::vector<double>{0, 4, 4, 4});
}

TEST_CASE("spectrum agreement exact for all n<=10") {
  for (int n = 2; n <= 10; ++n) {
    for (int m = 0; m <= n * (n - 1); ++m) {
      CHECK(char_poly_exact(build(n, m).laplacian()) ==
            predicted_char_poly(n, m));
    }
  }
}

TEST_CASE("predicted connectivity") {
  CHECK(predicted_connectivity(5, 9) == 2);
  CHECK(predicted_connectivity(6, 17) == 3);
  for (int n : {3, 6, 9, 12})
    CHECK(predicted_connectivity(n, n - 1) == 1);

  for (int n = 2; n <= 12; ++n) {
    for (int m = n - 1; m <= n * (n - 1); ++m) {
      double a = algebraic_connectivity(build(n, m));
      CHECK(std::abs(a - m / (n - 1)) < 1e-8);
    }
  }
}

TEST_CASE("star decomposition") {
  StarDecomposition d59 = star_decomposition(5, 9);
  CHECK(d59.full_star_roots == std::vector<int>{1, 2});
  CHECK(d59.partial_star_root == 3);
  CHECK(d59.partial_star_size == 2);

  StarDecomposition d510 = star_decomposition(5, 10);
  CHECK(d510.full_star_roots == std::vector<int>{1, 2});
  CHECK(d510.partial_star_root == 3);
  CHECK(d510.partial_star_size == 3);

  StarDecomposition d43 = star_decomposition(4, 3);
  CHECK(d43.full_star_roots == std::vector<int>{1});
  CHECK(d43.partial_star_root == 2);
  CHECK(d43.partial_star_size == 1);
}

TEST_CASE("star decomposition describes the graph structurally") {
  for (int n : {3, 5, 8}) {
    for (int m = 0; m <= n * (n - 1); ++m) {
      StarDecomposition d = star_decomposition(n, m);
      DiGraph g = build(n, m);

      // Arcs with tail <= kappa form full stars at roots 1..kappa; all
      // remaining arcs belong to the partial star at kappa + 1.
      int kappa = m / (n - 1);
      std::vector<int> out_deg(n + 1, 0);
      for (const auto& [t, h] : g.arcs()) {
        (void)h;
        ++out_deg[t];
        CHECK(t <= kappa + 1);
      }
      CHECK(static_cast<int>(d.full_star_roots.size()) == kappa);
      for (int root : d.full_star_roots) CHECK(out_deg[root] == n - 1);
      if (kappa < n) {
        CHECK(d.partial_star_root == kappa + 1);
        CHECK(out_deg[kappa + 1] == d.partial_star_size - 1);
      } else {
        CHECK_FALSE(d.partial_star_root.has_value());
      }
    }
  }
}

TEST_CASE("arc-tail property") {
  for (int n : {4, 6, 9}) {
    for (int m = 0; m <= n * (n - 1); ++m) {
      DiGraph g = build(n, m);
      for (int v = 1; v <= n; ++v) {
        std::vector<int> tails;
        for (const auto& [t, h] : g.arcs())
          if (h == v) tails.push_back(t);
        std::sort(tails.begin(), tails.end());
        std::vector<int> expected;
        for (int t = 1; t <= n && expected.size() < tails.size(); ++t)
          if (t != v) expected.push_back(t);
        CHECK(tails == expected);
      }
    }
  }
}

TEST_CASE("floor lemmas") {
  for (int n = 3; n <= 12; ++n) {
    for (int m = 1; m <= n * (n - 2); ++m) {
      BuildParams p(n, m);
      CHECK((m - p.nu - 1) / (n - 2) == p.kappa);
      if (m % n == 0 && m < n * (n - 2)) {
        CHECK(p.kappa == p.nu);
        CHECK(p.kappa == (m - p.nu) / (n - 2));
      }
    }
  }
}

TEST_CASE("induced-subgraph recursion") {
  for (int n = 3; n <= 9; ++n) {
    for (int m = 1; m <= (n - 1) * (n - 1); ++m) {
      DiGraph g = build(n, m);
      int d_n = g.in_degrees()[n - 1];
      int arcs_at_n = d_n;
      std::vector<Arc> induced;
      for (const auto& [t, h] : g.arcs()) {
        if (t == n) ++arcs_at_n;
        else if (h != n) induced.emplace_back(t, h);
      }
      CHECK(DiGraph(n - 1, std::move(induced)) == build(n - 1, m - d_n));
      (void)arcs_at_n;
    }
  }
}

TEST_CASE("nesting condition") {
  CHECK(nesting_holds(4, 6, 5, 9));
  CHECK_FALSE(nesting_holds(3, 5, 5, 5));
  // The condition is sufficient, not necessary: with equal n it implies
  // m <= m2, while the converse containment holds anyway by the prefix
  // property even when the condition fails.
  for (int m = 0; m <= 12; ++m)
    for (int m2 = 0; m2 <= 12; ++m2)
      if (nesting_holds(4, m, 4, m2)) CHECK(m <= m2);
}

TEST_CASE("nesting implies arc containment (all pairs n<=6)") {
  for (int n1 = 2; n1 <= 6; ++n1) {
    for (int n2 = n1; n2 <= 6; ++n2) {
      for (int m1 = 0; m1 <= n1 * (n1 - 1); ++m1) {
        for (int m2 = 0; m2 <= n2 * (n2 - 1); ++m2) {
          if (!nesting_holds(n1, m1, n2, m2)) continue;
          DiGraph big = build(n2, m2);
          std::set<Arc> arcs(big.arcs().begin(), big.arcs().end());
          DiGraph small = build(n1, m1);
          for (const auto& a : small.arcs()) CHECK(arcs.count(a) == 1);
        }
      }
    }
  }
}
