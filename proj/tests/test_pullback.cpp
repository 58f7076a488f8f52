#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "toricform/newton.hpp"
#include "toricform/pullback.hpp"

using namespace toricform;

namespace {

Exp e2(long a, long b) { return {Int(a), Int(b)}; }

// (2x^2 + xy) dx + (x^2 + y^2 + x) dy in logarithmic coordinates
LogPForm plane_form() {
  StandardPForm f;
  f.n = 2;
  f.p = 1;
  Polynomial gx(2), gy(2);
  gx.add_term(e2(2, 0), 2);
  gx.add_term(e2(1, 1), 1);
  gy.add_term(e2(2, 0), 1);
  gy.add_term(e2(0, 2), 1);
  gy.add_term(e2(1, 0), 1);
  f.add({0}, gx);
  f.add({1}, gy);
  return to_logarithmic(f);
}

// z^6 + xy, xz and x^6 + x^4 yz + yz against dx^dy, dx^dz, dy^dz
LogPForm space_form() {
  StandardPForm f;
  f.n = 3;
  f.p = 2;
  Polynomial gxy(3), gxz(3), gyz(3);
  gxy.add_term({Int(0), Int(0), Int(6)}, 1);
  gxy.add_term({Int(1), Int(1), Int(0)}, 1);
  gxz.add_term({Int(1), Int(0), Int(1)}, 1);
  gyz.add_term({Int(6), Int(0), Int(0)}, 1);
  gyz.add_term({Int(4), Int(1), Int(1)}, 1);
  gyz.add_term({Int(0), Int(1), Int(1)}, 1);
  f.add({0, 1}, gxy);
  f.add({0, 2}, gxz);
  f.add({1, 2}, gyz);
  return to_logarithmic(f);
}

IntMat mat2(long a, long b, long c, long d) {
  return from_rows({{Int(a), Int(b)}, {Int(c), Int(d)}}, 2);
}

IntMat random_unimodular(std::mt19937_64& rng, int n) {
  IntMat m = IntMat::identity(n);
  std::uniform_int_distribution<int> pick(0, n - 1), ops(2, 4);
  int k = ops(rng);
  for (int step = 0; step < k; ++step) {
    int a = pick(rng), b = pick(rng);
    if (a == b) continue;
    for (int j = 0; j < n; ++j) m.a[j][b] += m.a[j][a];
  }
  return m;
}

LogPForm random_form(std::mt19937_64& rng, int n, int p) {
  std::uniform_int_distribution<int> coord(0, 4), coeff(-3, 3), cnt(1, 3);
  StandardPForm f;
  f.n = n;
  f.p = p;
  auto all_j = subsets_of_size(n, p);
  while (f.coeffs.empty()) {
    for (const auto& j : all_j) {
      Polynomial g(n);
      int m = cnt(rng);
      for (int i = 0; i < m; ++i) {
        Exp e(n);
        for (int k = 0; k < n; ++k) e[k] = coord(rng);
        int c = coeff(rng);
        if (c != 0) g.add_term(e, c);
      }
      if (!g.is_zero()) f.add(j, g);
    }
  }
  return to_logarithmic(f);
}

}  // namespace

TEST_CASE("chart construction validates the matrix") {
  std::vector<Exp> s = {e2(1, 0)};
  CHECK_THROWS_AS(chart_from_matrix(mat2(1, 0, 0, 2), s), input_error);   // det 2
  CHECK_THROWS_AS(chart_from_matrix(mat2(1, -1, 0, 1), s), input_error);  // negative
  Chart c = chart_from_matrix(mat2(1, 2, 0, 1), support(plane_form()));
  CHECK(c.t == Vec{Int(0), Int(3)});
}

TEST_CASE("chart from a unimodular cone orders columns canonically") {
  auto supp = support(plane_form());
  Cone sigma = Cone::from_generators(2, {{Int(2), Int(1)}, {Int(1), Int(1)}});
  Chart c = chart_from_cone(sigma, supp);
  // generators sort to (1,1), (2,1)
  CHECK(c.m == from_rows({{Int(1), Int(2)}, {Int(1), Int(1)}}, 2));
  CHECK(c.t == Vec{Int(2), Int(3)});
  Cone coarse = Cone::from_generators(2, {{Int(2), Int(1)}, {Int(1), Int(2)}});
  CHECK_THROWS_AS(chart_from_cone(coarse, supp), input_error);  // multiplicity 3
}

TEST_CASE("reduced coefficients for the slanted plane chart") {
  LogPForm f = plane_form();
  Chart c = chart_from_matrix(mat2(1, 2, 0, 1), support(f));
  ChartPullback pb = pull_back(f, c);
  REQUIRE(pb.coeffs.size() == 2);

  Polynomial f1(2), f2(2);
  f1.add_term(e2(3, 3), 2);
  f1.add_term(e2(2, 2), 1);
  f2.add_term(e2(3, 3), 4);
  f2.add_term(e2(2, 2), 3);
  f2.add_term(e2(1, 0), 1);
  f2.add_term(e2(0, 0), 1);
  CHECK(pb.coeffs.at({0}) == f1);
  CHECK(pb.coeffs.at({1}) == f2);
  CHECK_NOTHROW(check_adapted(pb));
  CHECK(reassemble(pb) == substitute_pullback_oracle(f, c.m));
}

TEST_CASE("x dy through the triangular chart leaves a monomial") {
  StandardPForm f;
  f.n = 2;
  f.p = 1;
  f.add({1}, Polynomial::monomial(2, e2(1, 0), 1));
  LogPForm lf = to_logarithmic(f);
  Chart c = chart_from_matrix(mat2(1, 1, 0, 1), support(lf));
  CHECK(c.t == Vec{Int(1), Int(2)});
  ChartPullback pb = pull_back(lf, c);
  CHECK(pb.coeffs.at({0}).is_zero());
  CHECK(pb.coeffs.at({1}) == Polynomial::constant(2, 1));
  CHECK_NOTHROW(check_adapted(pb));
  LogPForm back = reassemble(pb);
  REQUIRE(back.coeffs.size() == 1);
  CHECK(back.coeffs.at({1}) == Polynomial::monomial(2, e2(1, 2), 1));
  CHECK(back == substitute_pullback_oracle(lf, c.m));
}

TEST_CASE("identity chart reproduces the form") {
  for (const LogPForm& f : {plane_form(), space_form()}) {
    Chart c = chart_from_matrix(IntMat::identity(f.n), support(f));
    CHECK(reassemble(pull_back(f, c)) == f);
  }
}

TEST_CASE("all regular charts of the plane form are adapted") {
  LogPForm f = plane_form();
  auto supp = support(f);
  auto np = NewtonPolyhedron::build(2, std::set<Exp>(supp.begin(), supp.end()));
  Fan fan = regularize(np.dual_fan());
  auto max = fan.maximal_cones();
  REQUIRE(max.size() == 4);
  for (const auto& sigma : max) {
    ChartPullback pb = pull_back(f, chart_from_cone(sigma, support(f)));
    CHECK_NOTHROW(check_adapted(pb));
    CHECK(reassemble(pb) == substitute_pullback_oracle(f, pb.chart.m));
  }
}

TEST_CASE("all regular charts of the space form are adapted") {
  LogPForm f = space_form();
  auto supp = support(f);
  auto np = NewtonPolyhedron::build(3, std::set<Exp>(supp.begin(), supp.end()));
  Fan fan = regularize(triangulate(np.dual_fan()));
  auto max = fan.maximal_cones();
  REQUIRE(max.size() == 6);
  for (const auto& sigma : max) {
    ChartPullback pb = pull_back(f, chart_from_cone(sigma, support(f)));
    CHECK_NOTHROW(check_adapted(pb));
    CHECK(reassemble(pb) == substitute_pullback_oracle(f, pb.chart.m));
  }
}

TEST_CASE("reduction agrees with direct substitution on random inputs") {
  std::mt19937_64 rng(77041);
  for (int trial = 0; trial < 25; ++trial) {
    int n = 2 + static_cast<int>(rng() % 2);
    int p = 1 + static_cast<int>(rng() % (n - 1));
    LogPForm f = random_form(rng, n, p);
    IntMat m = random_unimodular(rng, n);
    ChartPullback pb = pull_back(f, chart_from_matrix(m, support(f)));
    CHECK(reassemble(pb) == substitute_pullback_oracle(f, m));
  }
}
