#include <random>

#include "crvar/error.hpp"
#include "crvar/poly.hpp"
#include "crvar/series.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace crvar;

namespace {

SpherePoly sp(int n, std::string_view text) { return normal_form(parse_poly(n, text)); }

Poly random_poly(std::mt19937& rng, int n, int max_degree, int terms) {
  auto pool = enumerate_monomials(n, max_degree);
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  std::uniform_int_distribution<int> coeff(-4, 4);
  Poly p(n);
  for (int t = 0; t < terms; ++t)
    p.add_term(pool[pick(rng)], ExactScalar(Rational(coeff(rng), 1 + (t % 3)), Rational(coeff(rng))));
  return p;
}

}  // namespace

TEST_CASE("scalar canonical text round trip") {
  ExactScalar a(Rational(6, 4), Rational(-10, 15));
  CHECK(a.to_string() == "3/2-2/3*i");
  CHECK(ExactScalar::parse(a.to_string()) == a);
  CHECK(ExactScalar().to_string() == "0/1+0/1*i");
  CHECK(ExactScalar::parse("-7/3+0/1*i") == ExactScalar(Rational(-7, 3)));
  CHECK_THROWS_AS(ExactScalar::parse("1/2+3"), Error);
  CHECK_THROWS_AS(ExactScalar(1) / ExactScalar(0), Error);
  ExactScalar b(Rational(1, 3), Rational(2));
  CHECK((a * b) / b == a);
  CHECK(b * b.conj() == ExactScalar(b.norm()));
}

TEST_CASE("normal form examples") {
  CHECK(sp(1, "z1 w1 + z2 w2") == SpherePoly(1, 1));
  CHECK(sp(1, "z1") == SpherePoly::z(1, 0));
  CHECK(sp(1, "z1 w1") == sp(1, "(1,0) + (-1,0) z2 w2"));
  CHECK(sp(1, "z1^3 w1^2").poly() == parse_poly(1, "z1 + (-2,0) z1 z2 w2 + z1 z2^2 w2^2"));
}

TEST_CASE("normal form is a ring map and idempotent") {
  std::mt19937 rng(11);
  for (int n = 1; n <= 3; ++n) {
    for (int trial = 0; trial < 20; ++trial) {
      Poly p = random_poly(rng, n, 3, 5), q = random_poly(rng, n, 3, 5);
      SpherePoly np = normal_form(p), nq = normal_form(q);
      CHECK(normal_form(np.poly()) == np);
      CHECK(normal_form(p * q) == np * nq);
      CHECK(normal_form(p + q) == np + nq);
      for (const auto& [m, c] : np.terms()) CHECK(m.z(0) * m.zbar(0) == 0);
      // the sphere relation itself reduces to zero
      CHECK(normal_form((Poly::radius_squared(n) - Poly(n, 1)) * p).is_zero());
    }
  }
}

TEST_CASE("dimension mismatch is rejected") {
  CHECK_THROWS_AS(Poly::z(1, 0) + Poly::z(2, 0), Error);
  CHECK_THROWS_AS(Poly(0), Error);
}

TEST_CASE("integration examples") {
  CHECK(integrate_sphere(SpherePoly(1, 1)) == ExactScalar(1));
  CHECK(integrate_sphere(sp(1, "z1 w1")) == ExactScalar(Rational(1, 2)));
  CHECK(integrate_sphere(sp(1, "z1^2 w1^2")) == ExactScalar(Rational(1, 3)));
  CHECK(integrate_sphere(sp(1, "z1 w1 z2 w2")) == ExactScalar(Rational(1, 6)));
  CHECK(integrate_sphere(sp(1, "w1^5 z1^5")) == ExactScalar(Rational(1, 6)));
}

TEST_CASE("factorial rule agrees with the simplex oracle") {
  for (int n = 1; n <= 3; ++n) {
    for (const auto& m : enumerate_monomials(n, 6)) {
      Poly p = Poly::monomial(n, m);
      CHECK(integrate_sphere(normal_form(p)) == oracle::integrate(p));
      CHECK(integrate_sphere(p) == oracle::integrate(p));
    }
  }
}

TEST_CASE("reduction and symmetry oracle for |a| <= 3 on S^3") {
  // On S^3, |z1|^2 and |z2|^2 are exchanged by a unitary map, and their
  // sum is 1; reduce every diagonal monomial and use that symmetry.
  for (int a1 = 0; a1 <= 3; ++a1) {
    for (int a2 = 0; a1 + a2 <= 3; ++a2) {
      Monomial m;
      m.z(0) = m.zbar(0) = static_cast<std::uint8_t>(a1);
      m.z(1) = m.zbar(1) = static_cast<std::uint8_t>(a2);
      Monomial swapped;
      swapped.z(0) = swapped.zbar(0) = static_cast<std::uint8_t>(a2);
      swapped.z(1) = swapped.zbar(1) = static_cast<std::uint8_t>(a1);
      CHECK(integrate_sphere(Poly::monomial(1, m)) == integrate_sphere(Poly::monomial(1, swapped)));
    }
  }
  // int |z2|^4 = int (1 - |z1|^2)^2 = 1 - 2*(1/2) + int |z1|^4, and by symmetry the two
  // fourth moments agree: consistent only because int |z1|^2|z2|^2 = 1/6 and int |z1|^4 = 1/3.
  SpherePoly z1sq = sp(1, "z1 w1");
  CHECK(z1sq * z1sq == sp(1, "(1,0) + (-2,0) z2 w2 + z2^2 w2^2"));
  ExactScalar m4 = integrate_sphere(z1sq * z1sq);
  ExactScalar m22 = integrate_sphere(sp(1, "z1 w1 z2 w2"));
  CHECK(m4 + m22 == ExactScalar(Rational(1, 2)));  // int |z1|^2 (|z1|^2 + |z2|^2)
  CHECK(m4 == ExactScalar(2) * m22);
}

TEST_CASE("conjugation") {
  CHECK(conjugate(SpherePoly::z(1, 0)) == SpherePoly::zbar(1, 0));
  CHECK(conjugate(sp(1, "(0,1) z1 w2")) == sp(1, "(0,-1) z2 w1"));
  SpherePoly r = sp(1, "z1 + w1 + z1 w2 + z2 w1");
  CHECK(conjugate(r) == r);
  CHECK(r.is_real());
  std::mt19937 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    SpherePoly p = normal_form(random_poly(rng, 2, 4, 6));
    CHECK(conjugate(conjugate(p)) == p);
    CHECK(integrate_sphere(conjugate(p)) == integrate_sphere(p).conj());
  }
}

TEST_CASE("fourier projection") {
  CHECK(fourier_project(sp(1, "z1^2 w2"), 1) == sp(1, "z1^2 w2"));
  CHECK(fourier_project(sp(1, "z1 + w1"), 1) == SpherePoly::z(1, 0));
  std::mt19937 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    SpherePoly p = normal_form(random_poly(rng, 1, 5, 8));
    SpherePoly q = normal_form(random_poly(rng, 1, 3, 4));
    SpherePoly sum(1);
    for (const auto& [m, part] : fourier_components(p)) {
      CHECK(fourier_project(part, m) == part);
      sum += part;
      if (m != 0) CHECK(integrate_sphere(part).is_zero());
    }
    CHECK(sum == p);
    for (int a = -2; a <= 2; ++a)
      for (int b = -2; b <= 2; ++b)
        CHECK(fourier_project(fourier_project(p, a) * fourier_project(q, b), a + b) ==
              fourier_project(p, a) * fourier_project(q, b));
  }
}

TEST_CASE("ring grammar") {
  Poly p = parse_poly(2, "(1/2,-3/4) z1^2 w3 (2,0) z2 + (0,1)");
  CHECK(p.terms().size() == 3);
  CHECK(parse_poly(2, p.to_string()) == p);
  CHECK(parse_poly(1, "z1 z1") == parse_poly(1, "z1^2"));
  CHECK(parse_poly(1, "").is_zero());
  try {
    parse_poly(1, "(1,0) z3", 4);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 4);
    CHECK(e.column() == 7);
  }
  CHECK_THROWS_AS(parse_poly(1, "(1/0,0) z1"), ParseError);
  CHECK_THROWS_AS(parse_poly(1, "(1,0 z1"), ParseError);
  CHECK_THROWS_AS(parse_poly(1, "x1"), ParseError);
}

TEST_CASE("evaluation matches the algebra on sample points") {
  std::mt19937 rng(9);
  std::normal_distribution<double> g;
  Poly p = random_poly(rng, 2, 3, 6), q = random_poly(rng, 2, 3, 6);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<std::complex<double>> z(3);
    double r = 0;
    for (auto& v : z) {
      v = {g(rng), g(rng)};
      r += std::norm(v);
    }
    for (auto& v : z) v /= std::sqrt(r);
    auto lhs = normal_form(p * q).poly().evaluate(z);
    auto rhs = p.evaluate(z) * q.evaluate(z);
    CHECK(std::abs(lhs - rhs) < 1e-9);
  }
}

TEST_CASE("truncated series") {
  const int n = 1;
  SpherePoly zero(n), one(n, 1);
  SpherePoly v = sp(n, "z1 + w1");
  TSeries2 u = make_series(one, v, zero);
  TSeries2 w = make_series(one, sp(n, "z2"), sp(n, "w2 z1"));
  TSeries2 s = make_series(sp(n, "z1 w2"), zero, v);
  CHECK((s * u) * w == s * (u * w));
  TSeries2 t2 = make_series(zero, zero, one);
  TSeries2 p = t2 * s;
  CHECK(p[0].is_zero());
  CHECK(p[1].is_zero());
  CHECK(p[2] == s[0]);
  CHECK(u * u.reciprocal() == make_series(one, zero, zero));
  TSeries2 half = u.pow(Rational(1, 2));
  CHECK(half * half == u);
  // (1+tv)^3 through the binomial rule equals repeated products
  CHECK(u.pow(Rational(3)) == u * u * u);
  CHECK_THROWS_AS(s.reciprocal(), Error);

  ScalarSeries2 x = make_series(ExactScalar(1), ExactScalar(2), ExactScalar(Rational(1, 3)));
  CHECK(x * x.pow(Rational(-2, 3)) == x.pow(Rational(1, 3)));
}
