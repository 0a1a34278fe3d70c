// Acceptance criteria: one PASS/FAIL line each, nonzero exit on any failure.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "crvar/app.hpp"
#include "crvar/oracle3.hpp"
#include "crvar/spectral.hpp"
#include "crvar/variation.hpp"
#include "oracles.hpp"

using namespace crvar;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
  std::string first_failure;

  void expect(bool ok, const std::string& what) {
    if (ok) return;
    if (pass) first_failure = what;
    pass = false;
  }
};

int failures = 0;

void criterion(int id, const char* title, const std::function<Outcome()>& body) {
  auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o.pass = false;
    o.first_failure = std::string("exception: ") + e.what();
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (!o.pass) ++failures;
  std::printf("%s  %d  %-38s %s (%.2fs)%s%s\n", o.pass ? "PASS" : "FAIL", id, title, o.detail.c_str(), secs,
              o.pass ? "" : "  first failure: ", o.first_failure.c_str());
  std::fflush(stdout);
}

SpherePoly mono(int n, const Monomial& m) { return normal_form(Poly::monomial(n, m)); }

// int |z^a zbar^b|^2 from the simplex oracle
Rational monomial_norm2(int n, const Monomial& m) {
  Poly p = Poly::monomial(n, m) * Poly::monomial(n, m.conj());
  return oracle::integrate(p).re();
}

SpherePoly real_part(const SpherePoly& f) { return (f + conjugate(f)) * ExactScalar(Rational(1, 2)); }
SpherePoly imag_part(const SpherePoly& f) { return (f - conjugate(f)) * ExactScalar(Rational(0), Rational(-1, 2)); }

SpherePoly frame_sublaplacian(const SpherePoly& f) {
  const int n = f.dimension();
  SpherePoly s(n);
  for (const auto& [j, k] : geller_pairs(n)) {
    FrameVector z = FrameVector::geller(n, j, k), zb = FrameVector::geller_bar(n, j, k);
    s += field_apply(z, field_apply(zb, f)) + field_apply(zb, field_apply(z, f));
  }
  return s * ExactScalar(Rational(1, 2));
}

Rational lambda(int p, int q, int n) { return Rational(p * q) + Rational(n * (p + q), 2); }

SpherePoly random_poly(std::mt19937& rng, int n, int max_degree, int terms) {
  auto pool = enumerate_monomials(n, max_degree);
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  std::uniform_int_distribution<int> c(-4, 4), d(1, 3);
  Poly p(n);
  for (int t = 0; t < terms; ++t) p.add_term(pool[pick(rng)], ExactScalar(Rational(c(rng), d(rng)), Rational(c(rng), d(rng))));
  return normal_form(p);
}

std::string str(const Rational& r) { return rational_to_string(r); }

}  // namespace

int main() {
  const auto pool = enumerate_monomials(1, 4);
  std::vector<oracle3::OracleRun> runs;

  criterion(1, "criticality at the round sphere", [&] {
    Outcome o;
    for (const auto& m : pool) {
      runs.push_back(oracle3::run(mono(1, m)));
      o.expect(runs.back().integrated_webster[1].is_zero(), Poly::monomial(1, m).to_string());
    }
    o.detail = std::to_string(pool.size()) + " monomials, order-t of int W exactly 0";
    return o;
  });

  criterion(2, "mode formula with a single C", [&] {
    Outcome o;
    // C from E = 1: sum (m+4)|E^(m)|^2 = 4
    Rational c = oracle3::second_derivative(oracle3::run(SpherePoly(1, 1))) / 4;
    o.expect(c > 0, "C > 0");
    for (std::size_t i = 0; i < pool.size(); ++i) {
      const Monomial& m = pool[i];
      Rational modes = (m.weight() + 4) * monomial_norm2(1, m);
      o.expect(oracle3::second_derivative(runs[i]) == c * modes, Poly::monomial(1, m).to_string());
      o.expect(j_hessian(DeformationTensor::s3(mono(1, m))).total == modes, "library mode table");
    }
    o.detail = "C = " + str(c) + " (probability measure; normalized functional: C * " +
               normalized_functional_prefactor(1).to_string() + "), " + std::to_string(pool.size()) + " monomials";
    return o;
  });

  criterion(3, "two-route Hessian", [&] {
    Outcome o;
    std::mt19937 rng(2024);
    std::uniform_int_distribution<int> terms(1, 4);
    for (int i = 0; i < 50; ++i) {
      auto e = DeformationTensor::s3(random_poly(rng, 1, 3, terms(rng)));
      o.expect(j_hessian_via_T(e) == ExactScalar(j_hessian(e).total), "S^3 trial " + std::to_string(i));
    }
    int max_degree = 0;
    for (int i = 0; i < 20; ++i) {
      AmbientTensor m(2);
      for (int a = 0; a <= 2; ++a)
        for (int b = a; b <= 2; ++b) m.at(a, b) = m.at(b, a) = random_poly(rng, 2, 1, terms(rng) % 3);
      auto e = DeformationTensor::from_ambient(m);
      for (const auto& [k, c] : e.coefficients().coefficients()) max_degree = std::max(max_degree, c.poly().degree());
      o.expect(validate_symmetry(e), "S^5 symmetry " + std::to_string(i));
      o.expect(j_hessian_via_T(e) == ExactScalar(j_hessian(e).total), "S^5 trial " + std::to_string(i));
    }
    o.expect(max_degree <= 3, "coefficient degree");
    o.detail = "50 on S^3, 20 on S^5 (coefficient degree <= " + std::to_string(max_degree) + ")";
    return o;
  });

  criterion(4, "first-variation formulas", [&] {
    Outcome o;
    const FrameVector z1 = oracle3::base_z1(), z1bar = z1.conj();
    const ExactScalar half_i(Rational(0), Rational(1, 2));
    for (std::size_t i = 0; i < pool.size(); ++i) {
      const auto& r = runs[i];
      const SpherePoly& e = r.coframe.e;
      const int m = pool[i].weight();
      const std::string in = Poly::monomial(1, pool[i]).to_string();
      o.expect(r.structure.torsion[0].is_zero(), in + " A = 0 at t = 0");
      o.expect(r.structure.torsion[1] == conjugate(e) * ExactScalar(Rational(-4 - m, 2)), in + " torsion rate");
      SpherePoly wdot = (field_apply(z1bar, field_apply(z1bar, e)) - field_apply(z1, field_apply(z1, conjugate(e)))) * half_i;
      o.expect(r.webster[1] == wdot, in + " Webster rate");
      o.expect(oracle3::check_connection_variation(r).pass, in + " connection rate");
      o.expect(oracle3::check_solver(r).pass, in + " structure equations");
    }
    o.detail = "torsion, connection and Webster slices on " + std::to_string(pool.size()) + " monomials";
    return o;
  });

  criterion(5, "conformal Hessian", [&] {
    Outcome o;
    int cases = 0, kernel = 0;
    for (int n = 1; n <= 3; ++n) {
      std::set<std::string> seen;
      for (const auto& m : enumerate_monomials(n, 4)) {
        for (const auto& [bd, comp] : harmonic_decompose(mono(n, m)).components) {
          if (bd.first + bd.second == 0) continue;
          for (const SpherePoly& v : {real_part(comp), imag_part(comp)}) {
            if (v.is_zero() || !seen.insert(v.to_string()).second) continue;
            ++cases;
            const std::string in = "n=" + std::to_string(n) + " " + v.to_string();
            o.expect(oracle::integrate(v.poly()).is_zero(), in + " mean");
            Rational h = conformal_hessian(v);
            // 2 (n+1)/n (2 lambda - n) |v|^2 on H(p,q)
            Rational norm2 = oracle::integrate((v * v).poly()).re();
            Rational expected = Rational(2 * (n + 1), n) * (2 * lambda(bd.first, bd.second, n) - n) * norm2;
            o.expect(h == expected, in + " value");
            o.expect(h >= 0, in + " sign");
            bool linear = bd.first + bd.second == 1;
            o.expect((h == 0) == linear, in + " kernel");
            kernel += h == 0;
            ScalarSeries2 s = yamabe_energy_series(v);
            o.expect(s[1].is_zero(), in + " first order");
            o.expect(s[2] == ExactScalar(h / 2), in + " second order");
          }
        }
      }
    }
    o.detail = std::to_string(cases) + " real v for n = 1..3, " + std::to_string(kernel) + " in the kernel (all linear)";
    return o;
  });

  criterion(6, "sign and embeddability of pure modes", [&] {
    Outcome o;
    std::map<int, int> per_mode;
    for (const auto& m : enumerate_monomials(1, 6)) {
      auto e = DeformationTensor::s3(mono(1, m));
      const int w = m.weight();
      HessianReport r = j_hessian(e);
      const std::string in = Poly::monomial(1, m).to_string();
      ++per_mode[w];
      if (w <= -5) o.expect(r.total < 0, in + " negative");
      else if (w == -4) o.expect(r.total == 0, in + " zero");
      o.expect(is_embeddable(e) == (w > -4), in + " embeddability");
      if (is_embeddable(e)) o.expect(r.total > 0, in + " positive");
      o.expect(r.total == (w + 4) * monomial_norm2(1, m), in + " value");
    }
    o.detail = std::to_string(per_mode.size()) + " modes m = " + std::to_string(per_mode.begin()->first) + ".." +
               std::to_string(per_mode.rbegin()->first) + " from 210 monomials";
    return o;
  });

  criterion(7, "spectral table and W0", [&] {
    Outcome o;
    int components = 0;
    for (int n = 1; n <= 3; ++n) {
      std::set<Bidegree> seen;
      for (const auto& m : enumerate_monomials(n, 4)) {
        for (const auto& [bd, comp] : harmonic_decompose(mono(n, m)).components) {
          ++components;
          seen.insert(bd);
          SpherePoly expected = comp * ExactScalar(-lambda(bd.first, bd.second, n));
          o.expect(sublaplacian(comp) == expected, "spectral n=" + std::to_string(n));
          o.expect(frame_sublaplacian(comp) == expected, "frame n=" + std::to_string(n));
        }
      }
      o.expect(seen.size() == 15, "all bidegrees with p+q <= 4 reached");
    }
    SpherePoly w0 = oracle3::run(SpherePoly(1)).webster[0];
    o.expect(w0 == SpherePoly(1, ExactScalar(Rational(1 * 2, 2))), "oracle W0 = n(n+1)/2");
    o.expect(round_webster_curvature(1) == 1, "calibrated W0");
    o.detail = std::to_string(components) + " harmonic components; oracle W0 = " + w0.constant_term().re().get_str() +
               " = n(n+1)/2 (n(n+1) for theta/2)";
    return o;
  });

  criterion(8, "frame identities", [&] {
    Outcome o;
    int vectors = 0;
    std::mt19937 rng(88);
    for (int n = 1; n <= 3; ++n) {
      const ExactScalar minus_i(Rational(0), Rational(-1));
      const FrameVector t = FrameVector::reeb(n);
      const FrameForm dtheta = FrameForm::contact(n).exterior_derivative();
      const auto pairs = geller_pairs(n);
      for (const auto& [j, k] : pairs) {
        FrameVector z = FrameVector::geller(n, j, k);
        o.expect(bracket(t, z) == z * minus_i, "[T, Z]");
        for (const auto& [p, q] : pairs) o.expect(covariant_Z(z, FrameVector::geller(n, p, q)).is_zero(), "nabla_Z Z");
        for (const auto& [l, m] : pairs) {
          FrameVector zlm = FrameVector::geller(n, l, m);
          // Levi form -i d theta_0 = -(i/2) d theta, theta = 2 theta_0
          SpherePoly lhs = dtheta(zlm, FrameVector::geller_bar(n, j, k)) * ExactScalar(Rational(0), Rational(-1, 2));
          o.expect(lhs == FrameForm::geller(n, j, k)(zlm), "d theta vs theta_jk");
        }
        o.expect(sharp_inverse(FrameVector::geller_bar(n, j, k)).frame_components() ==
                     FrameForm::geller(n, j, k).frame_components(),
                 "sharp map");
      }
      for (int trial = 0; trial < 10; ++trial, ++vectors) {
        FrameVector v(n);
        for (const auto& [j, k] : pairs) v += random_poly(rng, n, 2, 2) * FrameVector::geller(n, j, k);
        SpherePoly parseval(n), direct(n);
        FrameVector rebuilt(n);
        for (const auto& [p, c] : tight_expand(v)) {
          parseval += c * conjugate(c);
          rebuilt += c * FrameVector::geller(n, p.first, p.second);
        }
        for (int a = 0; a <= n; ++a) direct += v.holo(a) * conjugate(v.holo(a));
        o.expect(parseval == direct, "Parseval");
        o.expect(rebuilt == v, "reconstruction");
      }
    }
    o.detail = "n = 1..3, all frame pairs, " + std::to_string(vectors) + " Parseval vectors";
    return o;
  });

  criterion(9, "exact vs Monte-Carlo integrals", [&] {
    Outcome o;
    const long samples = 1000000;
    auto results = app::monte_carlo_integrals(1, 6, samples, 20240611);
    int inside = 0;
    double worst = 0;
    for (const auto& r : results) {
      inside += r.within;
      o.expect(r.within, r.monomial);
      o.expect(ExactScalar::parse(r.exact).to_complex() == ExactScalar(oracle::integrate(parse_poly(1, r.monomial))).to_complex(),
               r.monomial + " exact value");
      if (r.standard_error > 0)
        worst = std::max(worst, std::abs(std::complex<double>(r.estimate_re, r.estimate_im) -
                                         ExactScalar::parse(r.exact).to_complex()) / r.standard_error);
    }
    std::ostringstream os;
    os << inside << "/" << results.size() << " monomials within 3 SE at 1e6 samples, worst " << worst << " SE";
    o.detail = os.str();
    o.expect(results.size() == 210, "pool size");
    return o;
  });

  std::printf("%s  %d criteria failed\n", failures == 0 ? "ALL PASS" : "FAILURES", failures);
  return failures == 0 ? 0 : 1;
}
