#include <cmath>
#include <complex>
#include <random>

#include "crvar/app.hpp"
#include "crvar/poly.hpp"

namespace crvar::app {

std::vector<MonteCarloResult> monte_carlo_integrals(int n, int max_degree, long samples, std::uint64_t seed) {
  if (samples <= 0) return {};
  const int vars = n + 1;
  const auto monomials = enumerate_monomials(n, max_degree);
  const std::size_t count = monomials.size();
  std::vector<std::complex<double>> sum(count);
  std::vector<double> sq_re(count), sq_im(count);

  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss;
  const int stride = max_degree + 1;
  std::vector<std::complex<double>> zp(vars * stride), wp(vars * stride);
  for (long s = 0; s < samples; ++s) {
    std::vector<std::complex<double>> z(vars);
    double r2 = 0;
    for (auto& c : z) {
      double re = gauss(rng), im = gauss(rng);
      c = {re, im};
      r2 += re * re + im * im;
    }
    const double r = std::sqrt(r2);
    for (int j = 0; j < vars; ++j) {
      std::complex<double> v = z[j] / r;
      zp[j * stride] = wp[j * stride] = 1.0;
      for (int e = 1; e <= max_degree; ++e) {
        zp[j * stride + e] = zp[j * stride + e - 1] * v;
        wp[j * stride + e] = std::conj(zp[j * stride + e]);
      }
    }
    for (std::size_t i = 0; i < count; ++i) {
      std::complex<double> v = 1.0;
      for (int j = 0; j < vars; ++j) v *= zp[j * stride + monomials[i].z(j)] * wp[j * stride + monomials[i].zbar(j)];
      sum[i] += v;
      sq_re[i] += v.real() * v.real();
      sq_im[i] += v.imag() * v.imag();
    }
  }

  std::vector<MonteCarloResult> out;
  out.reserve(count);
  const double N = static_cast<double>(samples);
  for (std::size_t i = 0; i < count; ++i) {
    MonteCarloResult r;
    Poly p = Poly::monomial(n, monomials[i]);
    ExactScalar exact = integrate_sphere(p);
    r.monomial = p.to_string();
    r.exact = exact.to_string();
    std::complex<double> mean = sum[i] / N;
    r.estimate_re = mean.real();
    r.estimate_im = mean.imag();
    double var = std::max(0.0, sq_re[i] / N - mean.real() * mean.real()) +
                 std::max(0.0, sq_im[i] / N - mean.imag() * mean.imag());
    r.standard_error = std::sqrt(var / N);
    r.within = std::abs(mean - exact.to_complex()) <= 3 * r.standard_error;
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace crvar::app
