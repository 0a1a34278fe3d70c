#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "crvar/scalar.hpp"

namespace crvar {

/// Largest number of ambient complex coordinates (sphere S^{2n+1}, n+1 <= kMaxVars).
inline constexpr int kMaxVars = 8;

/// Exponent pair (a, b) of z^a zbar^b. Holomorphic exponents live in
/// slots [0, kMaxVars), antiholomorphic ones in [kMaxVars, 2*kMaxVars).
struct Monomial {
  std::array<std::uint8_t, 2 * kMaxVars> e{};

  std::uint8_t& z(int j) { return e[j]; }
  std::uint8_t& zbar(int j) { return e[kMaxVars + j]; }
  int z(int j) const { return e[j]; }
  int zbar(int j) const { return e[kMaxVars + j]; }

  int holo_degree() const;
  int anti_degree() const;
  int degree() const { return holo_degree() + anti_degree(); }
  /// Circle-action weight |a| - |b|.
  int weight() const { return holo_degree() - anti_degree(); }

  Monomial operator*(const Monomial& o) const;
  Monomial conj() const;

  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Total degree first, then exponent-lexicographic. This is also the
/// enumeration order of every pool and report.
struct MonomialOrder {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Ambient polynomial sum c_{ab} z^a zbar^b on C^{n+1}; no sphere reduction.
class Poly {
 public:
  using Terms = std::map<Monomial, ExactScalar, MonomialOrder>;

  Poly() = default;
  explicit Poly(int n) : n_(n) { check_dimension(n); }
  Poly(int n, const ExactScalar& c);

  static Poly z(int n, int j);
  static Poly zbar(int n, int j);
  static Poly monomial(int n, const Monomial& m, ExactScalar c = 1);
  /// sum_j z_j zbar_j
  static Poly radius_squared(int n);

  int dimension() const { return n_; }
  int num_vars() const { return n_ + 1; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int degree() const;

  /// Adds c * m, dropping the term if the coefficient cancels.
  void add_term(const Monomial& m, const ExactScalar& c);

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const ExactScalar& c);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const ExactScalar& c) { return a *= c; }
  friend Poly operator*(const ExactScalar& c, Poly a) { return a *= c; }
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly operator-() const { return *this * ExactScalar(-1); }
  friend bool operator==(const Poly& a, const Poly& b) {
    return a.n_ == b.n_ && a.terms_ == b.terms_;
  }

  /// d/dz_j
  Poly d_z(int j) const;
  /// d/dzbar_j
  Poly d_zbar(int j) const;
  Poly conj() const;

  std::complex<double> evaluate(std::span<const std::complex<double>> z) const;

  /// Text in the ring grammar, e.g. "(1/2,0/1) z1^2 w2 (3/1,-1/1)".
  std::string to_string() const;

 private:
  static void check_dimension(int n);
  void require_same_dimension(const Poly& o) const;

  int n_ = 1;
  Terms terms_;
};

/// Polynomial function on S^{2n+1}, held in normal form modulo
/// (sum_j z_j zbar_j - 1): no stored monomial contains both z_1 and zbar_1.
class SpherePoly {
 public:
  SpherePoly() = default;
  explicit SpherePoly(int n) : p_(n) {}
  SpherePoly(int n, const ExactScalar& c) : p_(n, c) {}

  static SpherePoly z(int n, int j) { return SpherePoly(Poly::z(n, j), Reduced{}); }
  static SpherePoly zbar(int n, int j) { return SpherePoly(Poly::zbar(n, j), Reduced{}); }

  int dimension() const { return p_.dimension(); }
  /// The normal-form ambient representative.
  const Poly& poly() const { return p_; }
  const Poly::Terms& terms() const { return p_.terms(); }
  bool is_zero() const { return p_.is_zero(); }
  bool is_constant() const;
  /// Coefficient of the monomial 1.
  ExactScalar constant_term() const;
  bool is_real() const;

  SpherePoly& operator+=(const SpherePoly& o);
  SpherePoly& operator-=(const SpherePoly& o);
  SpherePoly& operator*=(const ExactScalar& c);
  SpherePoly& operator*=(const SpherePoly& o);
  friend SpherePoly operator+(SpherePoly a, const SpherePoly& b) { return a += b; }
  friend SpherePoly operator-(SpherePoly a, const SpherePoly& b) { return a -= b; }
  friend SpherePoly operator*(SpherePoly a, const ExactScalar& c) { return a *= c; }
  friend SpherePoly operator*(const ExactScalar& c, SpherePoly a) { return a *= c; }
  friend SpherePoly operator*(SpherePoly a, const SpherePoly& b) { return a *= b; }
  SpherePoly operator-() const { return *this * ExactScalar(-1); }
  friend bool operator==(const SpherePoly& a, const SpherePoly& b) { return a.p_ == b.p_; }
  friend bool operator!=(const SpherePoly& a, const SpherePoly& b) { return !(a == b); }

  std::string to_string() const { return p_.to_string(); }

 private:
  struct Reduced {};
  SpherePoly(Poly p, Reduced) : p_(std::move(p)) {}
  friend SpherePoly normal_form(const Poly& p);

  Poly p_;
};

/// Unique remainder of p modulo (sum_j z_j zbar_j - 1), leading monomial z_1 zbar_1.
SpherePoly normal_form(const Poly& p);
/// Integral against the rotation-invariant probability measure on S^{2n+1}.
ExactScalar integrate_sphere(const SpherePoly& p);
/// Same monomial rule applied to an ambient polynomial (restricted to the sphere).
ExactScalar integrate_sphere(const Poly& p);
/// Swaps z <-> zbar and conjugates coefficients.
SpherePoly conjugate(const SpherePoly& p);
/// Part of p of circle weight m = |a| - |b|.
SpherePoly fourier_project(const SpherePoly& p, int m);
/// All nonzero weight components, keyed by m.
std::map<int, SpherePoly> fourier_components(const SpherePoly& p);
/// Integral of |p|^2.
Rational l2_norm_squared(const SpherePoly& p);
/// Integral of p * conj(q).
ExactScalar l2_inner(const SpherePoly& p, const SpherePoly& q);

/// All monomials z^a zbar^b in n+1 variables with |a|+|b| <= max_degree,
/// in MonomialOrder (total degree, then exponent-lexicographic).
std::vector<Monomial> enumerate_monomials(int n, int max_degree);

/// Parses the ring grammar: whitespace-separated terms, each a coefficient
/// "(re,im)" with rationals "p" or "p/q", followed by factors "zk^e" / "wk^e"
/// (wk = zbar_k, 1-based, exponent optional). A '+' between terms is allowed.
/// Returns the ambient polynomial (not reduced).
Poly parse_poly(int n, std::string_view text, int line = 1, int column_offset = 0);

}  // namespace crvar
