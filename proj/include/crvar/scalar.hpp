#pragma once

#include <gmpxx.h>

#include <complex>
#include <iosfwd>
#include <string>
#include <string_view>

namespace crvar {

using Rational = mpq_class;

/// Gaussian rational re + im*i with unbounded numerators and denominators.
/// Values are always kept canonical (lowest terms, positive denominators).
class ExactScalar {
 public:
  ExactScalar() = default;
  ExactScalar(long v) : re_(v) {}  // NOLINT(google-explicit-constructor)
  ExactScalar(Rational re) : re_(std::move(re)) {  // NOLINT
    re_.canonicalize();
  }
  ExactScalar(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
  }

  static ExactScalar i() { return {Rational(0), Rational(1)}; }
  static ExactScalar fraction(long num, long den) { return Rational(num, den); }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }
  ExactScalar conj() const { return {re_, -im_}; }
  /// |z|^2, always real.
  Rational norm() const { return re_ * re_ + im_ * im_; }

  ExactScalar& operator+=(const ExactScalar& o);
  ExactScalar& operator-=(const ExactScalar& o);
  ExactScalar& operator*=(const ExactScalar& o);
  ExactScalar& operator/=(const ExactScalar& o);

  friend ExactScalar operator+(ExactScalar a, const ExactScalar& b) { return a += b; }
  friend ExactScalar operator-(ExactScalar a, const ExactScalar& b) { return a -= b; }
  friend ExactScalar operator*(ExactScalar a, const ExactScalar& b) { return a *= b; }
  friend ExactScalar operator/(ExactScalar a, const ExactScalar& b) { return a /= b; }
  ExactScalar operator-() const { return {-re_, -im_}; }

  friend bool operator==(const ExactScalar& a, const ExactScalar& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const ExactScalar& a, const ExactScalar& b) { return !(a == b); }

  std::complex<double> to_complex() const { return {re_.get_d(), im_.get_d()}; }

  /// Canonical text "p/q+r/s*i" (denominators always written, lowest terms).
  std::string to_string() const;
  /// Inverse of to_string(). Also accepts "p/q-r/s*i".
  static ExactScalar parse(std::string_view text);

 private:
  Rational re_{0};
  Rational im_{0};
};

std::ostream& operator<<(std::ostream& os, const ExactScalar& s);

/// Canonical "p/q" text of a rational.
std::string rational_to_string(const Rational& r);
/// Parses "p" or "p/q" (optional sign); throws crvar::Error on malformed text.
Rational parse_rational(std::string_view text);

}  // namespace crvar
