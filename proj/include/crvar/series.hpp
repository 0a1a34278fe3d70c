#pragma once

#include <array>
#include <cstddef>
#include <string>

#include "crvar/error.hpp"
#include "crvar/poly.hpp"
#include "crvar/scalar.hpp"

namespace crvar {

/// Power series in t truncated after t^Order. T must be a ring with
/// +, -, *, scalar * and a zero value given at construction.
template <class T, int Order = 2>
class TruncatedSeries {
  static_assert(Order >= 0);

 public:
  static constexpr int order = Order;

  TruncatedSeries() = default;
  /// Constant series c0, all higher coefficients equal to `zero`.
  TruncatedSeries(T c0, const T& zero) {
    c_.fill(zero);
    c_[0] = std::move(c0);
  }
  explicit TruncatedSeries(std::array<T, Order + 1> c) : c_(std::move(c)) {}

  const T& operator[](int k) const { return c_.at(k); }
  T& operator[](int k) { return c_.at(k); }
  const std::array<T, Order + 1>& coefficients() const { return c_; }

  TruncatedSeries& operator+=(const TruncatedSeries& o) {
    for (int k = 0; k <= Order; ++k) c_[k] += o.c_[k];
    return *this;
  }
  TruncatedSeries& operator-=(const TruncatedSeries& o) {
    for (int k = 0; k <= Order; ++k) c_[k] -= o.c_[k];
    return *this;
  }
  TruncatedSeries& operator*=(const ExactScalar& s) {
    for (auto& c : c_) c *= s;
    return *this;
  }
  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
  friend TruncatedSeries operator*(TruncatedSeries a, const ExactScalar& s) { return a *= s; }
  friend TruncatedSeries operator*(const ExactScalar& s, TruncatedSeries a) { return a *= s; }
  TruncatedSeries operator-() const { return *this * ExactScalar(-1); }

  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    TruncatedSeries r = a;
    for (int k = 0; k <= Order; ++k) {
      T acc = a.c_[0] * b.c_[k];
      for (int i = 1; i <= k; ++i) acc += a.c_[i] * b.c_[k - i];
      r.c_[k] = std::move(acc);
    }
    return r;
  }
  TruncatedSeries& operator*=(const TruncatedSeries& o) { return *this = *this * o; }

  /// Multiplies every coefficient by a t-independent factor.
  TruncatedSeries scaled(const T& f) const {
    TruncatedSeries r = *this;
    for (auto& c : r.c_) c = c * f;
    return r;
  }

  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) { return a.c_ == b.c_; }

  /// Generic binomial series (1 + x)^alpha for a series with c0 = 1.
  TruncatedSeries pow(const Rational& alpha) const {
    require_unit_constant();
    TruncatedSeries x = *this;
    x.c_[0] *= ExactScalar(0);
    TruncatedSeries result = *this;
    for (auto& c : result.c_) c *= ExactScalar(0);
    TruncatedSeries term = result;
    T one = c_[0];
    result.c_[0] = one;
    term.c_[0] = one;
    Rational binom = 1;
    for (int k = 1; k <= Order; ++k) {
      binom *= (alpha - (k - 1));
      binom /= k;
      term = term * x;
      result += term * ExactScalar(binom);
    }
    return result;
  }

  /// 1 / s for a series with c0 = 1.
  TruncatedSeries reciprocal() const { return pow(Rational(-1)); }

 private:
  void require_unit_constant() const {
    if (!is_one(c_[0]))
      throw Error("TruncatedSeries: constant coefficient must be 1");
  }
  static bool is_one(const ExactScalar& v) { return v == ExactScalar(1); }
  static bool is_one(const SpherePoly& v) { return v.is_constant() && v.constant_term() == ExactScalar(1); }

  std::array<T, Order + 1> c_{};
};

using TSeries2 = TruncatedSeries<SpherePoly, 2>;
using ScalarSeries2 = TruncatedSeries<ExactScalar, 2>;

inline TSeries2 make_series(const SpherePoly& c0, const SpherePoly& c1, const SpherePoly& c2) {
  return TSeries2({c0, c1, c2});
}

inline ScalarSeries2 make_series(const ExactScalar& c0, const ExactScalar& c1, const ExactScalar& c2) {
  return ScalarSeries2({c0, c1, c2});
}

}  // namespace crvar
