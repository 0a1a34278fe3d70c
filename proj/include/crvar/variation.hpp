#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "crvar/frames.hpp"
#include "crvar/poly.hpp"
#include "crvar/series.hpp"

namespace crvar {

/// Infinitesimal change of the CR structure (Jdot = 2E), held through its
/// canonical Geller coefficients. On S^3 the single coefficient is E_1^{1bar}.
class DeformationTensor {
 public:
  DeformationTensor() = default;
  explicit DeformationTensor(int n) : coeffs_(n) {}

  /// S^3 deformation from its scalar coefficient.
  static DeformationTensor s3(const SpherePoly& e);
  /// Canonical coefficients of an ambient matrix description.
  static DeformationTensor from_ambient(const AmbientTensor& m);
  /// Canonicalizes raw coefficients of sum r conj(Z_jk) (x) theta_lm.
  static DeformationTensor from_raw(const TensorField& raw);
  /// Takes coefficients as given (caller asserts they are canonical).
  static DeformationTensor from_canonical(TensorField c);

  int dimension() const { return coeffs_.dimension(); }
  const TensorField& coefficients() const { return coeffs_; }
  /// E_1^{1bar} for n = 1.
  SpherePoly scalar() const;
  bool is_zero() const { return coeffs_.coefficients().empty(); }
  /// Pointwise |E|^2.
  SpherePoly pointwise_norm2() const { return coeffs_.pointwise_norm2(); }
  /// Integral of |E|^2.
  Rational norm2() const;

 private:
  TensorField coeffs_;
};

struct SymmetryReport {
  bool symmetric = true;
  /// First pair ((jk),(lm)) with E(Z_lm, Z_jk) != E(Z_jk, Z_lm).
  std::optional<std::pair<GellerPair, GellerPair>> offending;
};

/// Lowered bilinear form E(X, Y) = sum_a Y_a (E X)_a on (1,0) fields.
SpherePoly lowered_form(const DeformationTensor& e, const FrameVector& x, const FrameVector& y);
SymmetryReport check_symmetry(const DeformationTensor& e);
bool validate_symmetry(const DeformationTensor& e);

/// Coefficientwise Fourier components, keyed by weight m.
std::map<int, DeformationTensor> fourier_modes(const DeformationTensor& e);
/// Some canonical coefficient has a component of negative weight.
bool has_negative_modes(const DeformationTensor& e);
/// S^3 only: no nonzero mode with m <= -4. Throws for n > 1.
bool is_embeddable(const DeformationTensor& e);

struct ModeTerm {
  int m = 0;
  Rational norm2;
  /// (m + 4) * norm2
  Rational weighted;
};

struct HessianReport {
  int dimension = 1;
  std::vector<ModeTerm> modes;
  /// sum of norm2 over modes (equals the integral of |E|^2)
  Rational norm2;
  /// n * sum (m + 4) norm2, probability measure, no volume prefactor
  Rational total;
  bool embeddable = true;
  /// true for n > 1, where embeddability holds for dimensional reasons
  bool embeddable_by_dimension = false;
  /// n > 1: some coefficient has a negative mode
  bool negative_modes = false;
};

HessianReport j_hessian(const DeformationTensor& e);
/// -i n int <covariant_T(E), E> + conj.
ExactScalar j_hessian_via_T(const DeformationTensor& e);

// ---- conformal direction ---------------------------------------------------

/// b_n = 2 + 2/n
Rational cr_yamabe_constant(int n);
/// Webster curvature of the round sphere in this package's contact form.
Rational round_webster_curvature(int n);
/// Q = 2n + 2
inline int homogeneous_dimension(int n) { return 2 * n + 2; }

/// Symbolic total volume int theta ^ (d theta)^n = 2^{2n+2} pi^{n+1}; exact
/// results are in the probability measure and carry the factor Vol^{exponent}.
struct VolumeFactor {
  int n = 1;
  Rational exponent;
  std::string volume_text() const;
  std::string to_string() const;
};
/// Vol^{2/Q}, the prefactor of the normalized functional in the probability measure.
VolumeFactor normalized_functional_prefactor(int n);

/// -int v Delta_b v
Rational pseudohermitian_energy(const SpherePoly& v);
/// Normalized functional along u = 1 + t v, coefficients of t^0, t^1, t^2
/// (probability measure; multiply by normalized_functional_prefactor).
ScalarSeries2 yamabe_energy_series(const SpherePoly& v);
/// Order-1 coefficient of yamabe_energy_series.
Rational conformal_first_variation(const SpherePoly& v);
/// 2 [ b_n (-int v Delta_b v) - (4/(Q-2)) W int v^2 ]; requires real v with mean 0.
Rational conformal_hessian(const SpherePoly& v);

}  // namespace crvar
