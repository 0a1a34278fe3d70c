#include "crvar/variation.hpp"

#include "crvar/error.hpp"
#include "crvar/spectral.hpp"

namespace crvar {

namespace {

const GellerPair kS3Pair{0, 1};

}  // namespace

DeformationTensor DeformationTensor::s3(const SpherePoly& e) {
  if (e.dimension() != 1) throw Error("DeformationTensor::s3: polynomial must live on S^3");
  TensorField c(1);
  c.set(kS3Pair, kS3Pair, e);
  return from_canonical(std::move(c));
}

DeformationTensor DeformationTensor::from_ambient(const AmbientTensor& m) { return from_canonical(tight_expand(m)); }

DeformationTensor DeformationTensor::from_raw(const TensorField& raw) { return from_canonical(tight_expand(raw)); }

DeformationTensor DeformationTensor::from_canonical(TensorField c) {
  DeformationTensor d;
  d.coeffs_ = std::move(c);
  return d;
}

SpherePoly DeformationTensor::scalar() const {
  if (dimension() != 1) throw Error("DeformationTensor::scalar: only defined on S^3");
  return coeffs_.coefficient(kS3Pair, kS3Pair);
}

Rational DeformationTensor::norm2() const { return integrate_sphere(pointwise_norm2()).re(); }

SpherePoly lowered_form(const DeformationTensor& e, const FrameVector& x, const FrameVector& y) {
  FrameVector ex = e.coefficients().apply(x);
  SpherePoly s(e.dimension());
  for (int a = 0; a <= e.dimension(); ++a) s += y.holo(a) * ex.anti(a);
  return s;
}

SymmetryReport check_symmetry(const DeformationTensor& e) {
  SymmetryReport r;
  const int n = e.dimension();
  const auto pairs = geller_pairs(n);
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    for (std::size_t q = p + 1; q < pairs.size(); ++q) {
      FrameVector zp = FrameVector::geller(n, pairs[p].first, pairs[p].second);
      FrameVector zq = FrameVector::geller(n, pairs[q].first, pairs[q].second);
      if (lowered_form(e, zp, zq) != lowered_form(e, zq, zp)) {
        r.symmetric = false;
        r.offending = std::make_pair(pairs[p], pairs[q]);
        return r;
      }
    }
  }
  return r;
}

bool validate_symmetry(const DeformationTensor& e) { return check_symmetry(e).symmetric; }

std::map<int, DeformationTensor> fourier_modes(const DeformationTensor& e) {
  std::map<int, TensorField> parts;
  for (const auto& [key, c] : e.coefficients().coefficients())
    for (const auto& [m, part] : fourier_components(c))
      parts.try_emplace(m, e.dimension()).first->second.set(key.first, key.second, part);
  std::map<int, DeformationTensor> out;
  for (auto& [m, t] : parts) out.emplace(m, DeformationTensor::from_canonical(std::move(t)));
  return out;
}

bool has_negative_modes(const DeformationTensor& e) {
  auto modes = fourier_modes(e);
  return !modes.empty() && modes.begin()->first < 0;
}

bool is_embeddable(const DeformationTensor& e) {
  if (e.dimension() != 1)
    throw Error("is_embeddable: the Fourier criterion is stated for S^3; for n > 1 every deformation is embeddable");
  auto modes = fourier_modes(e);
  return modes.empty() || modes.begin()->first > -4;
}

HessianReport j_hessian(const DeformationTensor& e) {
  HessianReport r;
  r.dimension = e.dimension();
  r.norm2 = 0;
  r.total = 0;
  for (const auto& [m, part] : fourier_modes(e)) {
    ModeTerm t;
    t.m = m;
    t.norm2 = part.norm2();
    t.weighted = (m + 4) * t.norm2;
    r.norm2 += t.norm2;
    r.total += t.weighted;
    r.modes.push_back(std::move(t));
  }
  r.total *= r.dimension;
  if (r.dimension == 1) {
    r.embeddable = is_embeddable(e);
  } else {
    r.embeddable = true;
    r.embeddable_by_dimension = true;
    r.negative_modes = has_negative_modes(e);
  }
  return r;
}

ExactScalar j_hessian_via_T(const DeformationTensor& e) {
  const int n = e.dimension();
  const TensorField d = covariant_T(e.coefficients());
  SpherePoly s(n);
  for (const auto& [key, c] : e.coefficients().coefficients()) s += d.coefficient(key.first, key.second) * conjugate(c);
  ExactScalar v = integrate_sphere(s) * ExactScalar(Rational(0), Rational(-n));
  return v + v.conj();
}

// ---------------------------------------------------------------------------

Rational cr_yamabe_constant(int n) {
  Rational b = 2 + Rational(2, n);
  b.canonicalize();
  return b;
}

Rational round_webster_curvature(int n) {
  Rational w(n * (n + 1), 2);
  w.canonicalize();
  return w;
}

std::string VolumeFactor::volume_text() const {
  return "2^" + std::to_string(2 * n + 2) + "*pi^" + std::to_string(n + 1);
}

std::string VolumeFactor::to_string() const { return "(" + volume_text() + ")^(" + exponent.get_str() + ")"; }

VolumeFactor normalized_functional_prefactor(int n) {
  VolumeFactor f;
  f.n = n;
  f.exponent = Rational(2, homogeneous_dimension(n));
  f.exponent.canonicalize();
  return f;
}

Rational pseudohermitian_energy(const SpherePoly& v) {
  if (!v.is_real()) throw Error("pseudohermitian_energy: input must be real-valued");
  return -integrate_sphere(v * sublaplacian(v)).re();
}

ScalarSeries2 yamabe_energy_series(const SpherePoly& v) {
  if (!v.is_real()) throw Error("yamabe_energy_series: input must be real-valued");
  const int n = v.dimension();
  const SpherePoly zero(n), one(n, 1);
  const TSeries2 u = make_series(one, v, zero);
  // -b_n Delta_b u + W u, with Delta_b u = t Delta_b v
  const TSeries2 lu = make_series(zero, sublaplacian(v) * ExactScalar(-cr_yamabe_constant(n)), zero) +
                      u * ExactScalar(round_webster_curvature(n));
  const TSeries2 numerator = u * lu;
  const TSeries2 power = u.pow(2 + Rational(2, n));
  ScalarSeries2 num, den;
  for (int k = 0; k <= 2; ++k) {
    num[k] = integrate_sphere(numerator[k]);
    den[k] = integrate_sphere(power[k]);
  }
  Rational expo(-n, n + 1);
  return num * den.pow(expo);
}

Rational conformal_first_variation(const SpherePoly& v) { return yamabe_energy_series(v)[1].re(); }

Rational conformal_hessian(const SpherePoly& v) {
  if (!v.is_real()) throw Error("conformal_hessian: input must be real-valued");
  if (!integrate_sphere(v).is_zero()) throw Error("conformal_hessian: input must have zero average");
  const int n = v.dimension();
  const Rational q = homogeneous_dimension(n);
  const Rational gradient = pseudohermitian_energy(v);
  return 2 * (cr_yamabe_constant(n) * gradient - (4 / (q - 2)) * round_webster_curvature(n) * l2_norm_squared(v));
}

}  // namespace crvar
