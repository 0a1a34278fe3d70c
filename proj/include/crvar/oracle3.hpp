#pragma once

#include <string>
#include <vector>

#include "crvar/frames.hpp"
#include "crvar/series.hpp"
#include "crvar/variation.hpp"

namespace crvar::oracle3 {

/// 1-form a theta + b theta^1 + c theta^1bar on S^3 with t-series coefficients.
struct Form1 {
  TSeries2 theta, theta1, theta1bar;
};

/// x theta^theta^1 + y theta^theta^1bar + z theta^1^theta^1bar.
struct Form2 {
  TSeries2 t1, t1bar, one1bar;
  bool is_zero() const;
};

Form1 conj(const Form1& f);
Form2 conj(const Form2& f);
Form1 operator+(const Form1& a, const Form1& b);
Form2 operator-(const Form2& a, const Form2& b);
Form2 wedge(const Form1& a, const Form1& b);
Form2 exterior_derivative(const Form1& f);

/// Base frame of S^3: Z1 = zbar2 d/dz1 - zbar1 d/dz2, theta^1 = z2 dz1 - z1 dz2.
FrameVector base_z1();
FrameForm base_theta1();

/// Structure constants of the round sphere in the base coframe:
/// d theta = i h theta^1 ^ theta^1bar, d theta^1 = theta^1 ^ omega0 with omega0 = w theta.
struct BaseStructure {
  ExactScalar levi;        // h
  ExactScalar connection;  // w
};
const BaseStructure& base_structure();
/// Recomputes the base constants from ambient exterior calculus; true if they match.
bool verify_base_structure(std::string* detail = nullptr);

struct DeformOptions {
  /// Order-2 part of the path: Z1(t) ~ Z1 - i (t E + t^2 E2) Z1bar.
  SpherePoly e2{1};
  /// Constant unit-modulus gauge factor applied to Z1(t).
  ExactScalar phase{1};
};

struct DeformedCoframe {
  SpherePoly e;
  TSeries2 eps;    // t E + t^2 E2
  SpherePoly gamma;  // Levi renormalizer, N = 1 + t^2 gamma
  /// Z1(t) = p Z1 + q Z1bar
  TSeries2 frame_z, frame_zbar;
  /// theta^1(t) = a theta^1 + b theta^1bar
  TSeries2 a, b;
};

DeformedCoframe deform_frame(const SpherePoly& e, const DeformOptions& opt = {});

struct CoframeResiduals {
  TSeries2 dual_z;     // theta^1(t)(Z1(t)) - 1
  TSeries2 dual_zbar;  // theta^1(t)(Z1bar(t))
  TSeries2 levi;       // L(Z1(t), Z1(t)) - h
};
CoframeResiduals coframe_residuals(const DeformedCoframe& cf);

struct PseudohermitianSeries {
  Form1 omega;       // connection form omega_1^1
  TSeries2 torsion;  // A^1_{1bar}
  TSeries2 levi;     // h(t) with d theta = i h theta^1(t) ^ theta^1bar(t)
  Form2 residual;    // d theta^1 - theta^1 ^ omega - A theta ^ theta^1bar
  Form1 reality;     // omega + conj(omega)
};

PseudohermitianSeries solve_structure(const DeformedCoframe& cf);
/// Webster curvature: theta^1(t)^theta^1bar(t) coefficient of d omega divided by h(t).
TSeries2 webster_series(const PseudohermitianSeries& ps, const DeformedCoframe& cf);

/// Everything at once for one E.
struct OracleRun {
  DeformedCoframe coframe;
  PseudohermitianSeries structure;
  TSeries2 webster;
  ScalarSeries2 integrated_webster;
};
OracleRun run(const SpherePoly& e, const DeformOptions& opt = {});

/// Covariant derivative of a coefficient of a tensor with the given numbers of
/// Z1, Z1bar, theta^1, theta^1bar factors, along a base frame field, at t = 0.
struct TensorType {
  int z = 0, zbar = 0, theta1 = 0, theta1bar = 0;
};
SpherePoly covariant_derivative(const SpherePoly& c, TensorType type, const FrameVector& x);

struct Verdict {
  std::string name;
  bool pass = false;
  std::string detail;
};

/// Closed forms of the first-order slices (A = 0, F = 0 at the base).
SpherePoly expected_torsion_rate(const SpherePoly& e);
Form1 expected_connection_rate(const SpherePoly& e);
SpherePoly expected_webster_rate(const SpherePoly& e);

Verdict check_torsion_variation(const OracleRun& r);
Verdict check_connection_variation(const OracleRun& r);
/// Pointwise first variation of W and vanishing of its integral.
Verdict check_first_variation(const OracleRun& r);
Verdict check_solver(const OracleRun& r);

/// Second derivative of int W(t) at t = 0.
Rational second_derivative(const OracleRun& r);
/// C in d^2/dt^2 int W = C sum (m+4) |E^(m)|^2, fixed by E = 1.
Rational hessian_constant();

struct SecondDerivativeCheck {
  Rational oracle;      // d^2/dt^2 int W
  Rational mode_total;  // j_hessian total
  ExactScalar via_t;    // j_hessian_via_T
  Rational constant;    // C
  bool pass = false;
};
SecondDerivativeCheck second_derivative_check(const OracleRun& r);

}  // namespace crvar::oracle3
