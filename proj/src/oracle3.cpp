#include "crvar/oracle3.hpp"

#include "crvar/error.hpp"

namespace crvar::oracle3 {

namespace {

constexpr int kN = 1;

SpherePoly zero_poly() { return SpherePoly(kN); }
SpherePoly one_poly() { return SpherePoly(kN, 1); }
TSeries2 zero_series() { return make_series(zero_poly(), zero_poly(), zero_poly()); }
TSeries2 constant_series(const SpherePoly& c) { return make_series(c, zero_poly(), zero_poly()); }

TSeries2 conj_series(const TSeries2& s) { return make_series(conjugate(s[0]), conjugate(s[1]), conjugate(s[2])); }

TSeries2 apply(const FrameVector& x, const TSeries2& s) {
  return make_series(field_apply(x, s[0]), field_apply(x, s[1]), field_apply(x, s[2]));
}

bool series_is_zero(const TSeries2& s) { return s[0].is_zero() && s[1].is_zero() && s[2].is_zero(); }

const FrameVector& reeb() {
  static const FrameVector t = FrameVector::reeb(kN);
  return t;
}
const FrameVector& z1() {
  static const FrameVector z = base_z1();
  return z;
}
const FrameVector& z1bar() {
  static const FrameVector z = base_z1().conj();
  return z;
}

std::string series_text(const TSeries2& s) {
  return "[" + s[0].to_string() + "; " + s[1].to_string() + "; " + s[2].to_string() + "]";
}

}  // namespace

bool Form2::is_zero() const {
  return series_is_zero(t1) && series_is_zero(t1bar) && series_is_zero(one1bar);
}

Form1 conj(const Form1& f) { return {conj_series(f.theta), conj_series(f.theta1bar), conj_series(f.theta1)}; }

Form2 conj(const Form2& f) { return {conj_series(f.t1bar), conj_series(f.t1), -conj_series(f.one1bar)}; }

Form1 operator+(const Form1& a, const Form1& b) {
  return {a.theta + b.theta, a.theta1 + b.theta1, a.theta1bar + b.theta1bar};
}

Form2 operator-(const Form2& a, const Form2& b) {
  return {a.t1 - b.t1, a.t1bar - b.t1bar, a.one1bar - b.one1bar};
}

Form2 wedge(const Form1& a, const Form1& b) {
  return {a.theta * b.theta1 - a.theta1 * b.theta, a.theta * b.theta1bar - a.theta1bar * b.theta,
          a.theta1 * b.theta1bar - a.theta1bar * b.theta1};
}

Form2 exterior_derivative(const Form1& f) {
  const BaseStructure& base = base_structure();
  const ExactScalar ih = ExactScalar::i() * base.levi;
  Form2 out{zero_series(), zero_series(), zero_series()};
  // d(f theta) = -(Z1 f) theta^theta1 - (Z1bar f) theta^theta1bar + i h f theta1^theta1bar
  out.t1 -= apply(z1(), f.theta);
  out.t1bar -= apply(z1bar(), f.theta);
  out.one1bar += f.theta * ih;
  // d(g theta1) = (T g - w g) theta^theta1 - (Z1bar g) theta1^theta1bar
  out.t1 += apply(reeb(), f.theta1) - f.theta1 * base.connection;
  out.one1bar -= apply(z1bar(), f.theta1);
  // d(k theta1bar) = (T k - conj(w) k) theta^theta1bar + (Z1 k) theta1^theta1bar
  out.t1bar += apply(reeb(), f.theta1bar) - f.theta1bar * base.connection.conj();
  out.one1bar += apply(z1(), f.theta1bar);
  return out;
}

FrameVector base_z1() { return FrameVector::geller(kN, 0, 1) * ExactScalar(-1); }

FrameForm base_theta1() {
  FrameForm f = FrameForm::geller(kN, 0, 1);
  f *= SpherePoly(kN, -1);
  return f;
}

namespace {

BaseStructure derive_base_structure() {
  const FrameForm theta = FrameForm::contact(kN);
  const FrameForm dtheta = theta.exterior_derivative();
  const FrameForm dtheta1 = base_theta1().exterior_derivative();
  BaseStructure b;
  // d theta(Z1, Z1bar) = i h
  SpherePoly h = dtheta(z1(), z1bar()) * (-ExactScalar::i());
  // d theta1(T, Z1) = (theta1 ^ w theta)(T, Z1) = -w
  SpherePoly w = -dtheta1(reeb(), z1());
  if (!h.is_constant() || !w.is_constant()) throw Error("oracle3: base structure is not constant");
  b.levi = h.constant_term();
  b.connection = w.constant_term();
  return b;
}

}  // namespace

const BaseStructure& base_structure() {
  static const BaseStructure b = derive_base_structure();
  return b;
}

bool verify_base_structure(std::string* detail) {
  const BaseStructure& b = base_structure();
  const FrameForm theta = FrameForm::contact(kN);
  const FrameForm theta1 = base_theta1();
  const FrameForm theta1bar = theta1.conj();
  const std::vector<const FrameVector*> frame{&reeb(), &z1(), &z1bar()};
  const std::vector<const FrameForm*> coframe{&theta, &theta1, &theta1bar};
  std::vector<std::string> bad;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      if ((*coframe[i])(*frame[j]) != SpherePoly(kN, i == j ? 1 : 0)) bad.push_back("duality");
  // each 2-form against the model built from the frozen constants
  auto model = [&](const FrameForm& form, const Form1& f) {
    Form2 d = exterior_derivative(f);
    auto eval = [&](const FrameVector& x, const FrameVector& y) {
      auto c = [&](const FrameForm& a, const FrameVector& v) { return a(v); };
      SpherePoly s = d.t1[0] * (c(theta, x) * c(theta1, y) - c(theta1, x) * c(theta, y)) +
                     d.t1bar[0] * (c(theta, x) * c(theta1bar, y) - c(theta1bar, x) * c(theta, y)) +
                     d.one1bar[0] * (c(theta1, x) * c(theta1bar, y) - c(theta1bar, x) * c(theta1, y));
      return s;
    };
    FrameForm df = form.exterior_derivative();
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = i + 1; j < 3; ++j)
        if (df(*frame[i], *frame[j]) != eval(*frame[i], *frame[j])) return false;
    return true;
  };
  const TSeries2 one = constant_series(one_poly()), zero = zero_series();
  if (!model(theta, {one, zero, zero})) bad.push_back("d theta");
  if (!model(theta1, {zero, one, zero})) bad.push_back("d theta1");
  if (!model(theta1bar, {zero, zero, one})) bad.push_back("d theta1bar");
  // a non-constant coefficient exercises the Leibniz part
  SpherePoly f = normal_form(parse_poly(kN, "z1^2 w2 + (0,1) w1"));
  FrameForm ftheta1 = theta1;
  ftheta1 *= f;
  if (!model(ftheta1, {zero, constant_series(f), zero})) bad.push_back("d(f theta1)");
  if (b.levi != ExactScalar(2) || b.connection != -ExactScalar::i()) bad.push_back("constants");
  if (detail) {
    *detail = "h=" + b.levi.to_string() + " w=" + b.connection.to_string();
    for (const auto& s : bad) *detail += " failed:" + s;
  }
  return bad.empty();
}

// ---------------------------------------------------------------------------

DeformedCoframe deform_frame(const SpherePoly& e, const DeformOptions& opt) {
  if (e.dimension() != kN || opt.e2.dimension() != kN) throw Error("deform_frame: polynomials must live on S^3");
  if (opt.phase.norm() != 1) throw Error("deform_frame: gauge factor must have modulus 1");
  DeformedCoframe cf;
  cf.e = e;
  cf.eps = make_series(zero_poly(), e, opt.e2);
  // N^2 (1 - |eps|^2) = 1 + O(t^3)
  const TSeries2 eps2 = cf.eps * conj_series(cf.eps);
  cf.gamma = eps2[2] * ExactScalar(Rational(1, 2));
  const TSeries2 norm = make_series(one_poly(), zero_poly(), cf.gamma);
  cf.frame_z = norm * opt.phase;
  cf.frame_zbar = norm * cf.eps * (-ExactScalar::i() * opt.phase);
  // theta1(t) = a theta1 + b theta1bar dual to Z1(t), Z1bar(t):
  //   p a + q b = 1, conj(q) a + conj(p) b = 0
  const TSeries2 pbar = conj_series(cf.frame_z), qbar = conj_series(cf.frame_zbar);
  const TSeries2 det = cf.frame_z * pbar - cf.frame_zbar * qbar;
  const TSeries2 inv = det.reciprocal();
  cf.a = pbar * inv;
  cf.b = -(qbar * inv);
  return cf;
}

CoframeResiduals coframe_residuals(const DeformedCoframe& cf) {
  CoframeResiduals r;
  // theta1(Z1) = 1, theta1(Z1bar) = 0, theta1bar dual likewise
  r.dual_z = cf.a * cf.frame_z + cf.b * cf.frame_zbar - constant_series(one_poly());
  r.dual_zbar = cf.a * conj_series(cf.frame_zbar) + cf.b * conj_series(cf.frame_z);
  // L(X, X) for X = p Z1 + q Z1bar equals h (|p|^2 - |q|^2)
  const ExactScalar h = base_structure().levi;
  r.levi = (cf.frame_z * conj_series(cf.frame_z) - cf.frame_zbar * conj_series(cf.frame_zbar)) * h -
           constant_series(SpherePoly(kN, h));
  return r;
}

PseudohermitianSeries solve_structure(const DeformedCoframe& cf) {
  const TSeries2 zero = zero_series();
  const Form1 theta1{zero, cf.a, cf.b};
  const Form1 theta1bar = conj(theta1);
  const Form2 d = exterior_derivative(theta1);
  const TSeries2 abar = conj_series(cf.a), bbar = conj_series(cf.b);
  const TSeries2 gram = cf.a * abar - cf.b * bbar;  // theta1(t)^theta1bar(t) = gram theta1^theta1bar
  const TSeries2 gram_inv = gram.reciprocal();

  // theta1(t) ^ (p theta + q theta1 + r theta1bar) + A theta ^ theta1bar(t):
  //   theta^theta1:        -a p + conj(b) A
  //   theta^theta1bar:     -b p + conj(a) A
  //   theta1^theta1bar:     a r - b q,  with q = -conj_series(r)
  const TSeries2 p = (bbar * d.t1bar - abar * d.t1) * gram_inv;
  const TSeries2 torsion = (cf.a * d.t1bar - cf.b * d.t1) * gram_inv;
  const TSeries2 r = (abar * d.one1bar - cf.b * conj_series(d.one1bar)) * gram_inv;
  const TSeries2 q = -conj_series(r);

  PseudohermitianSeries ps;
  ps.omega = {p, q, r};
  ps.torsion = torsion;
  // d theta = i h theta1^theta1bar = i (h / gram) theta1(t)^theta1bar(t)
  ps.levi = gram_inv * base_structure().levi;
  const Form1 theta_form{constant_series(one_poly()), zero, zero};
  const Form2 torsion_term = wedge(theta_form, theta1bar);
  ps.residual = d - wedge(theta1, ps.omega) -
                Form2{torsion_term.t1 * torsion, torsion_term.t1bar * torsion, torsion_term.one1bar * torsion};
  ps.reality = ps.omega + conj(ps.omega);
  return ps;
}

TSeries2 webster_series(const PseudohermitianSeries& ps, const DeformedCoframe& cf) {
  const Form2 domega = exterior_derivative(ps.omega);
  const TSeries2 gram = cf.a * conj_series(cf.a) - cf.b * conj_series(cf.b);
  // coefficient on theta1(t)^theta1bar(t), then divide by h(t)
  const TSeries2 r = domega.one1bar * gram.reciprocal();
  const TSeries2 h_inv = gram * ExactScalar(1 / base_structure().levi);
  return r * h_inv;
}

OracleRun run(const SpherePoly& e, const DeformOptions& opt) {
  OracleRun r;
  r.coframe = deform_frame(e, opt);
  r.structure = solve_structure(r.coframe);
  r.webster = webster_series(r.structure, r.coframe);
  for (int k = 0; k <= 2; ++k) r.integrated_webster[k] = integrate_sphere(r.webster[k]);
  return r;
}

// ---------------------------------------------------------------------------

SpherePoly covariant_derivative(const SpherePoly& c, TensorType type, const FrameVector& x) {
  const BaseStructure& base = base_structure();
  const SpherePoly theta_x = FrameForm::contact(kN)(x);
  const SpherePoly omega = theta_x * base.connection;
  const SpherePoly omega_bar = theta_x * base.connection.conj();
  const ExactScalar holo(type.z - type.theta1), anti(type.zbar - type.theta1bar);
  return field_apply(x, c) + c * (omega * holo + omega_bar * anti);
}

namespace {

constexpr TensorType kE{0, 1, 1, 0};     // E^{1bar}_1 : Z1bar (x) theta^1
constexpr TensorType kEbar{1, 0, 0, 1};  // E^1_{1bar} : Z1 (x) theta^1bar

TensorType with_form(TensorType t, bool bar) {
  (bar ? t.theta1bar : t.theta1) += 1;
  return t;
}

}  // namespace

SpherePoly expected_torsion_rate(const SpherePoly& e) {
  // Adot^1_{1bar} = -i E^1_{1bar,0}
  return covariant_derivative(conjugate(e), kEbar, reeb()) * (-ExactScalar::i());
}

Form1 expected_connection_rate(const SpherePoly& e) {
  // omegadot = -i E^{1bar}_{1,1bar} theta^1 - i E^1_{1bar,1} theta^1bar
  const SpherePoly q = covariant_derivative(e, kE, z1bar()) * (-ExactScalar::i());
  const SpherePoly r = covariant_derivative(conjugate(e), kEbar, z1()) * (-ExactScalar::i());
  return {zero_series(), make_series(zero_poly(), q, zero_poly()), make_series(zero_poly(), r, zero_poly())};
}

SpherePoly expected_webster_rate(const SpherePoly& e) {
  // Wdot = h^{-1} (i E^{1bar}_{1,1bar 1bar} - i E^1_{1bar,1 1})
  const SpherePoly first = covariant_derivative(covariant_derivative(e, kE, z1bar()), with_form(kE, true), z1bar());
  const SpherePoly ebar = conjugate(e);
  const SpherePoly second =
      covariant_derivative(covariant_derivative(ebar, kEbar, z1()), with_form(kEbar, false), z1());
  return (first - second) * (ExactScalar::i() / base_structure().levi);
}

Verdict check_torsion_variation(const OracleRun& r) {
  Verdict v{"torsion_variation", false, ""};
  const SpherePoly expected = expected_torsion_rate(r.coframe.e);
  const SpherePoly& actual = r.structure.torsion[1];
  v.pass = actual == expected && r.structure.torsion[0].is_zero();
  if (!v.pass) v.detail = "expected " + expected.to_string() + " got " + actual.to_string();
  return v;
}

Verdict check_connection_variation(const OracleRun& r) {
  Verdict v{"connection_variation", false, ""};
  const Form1 expected = expected_connection_rate(r.coframe.e);
  const Form1& w = r.structure.omega;
  const BaseStructure& base = base_structure();
  const bool base_ok = w.theta[0] == SpherePoly(kN, base.connection) && w.theta1[0].is_zero() &&
                       w.theta1bar[0].is_zero();
  v.pass = base_ok && w.theta[1] == expected.theta[1] && w.theta1[1] == expected.theta1[1] &&
           w.theta1bar[1] == expected.theta1bar[1];
  if (!v.pass)
    v.detail = "omega_1 = [" + w.theta[1].to_string() + "; " + w.theta1[1].to_string() + "; " +
               w.theta1bar[1].to_string() + "]";
  return v;
}

Verdict check_first_variation(const OracleRun& r) {
  Verdict v{"webster_first_variation", false, ""};
  const SpherePoly expected = expected_webster_rate(r.coframe.e);
  const bool pointwise = r.webster[1] == expected;
  const bool integral = r.integrated_webster[1].is_zero();
  v.pass = pointwise && integral;
  if (!pointwise) v.detail += "pointwise: expected " + expected.to_string() + " got " + r.webster[1].to_string();
  if (!integral) v.detail += " integral " + r.integrated_webster[1].to_string();
  return v;
}

Verdict check_solver(const OracleRun& r) {
  Verdict v{"structure_solver", false, ""};
  CoframeResiduals res = coframe_residuals(r.coframe);
  const bool dual = series_is_zero(res.dual_z) && series_is_zero(res.dual_zbar) && series_is_zero(res.levi);
  const bool structure = r.structure.residual.is_zero();
  const Form1& re = r.structure.reality;
  const bool reality = series_is_zero(re.theta) && series_is_zero(re.theta1) && series_is_zero(re.theta1bar);
  const BaseStructure& base = base_structure();
  const bool levi_const = r.structure.levi == constant_series(SpherePoly(kN, base.levi));
  const bool base_slice = r.structure.torsion[0].is_zero() && r.webster[0].is_constant();
  v.pass = dual && structure && reality && levi_const && base_slice;
  if (!dual) v.detail += "duality ";
  if (!structure) v.detail += "residual ";
  if (!reality) v.detail += "reality " + series_text(re.theta) + " ";
  if (!levi_const) v.detail += "levi " + series_text(r.structure.levi) + " ";
  if (!base_slice) v.detail += "base ";
  return v;
}

Rational second_derivative(const OracleRun& r) {
  if (!r.integrated_webster[2].is_real()) throw Error("oracle3: integrated Webster curvature is not real");
  return 2 * r.integrated_webster[2].re();
}

Rational hessian_constant() {
  static const Rational c = [] {
    OracleRun r = run(one_poly());
    Rational total = j_hessian(DeformationTensor::s3(one_poly())).total;
    Rational v = second_derivative(r) / total;
    v.canonicalize();
    return v;
  }();
  return c;
}

SecondDerivativeCheck second_derivative_check(const OracleRun& r) {
  SecondDerivativeCheck s;
  const DeformationTensor e = DeformationTensor::s3(r.coframe.e);
  s.oracle = second_derivative(r);
  s.mode_total = j_hessian(e).total;
  s.via_t = j_hessian_via_T(e);
  s.constant = hessian_constant();
  s.pass = s.constant > 0 && s.oracle == s.constant * s.mode_total &&
           ExactScalar(s.oracle) == ExactScalar(s.constant) * s.via_t;
  return s;
}

}  // namespace crvar::oracle3
