#include "crvar/frames.hpp"

#include "crvar/error.hpp"

namespace crvar {

namespace {

const ExactScalar kHalfI(Rational(0), Rational(1, 2));

void check_pair(int n, int j, int k) {
  if (!(0 <= j && j < k && k <= n)) throw Error("Geller index pair out of range");
}

SpherePoly derivative(const SpherePoly& f, int a, int num_vars) {
  const Poly& p = f.poly();
  return normal_form(a < num_vars ? p.d_z(a) : p.d_zbar(a - num_vars));
}

}  // namespace

std::vector<GellerPair> geller_pairs(int n) {
  std::vector<GellerPair> out;
  for (int j = 0; j <= n; ++j)
    for (int k = j + 1; k <= n; ++k) out.emplace_back(j, k);
  return out;
}

std::string FrameIndex::label() const {
  if (kind == FrameKind::Reeb) return "T";
  std::string s = kind == FrameKind::Geller ? "Z" : "Zb";
  return s + std::to_string(pair.first + 1) + std::to_string(pair.second + 1);
}

// ---------------------------------------------------------------------------

FrameVector::FrameVector(int n) : n_(n), holo_(n + 1, SpherePoly(n)), anti_(n + 1, SpherePoly(n)) {}

FrameVector::FrameVector(int n, std::vector<SpherePoly> holo, std::vector<SpherePoly> anti)
    : n_(n), holo_(std::move(holo)), anti_(std::move(anti)) {
  if (static_cast<int>(holo_.size()) != n + 1 || static_cast<int>(anti_.size()) != n + 1)
    throw Error("FrameVector: wrong number of components");
  for (int a = 0; a <= n; ++a)
    if (holo_[a].dimension() != n || anti_[a].dimension() != n)
      throw Error("FrameVector: dimension mismatch");
}

FrameVector FrameVector::reeb(int n) {
  FrameVector t(n);
  for (int a = 0; a <= n; ++a) {
    t.holo_[a] = SpherePoly::z(n, a) * kHalfI;
    t.anti_[a] = SpherePoly::zbar(n, a) * (-kHalfI);
  }
  return t;
}

FrameVector FrameVector::geller(int n, int j, int k) {
  check_pair(n, j, k);
  FrameVector z(n);
  z.holo_[k] = SpherePoly::zbar(n, j);
  z.holo_[j] = -SpherePoly::zbar(n, k);
  return z;
}

FrameVector FrameVector::geller_bar(int n, int j, int k) { return geller(n, j, k).conj(); }

FrameVector FrameVector::frame(int n, const FrameIndex& idx) {
  switch (idx.kind) {
    case FrameKind::Reeb: return reeb(n);
    case FrameKind::Geller: return geller(n, idx.pair.first, idx.pair.second);
    case FrameKind::GellerBar: return geller_bar(n, idx.pair.first, idx.pair.second);
  }
  throw Error("FrameVector: bad frame index");
}

FrameVector FrameVector::from_frame(int n, const std::map<FrameIndex, SpherePoly>& coeffs) {
  FrameVector out(n);
  for (const auto& [idx, c] : coeffs) out += c * frame(n, idx);
  return out;
}

const SpherePoly& FrameVector::component(int a) const {
  return a <= n_ ? holo_.at(a) : anti_.at(a - n_ - 1);
}

bool FrameVector::is_zero() const {
  for (int a = 0; a <= n_; ++a)
    if (!holo_[a].is_zero() || !anti_[a].is_zero()) return false;
  return true;
}

bool FrameVector::is_tangent() const {
  Poly s(n_);
  for (int a = 0; a <= n_; ++a)
    s += holo_[a].poly() * Poly::zbar(n_, a) + anti_[a].poly() * Poly::z(n_, a);
  return normal_form(s).is_zero();
}

bool FrameVector::is_holomorphic_type() const {
  for (const auto& w : anti_)
    if (!w.is_zero()) return false;
  return is_tangent();
}

bool FrameVector::is_antiholomorphic_type() const {
  for (const auto& v : holo_)
    if (!v.is_zero()) return false;
  return is_tangent();
}

FrameVector FrameVector::conj() const {
  FrameVector out(n_);
  for (int a = 0; a <= n_; ++a) {
    out.holo_[a] = conjugate(anti_[a]);
    out.anti_[a] = conjugate(holo_[a]);
  }
  return out;
}

FrameVector FrameVector::holo_part() const {
  SpherePoly a = FrameForm::contact(n_)(*this);
  FrameVector t = reeb(n_);
  FrameVector out(n_);
  for (int b = 0; b <= n_; ++b) out.holo_[b] = holo_[b] - a * t.holo_[b];
  return out;
}

FrameVector FrameVector::anti_part() const {
  SpherePoly a = FrameForm::contact(n_)(*this);
  FrameVector t = reeb(n_);
  FrameVector out(n_);
  for (int b = 0; b <= n_; ++b) out.anti_[b] = anti_[b] - a * t.anti_[b];
  return out;
}

std::map<FrameIndex, SpherePoly> FrameVector::frame_components() const {
  std::map<FrameIndex, SpherePoly> out;
  auto put = [&](FrameIndex idx, SpherePoly c) {
    if (!c.is_zero()) out.emplace(idx, std::move(c));
  };
  put({FrameKind::Reeb, {0, 0}}, FrameForm::contact(n_)(*this));
  for (const auto& [j, k] : geller_pairs(n_)) {
    put({FrameKind::Geller, {j, k}}, FrameForm::geller(n_, j, k)(*this));
    put({FrameKind::GellerBar, {j, k}}, FrameForm::geller_bar(n_, j, k)(*this));
  }
  return out;
}

FrameVector& FrameVector::operator+=(const FrameVector& o) {
  if (o.n_ != n_) throw Error("FrameVector: dimension mismatch");
  for (int a = 0; a <= n_; ++a) {
    holo_[a] += o.holo_[a];
    anti_[a] += o.anti_[a];
  }
  return *this;
}

FrameVector& FrameVector::operator-=(const FrameVector& o) {
  if (o.n_ != n_) throw Error("FrameVector: dimension mismatch");
  for (int a = 0; a <= n_; ++a) {
    holo_[a] -= o.holo_[a];
    anti_[a] -= o.anti_[a];
  }
  return *this;
}

FrameVector& FrameVector::operator*=(const ExactScalar& c) {
  for (int a = 0; a <= n_; ++a) {
    holo_[a] *= c;
    anti_[a] *= c;
  }
  return *this;
}

FrameVector& FrameVector::operator*=(const SpherePoly& f) {
  for (int a = 0; a <= n_; ++a) {
    holo_[a] *= f;
    anti_[a] *= f;
  }
  return *this;
}

// ---------------------------------------------------------------------------

FrameForm::FrameForm(int n, int degree) : n_(n), degree_(degree) {
  if (degree != 1 && degree != 2) throw Error("FrameForm: degree must be 1 or 2");
}

FrameForm FrameForm::contact(int n) {
  FrameForm f(n, 1);
  const int N = n + 1;
  for (int a = 0; a < N; ++a) {
    f.add(a, SpherePoly::zbar(n, a) * (-ExactScalar::i()));
    f.add(N + a, SpherePoly::z(n, a) * ExactScalar::i());
  }
  return f;
}

FrameForm FrameForm::geller(int n, int j, int k) {
  check_pair(n, j, k);
  FrameForm f(n, 1);
  f.add(k, SpherePoly::z(n, j));
  f.add(j, -SpherePoly::z(n, k));
  return f;
}

FrameForm FrameForm::geller_bar(int n, int j, int k) { return geller(n, j, k).conj(); }

FrameForm FrameForm::frame(int n, const FrameIndex& idx) {
  switch (idx.kind) {
    case FrameKind::Reeb: return contact(n);
    case FrameKind::Geller: return geller(n, idx.pair.first, idx.pair.second);
    case FrameKind::GellerBar: return geller_bar(n, idx.pair.first, idx.pair.second);
  }
  throw Error("FrameForm: bad frame index");
}

FrameForm FrameForm::one_form(int n, std::vector<SpherePoly> coeffs) {
  if (static_cast<int>(coeffs.size()) != 2 * (n + 1)) throw Error("FrameForm: wrong number of coefficients");
  FrameForm f(n, 1);
  for (int a = 0; a < 2 * (n + 1); ++a) f.add(a, coeffs[a]);
  return f;
}

SpherePoly FrameForm::coefficient(int a) const {
  if (degree_ != 1) throw Error("FrameForm: not a 1-form");
  auto it = c_.find({a, -1});
  return it == c_.end() ? SpherePoly(n_) : it->second;
}

SpherePoly FrameForm::coefficient(int a, int b) const {
  if (degree_ != 2) throw Error("FrameForm: not a 2-form");
  if (a == b) return SpherePoly(n_);
  if (a > b) return -coefficient(b, a);
  auto it = c_.find({a, b});
  return it == c_.end() ? SpherePoly(n_) : it->second;
}

void FrameForm::add(int a, const SpherePoly& c) {
  if (degree_ != 1) throw Error("FrameForm: not a 1-form");
  if (a < 0 || a >= 2 * (n_ + 1)) throw Error("FrameForm: coordinate out of range");
  if (c.is_zero()) return;
  auto& slot = c_.try_emplace({a, -1}, n_).first->second;
  slot += c;
  if (slot.is_zero()) c_.erase({a, -1});
}

void FrameForm::add(int a, int b, const SpherePoly& c) {
  if (degree_ != 2) throw Error("FrameForm: not a 2-form");
  if (a == b || c.is_zero()) return;
  if (a > b) return add(b, a, -c);
  auto& slot = c_.try_emplace({a, b}, n_).first->second;
  slot += c;
  if (slot.is_zero()) c_.erase({a, b});
}

FrameForm FrameForm::exterior_derivative() const {
  if (degree_ != 1) throw Error("FrameForm: exterior derivative implemented on 1-forms");
  const int N = n_ + 1;
  FrameForm out(n_, 2);
  for (const auto& [key, c] : c_)
    for (int b = 0; b < 2 * N; ++b) out.add(b, key.first, derivative(c, b, N));
  return out;
}

FrameForm FrameForm::conj() const {
  const int N = n_ + 1;
  auto swap = [N](int a) { return a < N ? a + N : a - N; };
  FrameForm out(n_, degree_);
  for (const auto& [key, c] : c_) {
    if (degree_ == 1) {
      out.add(swap(key.first), conjugate(c));
    } else {
      out.add(swap(key.first), swap(key.second), conjugate(c));
    }
  }
  return out;
}

SpherePoly FrameForm::operator()(const FrameVector& x) const {
  if (degree_ != 1) throw Error("FrameForm: 1-form expected");
  if (x.dimension() != n_) throw Error("FrameForm: dimension mismatch");
  SpherePoly s(n_);
  for (const auto& [key, c] : c_) s += c * x.component(key.first);
  return s;
}

SpherePoly FrameForm::operator()(const FrameVector& x, const FrameVector& y) const {
  if (degree_ != 2) throw Error("FrameForm: 2-form expected");
  if (x.dimension() != n_ || y.dimension() != n_) throw Error("FrameForm: dimension mismatch");
  SpherePoly s(n_);
  for (const auto& [key, c] : c_) {
    auto [a, b] = key;
    s += c * (x.component(a) * y.component(b) - x.component(b) * y.component(a));
  }
  return s;
}

std::map<FrameIndex, SpherePoly> FrameForm::frame_components() const {
  std::map<FrameIndex, SpherePoly> out;
  auto put = [&](FrameIndex idx) {
    SpherePoly c = (*this)(FrameVector::frame(n_, idx));
    if (!c.is_zero()) out.emplace(idx, std::move(c));
  };
  put({FrameKind::Reeb, {0, 0}});
  for (const auto& p : geller_pairs(n_)) {
    put({FrameKind::Geller, p});
    put({FrameKind::GellerBar, p});
  }
  return out;
}

FrameForm& FrameForm::operator+=(const FrameForm& o) {
  if (o.n_ != n_ || o.degree_ != degree_) throw Error("FrameForm: incompatible operands");
  for (const auto& [key, c] : o.c_) {
    if (degree_ == 1) {
      add(key.first, c);
    } else {
      add(key.first, key.second, c);
    }
  }
  return *this;
}

FrameForm& FrameForm::operator*=(const SpherePoly& f) {
  std::map<std::pair<int, int>, SpherePoly> next;
  for (auto& [key, c] : c_) {
    SpherePoly v = c * f;
    if (!v.is_zero()) next.emplace(key, std::move(v));
  }
  c_ = std::move(next);
  return *this;
}

FrameForm wedge(const FrameForm& a, const FrameForm& b) {
  if (a.degree_ != 1 || b.degree_ != 1 || a.n_ != b.n_) throw Error("wedge: two 1-forms expected");
  FrameForm out(a.n_, 2);
  for (const auto& [ka, ca] : a.c_)
    for (const auto& [kb, cb] : b.c_) out.add(ka.first, kb.first, ca * cb);
  return out;
}

// ---------------------------------------------------------------------------

SpherePoly field_apply(const FrameVector& x, const SpherePoly& f) {
  if (x.dimension() != f.dimension()) throw Error("field_apply: dimension mismatch");
  const int N = x.dimension() + 1;
  Poly s(x.dimension());
  for (int a = 0; a < N; ++a) {
    if (!x.holo(a).is_zero()) s += x.holo(a).poly() * f.poly().d_z(a);
    if (!x.anti(a).is_zero()) s += x.anti(a).poly() * f.poly().d_zbar(a);
  }
  return normal_form(s);
}

FrameVector bracket(const FrameVector& x, const FrameVector& y) {
  if (x.dimension() != y.dimension()) throw Error("bracket: dimension mismatch");
  const int n = x.dimension();
  std::vector<SpherePoly> holo, anti;
  for (int a = 0; a <= n; ++a) {
    holo.push_back(field_apply(x, y.holo(a)) - field_apply(y, x.holo(a)));
    anti.push_back(field_apply(x, y.anti(a)) - field_apply(y, x.anti(a)));
  }
  return FrameVector(n, std::move(holo), std::move(anti));
}

SpherePoly form_eval(const FrameForm& form, const FrameVector& x) { return form(x); }

SpherePoly levi_pairing(const FrameVector& v, const FrameVector& w) {
  if (!v.is_holomorphic_type() || !w.is_holomorphic_type())
    throw Error("levi_pairing: arguments must be tangent (1,0) fields");
  static const ExactScalar kMinusHalfI(Rational(0), Rational(-1, 2));
  return FrameForm::contact(v.dimension()).exterior_derivative()(v, w.conj()) * kMinusHalfI;
}

FrameForm sharp_inverse(const FrameVector& wbar) {
  if (!wbar.is_antiholomorphic_type()) throw Error("sharp_inverse: argument must be a tangent (0,1) field");
  const int n = wbar.dimension();
  FrameForm f(n, 1);
  for (int a = 0; a <= n; ++a) f.add(a, wbar.anti(a));
  return f;
}

FrameVector covariant_T(const FrameVector& x) { return bracket(FrameVector::reeb(x.dimension()), x); }

FrameVector covariant_Z(const FrameVector& x, const FrameVector& target) {
  if (!x.is_holomorphic_type()) throw Error("covariant_Z: direction must be a (1,0) field");
  if (!target.is_tangent()) throw Error("covariant_Z: target must be tangent");
  const int n = x.dimension();
  const SpherePoly a = FrameForm::contact(n)(target);
  FrameVector out = field_apply(x, a) * FrameVector::reeb(n);
  // conj(H) part: the (0,1) component of the bracket
  const FrameVector ybar = target.anti_part();
  if (!ybar.is_zero()) out += bracket(x, ybar).anti_part();
  // H part: determined by compatibility with the Levi form
  const FrameVector y = target.holo_part();
  if (!y.is_zero()) {
    for (const auto& [j, k] : geller_pairs(n)) {
      FrameVector zjk = FrameVector::geller(n, j, k);
      FrameVector d_bar = bracket(x, zjk.conj()).anti_part();
      SpherePoly c = field_apply(x, levi_pairing(y, zjk)) - levi_pairing(y, d_bar.conj());
      out += c * zjk;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

SpherePoly TensorField::coefficient(const GellerPair& bar, const GellerPair& form) const {
  auto it = c_.find({bar, form});
  return it == c_.end() ? SpherePoly(n_) : it->second;
}

void TensorField::set(const GellerPair& bar, const GellerPair& form, SpherePoly c) {
  if (c.dimension() != n_) throw Error("TensorField: dimension mismatch");
  check_pair(n_, bar.first, bar.second);
  check_pair(n_, form.first, form.second);
  if (c.is_zero()) {
    c_.erase({bar, form});
  } else {
    c_[{bar, form}] = std::move(c);
  }
}

FrameVector TensorField::apply(const FrameVector& x) const {
  FrameVector out(n_);
  for (const auto& [key, c] : c_) {
    SpherePoly s = c * FrameForm::geller(n_, key.second.first, key.second.second)(x);
    if (!s.is_zero()) out += s * FrameVector::geller_bar(n_, key.first.first, key.first.second);
  }
  return out;
}

SpherePoly TensorField::pointwise_norm2() const {
  SpherePoly s(n_);
  for (const auto& [key, c] : c_) s += c * conjugate(c);
  return s;
}

TensorField TensorField::conj_coefficients() const {
  TensorField out(n_);
  for (const auto& [key, c] : c_) out.c_.emplace(key, conjugate(c));
  return out;
}

TensorField tight_expand(int n, const std::function<FrameVector(const FrameVector&)>& map) {
  TensorField out(n);
  const auto pairs = geller_pairs(n);
  for (const auto& lm : pairs) {
    FrameVector image = map(FrameVector::geller(n, lm.first, lm.second));
    for (const auto& jk : pairs) out.set(jk, lm, FrameForm::geller_bar(n, jk.first, jk.second)(image));
  }
  return out;
}

TensorField tight_expand(const TensorField& raw) {
  return tight_expand(raw.dimension(), [&](const FrameVector& x) { return raw.apply(x); });
}

std::map<GellerPair, SpherePoly> tight_expand(const FrameVector& v) {
  if (!v.is_tangent()) throw Error("tight_expand: non-tangent vector");
  std::map<GellerPair, SpherePoly> out;
  for (const auto& p : geller_pairs(v.dimension())) {
    SpherePoly c = FrameForm::geller(v.dimension(), p.first, p.second)(v);
    if (!c.is_zero()) out.emplace(p, std::move(c));
  }
  return out;
}

ExactScalar geller_reeb_weight(int n) {
  FrameVector z = FrameVector::geller(n, 0, 1);
  FrameVector d = covariant_T(z);
  // Z_01 has holomorphic component zbar_0 in slot 1
  ExactScalar w = d.holo(1).terms().empty() ? ExactScalar() : d.holo(1).terms().begin()->second;
  if (!(d == z * w)) throw Error("geller_reeb_weight: Z_jk is not an eigenvector of covariant_T");
  return w;
}

TensorField covariant_T(const TensorField& s) {
  const int n = s.dimension();
  // conj(Z) carries conj(w); theta dual to Z carries -w.
  const ExactScalar w = geller_reeb_weight(n);
  const ExactScalar shift = w.conj() - w;
  const FrameVector t = FrameVector::reeb(n);
  TensorField out(n);
  for (const auto& [key, c] : s.coefficients()) out.set(key.first, key.second, field_apply(t, c) + c * shift);
  return out;
}

// ---------------------------------------------------------------------------

AmbientTensor::AmbientTensor(int n) : n_(n), m_((n + 1) * (n + 1), SpherePoly(n)) {}

bool AmbientTensor::is_symmetric() const {
  for (int a = 0; a <= n_; ++a)
    for (int b = a + 1; b <= n_; ++b)
      if (at(a, b) != at(b, a)) return false;
  return true;
}

FrameVector AmbientTensor::apply(const FrameVector& v) const {
  std::vector<SpherePoly> holo(n_ + 1, SpherePoly(n_)), anti(n_ + 1, SpherePoly(n_));
  for (int a = 0; a <= n_; ++a)
    for (int b = 0; b <= n_; ++b) anti[a] += at(a, b) * v.holo(b);
  // project out the normal direction: w - (sum_b z_b w_b) zbar
  SpherePoly normal(n_);
  for (int b = 0; b <= n_; ++b) normal += SpherePoly::z(n_, b) * anti[b];
  for (int a = 0; a <= n_; ++a) anti[a] -= normal * SpherePoly::zbar(n_, a);
  return FrameVector(n_, std::move(holo), std::move(anti));
}

TensorField tight_expand(const AmbientTensor& m) {
  return tight_expand(m.dimension(), [&](const FrameVector& x) { return m.apply(x); });
}

}  // namespace crvar
