#include "crvar/poly.hpp"

#include <algorithm>
#include <cctype>
#include <mutex>
#include <numeric>

#include "crvar/error.hpp"

namespace crvar {

int Monomial::holo_degree() const {
  int s = 0;
  for (int j = 0; j < kMaxVars; ++j) s += e[j];
  return s;
}

int Monomial::anti_degree() const {
  int s = 0;
  for (int j = 0; j < kMaxVars; ++j) s += e[kMaxVars + j];
  return s;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r;
  for (int k = 0; k < 2 * kMaxVars; ++k) {
    int v = e[k] + o.e[k];
    if (v > 255) throw Error("Monomial: exponent overflow");
    r.e[k] = static_cast<std::uint8_t>(v);
  }
  return r;
}

Monomial Monomial::conj() const {
  Monomial r;
  for (int j = 0; j < kMaxVars; ++j) {
    r.e[j] = e[kMaxVars + j];
    r.e[kMaxVars + j] = e[j];
  }
  return r;
}

bool MonomialOrder::operator()(const Monomial& a, const Monomial& b) const {
  int da = a.degree(), db = b.degree();
  if (da != db) return da < db;
  return a.e < b.e;
}

// ---------------------------------------------------------------------------

void Poly::check_dimension(int n) {
  if (n < 1 || n + 1 > kMaxVars)
    throw Error("dimension n must satisfy 1 <= n <= " + std::to_string(kMaxVars - 1));
}

void Poly::require_same_dimension(const Poly& o) const {
  if (n_ != o.n_)
    throw Error("dimension mismatch: n=" + std::to_string(n_) + " vs n=" + std::to_string(o.n_));
}

Poly::Poly(int n, const ExactScalar& c) : Poly(n) { add_term(Monomial{}, c); }

Poly Poly::z(int n, int j) {
  Poly p(n);
  if (j < 0 || j > n) throw Error("coordinate index out of range");
  Monomial m;
  m.z(j) = 1;
  p.add_term(m, 1);
  return p;
}

Poly Poly::zbar(int n, int j) {
  Poly p(n);
  if (j < 0 || j > n) throw Error("coordinate index out of range");
  Monomial m;
  m.zbar(j) = 1;
  p.add_term(m, 1);
  return p;
}

Poly Poly::monomial(int n, const Monomial& m, ExactScalar c) {
  Poly p(n);
  for (int j = n + 1; j < kMaxVars; ++j)
    if (m.z(j) || m.zbar(j)) throw Error("monomial uses a coordinate beyond the dimension");
  p.add_term(m, c);
  return p;
}

Poly Poly::radius_squared(int n) {
  Poly p(n);
  for (int j = 0; j <= n; ++j) {
    Monomial m;
    m.z(j) = 1;
    m.zbar(j) = 1;
    p.add_term(m, 1);
  }
  return p;
}

int Poly::degree() const {
  return terms_.empty() ? -1 : terms_.rbegin()->first.degree();
}

void Poly::add_term(const Monomial& m, const ExactScalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

Poly& Poly::operator+=(const Poly& o) {
  if (&o == this) return *this *= ExactScalar(2);
  require_same_dimension(o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (&o == this) return *this *= ExactScalar(0);
  require_same_dimension(o);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Poly& Poly::operator*=(const ExactScalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  a.require_same_dimension(b);
  Poly r(a.n_);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
  return r;
}

Poly Poly::d_z(int j) const {
  Poly r(n_);
  for (const auto& [m, c] : terms_) {
    if (m.z(j) == 0) continue;
    Monomial d = m;
    --d.z(j);
    r.add_term(d, c * ExactScalar(m.z(j)));
  }
  return r;
}

Poly Poly::d_zbar(int j) const {
  Poly r(n_);
  for (const auto& [m, c] : terms_) {
    if (m.zbar(j) == 0) continue;
    Monomial d = m;
    --d.zbar(j);
    r.add_term(d, c * ExactScalar(m.zbar(j)));
  }
  return r;
}

Poly Poly::conj() const {
  Poly r(n_);
  for (const auto& [m, c] : terms_) r.add_term(m.conj(), c.conj());
  return r;
}

std::complex<double> Poly::evaluate(std::span<const std::complex<double>> z) const {
  if (static_cast<int>(z.size()) != num_vars()) throw Error("evaluate: wrong number of coordinates");
  std::complex<double> sum = 0;
  for (const auto& [m, c] : terms_) {
    std::complex<double> v = c.to_complex();
    for (int j = 0; j <= n_; ++j) {
      for (int k = 0; k < m.z(j); ++k) v *= z[j];
      for (int k = 0; k < m.zbar(j); ++k) v *= std::conj(z[j]);
    }
    sum += v;
  }
  return sum;
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "(0/1,0/1)";
  std::string out;
  for (const auto& [m, c] : terms_) {
    if (!out.empty()) out += " + ";
    out += "(" + rational_to_string(c.re()) + "," + rational_to_string(c.im()) + ")";
    for (int j = 0; j <= n_; ++j) {
      if (m.z(j)) {
        out += " z" + std::to_string(j + 1);
        if (m.z(j) > 1) out += "^" + std::to_string(m.z(j));
      }
    }
    for (int j = 0; j <= n_; ++j) {
      if (m.zbar(j)) {
        out += " w" + std::to_string(j + 1);
        if (m.zbar(j) > 1) out += "^" + std::to_string(m.zbar(j));
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

namespace {

// (1 - sum_{j>=2} z_j zbar_j)^k, cached per (n, k).
const Poly& sphere_power(int n, int k) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, Poly> cache;
  std::lock_guard lock(mu);
  auto key = std::make_pair(n, k);
  if (auto it = cache.find(key); it != cache.end()) return it->second;
  Poly base(n, 1);
  for (int j = 1; j <= n; ++j) {
    Monomial m;
    m.z(j) = 1;
    m.zbar(j) = 1;
    base.add_term(m, -1);
  }
  Poly acc(n, 1);
  for (int i = 0; i < k; ++i) acc = acc * base;
  return cache.emplace(key, std::move(acc)).first->second;
}

Rational factorial(int k) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(k));
  return Rational(f);
}

Rational monomial_integral(int n, const Monomial& m) {
  for (int j = 0; j < kMaxVars; ++j)
    if (m.z(j) != m.zbar(j)) return 0;
  Rational num = factorial(n);
  int total = 0;
  for (int j = 0; j <= n; ++j) {
    num *= factorial(m.z(j));
    total += m.z(j);
  }
  Rational r = num / factorial(n + total);
  r.canonicalize();
  return r;
}

}  // namespace

SpherePoly normal_form(const Poly& p) {
  Poly out(p.dimension());
  for (const auto& [m, c] : p.terms()) {
    int k = std::min(m.z(0), m.zbar(0));
    if (k == 0) {
      out.add_term(m, c);
      continue;
    }
    Monomial rest = m;
    rest.z(0) -= k;
    rest.zbar(0) -= k;
    for (const auto& [ms, cs] : sphere_power(p.dimension(), k).terms())
      out.add_term(rest * ms, c * cs);
  }
  return SpherePoly(std::move(out), SpherePoly::Reduced{});
}

bool SpherePoly::is_constant() const {
  return p_.terms().empty() || (p_.terms().size() == 1 && p_.terms().begin()->first == Monomial{});
}

ExactScalar SpherePoly::constant_term() const {
  auto it = p_.terms().find(Monomial{});
  return it == p_.terms().end() ? ExactScalar() : it->second;
}

bool SpherePoly::is_real() const { return conjugate(*this) == *this; }

SpherePoly& SpherePoly::operator+=(const SpherePoly& o) {
  p_ += o.p_;
  return *this;
}

SpherePoly& SpherePoly::operator-=(const SpherePoly& o) {
  p_ -= o.p_;
  return *this;
}

SpherePoly& SpherePoly::operator*=(const ExactScalar& c) {
  p_ *= c;
  return *this;
}

SpherePoly& SpherePoly::operator*=(const SpherePoly& o) {
  *this = normal_form(p_ * o.p_);
  return *this;
}

ExactScalar integrate_sphere(const Poly& p) {
  Rational re = 0, im = 0;
  for (const auto& [m, c] : p.terms()) {
    Rational w = monomial_integral(p.dimension(), m);
    if (sgn(w) == 0) continue;
    re += w * c.re();
    im += w * c.im();
  }
  return {re, im};
}

ExactScalar integrate_sphere(const SpherePoly& p) { return integrate_sphere(p.poly()); }

SpherePoly conjugate(const SpherePoly& p) { return normal_form(p.poly().conj()); }

SpherePoly fourier_project(const SpherePoly& p, int m) {
  Poly out(p.dimension());
  for (const auto& [mono, c] : p.terms())
    if (mono.weight() == m) out.add_term(mono, c);
  return normal_form(out);
}

std::map<int, SpherePoly> fourier_components(const SpherePoly& p) {
  std::map<int, Poly> parts;
  for (const auto& [mono, c] : p.terms())
    parts.try_emplace(mono.weight(), p.dimension()).first->second.add_term(mono, c);
  std::map<int, SpherePoly> out;
  for (auto& [m, q] : parts) out.emplace(m, normal_form(q));
  return out;
}

ExactScalar l2_inner(const SpherePoly& p, const SpherePoly& q) {
  return integrate_sphere(p.poly() * q.poly().conj());
}

Rational l2_norm_squared(const SpherePoly& p) { return l2_inner(p, p).re(); }

std::vector<Monomial> enumerate_monomials(int n, int max_degree) {
  const int slots = 2 * (n + 1);
  std::vector<Monomial> out;
  std::vector<int> e(slots, 0);
  auto rec = [&](auto&& self, int slot, int budget) -> void {
    if (slot == slots) {
      Monomial m;
      for (int j = 0; j <= n; ++j) {
        m.z(j) = static_cast<std::uint8_t>(e[j]);
        m.zbar(j) = static_cast<std::uint8_t>(e[n + 1 + j]);
      }
      out.push_back(m);
      return;
    }
    for (int v = 0; v <= budget; ++v) {
      e[slot] = v;
      self(self, slot + 1, budget - v);
    }
    e[slot] = 0;
  };
  rec(rec, 0, max_degree);
  std::sort(out.begin(), out.end(), MonomialOrder{});
  return out;
}

// ---------------------------------------------------------------------------

namespace {

class PolyParser {
 public:
  PolyParser(int n, std::string_view s, int line, int col0)
      : n_(n), s_(s), line_(line), col0_(col0) {}

  Poly parse() {
    Poly out(n_);
    skip_ws();
    while (pos_ < s_.size()) {
      if (s_[pos_] == '+') {
        ++pos_;
        skip_ws();
        if (pos_ >= s_.size()) fail("dangling '+'");
      }
      ExactScalar coeff = 1;
      bool any = false;
      if (peek() == '(') {
        coeff = parse_coefficient();
        any = true;
      }
      Monomial m;
      skip_ws();
      while (peek() == 'z' || peek() == 'w') {
        parse_factor(m);
        any = true;
        skip_ws();
      }
      if (!any) fail(std::string("unexpected character '") + s_[pos_] + "'");
      out.add_term(m, coeff);
    }
    return out;
  }

 private:
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what, line_, col0_ + static_cast<int>(pos_) + 1);
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  Rational parse_rational_token(char stop) {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < s_.size() && s_[pos_] != stop && !std::isspace(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
    std::string_view tok = s_.substr(start, pos_ - start);
    try {
      return parse_rational(tok);
    } catch (const Error&) {
      pos_ = start;
      fail("malformed rational '" + std::string(tok) + "'");
    }
  }

  ExactScalar parse_coefficient() {
    ++pos_;  // '('
    Rational re = parse_rational_token(',');
    skip_ws();
    if (peek() != ',') fail("expected ','");
    ++pos_;
    Rational im = parse_rational_token(')');
    skip_ws();
    if (peek() != ')') fail("expected ')'");
    ++pos_;
    return {re, im};
  }

  int parse_uint() {
    std::size_t start = pos_;
    long v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      v = v * 10 + (s_[pos_] - '0');
      if (v > 255) fail("number too large");
      ++pos_;
    }
    if (pos_ == start) fail("expected a number");
    return static_cast<int>(v);
  }

  void parse_factor(Monomial& m) {
    std::size_t start = pos_;
    bool bar = s_[pos_] == 'w';
    ++pos_;
    int idx = parse_uint();
    if (idx < 1 || idx > n_ + 1) {
      pos_ = start;
      fail("variable index out of range for n=" + std::to_string(n_));
    }
    int e = 1;
    if (peek() == '^') {
      ++pos_;
      e = parse_uint();
    }
    auto& slot = bar ? m.zbar(idx - 1) : m.z(idx - 1);
    if (slot + e > 255) fail("exponent too large");
    slot = static_cast<std::uint8_t>(slot + e);
  }

  int n_;
  std::string_view s_;
  int line_;
  int col0_;
  std::size_t pos_ = 0;
};

}  // namespace

Poly parse_poly(int n, std::string_view text, int line, int column_offset) {
  Poly probe(n);  // validates n
  (void)probe;
  return PolyParser(n, text, line, column_offset).parse();
}

}  // namespace crvar
