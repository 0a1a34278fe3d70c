#include "crvar/scalar.hpp"

#include <cctype>
#include <ostream>

#include "crvar/error.hpp"

namespace crvar {

ExactScalar& ExactScalar::operator+=(const ExactScalar& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

ExactScalar& ExactScalar::operator-=(const ExactScalar& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

ExactScalar& ExactScalar::operator*=(const ExactScalar& o) {
  if (o.is_real()) {
    re_ *= o.re_;
    im_ *= o.re_;
    return *this;
  }
  Rational re = re_ * o.re_ - im_ * o.im_;
  Rational im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

ExactScalar& ExactScalar::operator/=(const ExactScalar& o) {
  if (o.is_zero()) throw Error("ExactScalar: division by zero");
  Rational d = o.norm();
  *this *= o.conj();
  re_ /= d;
  im_ /= d;
  return *this;
}

std::string rational_to_string(const Rational& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rational parse_rational(std::string_view text) {
  auto valid_int = [](std::string_view s, bool allow_sign) {
    std::size_t k = 0;
    if (allow_sign && !s.empty() && (s[0] == '-' || s[0] == '+')) k = 1;
    if (k == s.size()) return false;
    for (; k < s.size(); ++k)
      if (!std::isdigit(static_cast<unsigned char>(s[k]))) return false;
    return true;
  };
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1")
                                                         : text.substr(slash + 1);
  if (!valid_int(num, true) || !valid_int(den, false))
    throw Error("malformed rational '" + std::string(text) + "'");
  std::string n(num);
  if (!n.empty() && n[0] == '+') n.erase(0, 1);
  mpz_class zn(n, 10);
  mpz_class zd(std::string(den), 10);
  if (zd == 0) throw Error("zero denominator in '" + std::string(text) + "'");
  Rational r(zn, zd);
  r.canonicalize();
  return r;
}

std::string ExactScalar::to_string() const {
  std::string out = rational_to_string(re_);
  if (sgn(im_) < 0) {
    out += "-" + rational_to_string(-im_);
  } else {
    out += "+" + rational_to_string(im_);
  }
  return out + "*i";
}

ExactScalar ExactScalar::parse(std::string_view text) {
  if (text.size() < 2 || text.substr(text.size() - 2) != "*i")
    throw Error("malformed scalar '" + std::string(text) + "': expected p/q+r/s*i");
  std::string_view body = text.substr(0, text.size() - 2);
  // The separator is the last '+' or '-' that is not a leading sign.
  std::size_t split = std::string_view::npos;
  for (std::size_t k = body.size(); k-- > 1;) {
    if (body[k] == '+' || body[k] == '-') {
      split = k;
      break;
    }
  }
  if (split == std::string_view::npos)
    throw Error("malformed scalar '" + std::string(text) + "'");
  Rational re = parse_rational(body.substr(0, split));
  Rational im = parse_rational(body.substr(split + 1));
  if (body[split] == '-') im = -im;
  return {re, im};
}

std::ostream& operator<<(std::ostream& os, const ExactScalar& s) { return os << s.to_string(); }

}  // namespace crvar
