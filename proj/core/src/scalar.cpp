#include "sasaki/scalar.hpp"

#include <cctype>

#include "sasaki/error.hpp"

namespace sasaki {

namespace {

[[noreturn]] void bad(std::string_view text, const char* why) {
  throw Error(ErrorCode::ParseError, "bad scalar '" + std::string(text) + "': " + why);
}

// `p` or `p/q` with an optional sign; anything else is rejected here rather
// than by GMP so the message names the offending token.
mpq_class parse_rational(std::string_view whole, std::string_view s) {
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
  const std::size_t digits_start = i;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
  if (i == digits_start) bad(whole, "expected digits");
  if (i < s.size()) {
    if (s[i] != '/') bad(whole, "unexpected character");
    const std::size_t den_start = ++i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == den_start || i != s.size()) bad(whole, "malformed denominator");
  }
  std::string body(s[0] == '+' ? s.substr(1) : s);
  mpq_class q;
  if (q.set_str(body, 10) != 0) bad(whole, "not a rational");
  if (sgn(q.get_den()) == 0) bad(whole, "zero denominator");
  q.canonicalize();
  return q;
}

}  // namespace

Scalar::Scalar(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
  re_.canonicalize();
  im_.canonicalize();
}

Scalar Scalar::parse(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  if (s.empty()) bad(text, "empty");
  if (s.back() != 'i') return Scalar(parse_rational(text, s));

  s.remove_suffix(1);
  // The imaginary coefficient starts at the last sign that is not leading.
  std::size_t split = 0;
  for (std::size_t k = s.size(); k-- > 1;) {
    if (s[k] == '+' || s[k] == '-') {
      split = k;
      break;
    }
  }
  const std::string_view re_part = s.substr(0, split);
  std::string_view im_part = s.substr(split);
  mpq_class im;
  if (im_part.empty() || im_part == "+") {
    im = 1;
  } else if (im_part == "-") {
    im = -1;
  } else {
    im = parse_rational(text, im_part);
  }
  mpq_class re = re_part.empty() ? mpq_class(0) : parse_rational(text, re_part);
  return Scalar(std::move(re), std::move(im));
}

Scalar& Scalar::operator+=(const Scalar& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  if (is_real() && o.is_real()) {
    re_ *= o.re_;
    return *this;
  }
  mpq_class re = re_ * o.re_ - im_ * o.im_;
  mpq_class im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.is_zero()) throw Error(ErrorCode::Malformed, "division by zero");
  if (o.is_real()) {
    re_ /= o.re_;
    im_ /= o.re_;
    return *this;
  }
  const mpq_class n = o.norm();
  *this *= o.conj();
  re_ /= n;
  im_ /= n;
  return *this;
}

std::string Scalar::to_string() const {
  if (is_real()) return re_.get_str();
  std::string im_str;
  if (im_ == 1) {
    im_str = "";
  } else if (im_ == -1) {
    im_str = "-";
  } else {
    im_str = im_.get_str();
  }
  if (sgn(re_) == 0) return im_str + "i";
  if (sgn(im_) > 0) return re_.get_str() + "+" + im_str + "i";
  return re_.get_str() + im_str + "i";
}

}  // namespace sasaki
