#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace sasaki {

/// Gaussian rational a + b·i with arbitrary-precision rational parts, kept in
/// canonical form. Purely rational values have b = 0.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long v) : re_(v) {}  // NOLINT(google-explicit-constructor)
  Scalar(mpq_class re, mpq_class im = 0);

  /// Accepts `p`, `p/q`, `a+bi`, `a-bi`, `bi`, `i`, `-i`, with a, b of the
  /// form `p` or `p/q`. Throws Error(ParseError).
  static Scalar parse(std::string_view text);

  const mpq_class& re() const noexcept { return re_; }
  const mpq_class& im() const noexcept { return im_; }
  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }
  Scalar conj() const { return Scalar(re_, -im_); }
  /// |z|^2, always rational.
  mpq_class norm() const { return re_ * re_ + im_ * im_; }

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  /// Throws Error(Malformed) on division by zero.
  Scalar& operator/=(const Scalar& o);
  Scalar operator-() const { return Scalar(-re_, -im_); }

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b) { return a.re_ == b.re_ && a.im_ == b.im_; }

  /// Round-trips through parse().
  std::string to_string() const;

 private:
  mpq_class re_;
  mpq_class im_;
};

}  // namespace sasaki
