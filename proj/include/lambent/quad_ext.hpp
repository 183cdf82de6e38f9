#pragma once

#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <string>

namespace lambent {

using Rational = mpq_class;

/// Parses "p/q" or "p" into a canonical rational. Throws ParseError.
Rational parse_rational(const std::string& text);

/// Always emits "p/q", including q = 1.
std::string rational_to_string(const Rational& r);

/// Element a + b*sqrt(d) of Q(sqrt d).
///
/// The discriminant is 3 or 5. A value built from rationals alone carries
/// d = 1 and embeds into either field; it takes on the discriminant of the
/// first irrational operand it meets. Combining d = 3 with d = 5 throws
/// DiscriminantMismatch.
class QuadExt {
 public:
  static constexpr int kRational = 1;

  QuadExt() : a_(0), b_(0), d_(kRational) {}
  QuadExt(long n) : a_(n), b_(0), d_(kRational) {}  // NOLINT(implicit)
  QuadExt(Rational a) : a_(std::move(a)), b_(0), d_(kRational) {  // NOLINT(implicit)
    a_.canonicalize();
  }
  QuadExt(Rational a, Rational b, int d);

  static QuadExt sqrt3() { return {0, 1, 3}; }
  static QuadExt sqrt5() { return {0, 1, 5}; }
  /// Golden ratio (1 + sqrt 5) / 2.
  static QuadExt phi() { return {Rational(1, 2), Rational(1, 2), 5}; }

  const Rational& rational_part() const { return a_; }
  const Rational& surd_part() const { return b_; }
  int discriminant() const { return d_; }
  bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }
  bool is_rational() const { return sgn(b_) == 0; }

  QuadExt operator-() const { return {-a_, -b_, d_}; }
  QuadExt& operator+=(const QuadExt& rhs);
  QuadExt& operator-=(const QuadExt& rhs);
  QuadExt& operator*=(const QuadExt& rhs);
  QuadExt& operator/=(const QuadExt& rhs);

  QuadExt inverse() const;
  /// a - b*sqrt(d).
  QuadExt conjugate() const { return {a_, -b_, d_}; }
  /// Field norm a^2 - d b^2.
  Rational norm() const;
  double to_double() const;
  std::string to_string() const;

  friend QuadExt operator+(QuadExt lhs, const QuadExt& rhs) { return lhs += rhs; }
  friend QuadExt operator-(QuadExt lhs, const QuadExt& rhs) { return lhs -= rhs; }
  friend QuadExt operator*(QuadExt lhs, const QuadExt& rhs) { return lhs *= rhs; }
  friend QuadExt operator/(QuadExt lhs, const QuadExt& rhs) { return lhs /= rhs; }

  /// Value equality; the discriminant tag only matters when b != 0.
  friend bool operator==(const QuadExt& lhs, const QuadExt& rhs);
  /// Structural order on (a, b), used for canonical term ordering.
  /// Not the order of the real numbers; see quad_sign for that.
  friend std::strong_ordering operator<=>(const QuadExt& lhs, const QuadExt& rhs);

 private:
  Rational a_;
  Rational b_;
  int d_;
};

/// Resolves the common discriminant of two tags, throwing on 3 vs 5.
int join_discriminant(int lhs, int rhs);

/// Exact sign of a + b*sqrt(d) in {-1, 0, +1}.
int quad_sign(const QuadExt& x);

/// The automorphism sqrt(d) -> -sqrt(d).
inline QuadExt galois_conj(const QuadExt& x) { return x.conjugate(); }

std::ostream& operator<<(std::ostream& os, const QuadExt& x);

}  // namespace lambent
