#include "lambent/quad_ext.hpp"

#include <cmath>
#include <ostream>

#include "lambent/errors.hpp"

namespace lambent {

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw ParseError("empty rational");
  Rational r;
  if (mpq_set_str(r.get_mpq_t(), text.c_str(), 10) != 0) {
    throw ParseError("malformed rational: '" + text + "'");
  }
  if (sgn(r.get_den()) == 0) throw ParseError("zero denominator: '" + text + "'");
  r.canonicalize();
  return r;
}

std::string rational_to_string(const Rational& r) {
  Rational c = r;
  c.canonicalize();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

int join_discriminant(int lhs, int rhs) {
  if (lhs == QuadExt::kRational) return rhs;
  if (rhs == QuadExt::kRational || lhs == rhs) return lhs;
  throw DiscriminantMismatch(lhs, rhs);
}

QuadExt::QuadExt(Rational a, Rational b, int d) : a_(std::move(a)), b_(std::move(b)), d_(d) {
  if (d != kRational && d != 3 && d != 5) {
    throw std::invalid_argument("unsupported discriminant " + std::to_string(d));
  }
  a_.canonicalize();
  b_.canonicalize();
  if (d == kRational && sgn(b_) != 0) {
    throw std::invalid_argument("rational tag with nonzero surd part");
  }
}

QuadExt& QuadExt::operator+=(const QuadExt& rhs) {
  d_ = join_discriminant(d_, rhs.d_);
  a_ += rhs.a_;
  b_ += rhs.b_;
  return *this;
}

QuadExt& QuadExt::operator-=(const QuadExt& rhs) {
  d_ = join_discriminant(d_, rhs.d_);
  a_ -= rhs.a_;
  b_ -= rhs.b_;
  return *this;
}

QuadExt& QuadExt::operator*=(const QuadExt& rhs) {
  d_ = join_discriminant(d_, rhs.d_);
  Rational a = a_ * rhs.a_ + b_ * rhs.b_ * d_;
  Rational b = a_ * rhs.b_ + b_ * rhs.a_;
  a_ = std::move(a);
  b_ = std::move(b);
  return *this;
}

QuadExt& QuadExt::operator/=(const QuadExt& rhs) {
  d_ = join_discriminant(d_, rhs.d_);
  return *this *= rhs.inverse();
}

Rational QuadExt::norm() const { return Rational(a_ * a_ - b_ * b_ * d_); }

QuadExt QuadExt::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero in Q(sqrt d)");
  Rational n = norm();
  return {Rational(a_ / n), Rational(-b_ / n), d_};
}

double QuadExt::to_double() const {
  return a_.get_d() + b_.get_d() * std::sqrt(static_cast<double>(d_));
}

std::string QuadExt::to_string() const {
  if (is_rational()) return a_.get_str();
  std::string out;
  if (sgn(a_) != 0) out = a_.get_str() + (sgn(b_) > 0 ? "+" : "");
  return out + b_.get_str() + "*sqrt(" + std::to_string(d_) + ")";
}

bool operator==(const QuadExt& lhs, const QuadExt& rhs) {
  if (lhs.a_ != rhs.a_ || lhs.b_ != rhs.b_) return false;
  return sgn(lhs.b_) == 0 || lhs.d_ == rhs.d_;
}

std::strong_ordering operator<=>(const QuadExt& lhs, const QuadExt& rhs) {
  if (int c = cmp(lhs.a_, rhs.a_); c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  if (int c = cmp(lhs.b_, rhs.b_); c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  if (sgn(lhs.b_) == 0) return std::strong_ordering::equal;
  return lhs.d_ <=> rhs.d_;
}

int quad_sign(const QuadExt& x) {
  const int sa = sgn(x.rational_part());
  const int sb = sgn(x.surd_part());
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  // Opposite signs: the larger magnitude of |a| and |b| sqrt(d) wins.
  const Rational a2 = x.rational_part() * x.rational_part();
  const Rational db2 = x.surd_part() * x.surd_part() * x.discriminant();
  const int c = cmp(a2, db2);
  if (c > 0) return sa;
  if (c < 0) return sb;
  return 0;
}

std::ostream& operator<<(std::ostream& os, const QuadExt& x) { return os << x.to_string(); }

}  // namespace lambent
