#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "lambent/exact_matrix.hpp"
#include "lambent/quad_ext.hpp"

namespace lambent {

enum class TrigKind : std::uint8_t { kNone = 0, kSin = 1, kCos = 2 };

using Monomial = std::vector<int>;

int total_degree(const Monomial& m);

/// Coefficient vector of a linear form l(x) = sum_i c_i x_i.
///
/// Canonical orientation: the first nonzero coefficient is positive.
class LinearForm {
 public:
  LinearForm() = default;
  explicit LinearForm(ExactVector coeffs) : coeffs_(std::move(coeffs)) {}
  LinearForm(std::initializer_list<QuadExt> coeffs) : coeffs_(coeffs) {}

  static LinearForm axis(std::size_t dim, std::size_t i);

  std::size_t dim() const { return coeffs_.size(); }
  const ExactVector& coeffs() const { return coeffs_; }
  const QuadExt& operator[](std::size_t i) const { return coeffs_[i]; }
  bool is_zero() const { return coeffs_.is_zero(); }

  /// Sign of the first nonzero coefficient (0 for the zero form).
  int orientation() const;
  LinearForm operator-() const;
  friend LinearForm operator+(const LinearForm& lhs, const LinearForm& rhs);
  friend LinearForm operator-(const LinearForm& lhs, const LinearForm& rhs);
  friend LinearForm operator*(const QuadExt& s, const LinearForm& f);

  double eval(std::span<const double> point) const;

  friend bool operator==(const LinearForm&, const LinearForm&) = default;
  friend auto operator<=>(const LinearForm&, const LinearForm&) = default;

 private:
  ExactVector coeffs_;
};

struct TermKey {
  Monomial mono;
  TrigKind kind = TrigKind::kNone;
  LinearForm form;  // all zeros when kind == kNone

  friend bool operator==(const TermKey&, const TermKey&) = default;
};

/// Canonical term order: total degree, then trig kind (none, sin, cos),
/// then exponent vector and form, both descending.
struct TermKeyLess {
  bool operator()(const TermKey& lhs, const TermKey& rhs) const;
};

struct TrigFactor {
  TrigKind kind;
  LinearForm form;
};

/// A term that may carry any number of trig factors, before normalization.
struct RawTerm {
  QuadExt coeff;
  Monomial mono;
  std::vector<TrigFactor> trig;
};

/// Finite sum of coeff * monomial * (1 | sin l | cos l) in canonical form.
///
/// After product-to-sum expansion, monomial * {1, sin l, cos l} with distinct
/// canonically oriented l are linearly independent over the polynomials, so
/// two SymFuns are equal as functions iff their term maps coincide.
class SymFun {
 public:
  using TermMap = std::map<TermKey, QuadExt, TermKeyLess>;

  explicit SymFun(std::size_t dim = 3) : dim_(dim) {}

  static SymFun constant(std::size_t dim, const QuadExt& c);
  static SymFun coordinate(std::size_t dim, std::size_t axis);
  static SymFun linear(const LinearForm& form);
  static SymFun sin(const LinearForm& form);
  static SymFun cos(const LinearForm& form);
  static SymFun monomial(const QuadExt& c, Monomial mono);

  std::size_t dim() const { return dim_; }
  /// Discriminant shared by every coefficient and form (1 if all rational).
  int discriminant() const { return d_; }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_polynomial() const;

  /// Adds one single-trig term, canonicalizing orientation and merging.
  void add_term(const QuadExt& coeff, Monomial mono, TrigKind kind, LinearForm form);
  /// Expands a multi-trig term via product-to-sum rewrites and adds it.
  void add_raw(const RawTerm& raw);

  SymFun operator-() const;
  SymFun& operator+=(const SymFun& rhs);
  SymFun& operator-=(const SymFun& rhs);
  SymFun& operator*=(const QuadExt& s);
  friend SymFun operator+(SymFun lhs, const SymFun& rhs) { return lhs += rhs; }
  friend SymFun operator-(SymFun lhs, const SymFun& rhs) { return lhs -= rhs; }
  friend SymFun operator*(const SymFun& lhs, const SymFun& rhs);
  friend SymFun operator*(SymFun f, const QuadExt& s) { return f *= s; }
  friend SymFun operator*(const QuadExt& s, SymFun f) { return f *= s; }

  friend bool operator==(const SymFun& lhs, const SymFun& rhs) {
    return lhs.dim_ == rhs.dim_ && lhs.terms_ == rhs.terms_;
  }

 private:
  void check_compatible(const SymFun& rhs) const;

  std::size_t dim_;
  int d_ = QuadExt::kRational;
  TermMap terms_;
};

/// Builds the canonical SymFun of a list of possibly multi-trig terms.
SymFun normalize(std::size_t dim, const std::vector<RawTerm>& raw_terms);

SymFun partial(const SymFun& f, std::size_t axis);

/// f(A x): every coordinate x_i is replaced by row_i(A) . x.
SymFun substitute_linear(const SymFun& f, const ExactMatrix& a);

/// f(-x).
SymFun parity_negate(const SymFun& f);

/// (f(x) + f(-x)) / 2.
SymFun even_part(const SymFun& f);

/// Homogeneous degree-k part of the Maclaurin expansion of f.
SymFun taylor_part(const SymFun& f, int k);

/// Applies sqrt(d) -> -sqrt(d) to every coefficient and every form.
SymFun galois_conj(const SymFun& f);

double eval_f64(const SymFun& f, std::span<const double> point);

/// Integer power of a polynomial-or-trig SymFun, by repeated squaring.
SymFun pow(const SymFun& f, int k);

}  // namespace lambent
