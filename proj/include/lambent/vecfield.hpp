#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "lambent/symfun.hpp"

namespace lambent {

/// n-component vector field on R^n (n = 2 or 3) with SymFun components.
class VecField {
 public:
  VecField() = default;
  explicit VecField(std::vector<SymFun> components);
  VecField(std::initializer_list<SymFun> components) : VecField(std::vector<SymFun>(components)) {}

  static VecField zero(std::size_t dim);

  std::size_t dim() const { return components_.size(); }
  int discriminant() const;
  const SymFun& operator[](std::size_t i) const { return components_[i]; }
  SymFun& operator[](std::size_t i) { return components_[i]; }
  const std::vector<SymFun>& components() const { return components_; }
  bool is_zero() const;
  /// Total number of canonical terms over all components.
  std::size_t term_count() const;

  VecField& operator+=(const VecField& rhs);
  VecField& operator-=(const VecField& rhs);
  VecField& operator*=(const QuadExt& s);
  friend VecField operator+(VecField lhs, const VecField& rhs) { return lhs += rhs; }
  friend VecField operator-(VecField lhs, const VecField& rhs) { return lhs -= rhs; }
  friend VecField operator*(VecField f, const QuadExt& s) { return f *= s; }
  friend VecField operator*(const QuadExt& s, VecField f) { return f *= s; }

  friend bool operator==(const VecField&, const VecField&) = default;

 private:
  std::vector<SymFun> components_;
};

SymFun div(const VecField& f);
/// Throws DimensionMismatch unless f is 3-dimensional.
VecField curl(const VecField& f);
VecField laplacian(const VecField& f);
SymFun laplacian(const SymFun& f);
VecField grad(const SymFun& f);

VecField parity_negate(const VecField& f);
VecField even_part(const VecField& f);
VecField taylor_part(const VecField& f, int k);

}  // namespace lambent
