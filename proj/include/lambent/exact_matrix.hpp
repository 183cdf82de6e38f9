#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "lambent/quad_ext.hpp"

namespace lambent {

/// Vector of length 2 or 3 over Q(sqrt d).
class ExactVector {
 public:
  ExactVector() = default;
  explicit ExactVector(std::size_t n) : entries_(n) {}
  ExactVector(std::initializer_list<QuadExt> entries) : entries_(entries) {}
  explicit ExactVector(std::vector<QuadExt> entries) : entries_(std::move(entries)) {}

  std::size_t size() const { return entries_.size(); }
  const QuadExt& operator[](std::size_t i) const { return entries_[i]; }
  QuadExt& operator[](std::size_t i) { return entries_[i]; }
  const std::vector<QuadExt>& entries() const { return entries_; }

  QuadExt dot(const ExactVector& rhs) const;
  bool is_zero() const;
  int discriminant() const;

  friend bool operator==(const ExactVector&, const ExactVector&) = default;
  friend auto operator<=>(const ExactVector&, const ExactVector&) = default;

 private:
  std::vector<QuadExt> entries_;
};

/// Square matrix (n = 2 or 3) over Q(sqrt d), stored row-major.
class ExactMatrix {
 public:
  ExactMatrix() = default;
  explicit ExactMatrix(std::size_t n) : n_(n), entries_(n * n) {}
  /// Rows given as nested lists; throws DimensionMismatch if not square.
  ExactMatrix(std::initializer_list<std::initializer_list<QuadExt>> rows);

  static ExactMatrix identity(std::size_t n);
  static ExactMatrix from_rows(const std::vector<ExactVector>& rows);
  static ExactMatrix diagonal(const std::vector<QuadExt>& diag);

  std::size_t dim() const { return n_; }
  const QuadExt& operator()(std::size_t r, std::size_t c) const { return entries_[r * n_ + c]; }
  QuadExt& operator()(std::size_t r, std::size_t c) { return entries_[r * n_ + c]; }
  ExactVector row(std::size_t r) const;
  int discriminant() const;

  ExactMatrix transpose() const;
  /// Gauss-Jordan inverse; throws SingularMatrix.
  ExactMatrix inverse() const;
  QuadExt determinant() const;
  ExactMatrix pow(int k) const;
  bool is_orthogonal() const;

  ExactVector apply(const ExactVector& v) const;
  friend ExactMatrix operator*(const ExactMatrix& lhs, const ExactMatrix& rhs);
  friend ExactVector operator*(const ExactMatrix& m, const ExactVector& v) { return m.apply(v); }
  friend ExactMatrix operator*(const QuadExt& s, ExactMatrix m);

  friend bool operator==(const ExactMatrix&, const ExactMatrix&) = default;
  friend auto operator<=>(const ExactMatrix&, const ExactMatrix&) = default;

  std::string to_string() const;

 private:
  std::size_t n_ = 0;
  std::vector<QuadExt> entries_;
};

}  // namespace lambent
