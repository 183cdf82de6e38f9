#include "lambent/exact_matrix.hpp"

#include <sstream>

#include "lambent/errors.hpp"

namespace lambent {

QuadExt ExactVector::dot(const ExactVector& rhs) const {
  if (size() != rhs.size()) throw DimensionMismatch("dot product of vectors with different lengths");
  QuadExt sum;
  for (std::size_t i = 0; i < size(); ++i) sum += entries_[i] * rhs.entries_[i];
  return sum;
}

bool ExactVector::is_zero() const {
  for (const auto& e : entries_)
    if (!e.is_zero()) return false;
  return true;
}

int ExactVector::discriminant() const {
  int d = QuadExt::kRational;
  for (const auto& e : entries_) d = join_discriminant(d, e.discriminant());
  return d;
}

ExactMatrix::ExactMatrix(std::initializer_list<std::initializer_list<QuadExt>> rows) : n_(rows.size()) {
  entries_.reserve(n_ * n_);
  for (const auto& r : rows) {
    if (r.size() != n_) throw DimensionMismatch("matrix rows must form a square");
    entries_.insert(entries_.end(), r.begin(), r.end());
  }
}

ExactMatrix ExactMatrix::identity(std::size_t n) {
  ExactMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

ExactMatrix ExactMatrix::from_rows(const std::vector<ExactVector>& rows) {
  ExactMatrix m(rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != rows.size()) throw DimensionMismatch("matrix rows must form a square");
    for (std::size_t c = 0; c < rows.size(); ++c) m(r, c) = rows[r][c];
  }
  return m;
}

ExactMatrix ExactMatrix::diagonal(const std::vector<QuadExt>& diag) {
  ExactMatrix m(diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return m;
}

ExactVector ExactMatrix::row(std::size_t r) const {
  return ExactVector(std::vector<QuadExt>(entries_.begin() + r * n_, entries_.begin() + (r + 1) * n_));
}

int ExactMatrix::discriminant() const {
  int d = QuadExt::kRational;
  for (const auto& e : entries_) d = join_discriminant(d, e.discriminant());
  return d;
}

ExactMatrix ExactMatrix::transpose() const {
  ExactMatrix t(n_);
  for (std::size_t r = 0; r < n_; ++r)
    for (std::size_t c = 0; c < n_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

ExactMatrix ExactMatrix::inverse() const {
  ExactMatrix work = *this;
  ExactMatrix inv = identity(n_);
  for (std::size_t col = 0; col < n_; ++col) {
    std::size_t pivot = col;
    while (pivot < n_ && work(pivot, col).is_zero()) ++pivot;
    if (pivot == n_) throw SingularMatrix();
    if (pivot != col) {
      for (std::size_t c = 0; c < n_; ++c) {
        std::swap(work(pivot, c), work(col, c));
        std::swap(inv(pivot, c), inv(col, c));
      }
    }
    const QuadExt scale = work(col, col).inverse();
    for (std::size_t c = 0; c < n_; ++c) {
      work(col, c) *= scale;
      inv(col, c) *= scale;
    }
    for (std::size_t r = 0; r < n_; ++r) {
      if (r == col || work(r, col).is_zero()) continue;
      const QuadExt f = work(r, col);
      for (std::size_t c = 0; c < n_; ++c) {
        work(r, c) -= f * work(col, c);
        inv(r, c) -= f * inv(col, c);
      }
    }
  }
  return inv;
}

QuadExt ExactMatrix::determinant() const {
  if (n_ == 2) return (*this)(0, 0) * (*this)(1, 1) - (*this)(0, 1) * (*this)(1, 0);
  if (n_ == 3) {
    const auto& m = *this;
    return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
           m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
           m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
  }
  if (n_ == 1) return entries_[0];
  throw DimensionMismatch("determinant supports n <= 3");
}

ExactMatrix ExactMatrix::pow(int k) const {
  ExactMatrix base = k < 0 ? inverse() : *this;
  ExactMatrix result = identity(n_);
  for (int e = k < 0 ? -k : k; e > 0; e >>= 1) {
    if (e & 1) result = result * base;
    base = base * base;
  }
  return result;
}

bool ExactMatrix::is_orthogonal() const { return (*this) * transpose() == identity(n_); }

ExactVector ExactMatrix::apply(const ExactVector& v) const {
  if (v.size() != n_) throw DimensionMismatch("matrix-vector dimension mismatch");
  ExactVector out(n_);
  for (std::size_t r = 0; r < n_; ++r)
    for (std::size_t c = 0; c < n_; ++c) out[r] += (*this)(r, c) * v[c];
  return out;
}

ExactMatrix operator*(const ExactMatrix& lhs, const ExactMatrix& rhs) {
  if (lhs.n_ != rhs.n_) throw DimensionMismatch("matrix product dimension mismatch");
  ExactMatrix out(lhs.n_);
  for (std::size_t r = 0; r < lhs.n_; ++r)
    for (std::size_t k = 0; k < lhs.n_; ++k) {
      if (lhs(r, k).is_zero()) continue;
      for (std::size_t c = 0; c < lhs.n_; ++c) out(r, c) += lhs(r, k) * rhs(k, c);
    }
  return out;
}

ExactMatrix operator*(const QuadExt& s, ExactMatrix m) {
  for (auto& e : m.entries_) e *= s;
  return m;
}

std::string ExactMatrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t r = 0; r < n_; ++r) {
    os << (r ? "; " : "");
    for (std::size_t c = 0; c < n_; ++c) os << (c ? ", " : "") << (*this)(r, c);
  }
  os << "]";
  return os.str();
}

}  // namespace lambent
