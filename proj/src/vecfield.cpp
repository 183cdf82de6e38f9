#include "lambent/vecfield.hpp"

#include "lambent/errors.hpp"

namespace lambent {

VecField::VecField(std::vector<SymFun> components) : components_(std::move(components)) {
  for (const auto& c : components_) {
    if (c.dim() != components_.size()) {
      throw DimensionMismatch("component count must match the ambient dimension");
    }
  }
  discriminant();
}

VecField VecField::zero(std::size_t dim) { return VecField(std::vector<SymFun>(dim, SymFun(dim))); }

int VecField::discriminant() const {
  int d = QuadExt::kRational;
  for (const auto& c : components_) d = join_discriminant(d, c.discriminant());
  return d;
}

bool VecField::is_zero() const {
  for (const auto& c : components_)
    if (!c.is_zero()) return false;
  return true;
}

std::size_t VecField::term_count() const {
  std::size_t n = 0;
  for (const auto& c : components_) n += c.size();
  return n;
}

VecField& VecField::operator+=(const VecField& rhs) {
  if (dim() != rhs.dim()) throw DimensionMismatch("vector fields of different dimension");
  for (std::size_t i = 0; i < dim(); ++i) components_[i] += rhs.components_[i];
  return *this;
}

VecField& VecField::operator-=(const VecField& rhs) {
  if (dim() != rhs.dim()) throw DimensionMismatch("vector fields of different dimension");
  for (std::size_t i = 0; i < dim(); ++i) components_[i] -= rhs.components_[i];
  return *this;
}

VecField& VecField::operator*=(const QuadExt& s) {
  for (auto& c : components_) c *= s;
  return *this;
}

SymFun div(const VecField& f) {
  SymFun out(f.dim());
  for (std::size_t i = 0; i < f.dim(); ++i) out += partial(f[i], i);
  return out;
}

VecField curl(const VecField& f) {
  if (f.dim() != 3) throw DimensionMismatch("curl is only defined for 3-dimensional fields");
  return VecField{partial(f[2], 1) - partial(f[1], 2),
                  partial(f[0], 2) - partial(f[2], 0),
                  partial(f[1], 0) - partial(f[0], 1)};
}

SymFun laplacian(const SymFun& f) {
  SymFun out(f.dim());
  for (std::size_t i = 0; i < f.dim(); ++i) out += partial(partial(f, i), i);
  return out;
}

VecField laplacian(const VecField& f) {
  std::vector<SymFun> c;
  for (const auto& comp : f.components()) c.push_back(laplacian(comp));
  return VecField(std::move(c));
}

VecField grad(const SymFun& f) {
  std::vector<SymFun> c;
  for (std::size_t i = 0; i < f.dim(); ++i) c.push_back(partial(f, i));
  return VecField(std::move(c));
}

VecField parity_negate(const VecField& f) {
  std::vector<SymFun> c;
  for (const auto& comp : f.components()) c.push_back(parity_negate(comp));
  return VecField(std::move(c));
}

VecField even_part(const VecField& f) {
  std::vector<SymFun> c;
  for (const auto& comp : f.components()) c.push_back(even_part(comp));
  return VecField(std::move(c));
}

VecField taylor_part(const VecField& f, int k) {
  std::vector<SymFun> c;
  for (const auto& comp : f.components()) c.push_back(taylor_part(comp, k));
  return VecField(std::move(c));
}

}  // namespace lambent
