#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "lambent/exact_matrix.hpp"
#include "lambent/vecfield.hpp"

namespace lambent {

/// Exact orthogonal matrix. Construction checks M M^T = I.
class GroupElement {
 public:
  explicit GroupElement(ExactMatrix m);

  const ExactMatrix& matrix() const { return m_; }
  std::size_t dim() const { return m_.dim(); }
  GroupElement inverse() const { return GroupElement(m_.transpose(), Trusted{}); }
  GroupElement pow(int k) const { return GroupElement(m_.pow(k), Trusted{}); }

  friend GroupElement operator*(const GroupElement& lhs, const GroupElement& rhs) {
    return GroupElement(lhs.m_ * rhs.m_, Trusted{});
  }
  friend bool operator==(const GroupElement&, const GroupElement&) = default;
  friend auto operator<=>(const GroupElement&, const GroupElement&) = default;

 private:
  struct Trusted {};
  GroupElement(ExactMatrix m, Trusted) : m_(std::move(m)) {}

  ExactMatrix m_;
};

/// Finite matrix group stored as a sorted element list.
class FiniteGroup {
 public:
  FiniteGroup(std::string name, std::vector<GroupElement> elements);

  const std::string& name() const { return name_; }
  std::size_t size() const { return elements_.size(); }
  std::size_t dim() const { return elements_.front().dim(); }
  const std::vector<GroupElement>& elements() const { return elements_; }
  bool contains(const GroupElement& g) const;
  bool is_subgroup_of(const FiniteGroup& other) const;

 private:
  std::string name_;
  std::vector<GroupElement> elements_;
};

class ClosureOverflow : public std::runtime_error {
 public:
  explicit ClosureOverflow(std::size_t cap)
      : std::runtime_error("group closure exceeded cap of " + std::to_string(cap) + " elements") {}
};

inline constexpr std::size_t kDefaultClosureCap = 240;

/// Breadth-first closure of the generators under multiplication.
FiniteGroup generate_closure(const std::vector<GroupElement>& generators, std::string name = "",
                             std::size_t cap = kDefaultClosureCap);

namespace generators {
// 3-D generators of the polyhedral groups.
GroupElement alpha();  // diag(1, -1, -1)
GroupElement beta();   // swap x, y
GroupElement gamma();  // cyclic (x, y, z) -> (y, z, x)
GroupElement delta();  // swap x, y and negate z
GroupElement eta();    // order-5 rotation over Q(sqrt 5)
// 2-D generators of the order-6 dihedral group.
GroupElement dihedral_rotation();    // rotation by 2 pi / 3
GroupElement dihedral_reflection();  // swap x, y
}  // namespace generators

FiniteGroup tetrahedral_group();       // <alpha, gamma>, order 12
FiniteGroup full_tetrahedral_group();  // <alpha, beta, gamma>, order 24
FiniteGroup octahedral_group();        // <alpha, gamma, delta>, order 24
FiniteGroup klein_group();             // diagonal sign changes, order 4
FiniteGroup icosahedral_group();       // <T, eta>, order 60
FiniteGroup dihedral3_group();         // order 6, in the plane

/// Group by short name: T, That, O, K, I, D3. Throws std::invalid_argument.
FiniteGroup group_by_name(const std::string& name);
std::vector<std::string> group_names();

/// eps^{-1} . F(eps x).
VecField conjugate_field(const VecField& f, const GroupElement& eps);

struct InvarianceResult {
  bool invariant = true;
  std::vector<GroupElement> violators;
};

InvarianceResult is_invariant(const VecField& f, const FiniteGroup& group);

/// Permutation matrix P with (P x)_i = x_{perm[i]}.
ExactMatrix permutation_matrix(const std::vector<std::size_t>& perm);

/// (tau f)(x_perm): Galois conjugation of coefficients, then argument permutation.
SymFun galois_map(const SymFun& f, const std::vector<std::size_t>& perm);
VecField galois_map_field(const VecField& f, const std::vector<std::size_t>& perm);

}  // namespace lambent
