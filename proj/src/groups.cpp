#include "lambent/groups.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "lambent/errors.hpp"

namespace lambent {

GroupElement::GroupElement(ExactMatrix m) : m_(std::move(m)) {
  if (!m_.is_orthogonal()) throw std::invalid_argument("group element is not orthogonal: " + m_.to_string());
}

FiniteGroup::FiniteGroup(std::string name, std::vector<GroupElement> elements)
    : name_(std::move(name)), elements_(std::move(elements)) {
  if (elements_.empty()) throw std::invalid_argument("a group has at least one element");
  std::sort(elements_.begin(), elements_.end());
  elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
}

bool FiniteGroup::contains(const GroupElement& g) const {
  return std::binary_search(elements_.begin(), elements_.end(), g);
}

bool FiniteGroup::is_subgroup_of(const FiniteGroup& other) const {
  return std::all_of(elements_.begin(), elements_.end(), [&](const auto& g) { return other.contains(g); });
}

FiniteGroup generate_closure(const std::vector<GroupElement>& gens, std::string name, std::size_t cap) {
  if (gens.empty()) throw std::invalid_argument("closure needs at least one generator");
  const std::size_t n = gens.front().dim();
  for (const auto& g : gens) {
    if (g.dim() != n) throw DimensionMismatch("generators of different dimension");
  }
  std::set<GroupElement> seen;
  std::deque<GroupElement> frontier;
  const GroupElement id(ExactMatrix::identity(n));
  seen.insert(id);
  frontier.push_back(id);
  while (!frontier.empty()) {
    const GroupElement cur = frontier.front();
    frontier.pop_front();
    for (const auto& g : gens) {
      GroupElement next = cur * g;
      if (seen.insert(next).second) {
        if (seen.size() > cap) throw ClosureOverflow(cap);
        frontier.push_back(std::move(next));
      }
    }
  }
  // Finite groups: closure under products already gives inverses.
  return FiniteGroup(std::move(name), std::vector<GroupElement>(seen.begin(), seen.end()));
}

namespace generators {

GroupElement alpha() { return GroupElement(ExactMatrix{{1, 0, 0}, {0, -1, 0}, {0, 0, -1}}); }
GroupElement beta() { return GroupElement(ExactMatrix{{0, 1, 0}, {1, 0, 0}, {0, 0, 1}}); }
GroupElement gamma() { return GroupElement(ExactMatrix{{0, 1, 0}, {0, 0, 1}, {1, 0, 0}}); }
GroupElement delta() { return GroupElement(ExactMatrix{{0, 1, 0}, {1, 0, 0}, {0, 0, -1}}); }

GroupElement eta() {
  const QuadExt half(Rational(1, 2));
  const QuadExt phi_half = QuadExt::phi() * half;
  const QuadExt inv_phi_half = QuadExt::phi().inverse() * half;
  return GroupElement(ExactMatrix{{half, -phi_half, inv_phi_half},
                                  {phi_half, inv_phi_half, -half},
                                  {inv_phi_half, half, phi_half}});
}

GroupElement dihedral_rotation() {
  const QuadExt half(Rational(1, 2));
  const QuadExt s = QuadExt::sqrt3() * half;
  return GroupElement(ExactMatrix{{-half, -s}, {s, -half}});
}

GroupElement dihedral_reflection() { return GroupElement(ExactMatrix{{0, 1}, {1, 0}}); }

}  // namespace generators

FiniteGroup tetrahedral_group() {
  return generate_closure({generators::alpha(), generators::gamma()}, "T");
}

FiniteGroup full_tetrahedral_group() {
  return generate_closure({generators::alpha(), generators::beta(), generators::gamma()}, "That");
}

FiniteGroup octahedral_group() {
  return generate_closure({generators::alpha(), generators::gamma(), generators::delta()}, "O");
}

FiniteGroup klein_group() {
  return generate_closure({GroupElement(ExactMatrix::diagonal({1, -1, -1})),
                           GroupElement(ExactMatrix::diagonal({-1, 1, -1})),
                           GroupElement(ExactMatrix::diagonal({-1, -1, 1}))},
                          "K");
}

FiniteGroup icosahedral_group() {
  return generate_closure({generators::alpha(), generators::gamma(), generators::eta()}, "I");
}

FiniteGroup dihedral3_group() {
  return generate_closure({generators::dihedral_rotation(), generators::dihedral_reflection()}, "D3");
}

std::vector<std::string> group_names() { return {"T", "That", "O", "K", "I", "D3"}; }

FiniteGroup group_by_name(const std::string& name) {
  if (name == "T") return tetrahedral_group();
  if (name == "That") return full_tetrahedral_group();
  if (name == "O") return octahedral_group();
  if (name == "K") return klein_group();
  if (name == "I") return icosahedral_group();
  if (name == "D3") return dihedral3_group();
  throw std::invalid_argument("unknown group '" + name + "'");
}

VecField conjugate_field(const VecField& f, const GroupElement& eps) {
  if (f.dim() != eps.dim()) throw DimensionMismatch("group element and field dimensions differ");
  const std::size_t n = f.dim();
  std::vector<SymFun> moved;
  moved.reserve(n);
  for (const auto& comp : f.components()) moved.push_back(substitute_linear(comp, eps.matrix()));
  const ExactMatrix inv = eps.matrix().transpose();
  std::vector<SymFun> out(n, SymFun(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (!inv(i, j).is_zero()) out[i] += moved[j] * inv(i, j);
    }
  }
  return VecField(std::move(out));
}

InvarianceResult is_invariant(const VecField& f, const FiniteGroup& group) {
  InvarianceResult result;
  for (const auto& g : group.elements()) {
    if (!(conjugate_field(f, g) == f)) {
      result.invariant = false;
      result.violators.push_back(g);
    }
  }
  return result;
}

ExactMatrix permutation_matrix(const std::vector<std::size_t>& perm) {
  ExactMatrix p(perm.size());
  for (std::size_t i = 0; i < perm.size(); ++i) p(i, perm.at(i)) = 1;
  return p;
}

SymFun galois_map(const SymFun& f, const std::vector<std::size_t>& perm) {
  if (perm.size() != f.dim()) throw DimensionMismatch("permutation length must match dimension");
  return substitute_linear(galois_conj(f), permutation_matrix(perm));
}

VecField galois_map_field(const VecField& f, const std::vector<std::size_t>& perm) {
  std::vector<SymFun> c;
  for (const auto& comp : f.components()) c.push_back(galois_map(comp, perm));
  return VecField(std::move(c));
}

}  // namespace lambent
