#pragma once

#include <string>
#include <vector>

#include "lambent/groups.hpp"
#include "lambent/vecfield.hpp"

namespace lambent {

enum class LambentMode { kBeltrami3d, kHelmholtzNd };

/// One named check. Passes iff the residual is exactly zero and no group
/// element is violated.
struct CheckResult {
  std::string name;
  bool passed = true;
  VecField residual;
  std::vector<GroupElement> violators;
};

struct VerificationReport {
  std::vector<CheckResult> checks;

  bool passed() const;
  const CheckResult* find(const std::string& name) const;
};

/// Runs every lambent-field check exactly.
///
/// beltrami_3d: curl F - F, div F, lap F + F, the parity split
/// (odd part of F equals curl of its even part), and invariance.
/// helmholtz_nd: lap F + F, div F, F(-x) - F(x), and invariance.
/// Entireness holds by construction of the term class.
VerificationReport check_lambent(const VecField& f, const FiniteGroup& group, LambentMode mode);

}  // namespace lambent
