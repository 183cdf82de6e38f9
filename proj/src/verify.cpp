#include "lambent/verify.hpp"

#include <algorithm>

#include "lambent/errors.hpp"

namespace lambent {

namespace {

CheckResult residual_check(std::string name, VecField residual) {
  CheckResult r{std::move(name), residual.is_zero(), std::move(residual), {}};
  return r;
}

VecField as_field(const SymFun& f) {
  std::vector<SymFun> c(f.dim(), SymFun(f.dim()));
  c[0] = f;
  return VecField(std::move(c));
}

}  // namespace

bool VerificationReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed; });
}

const CheckResult* VerificationReport::find(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

VerificationReport check_lambent(const VecField& f, const FiniteGroup& group, LambentMode mode) {
  if (group.dim() != f.dim()) throw DimensionMismatch("group and field dimensions differ");
  VerificationReport report;
  if (mode == LambentMode::kBeltrami3d) {
    if (f.dim() != 3) throw DimensionMismatch("beltrami mode needs a 3-D field");
    report.checks.push_back(residual_check("curl", curl(f) - f));
  }
  report.checks.push_back(residual_check("divergence", as_field(div(f))));
  report.checks.push_back(residual_check("helmholtz", laplacian(f) + f));
  if (mode == LambentMode::kBeltrami3d) {
    const VecField even = even_part(f);
    report.checks.push_back(residual_check("parity", (f - even) - curl(even)));
  } else {
    report.checks.push_back(residual_check("parity", parity_negate(f) - f));
  }
  auto inv = is_invariant(f, group);
  VecField residual = inv.violators.empty() ? VecField::zero(f.dim()) : conjugate_field(f, inv.violators.front()) - f;
  CheckResult sym{"invariance", inv.invariant, std::move(residual), std::move(inv.violators)};
  report.checks.push_back(std::move(sym));
  return report;
}

}  // namespace lambent
