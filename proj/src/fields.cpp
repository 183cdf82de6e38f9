#include "lambent/fields.hpp"

#include "lambent/errors.hpp"
#include "lambent/groups.hpp"

namespace lambent {

namespace {

constexpr std::size_t kX = 0, kY = 1, kZ = 2;

SymFun sin_axis(std::size_t i) { return SymFun::sin(LinearForm::axis(3, i)); }
SymFun cos_axis(std::size_t i) { return SymFun::cos(LinearForm::axis(3, i)); }

SymFun q3(int n, std::size_t u, std::size_t v) { return harmonic_in(n, HarmonicKind::kQ, 3, u, v); }
SymFun p3(int n, std::size_t u, std::size_t v) { return harmonic_in(n, HarmonicKind::kP, 3, u, v); }

void check_ell(int ell, int cap) {
  if (ell < 0) throw std::invalid_argument("family index ell must be nonnegative");
  if (ell > cap) throw std::invalid_argument("family index ell exceeds cap " + std::to_string(cap));
}

}  // namespace

SymFun harmonic(int n, HarmonicKind kind) { return harmonic_in(n, kind, 2, 0, 1); }

SymFun harmonic_in(int n, HarmonicKind kind, std::size_t dim, std::size_t u, std::size_t v) {
  if (n < -1) throw std::invalid_argument("harmonic polynomial order must be >= -1");
  if (u >= dim || v >= dim || u == v) throw DimensionMismatch("bad coordinate pair for harmonic polynomial");
  SymFun out(dim);
  if (n < 0) return out;
  // (x + iy)^n = sum_k C(n,k) x^(n-k) (iy)^k; i^k real for even k.
  const int parity = kind == HarmonicKind::kP ? 0 : 1;
  mpz_class binom;
  for (int k = parity; k <= n; k += 2) {
    mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    const int sign = ((k - parity) / 2) % 2 == 0 ? 1 : -1;
    Monomial m(dim, 0);
    m[u] = n - k;
    m[v] = k;
    out += SymFun::monomial(QuadExt(Rational(binom * sign)), std::move(m));
  }
  return out;
}

SymFun helmholtz_scalar(const ExactVector& a, const ExactVector& b, const ExactVector& c, int n,
                        HarmonicKind poly, TrigKind trig, const QuadExt& scale, TrigArgument arg) {
  if (a.size() != 3 || b.size() != 3 || c.size() != 3) throw DimensionMismatch("frame vectors must be 3-D");
  const std::array<const ExactVector*, 3> frame{&a, &b, &c};
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      if (frame[i]->dot(*frame[j]) != QuadExt(i == j ? 1 : 0)) throw NonOrthonormalFrame();
    }
  }
  if (trig == TrigKind::kNone) throw std::invalid_argument("helmholtz scalar needs a sin or cos factor");
  // Build in frame coordinates, then pull back along the frame matrix.
  const std::size_t trig_axis = arg == TrigArgument::kThird ? kZ : kY;
  SymFun local = harmonic_in(n, poly, 3, kX, kY);
  local = local * (trig == TrigKind::kSin ? sin_axis(trig_axis) : cos_axis(trig_axis)) * scale;
  return substitute_linear(local, ExactMatrix::from_rows({a, b, c}));
}

VecField cyclic_lift(const SymFun& g) {
  if (g.dim() != 3) throw DimensionMismatch("cyclic lift needs a function of 3 variables");
  const ExactMatrix cyc = generators::gamma().matrix();
  return VecField{g, substitute_linear(g, cyc), substitute_linear(g, cyc * cyc)};
}

VecField tetra_precurl(const TetraFamilySpec& spec, int ell_cap) {
  check_ell(spec.ell, ell_cap);
  const int l = spec.ell;
  if (spec.variant == TetraVariant::kDeg4l1) {
    const int n = 4 * l + 1;
    return cyclic_lift(q3(n, kX, kY) * sin_axis(kZ) + q3(n, kX, kZ) * sin_axis(kY));
  }
  const int n = 4 * l + 3;
  const QuadExt c(8 * l + 6);
  return cyclic_lift(q3(n, kX, kY) * sin_axis(kZ) + q3(n, kX, kZ) * sin_axis(kY) +
                     c * q3(n - 1, kY, kZ) * cos_axis(kX));
}

VecField octa_precurl(const OctaFamilySpec& spec, int ell_cap) {
  check_ell(spec.ell, ell_cap);
  const int l = spec.ell;
  if (spec.variant == OctaVariant::kDeg4l3) {
    const int n = 4 * l + 3;
    return cyclic_lift(q3(n, kX, kY) * sin_axis(kZ) - q3(n, kX, kZ) * sin_axis(kY));
  }
  const int n = 4 * l + 1;
  const QuadExt c(8 * l + 2);
  return cyclic_lift(q3(n, kX, kY) * sin_axis(kZ) - q3(n, kX, kZ) * sin_axis(kY) +
                     c * q3(n - 1, kY, kZ) * cos_axis(kX));
}

VecField tetra_field(const TetraFamilySpec& spec, int ell_cap) { return beltramize(tetra_precurl(spec, ell_cap)); }
VecField octa_field(const OctaFamilySpec& spec, int ell_cap) { return beltramize(octa_precurl(spec, ell_cap)); }

SymFun tetra_closed_form(const TetraFamilySpec& spec) {
  const int l = spec.ell;
  if (spec.variant == TetraVariant::kDeg4l1) {
    const int n = 4 * l + 1;
    return q3(n, kX, kY) * sin_axis(kZ) + q3(n, kX, kZ) * sin_axis(kY) + q3(n, kZ, kX) * cos_axis(kY) -
           q3(n, kY, kX) * cos_axis(kZ);
  }
  const int n = 4 * l + 3;
  const int m = 4 * l + 2;
  const QuadExt c(8 * l + 6);
  const QuadExt cm(static_cast<long>(8 * l + 6) * m);
  return q3(n, kX, kY) * sin_axis(kZ) + q3(n, kX, kZ) * sin_axis(kY) + c * q3(m, kY, kZ) * cos_axis(kX) +
         q3(n, kZ, kX) * cos_axis(kY) - q3(n, kY, kX) * cos_axis(kZ) - c * p3(m, kY, kZ) * sin_axis(kX) +
         cm * p3(4 * l + 1, kX, kY) * cos_axis(kZ) - cm * p3(4 * l + 1, kX, kZ) * cos_axis(kY);
}

SymFun octa_closed_form(const OctaFamilySpec& spec) {
  const int l = spec.ell;
  if (spec.variant == OctaVariant::kDeg4l3) {
    const int n = 4 * l + 3;
    return q3(n, kX, kY) * sin_axis(kZ) - q3(n, kX, kZ) * sin_axis(kY) + q3(n, kZ, kX) * cos_axis(kY) +
           q3(n, kY, kX) * cos_axis(kZ);
  }
  const int n = 4 * l + 1;
  const QuadExt c(8 * l + 2);
  const QuadExt cm(static_cast<long>(8 * l + 2) * 4 * l);
  return q3(n, kX, kY) * sin_axis(kZ) - q3(n, kX, kZ) * sin_axis(kY) + c * q3(4 * l, kY, kZ) * cos_axis(kX) +
         q3(n, kZ, kX) * cos_axis(kY) + q3(n, kY, kX) * cos_axis(kZ) - c * p3(4 * l, kY, kZ) * sin_axis(kX) +
         cm * p3(4 * l - 1, kX, kY) * cos_axis(kZ) + cm * p3(4 * l - 1, kX, kZ) * cos_axis(kY);
}

NotPreBeltrami::NotPreBeltrami(SymFun div_residual, VecField helmholtz_residual)
    : std::domain_error("field is not a solenoidal Helmholtz solution"),
      div_(std::move(div_residual)),
      helmholtz_(std::move(helmholtz_residual)) {}

VecField beltramize(const VecField& v) {
  if (v.dim() != 3) throw DimensionMismatch("beltramize needs a 3-D field");
  SymFun d = div(v);
  VecField h = laplacian(v) + v;
  if (!d.is_zero() || !h.is_zero()) throw NotPreBeltrami(std::move(d), std::move(h));
  return v + curl(v);
}

VecField induce_icosahedral(const VecField& v) {
  if (v.dim() != 3) throw DimensionMismatch("icosahedral induction needs a 3-D field");
  const GroupElement eta = generators::eta();
  VecField sum = VecField::zero(3);
  GroupElement power(ExactMatrix::identity(3));
  for (int j = 0; j < 5; ++j) {
    sum += conjugate_field(v, power);
    power = power * eta;
  }
  return sum;
}

SymFun icosa_seed_even_part() {
  return SymFun::coordinate(3, kY) * sin_axis(kZ) + SymFun::coordinate(3, kZ) * sin_axis(kY);
}

SymFun icosa_seed_golden() {
  const QuadExt phi = QuadExt::phi();
  return phi * SymFun::coordinate(3, kY) * sin_axis(kZ) -
         phi.inverse() * SymFun::coordinate(3, kZ) * sin_axis(kY);
}

// ----------------------------------------------------------- dihedral plane

DihedralForms dihedral_forms() {
  const QuadExt h(Rational(1, 2));
  const QuadExt s = QuadExt::sqrt3() * h;
  return {LinearForm{h, s}, LinearForm{-h, s}, LinearForm{s, h}, LinearForm{s, -h}};
}

std::array<SymFun, 12> dihedral_basis() {
  const auto [x0, x1, y0, y1] = dihedral_forms();
  const LinearForm ex = LinearForm::axis(2, 0);
  const LinearForm ey = LinearForm::axis(2, 1);
  const SymFun x = SymFun::coordinate(2, 0);
  const SymFun y = SymFun::coordinate(2, 1);
  return {SymFun::cos(ex),
          SymFun::cos(ey),
          SymFun::cos(x0),
          SymFun::cos(x1),
          SymFun::cos(y0),
          SymFun::cos(y1),
          y * SymFun::sin(ex),
          x * SymFun::sin(ey),
          SymFun::linear(y1) * SymFun::sin(x0),
          SymFun::linear(y0) * SymFun::sin(x1),
          SymFun::linear(x1) * SymFun::sin(y0),
          SymFun::linear(x0) * SymFun::sin(y1)};
}

SymFun dihedral_scalar(const DihedralAnsatz& coeffs) {
  const auto basis = dihedral_basis();
  SymFun g(2);
  for (std::size_t k = 0; k < basis.size(); ++k) {
    if (!coeffs[k].is_zero()) g += basis[k] * coeffs[k];
  }
  return g;
}

VecField dihedral_ansatz_field(const DihedralAnsatz& coeffs) {
  const SymFun g = dihedral_scalar(coeffs);
  return VecField{g, substitute_linear(g, permutation_matrix({1, 0}))};
}

SymFun varpi() {
  return SymFun::monomial(2, {1, 1}) - SymFun::monomial(1, {2, 0}) + SymFun::monomial(1, {0, 2});
}

SymFun varrho() {
  return SymFun::monomial(2, {1, 1}) + SymFun::monomial(1, {2, 0}) - SymFun::monomial(1, {0, 2});
}

namespace {

// Collects sum_k u_k lhs[k] = rhs as one equation per canonical term key.
void append_equations(const std::array<SymFun, 12>& lhs, const SymFun& rhs,
                      std::vector<std::vector<QuadExt>>& rows, std::vector<QuadExt>& values) {
  std::map<TermKey, std::vector<QuadExt>, TermKeyLess> eqs;
  auto row_for = [&](const TermKey& key) -> std::vector<QuadExt>& {
    auto [it, fresh] = eqs.try_emplace(key);
    if (fresh) it->second.assign(13, QuadExt());
    return it->second;
  };
  for (std::size_t k = 0; k < lhs.size(); ++k) {
    for (const auto& [key, c] : lhs[k].terms()) row_for(key)[k] += c;
  }
  for (const auto& [key, c] : rhs.terms()) row_for(key)[12] += c;
  for (auto& [key, row] : eqs) {
    values.push_back(row[12]);
    row.pop_back();
    rows.push_back(std::move(row));
  }
}

}  // namespace

DihedralAnsatz DihedralFamily::at(const QuadExt& a) const {
  DihedralAnsatz out;
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = base[k] + direction[k] * a;
  return out;
}

DihedralFamily solve_dihedral_constraints() {
  const auto basis = dihedral_basis();
  const ExactMatrix swap = permutation_matrix({1, 0});
  const ExactMatrix rot = generators::dihedral_rotation().matrix();
  const QuadExt half(Rational(1, 2));
  const QuadExt s = QuadExt::sqrt3() * half;

  std::array<SymFun, 12> taylor, solenoidal, rotation;
  for (std::size_t k = 0; k < 12; ++k) {
    const SymFun& g = basis[k];
    taylor[k] = taylor_part(g, 2);
    solenoidal[k] = partial(g, 0) + partial(substitute_linear(g, swap), 1);
    // -1/2 G(-l_x0, l_y1) + sqrt3/2 G(l_y1, -l_x0) - G(x, y); rot x = (-l_x0, l_y1)
    rotation[k] = substitute_linear(g, rot) * (-half) + substitute_linear(g, swap * rot) * s - g;
  }
  std::vector<std::vector<QuadExt>> rows;
  std::vector<QuadExt> values;
  append_equations(taylor, varpi(), rows, values);
  append_equations(solenoidal, SymFun(2), rows, values);
  append_equations(rotation, SymFun(2), rows, values);

  DihedralFamily family;
  family.solution = solve_linear_system(std::move(rows), std::move(values), 12);
  const auto& sol = family.solution;
  if (sol.dimension() != 1 || sol.nullspace[0][0].is_zero()) {
    throw std::runtime_error("dihedral constraints do not leave exactly the parameter a free");
  }
  const auto& dir = sol.nullspace[0];
  const QuadExt t0 = -sol.particular[0] / dir[0];
  for (std::size_t k = 0; k < 12; ++k) {
    family.direction[k] = dir[k] / dir[0];
    family.base[k] = sol.particular[k] + dir[k] * t0;
  }
  return family;
}

VecField dihedral_order_zero_field() {
  return dihedral_ansatz_field(solve_dihedral_constraints().at(0)) * QuadExt(Rational(3, 8));
}

VecField dihedral_four_thirds_field() {
  return dihedral_ansatz_field(solve_dihedral_constraints().at(Rational(4, 3))) * QuadExt(Rational(3, 2));
}

}  // namespace lambent
