// Acceptance suite: one PASS/FAIL line per criterion, exact where the
// claim is an identity and at the stated tolerances where it is numeric.
#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "lambent/dynamics.hpp"
#include "lambent/fields.hpp"
#include "lambent/groups.hpp"
#include "lambent/verify.hpp"
#include "support.hpp"

using namespace lambent;
using namespace lambent::fixtures;
namespace t = lambent::testing;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  bool passed;
  std::string summary;
  std::vector<std::string> notes;
};

int failures = 0;

void report(int id, const std::string& title, const std::function<Outcome()>& body) {
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what(), {}};
  }
  failures += !o.passed;
  std::printf("[%s] %2d %s: %s\n", o.passed ? "PASS" : "FAIL", id, title.c_str(), o.summary.c_str());
  for (const auto& n : o.notes) std::printf("          %s\n", n.c_str());
  std::fflush(stdout);
}

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

// Exact Beltrami checks shared by the tetrahedral and octahedral families.
bool family_member_ok(const VecField& field, const VecField& precurl, const FiniteGroup& group) {
  const bool beltrami = curl(field) == field;
  const bool solenoidal = div(field).is_zero();
  const bool helmholtz = (laplacian(field) + field).is_zero();
  const bool invariant = is_invariant(field, group).invariant;
  const bool even = parity_negate(precurl) == precurl && even_part(field) == precurl;
  const bool report_ok = check_lambent(field, group, LambentMode::kBeltrami3d).passed();
  return beltrami && solenoidal && helmholtz && invariant && even && report_ok;
}

Outcome criterion_groups() {
  const std::vector<std::pair<FiniteGroup, std::size_t>> expected{{tetrahedral_group(), 12},
                                                                   {full_tetrahedral_group(), 24},
                                                                   {octahedral_group(), 24},
                                                                   {icosahedral_group(), 60},
                                                                   {dihedral3_group(), 6}};
  bool ok = true;
  std::string s;
  for (const auto& [g, n] : expected) {
    ok = ok && g.size() == n;
    s += (s.empty() ? "" : ", ") + g.name() + "=" + std::to_string(g.size());
  }
  return {ok, s, {}};
}

Outcome criterion_tetra() {
  bool ok = true;
  const FiniteGroup t_group = tetrahedral_group();
  for (int ell : {0, 1}) {
    for (TetraVariant v : {TetraVariant::kDeg4l1, TetraVariant::kDeg4l3}) {
      ok = ok && family_member_ok(tetra_field({ell, v}), tetra_precurl({ell, v}), t_group);
      ok = ok && tetra_field({ell, v})[0] == tetra_closed_form({ell, v});
    }
  }
  const bool displays = tetra_field({0, TetraVariant::kDeg4l1})[0] == tetra_l0_first() &&
                        tetra_field({1, TetraVariant::kDeg4l1})[0] == tetra_l1_first() &&
                        tetra_field({0, TetraVariant::kDeg4l3})[0] == tetra_l0_second();
  return {ok && displays,
          "ell in {0,1}, both variants: curl, div, Helmholtz, 12-element invariance, parity exact; printed "
          "displays " +
              std::string(displays ? "match" : "DIFFER"),
          {}};
}

Outcome criterion_octa() {
  bool ok = true;
  const FiniteGroup o_group = octahedral_group();
  for (int ell : {0, 1}) {
    for (OctaVariant v : {OctaVariant::kDeg4l3, OctaVariant::kDeg4l1}) {
      ok = ok && family_member_ok(octa_field({ell, v}), octa_precurl({ell, v}), o_group);
      ok = ok && octa_field({ell, v})[0] == octa_closed_form({ell, v});
    }
  }
  const bool displays = octa_field({0, OctaVariant::kDeg4l3})[0] == octa_l0_first() &&
                        octa_field({0, OctaVariant::kDeg4l1})[0] == octa_l0_second();
  return {ok && displays,
          "ell in {0,1}, both variants: curl, div, Helmholtz, 24-element invariance, parity exact; printed "
          "displays " +
              std::string(displays ? "match" : "DIFFER"),
          {}};
}

SymFun q3(int n, std::size_t u, std::size_t v) { return harmonic_in(n, HarmonicKind::kQ, 3, u, v); }

Outcome criterion_divergence() {
  std::mt19937_64 rng(2024);
  bool div1 = true;
  for (int n : {1, 3, 5}) {
    for (int k = 0; k < 3; ++k) {
      const QuadExt a = t::random_rational(rng), b = t::random_rational(rng);
      const VecField f = cyclic_lift(a * q3(n, 0, 1) * sin3(0, 0, 1) + b * q3(n, 0, 2) * sin3(0, 1, 0));
      const QuadExt sign = ((n + 1) / 2) % 2 ? -1 : 1;
      const SymFun expected = QuadExt(n) * (a + sign * b) *
                              (q3(n - 1, 0, 1) * sin3(0, 0, 1) + q3(n - 1, 1, 2) * sin3(1, 0, 0) +
                               q3(n - 1, 2, 0) * sin3(0, 1, 0));
      div1 = div1 && div(f) == expected;
    }
  }

  // Solenoidal iff (2m+1)a + (-1)^{m+1}(2m+1)b - c = 0.
  bool mcond = true;
  bool m0_degenerate = true;
  for (int m = 0; m <= 2; ++m) {
    const QuadExt odd = 2 * m + 1, sign = (m + 1) % 2 ? -1 : 1;
    for (int k = 0; k < 4; ++k) {
      const QuadExt a = t::random_rational(rng), b = t::random_rational(rng);
      const QuadExt c_ok = odd * a + sign * odd * b;
      const QuadExt c_bad = c_ok + QuadExt(Rational(k + 1, 3));
      auto field = [&](const QuadExt& c) {
        return cyclic_lift(a * q3(2 * m + 1, 0, 1) * sin3(0, 0, 1) + b * q3(2 * m + 1, 0, 2) * sin3(0, 1, 0) +
                           c * q3(2 * m, 1, 2) * cos3(1, 0, 0));
      };
      mcond = mcond && div(field(c_ok)).is_zero();
      if (m == 0) {
        m0_degenerate = m0_degenerate && div(field(c_bad)).is_zero() && field(c_bad) == field(c_ok);
      } else {
        mcond = mcond && !div(field(c_bad)).is_zero();
      }
    }
  }

  bool div2_symmetric = true, div2_literal_nonzero = true;
  for (int n : {2, 4}) {
    const QuadExt c(Rational(5, 7));
    const SymFun d = div(cyclic_lift(c * q3(n, 1, 2) * cos3(1, 0, 0)));
    const SymFun head = q3(n, 0, 1) * sin3(0, 0, 1) + q3(n, 1, 2) * sin3(1, 0, 0);
    div2_symmetric = div2_symmetric && (d + c * (head + q3(n, 2, 0) * sin3(0, 1, 0))).is_zero();
    div2_literal_nonzero = div2_literal_nonzero && !(d + c * (head + q3(n, 2, 0) * sin3(0, 0, 1))).is_zero();
  }
  const bool ok = div1 && mcond && m0_degenerate && div2_symmetric && div2_literal_nonzero;
  return {ok,
          std::string("odd-degree formula ") + (div1 ? "exact" : "WRONG") + " for n=1,3,5; condition " +
              (mcond ? "characterizes" : "does NOT characterize") + " solenoidality for m=1,2 both ways; " +
              "even-degree formula zero-residual with sin y",
          {"m=0: Q_0 = 0 removes the c term and the n=1 lift is solenoidal, so every (a,b,c) is solenoidal; "
           "condition holds when met (forward direction) and the converse is vacuous " +
               std::string(m0_degenerate ? "(verified)" : "(NOT as expected)"),
           std::string("even-degree formula with the printed 'Q_n(z,x) sin z' leaves a nonzero residual: ") +
               (div2_literal_nonzero ? "yes" : "no")}};
}

Outcome criterion_icosa() {
  const VecField lift = cyclic_lift(icosa_seed_even_part());
  const VecField beltrami = induce_icosahedral(beltramize(lift));
  const VecField printed = cyclic_lift(icosa_induced_first());
  const bool even_matches = even_part(beltrami) == printed;
  const bool precurl_matches = induce_icosahedral(lift) == printed;
  const bool eigen = curl(beltrami) == beltrami;
  const bool invariant = is_invariant(beltrami, icosahedral_group()).invariant;

  const GroupElement eta = generators::eta();
  const std::array<int, 5> sigma{0, 3, 4, 1, 2}, phi{0, 2, 4, 3, 1};
  bool perms = true;
  for (const VecField& base : {lift, beltramize(lift)}) {
    for (int j = 0; j < 5; ++j) {
      const VecField conj = conjugate_field(base, eta.pow(j));
      perms = perms && conjugate_field(conj, generators::alpha()) == conjugate_field(base, eta.pow(sigma[j]));
      perms = perms && conjugate_field(conj, generators::gamma()) == conjugate_field(base, eta.pow(phi[j]));
    }
  }
  const bool printed_alone_not_eigen = !(curl(printed) == printed);
  const bool ok = even_matches && precurl_matches && eigen && invariant && perms;
  return {ok,
          std::string("induced field ") + (even_matches ? "matches" : "DIFFERS from") +
              " the printed display (even part, zero difference); curl F = F " + (eigen ? "exact" : "FAILS") +
              "; 60-element invariance " + (invariant ? "exact" : "FAILS") + "; sigma/phi identities " +
              (perms ? "hold for all j" : "FAIL"),
          {std::string("the printed display is all even degree, so it is the curl-free half: it equals the "
                       "induced pre-curl field (") +
               (precurl_matches ? "yes" : "no") + ") and is not itself a curl eigenfield (" +
               (printed_alone_not_eigen ? "confirmed" : "unexpected") + ")"}};
}

Outcome criterion_galois() {
  const std::vector<std::size_t> swap_yz{0, 2, 1};
  const SymFun g = icosa_seed_even_part(), g0 = icosa_seed_golden();
  const bool ok_g = galois_map(g, swap_yz) == g;
  const bool ok_g0 = galois_map(g0, swap_yz) == g0;
  const bool nontrivial = !(galois_conj(g0) == g0);
  return {ok_g && ok_g0 && nontrivial,
          std::string("tau G(z,y) = G(y,z) ") + (ok_g ? "exact" : "FAILS") + "; tau G0(z,y) = G0(y,z) " +
              (ok_g0 ? "exact" : "FAILS"),
          {}};
}

Outcome criterion_dihedral() {
  const DihedralFamily family = solve_dihedral_constraints();
  const auto v_tuple = dihedral_order_zero_tuple(), q_tuple = dihedral_q_tuple();
  bool tuples = family.solution.dimension() == 1;
  const DihedralAnsatz at0 = family.at(0), at43 = family.at(Rational(4, 3));
  for (std::size_t k = 0; k < 12; ++k) {
    tuples = tuples && at0[k] == v_tuple[k] && at43[k] * QuadExt(Rational(3, 2)) == q_tuple[k];
  }
  const VecField v = dihedral_order_zero_field(), q = dihedral_four_thirds_field();
  const FiniteGroup d3 = dihedral3_group();
  const bool checks = check_lambent(v, d3, LambentMode::kHelmholtzNd).passed() &&
                      check_lambent(q, d3, LambentMode::kHelmholtzNd).passed();
  const bool displays = v[0] == dihedral_v_first() && q[0] == dihedral_q_first();
  const QuadExt sv(Rational(3, 8)), sq(Rational(3, 2));
  const bool taylor = taylor_part(v, 2) == VecField{varpi() * sv, varrho() * sv} &&
                      taylor_part(q, 2) == VecField{varpi() * sq, varrho() * sq};
  const bool swapped_differs = !(taylor_part(v, 2) == VecField{varrho() * sv, varpi() * sv});
  return {tuples && checks && displays && taylor && swapped_differs,
          "solution space dimension " + std::to_string(family.solution.dimension()) +
              "; a=0 and a=4/3 tuples " + (tuples ? "match" : "DIFFER") + "; Helmholtz, div, D3, parity " +
              (checks ? "exact" : "FAIL") + "; degree-2 parts 3/8 and 3/2 times (varpi, varrho)",
          {std::string("component order determined by the oracle: (varpi, varrho); the swapped order (varrho, "
                       "varpi) does not match: ") +
           (swapped_differs ? "confirmed" : "unexpected")}};
}

struct FdErrors {
  double curl = 0.0, div = 0.0, lap = 0.0, scale = 0.0;
  double worst() const { return std::max({curl, div, lap}); }
};

// Central differences in quad precision, so the error left is truncation.
FdErrors fd_errors(const VecField& f, std::size_t points, double h, unsigned seed) {
  const std::size_t n = f.dim();
  std::vector<t::QuadEvaluator> comp, lap;
  for (std::size_t i = 0; i < n; ++i) {
    comp.emplace_back(f[i]);
    lap.emplace_back(laplacian(f[i]));
  }
  const t::QuadEvaluator divergence(div(f));
  std::vector<t::QuadEvaluator> rot;
  if (n == 3) {
    const VecField c = curl(f);
    for (std::size_t i = 0; i < 3; ++i) rot.emplace_back(c[i]);
  }
  std::mt19937_64 rng(seed);
  const t::quad hq = h;
  FdErrors e;
  for (std::size_t k = 0; k < points; ++k) {
    const auto p = t::to_quad(t::random_point(rng, n, 3.0));
    auto d = [&](std::size_t c, std::size_t axis) { return comp[c].diff(p, axis, hq); };
    t::quad dv = 0;
    for (std::size_t i = 0; i < n; ++i) {
      dv += d(i, i);
      e.scale = std::max(e.scale, static_cast<double>(fabsq(comp[i](p))));
      t::quad l = 0;
      for (std::size_t a = 0; a < n; ++a) l += comp[i].diff2(p, a, hq);
      e.lap = std::max(e.lap, static_cast<double>(fabsq(l - lap[i](p))));
    }
    e.div = std::max(e.div, static_cast<double>(fabsq(dv - divergence(p))));
    if (n == 3) {
      const t::quad c[3] = {d(2, 1) - d(1, 2), d(0, 2) - d(2, 0), d(1, 0) - d(0, 1)};
      for (std::size_t i = 0; i < 3; ++i) e.curl = std::max(e.curl, static_cast<double>(fabsq(c[i] - rot[i](p))));
    }
  }
  return e;
}

Outcome criterion_fd() {
  constexpr double kH = 1e-5, kTol = 1e-6;
  std::vector<std::pair<std::string, VecField>> fields;
  for (int ell : {0, 1}) {
    fields.emplace_back("tetra ell=" + std::to_string(ell) + " 4l+1", tetra_field({ell, TetraVariant::kDeg4l1}));
    fields.emplace_back("tetra ell=" + std::to_string(ell) + " 4l+3", tetra_field({ell, TetraVariant::kDeg4l3}));
    fields.emplace_back("octa ell=" + std::to_string(ell) + " 4l+3", octa_field({ell, OctaVariant::kDeg4l3}));
    fields.emplace_back("octa ell=" + std::to_string(ell) + " 4l+1", octa_field({ell, OctaVariant::kDeg4l1}));
  }
  fields.emplace_back("icosa even-part", induce_icosahedral(beltramize(cyclic_lift(icosa_seed_even_part()))));
  fields.emplace_back("icosa golden", induce_icosahedral(beltramize(cyclic_lift(icosa_seed_golden()))));
  fields.emplace_back("planar V", dihedral_order_zero_field());
  fields.emplace_back("planar Q", dihedral_four_thirds_field());

  std::size_t passed = 0;
  std::vector<std::string> notes;
  for (const auto& [name, f] : fields) {
    const FdErrors e = fd_errors(f, 100, kH, 7);
    if (e.worst() <= kTol) {
      ++passed;
      continue;
    }
    const FdErrors fine = fd_errors(f, 100, kH / 10, 7);
    notes.push_back(name + ": max error curl " + fmt("%.1e", e.curl) + ", div " + fmt("%.1e", e.div) +
                    ", laplacian " + fmt("%.1e", e.lap) + " (max |F| " + fmt("%.1e", e.scale) +
                    "); at h=1e-6 worst " + fmt("%.1e", fine.worst()) + ", ratio " +
                    fmt("%.0f", e.worst() / fine.worst()) + " ~ h^2 truncation");
  }
  if (passed != fields.size()) {
    notes.push_back(
        "symbolic operators are exact (see criteria 2-7); central differences with h=1e-5 carry truncation "
        "h^2 f'''/6, which exceeds 1e-6 for the degree-7 fields whose derivatives reach ~1e5 on [-3,3]^3");
  }
  return {passed == fields.size(),
          std::to_string(passed) + "/" + std::to_string(fields.size()) +
              " fields within 1e-6 at h=1e-5 (100 points in [-3,3]^n, quad-precision differences)",
          notes};
}

// First coordinate of the planar order-zero field on the diagonal, by hand.
long double diagonal_g(long double x) {
  const long double r3 = std::sqrt(3.0L);
  return -std::cos(x) + r3 * std::sin(x / 2) * std::sin(r3 * x / 2) + std::cos(r3 * x / 2) * std::cos(x / 2);
}

Outcome criterion_dynamics() {
  const CompiledField f(dihedral_order_zero_field());
  const auto zeros = find_diagonal_zeros(f, 20.0);
  double worst_g = 0.0;
  std::string taus;
  for (const auto& z : zeros) {
    worst_g = std::max({worst_g, z.residual, static_cast<double>(std::fabs(diagonal_g(z.x)))});
    taus += (taus.empty() ? "" : ", ") + fmt("%.6f", z.x);
  }
  const std::vector<double> start{1.0, 1.0};
  const DiagonalReport conf = diagonal_confinement(f, start, 0.0, 100.0, 0.01, zeros);

  bool bounded = true;
  std::string far;
  for (double x : {6.0, 6.5, 7.0, 7.5, 11.0}) {
    const std::vector<double> x0{x, 0.0};
    const Orbit o = integrate_orbit_both_ways(f, x0, 200.0, 200.0, 0.01);
    const bool inside = stays_within(o, 30.0);
    if (x <= 7.5) {
      bounded = bounded && inside;
    } else {
      far = inside ? "stays inside" : "leaves";
    }
  }
  const bool ok = conf.max_deviation <= 1e-9 && worst_g <= 1e-12 && !zeros.empty() && bounded;
  return {ok,
          "max|x-y| = " + fmt("%.1e", conf.max_deviation) + " on [0,100]; " + std::to_string(zeros.size()) +
              " diagonal zeros, max |g| = " + fmt("%.1e", worst_g) + "; orbits from x<=7.5 " +
              (bounded ? "stay in [-30,30]^2" : "LEAVE [-30,30]^2") + " for t in [-200,200]",
          {"tau on [0,20]: " + taus, "orbit from (11,0) (reported only): " + far + " [-30,30]^2"}};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Outcome criterion_determinism() {
  const fs::path root = fs::temp_directory_path() / "lambent_acceptance_figure1";
  fs::remove_all(root);
  for (const char* run : {"a", "b"}) {
    const std::string cmd = std::string(LAMBENT_CLI) + " figure1 -o " + (root / run).string() + " >/dev/null";
    const int status = std::system(cmd.c_str());
    if (!WIFEXITED(status) || WEXITSTATUS(status) != 0) return {false, "figure1 run failed", {}};
  }
  std::size_t files = 0;
  bool identical = true;
  for (const auto& e : fs::directory_iterator(root / "a")) {
    if (e.path().extension() != ".csv") continue;
    ++files;
    identical = identical && slurp(e.path()) == slurp(root / "b" / e.path().filename());
  }
  fs::remove_all(root);
  return {identical && files == 5,
          std::to_string(files) + " CSV files from two figure1 runs are " +
              (identical ? "byte-identical" : "DIFFERENT"),
          {}};
}

}  // namespace

int main() {
  report(1, "group orders", criterion_groups);
  report(2, "tetrahedral family", criterion_tetra);
  report(3, "octahedral family", criterion_octa);
  report(4, "divergence formulas", criterion_divergence);
  report(5, "icosahedral induction", criterion_icosa);
  report(6, "Galois symmetry", criterion_galois);
  report(7, "dihedral constraint solve", criterion_dihedral);
  report(8, "finite-difference cross-check", criterion_fd);
  report(9, "dynamics", criterion_dynamics);
  report(10, "determinism", criterion_determinism);
  std::printf("%d of 10 criteria passed\n", 10 - failures);
  return failures == 0 ? 0 : 1;
}
