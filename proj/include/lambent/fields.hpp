#pragma once

#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "lambent/linear_system.hpp"
#include "lambent/vecfield.hpp"

namespace lambent {

enum class HarmonicKind { kP, kQ };

/// P_n(x, y) = Re (x + iy)^n or Q_n = Im (x + iy)^n in two variables.
/// P_0 = 1, Q_0 = 0, and P_{-1} = Q_{-1} = 0.
SymFun harmonic(int n, HarmonicKind kind);

/// The same polynomial in coordinates (x_u, x_v) of R^dim.
SymFun harmonic_in(int n, HarmonicKind kind, std::size_t dim, std::size_t u, std::size_t v);

class NonOrthonormalFrame : public std::invalid_argument {
 public:
  NonOrthonormalFrame() : std::invalid_argument("helmholtz frame vectors are not orthonormal") {}
};

/// Which frame vector feeds the trig factor of a Helmholtz scalar.
enum class TrigArgument { kThird, kSecond };

/// scale * Poly_n(a.x, b.x) * trig(c.x), a Helmholtz solution when (a, b, c)
/// is orthonormal. TrigArgument::kSecond uses trig(b.x) instead; that variant
/// is kept only so its Laplacian residual can be inspected.
SymFun helmholtz_scalar(const ExactVector& a, const ExactVector& b, const ExactVector& c, int n,
                        HarmonicKind poly, TrigKind trig, const QuadExt& scale,
                        TrigArgument arg = TrigArgument::kThird);

/// (G(x,y,z), G(y,z,x), G(z,x,y)).
VecField cyclic_lift(const SymFun& g);

enum class TetraVariant { kDeg4l1, kDeg4l3 };
enum class OctaVariant { kDeg4l3, kDeg4l1 };

struct TetraFamilySpec {
  int ell = 0;
  TetraVariant variant = TetraVariant::kDeg4l1;
};

struct OctaFamilySpec {
  int ell = 0;
  OctaVariant variant = OctaVariant::kDeg4l3;
};

inline constexpr int kDefaultEllCap = 8;

/// Solenoidal Helmholtz field before adding its curl. Throws
/// std::invalid_argument for ell < 0 or ell > ell_cap.
VecField tetra_precurl(const TetraFamilySpec& spec, int ell_cap = kDefaultEllCap);
VecField octa_precurl(const OctaFamilySpec& spec, int ell_cap = kDefaultEllCap);

/// beltramize(precurl(spec)).
VecField tetra_field(const TetraFamilySpec& spec, int ell_cap = kDefaultEllCap);
VecField octa_field(const OctaFamilySpec& spec, int ell_cap = kDefaultEllCap);

/// First coordinate transcribed directly from the closed-form family
/// formulas, independent of beltramize. Used to cross-check the constructor.
SymFun tetra_closed_form(const TetraFamilySpec& spec);
SymFun octa_closed_form(const OctaFamilySpec& spec);

/// Raised by beltramize when its input is not a solenoidal Helmholtz field.
class NotPreBeltrami : public std::domain_error {
 public:
  NotPreBeltrami(SymFun div_residual, VecField helmholtz_residual);
  const SymFun& divergence() const { return div_; }
  const VecField& helmholtz_residual() const { return helmholtz_; }

 private:
  SymFun div_;
  VecField helmholtz_;
};

/// V + curl V for V with div V = 0 and lap V = -V; the result is its own curl.
VecField beltramize(const VecField& v);

/// sum_{j=0}^{4} eta^{-j} . V(eta^j x).
VecField induce_icosahedral(const VecField& v);

/// y sin z + z sin y, the even part of the first tetrahedral scalar.
SymFun icosa_seed_even_part();
/// phi y sin z - phi^{-1} z sin y.
SymFun icosa_seed_golden();

// ----------------------------------------------------------- dihedral plane

/// Coefficients (a, ..., l) of the 12-term planar ansatz over Q(sqrt 3).
using DihedralAnsatz = std::array<QuadExt, 12>;

/// The linear forms l_{x,0}, l_{x,1}, l_{y,0}, l_{y,1}.
struct DihedralForms {
  LinearForm x0, x1, y0, y1;
};
DihedralForms dihedral_forms();

/// The 12 basis scalars multiplying a .. l, in order.
std::array<SymFun, 12> dihedral_basis();

/// G = sum coeff_k basis_k.
SymFun dihedral_scalar(const DihedralAnsatz& coeffs);

/// (G(x, y), G(y, x)).
VecField dihedral_ansatz_field(const DihedralAnsatz& coeffs);

/// Affine line of coefficient tuples solving the dihedral constraints,
/// parameterized by the first coefficient a.
struct DihedralFamily {
  AffineSolution solution;
  DihedralAnsatz base;       // member with a = 0
  DihedralAnsatz direction;  // change per unit of a

  DihedralAnsatz at(const QuadExt& a) const;
};

/// The (2xy - x^2 + y^2, 2xy + x^2 - y^2) pair.
SymFun varpi();
SymFun varrho();

/// Solves, exactly: degree-2 Taylor part of G equal to varpi; solenoidality
/// of (G(x,y), G(y,x)); and invariance under the order-3 rotation.
DihedralFamily solve_dihedral_constraints();

/// The order-zero member (a = 0) scaled by 3/8.
VecField dihedral_order_zero_field();
/// The a = 4/3 member scaled by 3/2.
VecField dihedral_four_thirds_field();

}  // namespace lambent
