// Hand-entered displays of the published fields, built term by term from
// products of sines, cosines and monomials, independent of the constructors.
#pragma once

#include <vector>

#include "lambent/symfun.hpp"

namespace lambent::fixtures {

inline SymFun x3() { return SymFun::coordinate(3, 0); }
inline SymFun y3() { return SymFun::coordinate(3, 1); }
inline SymFun z3() { return SymFun::coordinate(3, 2); }
inline SymFun sin3(QuadExt a, QuadExt b, QuadExt c) { return SymFun::sin(LinearForm{a, b, c}); }
inline SymFun cos3(QuadExt a, QuadExt b, QuadExt c) { return SymFun::cos(LinearForm{a, b, c}); }
inline SymFun mono3(long c, int i, int j, int k) { return SymFun::monomial(c, {i, j, k}); }

inline SymFun x2() { return SymFun::coordinate(2, 0); }
inline SymFun y2() { return SymFun::coordinate(2, 1); }
inline SymFun sin2(QuadExt a, QuadExt b) { return SymFun::sin(LinearForm{a, b}); }
inline SymFun cos2(QuadExt a, QuadExt b) { return SymFun::cos(LinearForm{a, b}); }

/// Tetrahedral first family, ell = 0.
inline SymFun tetra_l0_first() {
  return y3() * sin3(0, 0, 1) + z3() * sin3(0, 1, 0) + x3() * cos3(0, 1, 0) - x3() * cos3(0, 0, 1);
}

/// Tetrahedral first family, ell = 1.
inline SymFun tetra_l1_first() {
  const SymFun q5xy = mono3(5, 4, 1, 0) - mono3(10, 2, 3, 0) + mono3(1, 0, 5, 0);
  const SymFun q5xz = mono3(5, 4, 0, 1) - mono3(10, 2, 0, 3) + mono3(1, 0, 0, 5);
  const SymFun q5zx = mono3(5, 1, 0, 4) - mono3(10, 3, 0, 2) + mono3(1, 5, 0, 0);
  const SymFun q5yx = mono3(5, 1, 4, 0) - mono3(10, 3, 2, 0) + mono3(1, 5, 0, 0);
  return q5xy * sin3(0, 0, 1) + q5xz * sin3(0, 1, 0) + q5zx * cos3(0, 1, 0) - q5yx * cos3(0, 0, 1);
}

/// Tetrahedral second family, ell = 0.
inline SymFun tetra_l0_second() {
  return (mono3(3, 2, 1, 0) - mono3(1, 0, 3, 0)) * sin3(0, 0, 1) +
         (mono3(3, 2, 0, 1) - mono3(1, 0, 0, 3)) * sin3(0, 1, 0) + mono3(12, 0, 1, 1) * cos3(1, 0, 0) +
         (mono3(3, 1, 0, 2) - mono3(1, 3, 0, 0)) * cos3(0, 1, 0) -
         (mono3(3, 1, 2, 0) - mono3(1, 3, 0, 0)) * cos3(0, 0, 1) +
         (mono3(6, 0, 0, 2) - mono3(6, 0, 2, 0)) * sin3(1, 0, 0) + mono3(12, 1, 0, 0) * cos3(0, 0, 1) -
         mono3(12, 1, 0, 0) * cos3(0, 1, 0);
}

/// Octahedral first family, ell = 0.
inline SymFun octa_l0_first() {
  return (mono3(3, 2, 1, 0) - mono3(1, 0, 3, 0)) * sin3(0, 0, 1) -
         (mono3(3, 2, 0, 1) - mono3(1, 0, 0, 3)) * sin3(0, 1, 0) +
         (mono3(3, 1, 0, 2) - mono3(1, 3, 0, 0)) * cos3(0, 1, 0) +
         (mono3(3, 1, 2, 0) - mono3(1, 3, 0, 0)) * cos3(0, 0, 1);
}

/// Octahedral second family, ell = 0.
inline SymFun octa_l0_second() {
  return y3() * sin3(0, 0, 1) - z3() * sin3(0, 1, 0) + x3() * cos3(0, 1, 0) - sin3(1, 0, 0) * QuadExt(2) +
         x3() * cos3(0, 0, 1);
}

/// First coordinate of the icosahedral field induced from y sin z + z sin y.
inline SymFun icosa_induced_first() {
  const QuadExt p = QuadExt::phi(), ip = p.inverse(), h(Rational(1, 2));
  const QuadExt two(2);
  const SymFun x = x3(), y = y3(), z = z3();
  return two * x * sin3(h, 0, 0) * sin3(0, p * h, 0) * sin3(0, 0, ip * h) -
         two * p * x * sin3(ip * h, 0, 0) * sin3(0, h, 0) * sin3(0, 0, p * h) +
         two * ip * x * sin3(p * h, 0, 0) * sin3(0, ip * h, 0) * sin3(0, 0, h) + y * sin3(0, 0, 1) +
         two * y * cos3(h, 0, 0) * cos3(0, p * h, 0) * sin3(0, 0, ip * h) -
         two * y * cos3(ip * h, 0, 0) * cos3(0, h, 0) * sin3(0, 0, p * h) + z * sin3(0, 1, 0) -
         two * z * cos3(h, 0, 0) * sin3(0, p * h, 0) * cos3(0, 0, ip * h) +
         two * z * cos3(p * h, 0, 0) * sin3(0, ip * h, 0) * cos3(0, 0, h);
}

/// The planar order-zero field, first coordinate.
inline SymFun dihedral_v_first() {
  const QuadExt h(Rational(1, 2)), s3 = QuadExt::sqrt3(), hs3 = s3 * h;
  return -cos2(0, 1) + s3 * sin2(h, 0) * sin2(0, hs3) + cos2(hs3, 0) * cos2(0, h);
}

/// The planar a = 4/3 field, first coordinate.
inline SymFun dihedral_q_first() {
  const QuadExt h(Rational(1, 2)), s3 = QuadExt::sqrt3(), hs3 = s3 * h, two(2);
  const SymFun x = x2(), y = y2();
  return two * cos2(1, 0) + two * cos2(0, 1) + two * x * sin2(0, 1) +
         two * s3 * sin2(hs3, 0) * sin2(0, h) - x * cos2(hs3, 0) * sin2(0, h) +
         s3 * y * sin2(hs3, 0) * cos2(0, h) - two * cos2(h, 0) * cos2(0, hs3) +
         s3 * y * cos2(h, 0) * sin2(0, hs3) - two * s3 * sin2(h, 0) * sin2(0, hs3) -
         QuadExt(3) * x * sin2(h, 0) * cos2(0, hs3) - two * cos2(hs3, 0) * cos2(0, h);
}

/// The printed coefficient tuples (a, ..., l) of the planar ansatz.
inline std::vector<QuadExt> dihedral_order_zero_tuple() {
  const QuadExt s3 = QuadExt::sqrt3();
  const QuadExt f43(Rational(4, 3));
  return {0, Rational(-8, 3), -f43 * s3, f43 * s3, f43, f43, 0, 0, 0, 0, 0, 0};
}

inline std::vector<QuadExt> dihedral_q_tuple() {
  const QuadExt s3 = QuadExt::sqrt3();
  return {2, 2, s3 - 1, -s3 - 1, -s3 - 1, s3 - 1, 0, 2, -s3, s3, 1, 1};
}

}  // namespace lambent::fixtures
