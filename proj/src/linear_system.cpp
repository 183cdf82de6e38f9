#include "lambent/linear_system.hpp"

#include "lambent/errors.hpp"

namespace lambent {

AffineSolution solve_linear_system(std::vector<std::vector<QuadExt>> a, std::vector<QuadExt> b,
                                   std::size_t unknowns) {
  if (a.size() != b.size()) throw DimensionMismatch("row count and right-hand side differ");
  for (const auto& row : a) {
    if (row.size() != unknowns) throw DimensionMismatch("row length differs from unknown count");
  }
  AffineSolution sol;
  std::size_t r = 0;
  for (std::size_t col = 0; col < unknowns && r < a.size(); ++col) {
    std::size_t p = r;
    while (p < a.size() && a[p][col].is_zero()) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[r]);
    std::swap(b[p], b[r]);
    const QuadExt inv = a[r][col].inverse();
    for (auto& e : a[r]) e *= inv;
    b[r] *= inv;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == r || a[i][col].is_zero()) continue;
      const QuadExt f = a[i][col];
      for (std::size_t c = 0; c < unknowns; ++c) {
        if (!a[r][c].is_zero()) a[i][c] -= f * a[r][c];
      }
      b[i] -= f * b[r];
    }
    sol.pivot_columns.push_back(col);
    ++r;
  }
  sol.rank = r;
  for (std::size_t i = r; i < a.size(); ++i) {
    if (!b[i].is_zero()) throw InconsistentSystem();
  }

  sol.particular.assign(unknowns, QuadExt());
  for (std::size_t i = 0; i < r; ++i) sol.particular[sol.pivot_columns[i]] = b[i];

  std::vector<bool> is_pivot(unknowns, false);
  for (auto c : sol.pivot_columns) is_pivot[c] = true;
  for (std::size_t free = 0; free < unknowns; ++free) {
    if (is_pivot[free]) continue;
    std::vector<QuadExt> v(unknowns);
    v[free] = 1;
    for (std::size_t i = 0; i < r; ++i) v[sol.pivot_columns[i]] = -a[i][free];
    sol.nullspace.push_back(std::move(v));
  }
  return sol;
}

}  // namespace lambent
