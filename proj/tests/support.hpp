// Test-only helpers: random generators and independent numeric oracles.
#pragma once

#include <gmpxx.h>

#include <array>
#include <cmath>
#include <functional>
#include <random>
#include <vector>

#include "lambent/symfun.hpp"
#include "lambent/vecfield.hpp"

namespace lambent::testing {

inline Rational random_rational(std::mt19937_64& rng, int num_range = 9, int den_range = 6) {
  std::uniform_int_distribution<int> num(-num_range, num_range);
  std::uniform_int_distribution<int> den(1, den_range);
  Rational r(num(rng), den(rng));
  r.canonicalize();
  return r;
}

inline QuadExt random_quad(std::mt19937_64& rng, int d) {
  return QuadExt(random_rational(rng), random_rational(rng), d);
}

inline QuadExt random_nonzero_quad(std::mt19937_64& rng, int d) {
  for (;;) {
    QuadExt q = random_quad(rng, d);
    if (!q.is_zero()) return q;
  }
}

/// Sign of a + b sqrt(d) from a 256-bit floating evaluation (about 77 digits).
inline int high_precision_sign(const QuadExt& x) {
  mpf_class a(x.rational_part(), 256), b(x.surd_part(), 256), root(0, 256);
  root = sqrt(mpf_class(x.discriminant(), 256));
  mpf_class v(a + b * root, 256);
  return sgn(v);
}

/// Random term-class function: a few terms over a small pool of forms, so
/// that sums and products collide and cancel.
inline SymFun random_symfun(std::mt19937_64& rng, std::size_t dim, int d, int terms = 4, int max_deg = 2) {
  std::uniform_int_distribution<int> deg(0, max_deg);
  std::uniform_int_distribution<int> kind(0, 2);
  std::uniform_int_distribution<int> small(-2, 2);
  SymFun f(dim);
  for (int t = 0; t < terms; ++t) {
    Monomial m(dim, 0);
    int budget = deg(rng);
    std::uniform_int_distribution<std::size_t> axis(0, dim - 1);
    while (budget-- > 0) ++m[axis(rng)];
    ExactVector form(dim);
    for (std::size_t i = 0; i < dim; ++i) {
      form[i] = QuadExt(Rational(small(rng), 2), Rational(small(rng) % 2, 2), d);
    }
    f.add_term(random_nonzero_quad(rng, d), std::move(m), static_cast<TrigKind>(kind(rng)),
               LinearForm(std::move(form)));
  }
  return f;
}

inline std::vector<double> random_point(std::mt19937_64& rng, std::size_t dim, double half_width) {
  std::uniform_real_distribution<double> u(-half_width, half_width);
  std::vector<double> p(dim);
  for (auto& v : p) v = u(rng);
  return p;
}

using ScalarFn = std::function<double(const std::vector<double>&)>;

inline double central_difference(const ScalarFn& f, std::vector<double> p, std::size_t axis, double h) {
  const double x = p[axis];
  p[axis] = x + h;
  const double fp = f(p);
  p[axis] = x - h;
  const double fm = f(p);
  return (fp - fm) / (2.0 * h);
}

inline ScalarFn as_fn(const SymFun& f) {
  return [f](const std::vector<double>& p) { return eval_f64(f, p); };
}

/// Numerical divergence via nested central differences of the components.
inline double fd_divergence(const VecField& f, const std::vector<double>& p, double h) {
  double s = 0.0;
  for (std::size_t i = 0; i < f.dim(); ++i) s += central_difference(as_fn(f[i]), p, i, h);
  return s;
}

inline std::array<double, 3> fd_curl(const VecField& f, const std::vector<double>& p, double h) {
  auto d = [&](std::size_t comp, std::size_t axis) { return central_difference(as_fn(f[comp]), p, axis, h); };
  return {d(2, 1) - d(1, 2), d(0, 2) - d(2, 0), d(1, 0) - d(0, 1)};
}

/// Second central difference sum_i (f(p + h e_i) - 2 f(p) + f(p - h e_i)) / h^2.
inline double fd_laplacian(const SymFun& f, std::vector<double> p, double h) {
  const double f0 = eval_f64(f, p);
  double s = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const double x = p[i];
    p[i] = x + h;
    const double fp = eval_f64(f, p);
    p[i] = x - h;
    const double fm = eval_f64(f, p);
    p[i] = x;
    s += (fp - 2.0 * f0 + fm) / (h * h);
  }
  return s;
}

}  // namespace lambent::testing

#include <quadmath.h>

namespace lambent::testing {

using quad = __float128;

inline quad to_quad(const Rational& r) {
  mpf_class v(r, 256);
  mp_exp_t exp;
  std::string digits = v.get_str(exp, 10, 40);
  if (digits.empty()) return 0;
  bool neg = digits[0] == '-';
  if (neg) digits.erase(0, 1);
  std::string text = (neg ? "-0." : "0.") + digits + "e" + std::to_string(exp);
  return strtoflt128(text.c_str(), nullptr);
}

inline quad to_quad(const QuadExt& x) {
  return to_quad(x.rational_part()) + to_quad(x.surd_part()) * sqrtq(static_cast<quad>(x.discriminant()));
}

/// Quad-precision evaluator, independent of eval_f64 and CompiledField.
class QuadEvaluator {
 public:
  explicit QuadEvaluator(const SymFun& f) : dim_(f.dim()) {
    for (const auto& [key, c] : f.terms()) {
      Term t{to_quad(c), key.mono, key.kind, {}};
      for (std::size_t i = 0; i < dim_; ++i) t.form.push_back(to_quad(key.form[i]));
      terms_.push_back(std::move(t));
    }
  }

  quad operator()(const std::vector<quad>& p) const {
    quad sum = 0;
    for (const auto& t : terms_) {
      quad v = t.coeff;
      for (std::size_t i = 0; i < dim_; ++i)
        for (int e = 0; e < t.mono[i]; ++e) v *= p[i];
      if (t.kind != TrigKind::kNone) {
        quad arg = 0;
        for (std::size_t i = 0; i < dim_; ++i) arg += t.form[i] * p[i];
        v *= t.kind == TrigKind::kSin ? sinq(arg) : cosq(arg);
      }
      sum += v;
    }
    return sum;
  }

  /// Central difference along one axis with step h.
  quad diff(std::vector<quad> p, std::size_t axis, quad h) const {
    const quad x = p[axis];
    p[axis] = x + h;
    const quad fp = (*this)(p);
    p[axis] = x - h;
    const quad fm = (*this)(p);
    return (fp - fm) / (2 * h);
  }

  /// Second central difference along one axis with step h.
  quad diff2(std::vector<quad> p, std::size_t axis, quad h) const {
    const quad f0 = (*this)(p);
    const quad x = p[axis];
    p[axis] = x + h;
    const quad fp = (*this)(p);
    p[axis] = x - h;
    const quad fm = (*this)(p);
    return (fp - 2 * f0 + fm) / (h * h);
  }

 private:
  struct Term {
    quad coeff;
    Monomial mono;
    TrigKind kind;
    std::vector<quad> form;
  };
  std::size_t dim_;
  std::vector<Term> terms_;
};

inline std::vector<quad> to_quad(const std::vector<double>& p) { return {p.begin(), p.end()}; }

}  // namespace lambent::testing
