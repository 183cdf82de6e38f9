#include "lambent/symfun.hpp"

#include <cmath>
#include <numeric>

#include "lambent/errors.hpp"

namespace lambent {

int total_degree(const Monomial& m) { return std::accumulate(m.begin(), m.end(), 0); }

// ---------------------------------------------------------------- LinearForm

LinearForm LinearForm::axis(std::size_t dim, std::size_t i) {
  ExactVector v(dim);
  v[i] = 1;
  return LinearForm(std::move(v));
}

int LinearForm::orientation() const {
  for (const auto& c : coeffs_.entries()) {
    if (int s = quad_sign(c); s != 0) return s;
  }
  return 0;
}

LinearForm LinearForm::operator-() const {
  ExactVector v(dim());
  for (std::size_t i = 0; i < dim(); ++i) v[i] = -coeffs_[i];
  return LinearForm(std::move(v));
}

LinearForm operator+(const LinearForm& lhs, const LinearForm& rhs) {
  if (lhs.dim() != rhs.dim()) throw DimensionMismatch("linear forms of different dimension");
  ExactVector v(lhs.dim());
  for (std::size_t i = 0; i < lhs.dim(); ++i) v[i] = lhs[i] + rhs[i];
  return LinearForm(std::move(v));
}

LinearForm operator-(const LinearForm& lhs, const LinearForm& rhs) { return lhs + (-rhs); }

LinearForm operator*(const QuadExt& s, const LinearForm& f) {
  ExactVector v(f.dim());
  for (std::size_t i = 0; i < f.dim(); ++i) v[i] = s * f[i];
  return LinearForm(std::move(v));
}

double LinearForm::eval(std::span<const double> point) const {
  double s = 0.0;
  for (std::size_t i = 0; i < dim(); ++i) {
    if (!coeffs_[i].is_zero()) s += coeffs_[i].to_double() * point[i];
  }
  return s;
}

bool TermKeyLess::operator()(const TermKey& lhs, const TermKey& rhs) const {
  const int dl = total_degree(lhs.mono);
  const int dr = total_degree(rhs.mono);
  if (dl != dr) return dl < dr;
  if (lhs.kind != rhs.kind) return lhs.kind < rhs.kind;
  // Descending in the rest, so x comes before y before z as in hand-written displays.
  if (lhs.mono != rhs.mono) return lhs.mono > rhs.mono;
  return lhs.form > rhs.form;
}

// ------------------------------------------------------------------- SymFun

SymFun SymFun::constant(std::size_t dim, const QuadExt& c) {
  SymFun f(dim);
  f.add_term(c, Monomial(dim, 0), TrigKind::kNone, LinearForm(ExactVector(dim)));
  return f;
}

SymFun SymFun::coordinate(std::size_t dim, std::size_t axis) {
  Monomial m(dim, 0);
  m.at(axis) = 1;
  return monomial(1, std::move(m));
}

SymFun SymFun::monomial(const QuadExt& c, Monomial mono) {
  SymFun f(mono.size());
  const std::size_t dim = mono.size();
  f.add_term(c, std::move(mono), TrigKind::kNone, LinearForm(ExactVector(dim)));
  return f;
}

SymFun SymFun::linear(const LinearForm& form) {
  SymFun f(form.dim());
  for (std::size_t i = 0; i < form.dim(); ++i) {
    Monomial m(form.dim(), 0);
    m[i] = 1;
    f.add_term(form[i], std::move(m), TrigKind::kNone, LinearForm(ExactVector(form.dim())));
  }
  return f;
}

SymFun SymFun::sin(const LinearForm& form) {
  SymFun f(form.dim());
  f.add_term(1, Monomial(form.dim(), 0), TrigKind::kSin, form);
  return f;
}

SymFun SymFun::cos(const LinearForm& form) {
  SymFun f(form.dim());
  f.add_term(1, Monomial(form.dim(), 0), TrigKind::kCos, form);
  return f;
}

bool SymFun::is_polynomial() const {
  for (const auto& [key, c] : terms_)
    if (key.kind != TrigKind::kNone) return false;
  return true;
}

void SymFun::add_term(const QuadExt& coeff, Monomial mono, TrigKind kind, LinearForm form) {
  if (mono.size() != dim_ || form.dim() != dim_) {
    throw DimensionMismatch("term dimension does not match function dimension");
  }
  d_ = join_discriminant(d_, coeff.discriminant());
  d_ = join_discriminant(d_, form.coeffs().discriminant());
  if (coeff.is_zero()) return;
  QuadExt c = coeff;
  if (kind != TrigKind::kNone) {
    const int orient = form.orientation();
    if (orient == 0) {
      // sin(0) = 0, cos(0) = 1
      if (kind == TrigKind::kSin) return;
      kind = TrigKind::kNone;
    } else if (orient < 0) {
      form = -form;
      if (kind == TrigKind::kSin) c = -c;
    }
  }
  if (kind == TrigKind::kNone) form = LinearForm(ExactVector(dim_));

  TermKey key{std::move(mono), kind, std::move(form)};
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(std::move(key), std::move(c));
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

namespace {

// Product of two single trig factors as a sum of at most two single factors.
struct HalfTerm {
  int sign;  // coefficient is sign / 2
  TrigKind kind;
  LinearForm form;
};

std::vector<HalfTerm> product_to_sum(TrigKind k1, const LinearForm& f1, TrigKind k2, const LinearForm& f2) {
  const LinearForm sum = f1 + f2;
  const LinearForm diff = f1 - f2;
  using K = TrigKind;
  if (k1 == K::kSin && k2 == K::kSin) return {{+1, K::kCos, diff}, {-1, K::kCos, sum}};
  if (k1 == K::kSin && k2 == K::kCos) return {{+1, K::kSin, sum}, {+1, K::kSin, diff}};
  if (k1 == K::kCos && k2 == K::kSin) return {{+1, K::kSin, sum}, {-1, K::kSin, diff}};
  return {{+1, K::kCos, diff}, {+1, K::kCos, sum}};
}

Monomial add_monomials(const Monomial& a, const Monomial& b) {
  Monomial m(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) m[i] = a[i] + b[i];
  return m;
}

}  // namespace

void SymFun::add_raw(const RawTerm& raw) {
  if (raw.mono.size() != dim_) throw DimensionMismatch("raw term dimension mismatch");
  if (raw.trig.empty()) {
    add_term(raw.coeff, raw.mono, TrigKind::kNone, LinearForm(ExactVector(dim_)));
    return;
  }
  if (raw.trig.size() == 1) {
    add_term(raw.coeff, raw.mono, raw.trig[0].kind, raw.trig[0].form);
    return;
  }
  const QuadExt half = raw.coeff * QuadExt(Rational(1, 2));
  const auto& a = raw.trig[raw.trig.size() - 2];
  const auto& b = raw.trig[raw.trig.size() - 1];
  for (auto& h : product_to_sum(a.kind, a.form, b.kind, b.form)) {
    RawTerm next{h.sign > 0 ? half : -half, raw.mono,
                 std::vector<TrigFactor>(raw.trig.begin(), raw.trig.end() - 2)};
    next.trig.push_back({h.kind, std::move(h.form)});
    add_raw(next);
  }
}

void SymFun::check_compatible(const SymFun& rhs) const {
  if (dim_ != rhs.dim_) throw DimensionMismatch("functions of different dimension");
  join_discriminant(d_, rhs.d_);
}

SymFun SymFun::operator-() const {
  SymFun out = *this;
  for (auto& [key, c] : out.terms_) c = -c;
  return out;
}

SymFun& SymFun::operator+=(const SymFun& rhs) {
  check_compatible(rhs);
  for (const auto& [key, c] : rhs.terms_) add_term(c, key.mono, key.kind, key.form);
  d_ = join_discriminant(d_, rhs.d_);
  return *this;
}

SymFun& SymFun::operator-=(const SymFun& rhs) {
  check_compatible(rhs);
  for (const auto& [key, c] : rhs.terms_) add_term(-c, key.mono, key.kind, key.form);
  d_ = join_discriminant(d_, rhs.d_);
  return *this;
}

SymFun& SymFun::operator*=(const QuadExt& s) {
  d_ = join_discriminant(d_, s.discriminant());
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [key, c] : terms_) c *= s;
  return *this;
}

SymFun operator*(const SymFun& lhs, const SymFun& rhs) {
  lhs.check_compatible(rhs);
  SymFun out(lhs.dim_);
  out.d_ = join_discriminant(lhs.d_, rhs.d_);
  const QuadExt half(Rational(1, 2));
  for (const auto& [k1, c1] : lhs.terms_) {
    for (const auto& [k2, c2] : rhs.terms_) {
      const QuadExt c = c1 * c2;
      Monomial m = add_monomials(k1.mono, k2.mono);
      if (k1.kind == TrigKind::kNone) {
        out.add_term(c, std::move(m), k2.kind, k2.form);
      } else if (k2.kind == TrigKind::kNone) {
        out.add_term(c, std::move(m), k1.kind, k1.form);
      } else {
        const QuadExt hc = c * half;
        for (auto& h : product_to_sum(k1.kind, k1.form, k2.kind, k2.form)) {
          out.add_term(h.sign > 0 ? hc : -hc, m, h.kind, std::move(h.form));
        }
      }
    }
  }
  return out;
}

SymFun normalize(std::size_t dim, const std::vector<RawTerm>& raw_terms) {
  SymFun f(dim);
  for (const auto& t : raw_terms) f.add_raw(t);
  return f;
}

// --------------------------------------------------------------- calculus

SymFun partial(const SymFun& f, std::size_t axis) {
  if (axis >= f.dim()) throw DimensionMismatch("partial derivative axis out of range");
  SymFun out(f.dim());
  for (const auto& [key, c] : f.terms()) {
    if (const int e = key.mono[axis]; e > 0) {
      Monomial m = key.mono;
      m[axis] = e - 1;
      out.add_term(c * QuadExt(e), std::move(m), key.kind, key.form);
    }
    if (key.kind == TrigKind::kNone) continue;
    const QuadExt& slope = key.form[axis];
    if (slope.is_zero()) continue;
    if (key.kind == TrigKind::kSin) {
      out.add_term(c * slope, key.mono, TrigKind::kCos, key.form);
    } else {
      out.add_term(-(c * slope), key.mono, TrigKind::kSin, key.form);
    }
  }
  return out;
}

SymFun pow(const SymFun& f, int k) {
  if (k < 0) throw std::invalid_argument("negative power of a SymFun");
  SymFun result = SymFun::constant(f.dim(), 1);
  SymFun base = f;
  for (; k > 0; k >>= 1) {
    if (k & 1) result = result * base;
    if (k > 1) base = base * base;
  }
  return result;
}

SymFun substitute_linear(const SymFun& f, const ExactMatrix& a) {
  const std::size_t n = f.dim();
  if (a.dim() != n) throw DimensionMismatch("substitution matrix does not match function dimension");
  const ExactMatrix at = a.transpose();

  // powers[i][e] = (row_i(A) . x)^e, filled lazily
  std::vector<std::vector<SymFun>> powers(n);
  auto power = [&](std::size_t i, int e) -> const SymFun& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(SymFun::constant(n, 1));
    while (static_cast<int>(cache.size()) <= e) {
      cache.push_back(cache.back() * SymFun::linear(LinearForm(a.row(i))));
    }
    return cache[e];
  };

  SymFun out(n);
  for (const auto& [key, c] : f.terms()) {
    SymFun poly = SymFun::constant(n, c);
    for (std::size_t i = 0; i < n; ++i) {
      if (key.mono[i] > 0) poly = poly * power(i, key.mono[i]);
    }
    if (key.kind == TrigKind::kNone) {
      out += poly;
      continue;
    }
    // l . (A x) = (A^T l) . x
    const LinearForm moved(at.apply(key.form.coeffs()));
    for (const auto& [pk, pc] : poly.terms()) out.add_term(pc, pk.mono, key.kind, moved);
  }
  return out;
}

SymFun parity_negate(const SymFun& f) {
  SymFun out(f.dim());
  for (const auto& [key, c] : f.terms()) {
    const bool odd = (total_degree(key.mono) % 2 == 1) != (key.kind == TrigKind::kSin);
    out.add_term(odd ? -c : c, key.mono, key.kind, key.form);
  }
  return out;
}

SymFun even_part(const SymFun& f) { return (f + parity_negate(f)) * QuadExt(Rational(1, 2)); }

SymFun taylor_part(const SymFun& f, int k) {
  if (k < 0) throw std::invalid_argument("negative Taylor degree");
  SymFun out(f.dim());
  for (const auto& [key, c] : f.terms()) {
    const int q = k - total_degree(key.mono);
    if (q < 0) continue;
    const SymFun mono = SymFun::monomial(c, key.mono);
    if (key.kind == TrigKind::kNone) {
      if (q == 0) out += mono;
      continue;
    }
    // sin u = sum (-1)^j u^(2j+1)/(2j+1)!, cos u = sum (-1)^j u^(2j)/(2j)!
    const bool wants_odd = key.kind == TrigKind::kSin;
    if ((q % 2 == 1) != wants_odd) continue;
    const int j = wants_odd ? (q - 1) / 2 : q / 2;
    mpz_class fact;
    mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(q));
    Rational scale(j % 2 == 0 ? 1 : -1);
    scale /= Rational(fact);
    out += mono * pow(SymFun::linear(key.form), q) * QuadExt(scale);
  }
  return out;
}

SymFun galois_conj(const SymFun& f) {
  SymFun out(f.dim());
  for (const auto& [key, c] : f.terms()) {
    ExactVector v(f.dim());
    for (std::size_t i = 0; i < f.dim(); ++i) v[i] = key.form[i].conjugate();
    out.add_term(c.conjugate(), key.mono, key.kind, LinearForm(std::move(v)));
  }
  return out;
}

double eval_f64(const SymFun& f, std::span<const double> point) {
  if (point.size() != f.dim()) throw DimensionMismatch("evaluation point has wrong dimension");
  double sum = 0.0;
  for (const auto& [key, c] : f.terms()) {
    double v = c.to_double();
    for (std::size_t i = 0; i < f.dim(); ++i) {
      if (key.mono[i] > 0) v *= std::pow(point[i], key.mono[i]);
    }
    if (key.kind == TrigKind::kSin) v *= std::sin(key.form.eval(point));
    if (key.kind == TrigKind::kCos) v *= std::cos(key.form.eval(point));
    sum += v;
  }
  return sum;
}

}  // namespace lambent
