#include "lambent/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>

#include "lambent/errors.hpp"

namespace lambent {

CompiledField::CompiledField(const VecField& f) : dim_(f.dim()) {
  if (dim_ < 1 || dim_ > 3) throw DimensionMismatch("compiled fields support dimensions 1 to 3");
  for (const auto& comp : f.components()) {
    std::vector<Term> terms;
    for (const auto& [key, c] : comp.terms()) {
      Term t{c.to_double(), {0, 0, 0}, key.kind, {0.0, 0.0, 0.0}};
      for (std::size_t i = 0; i < dim_; ++i) {
        t.exps[i] = key.mono[i];
        t.form[i] = key.form[i].to_double();
      }
      terms.push_back(t);
    }
    components_.push_back(std::move(terms));
  }
}

double CompiledField::eval_component(std::size_t i, std::span<const double> x) const {
  double sum = 0.0;
  for (const auto& t : components_[i]) {
    double v = t.coeff;
    for (std::size_t k = 0; k < dim_; ++k) {
      for (int e = 0; e < t.exps[k]; ++e) v *= x[k];
    }
    if (t.kind != TrigKind::kNone) {
      double arg = 0.0;
      for (std::size_t k = 0; k < dim_; ++k) arg += t.form[k] * x[k];
      v *= t.kind == TrigKind::kSin ? std::sin(arg) : std::cos(arg);
    }
    sum += v;
  }
  return sum;
}

void CompiledField::eval(std::span<const double> x, std::span<double> out) const {
  for (std::size_t i = 0; i < dim_; ++i) out[i] = eval_component(i, x);
}

std::vector<double> CompiledField::operator()(std::span<const double> x) const {
  std::vector<double> out(dim_);
  eval(x, out);
  return out;
}

NonFiniteState::NonFiniteState(double last_good_time)
    : std::runtime_error("non-finite state after t = " + std::to_string(last_good_time)), t_(last_good_time) {}

void rk4_step(const CompiledField& f, std::span<double> x, double h) {
  const std::size_t n = f.dim();
  std::array<double, 3> k1{}, k2{}, k3{}, k4{}, tmp{};
  f.eval(x, k1);
  for (std::size_t i = 0; i < n; ++i) tmp[i] = x[i] + 0.5 * h * k1[i];
  f.eval(std::span(tmp.data(), n), k2);
  for (std::size_t i = 0; i < n; ++i) tmp[i] = x[i] + 0.5 * h * k2[i];
  f.eval(std::span(tmp.data(), n), k3);
  for (std::size_t i = 0; i < n; ++i) tmp[i] = x[i] + h * k3[i];
  f.eval(std::span(tmp.data(), n), k4);
  for (std::size_t i = 0; i < n; ++i) x[i] += h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
}

namespace {

// Samples at t0 + k h for k = 0..steps, h signed.
std::vector<OrbitSample> trace(const CompiledField& f, std::span<const double> x0, double t0, double h,
                               std::size_t steps) {
  std::vector<OrbitSample> out;
  out.reserve(steps + 1);
  std::vector<double> x(x0.begin(), x0.end());
  out.push_back({t0, x});
  for (std::size_t k = 1; k <= steps; ++k) {
    rk4_step(f, x, h);
    if (!std::all_of(x.begin(), x.end(), [](double v) { return std::isfinite(v); })) {
      throw NonFiniteState(out.back().t);
    }
    out.push_back({t0 + static_cast<double>(k) * h, x});
  }
  return out;
}

std::size_t step_count(double span, double dt) {
  return static_cast<std::size_t>(std::ceil(span / dt - 1e-9));
}

}  // namespace

Orbit integrate_orbit(const CompiledField& f, std::span<const double> x0, double t0, double t1, double dt,
                      Integrator method) {
  if (!(dt > 0.0)) throw std::invalid_argument("time step must be positive");
  if (!(t1 > t0)) throw std::invalid_argument("t1 must exceed t0");
  if (x0.size() != f.dim()) throw DimensionMismatch("initial point has wrong dimension");
  const std::size_t steps = step_count(t1 - t0, dt);
  const double h = (t1 - t0) / static_cast<double>(steps);
  Orbit orbit{trace(f, x0, t0, h, steps), std::vector<double>(x0.begin(), x0.end()), dt, method};
  orbit.samples.back().t = t1;
  return orbit;
}

Orbit integrate_orbit_both_ways(const CompiledField& f, std::span<const double> x0, double t_back, double t_fwd,
                                double dt) {
  if (!(dt > 0.0)) throw std::invalid_argument("time step must be positive");
  if (t_back < 0.0 || t_fwd < 0.0 || t_back + t_fwd <= 0.0) throw std::invalid_argument("bad time span");
  if (x0.size() != f.dim()) throw DimensionMismatch("initial point has wrong dimension");
  std::vector<OrbitSample> samples;
  if (t_back > 0.0) {
    const std::size_t steps = step_count(t_back, dt);
    auto back = trace(f, x0, 0.0, -t_back / static_cast<double>(steps), steps);
    back.back().t = -t_back;
    samples.assign(back.rbegin(), back.rend());
  }
  if (t_fwd > 0.0) {
    const std::size_t steps = step_count(t_fwd, dt);
    auto fwd = trace(f, x0, 0.0, t_fwd / static_cast<double>(steps), steps);
    fwd.back().t = t_fwd;
    samples.insert(samples.end(), fwd.begin() + (samples.empty() ? 0 : 1), fwd.end());
  } else {
    samples.back().t = 0.0;
  }
  return Orbit{std::move(samples), std::vector<double>(x0.begin(), x0.end()), dt, Integrator::kRk4};
}

std::vector<DiagonalZero> find_diagonal_zeros(const CompiledField& f, double x_max, double scan_step) {
  if (!(x_max > 0.0)) throw std::invalid_argument("x_max must be positive");
  if (!(scan_step > 0.0)) throw std::invalid_argument("scan step must be positive");
  if (f.dim() != 2) throw DimensionMismatch("diagonal zeros need a 2-D field");
  auto g = [&](double x) {
    const std::array<double, 2> p{x, x};
    return f.eval_component(0, p);
  };
  std::vector<DiagonalZero> zeros;
  const auto n = static_cast<std::size_t>(std::floor(x_max / scan_step + 1e-9));
  double lo = 0.0;
  double glo = g(lo);
  if (glo == 0.0) zeros.push_back({0.0, -scan_step, scan_step, 0.0});
  for (std::size_t k = 1; k <= n; ++k) {
    const double hi = std::min(x_max, static_cast<double>(k) * scan_step);
    const double ghi = g(hi);
    if (ghi == 0.0) {
      zeros.push_back({hi, hi - scan_step, hi + scan_step, 0.0});
    } else if (glo != 0.0 && (glo < 0.0) != (ghi < 0.0)) {
      double a = lo, b = hi, ga = glo;
      for (;;) {
        const double mid = 0.5 * (a + b);
        if (mid <= a || mid >= b) break;
        const double gm = g(mid);
        if (gm == 0.0) {
          a = b = mid;
          break;
        }
        if ((gm < 0.0) == (ga < 0.0)) {
          a = mid;
          ga = gm;
        } else {
          b = mid;
        }
      }
      const double x = std::abs(g(a)) <= std::abs(g(b)) ? a : b;
      zeros.push_back({x, lo, hi, std::abs(g(x))});
    }
    lo = hi;
    glo = ghi;
  }
  return zeros;
}

DiagonalReport diagonal_confinement(const CompiledField& f, std::span<const double> x0, double t0, double t1,
                                    double dt, const std::vector<DiagonalZero>& zeros) {
  if (f.dim() != 2 || x0.size() != 2) throw DimensionMismatch("diagonal confinement needs a 2-D field");
  if (x0[0] != x0[1]) throw std::invalid_argument("initial point is not on the diagonal");
  DiagonalReport report;
  report.orbit = integrate_orbit(f, x0, t0, t1, dt);
  for (const auto& s : report.orbit.samples) {
    report.max_deviation = std::max(report.max_deviation, std::abs(s.x[0] - s.x[1]));
  }
  report.final_position = report.orbit.back().x[0];
  for (const auto& z : zeros) {
    if (z.x <= x0[0]) report.lower_zero = z.x;
    if (z.x >= x0[0] && !report.upper_zero) report.upper_zero = z.x;
  }
  return report;
}

void write_orbit_csv(std::ostream& os, const Orbit& orbit) {
  static const char* names[] = {"x", "y", "z"};
  const std::size_t n = orbit.initial.size();
  os << "t";
  for (std::size_t i = 0; i < n; ++i) os << "," << names[i];
  os << "\n";
  char buf[64];
  for (const auto& s : orbit.samples) {
    std::snprintf(buf, sizeof buf, "%.17g", s.t);
    os << buf;
    for (double v : s.x) {
      std::snprintf(buf, sizeof buf, ",%.17g", v);
      os << buf;
    }
    os << "\n";
  }
}

void write_orbits_svg(std::ostream& os, const std::vector<Orbit>& orbits, const SvgStyle& style) {
  static const char* colors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"};
  const double w = style.half_width;
  char buf[128];
  std::snprintf(buf, sizeof buf, "viewBox=\"%g %g %g %g\"", -w, -w, 2 * w, 2 * w);
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << style.pixels << "\" height=\"" << style.pixels
     << "\" " << buf << ">\n";
  os << "<rect x=\"" << -w << "\" y=\"" << -w << "\" width=\"" << 2 * w << "\" height=\"" << 2 * w
     << "\" fill=\"white\"/>\n";
  // Flip so that y grows upward.
  os << "<g transform=\"scale(1,-1)\" fill=\"none\" stroke-width=\"0.08\">\n";
  os << "<line x1=\"" << -w << "\" y1=\"0\" x2=\"" << w << "\" y2=\"0\" stroke=\"#bbbbbb\"/>\n";
  os << "<line x1=\"0\" y1=\"" << -w << "\" x2=\"0\" y2=\"" << w << "\" stroke=\"#bbbbbb\"/>\n";
  for (std::size_t k = 0; k < orbits.size(); ++k) {
    os << "<polyline stroke=\"" << colors[k % 6] << "\" points=\"";
    bool first = true;
    for (const auto& s : orbits[k].samples) {
      std::snprintf(buf, sizeof buf, "%s%.5f,%.5f", first ? "" : " ", s.x[0], s.x.size() > 1 ? s.x[1] : 0.0);
      os << buf;
      first = false;
    }
    os << "\"/>\n";
  }
  os << "</g>\n</svg>\n";
}

bool stays_within(const Orbit& orbit, double half_width) {
  for (const auto& s : orbit.samples) {
    for (double v : s.x)
      if (std::abs(v) > half_width) return false;
  }
  return true;
}

}  // namespace lambent
