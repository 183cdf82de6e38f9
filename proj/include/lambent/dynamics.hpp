#pragma once

#include <array>
#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "lambent/vecfield.hpp"

namespace lambent {

/// Double-precision snapshot of a VecField for fast repeated evaluation.
class CompiledField {
 public:
  explicit CompiledField(const VecField& f);

  std::size_t dim() const { return dim_; }
  void eval(std::span<const double> x, std::span<double> out) const;
  std::vector<double> operator()(std::span<const double> x) const;
  double eval_component(std::size_t i, std::span<const double> x) const;

 private:
  struct Term {
    double coeff;
    std::array<int, 3> exps;
    TrigKind kind;
    std::array<double, 3> form;
  };
  std::size_t dim_;
  std::vector<std::vector<Term>> components_;
};

enum class Integrator { kRk4 };

struct OrbitSample {
  double t;
  std::vector<double> x;
};

struct Orbit {
  std::vector<OrbitSample> samples;
  std::vector<double> initial;
  double dt = 0.0;
  Integrator method = Integrator::kRk4;

  const OrbitSample& back() const { return samples.back(); }
};

class NonFiniteState : public std::runtime_error {
 public:
  explicit NonFiniteState(double last_good_time);
  double last_good_time() const { return t_; }

 private:
  double t_;
};

/// One classical RK4 step of size h (h may be negative).
void rk4_step(const CompiledField& f, std::span<double> x, double h);

/// Fixed-step RK4 trajectory of x' = F(x) over [t0, t1]. The step is
/// shrunk so that a whole number of steps lands exactly on t1.
Orbit integrate_orbit(const CompiledField& f, std::span<const double> x0, double t0, double t1, double dt,
                      Integrator method = Integrator::kRk4);

/// Traces from time 0 both backward to -t_back and forward to t_fwd, and
/// returns one orbit with increasing time.
Orbit integrate_orbit_both_ways(const CompiledField& f, std::span<const double> x0, double t_back,
                                double t_fwd, double dt);

struct DiagonalZero {
  double x;
  double lo;
  double hi;
  double residual;
};

inline constexpr double kDefaultScanStep = 0.05;

/// Zeros of g(x) = F_x(x, x) on [0, x_max]: exact zeros on the scan grid
/// plus every sign change, refined by bisection to full double precision.
std::vector<DiagonalZero> find_diagonal_zeros(const CompiledField& f, double x_max,
                                              double scan_step = kDefaultScanStep);

struct DiagonalReport {
  Orbit orbit;
  double max_deviation = 0.0;  // max |x - y| along the orbit
  double final_position = 0.0;
  std::optional<double> lower_zero;  // largest tau <= start
  std::optional<double> upper_zero;  // smallest tau >= start
};

/// Integrates from a point on the diagonal and reports how far the orbit
/// strays from it. Throws std::invalid_argument if x0 is off the diagonal.
DiagonalReport diagonal_confinement(const CompiledField& f, std::span<const double> x0, double t0, double t1,
                                    double dt, const std::vector<DiagonalZero>& zeros = {});

/// "t,x,y[,z]" header then one %.17g row per sample.
void write_orbit_csv(std::ostream& os, const Orbit& orbit);

struct SvgStyle {
  double half_width = 30.0;
  int pixels = 800;
};

/// Polylines of the first two coordinates in a fixed [-30, 30]^2 viewBox.
void write_orbits_svg(std::ostream& os, const std::vector<Orbit>& orbits, const SvgStyle& style = {});

/// True if every sample stays inside [-half_width, half_width]^n.
bool stays_within(const Orbit& orbit, double half_width);

}  // namespace lambent
