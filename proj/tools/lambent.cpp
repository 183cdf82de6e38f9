// Command-line front end: generate, verify, group, trace, zeros, figure1.
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "lambent/dynamics.hpp"
#include "lambent/errors.hpp"
#include "lambent/fields.hpp"
#include "lambent/groups.hpp"
#include "lambent/io.hpp"
#include "lambent/verify.hpp"

namespace {

using namespace lambent;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

// Thrown for bad parameters that CLI11 cannot catch on its own.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string format = "json";

  // generate
  std::string constructor;
  int ell = 0;
  std::string variant = "4l+1";
  bool precurl = false;
  std::string seed = "even-part";
  std::string a = "0";
  std::string scale = "3/8";
  int ell_cap = kDefaultEllCap;

  // verify / group
  std::string group;
  std::string mode;

  // trace / zeros / figure1
  std::string field_path;
  std::string output;
  std::vector<double> x0{1.0, 1.0};
  double t0 = 0.0;
  double t1 = 100.0;
  double dt = 0.01;
  double x_max = 20.0;
  double step = kDefaultScanStep;
  double t_span = 200.0;
};

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::ofstream open_output(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  return out;
}

// Writes to the named file, or to stdout when the name is empty.
template <typename Fn>
void emit(const std::string& path, Fn&& write) {
  if (path.empty()) {
    write(std::cout);
    return;
  }
  std::ofstream out = open_output(path);
  write(out);
}

Rational rational_option(const std::string& text, const std::string& name) {
  try {
    return parse_rational(text);
  } catch (const ParseError&) {
    throw UsageError(name + " must be a rational number, got '" + text + "'");
  }
}

FieldDocument generate_document(const Options& o) {
  FieldDocument doc;
  doc.constructor = o.constructor;
  if (o.constructor == "tetra" || o.constructor == "octa") {
    if (o.variant != "4l+1" && o.variant != "4l+3") throw UsageError("--variant must be 4l+1 or 4l+3");
    if (o.ell < 0 || o.ell > o.ell_cap) throw UsageError("--ell out of range");
    const bool low = o.variant == "4l+1";
    if (o.constructor == "tetra") {
      const TetraFamilySpec spec{o.ell, low ? TetraVariant::kDeg4l1 : TetraVariant::kDeg4l3};
      doc.field = o.precurl ? tetra_precurl(spec, o.ell_cap) : tetra_field(spec, o.ell_cap);
    } else {
      const OctaFamilySpec spec{o.ell, low ? OctaVariant::kDeg4l1 : OctaVariant::kDeg4l3};
      doc.field = o.precurl ? octa_precurl(spec, o.ell_cap) : octa_field(spec, o.ell_cap);
    }
    doc.params = {{"ell", o.ell}, {"variant", o.variant}, {"precurl", o.precurl}};
  } else if (o.constructor == "icosa-induced") {
    SymFun seed;
    if (o.seed == "even-part") {
      seed = icosa_seed_even_part();
    } else if (o.seed == "golden") {
      seed = icosa_seed_golden();
    } else {
      throw UsageError("--seed must be even-part or golden");
    }
    const VecField lift = cyclic_lift(seed);
    doc.field = induce_icosahedral(o.precurl ? lift : beltramize(lift));
    doc.params = {{"seed", o.seed}, {"precurl", o.precurl}};
  } else if (o.constructor == "dihedral") {
    const Rational a = rational_option(o.a, "--a");
    const Rational scale = rational_option(o.scale, "--scale");
    const DihedralAnsatz coeffs = solve_dihedral_constraints().at(a);
    doc.field = dihedral_ansatz_field(coeffs) * QuadExt(scale);
    doc.params = {{"a", rational_to_string(a)}, {"scale", rational_to_string(scale)}};
  } else {
    throw UsageError("unknown constructor '" + o.constructor + "' (tetra, octa, icosa-induced, dihedral)");
  }
  return doc;
}

int cmd_generate(const Options& o) {
  const FieldDocument doc = generate_document(o);
  emit(o.output, [&](std::ostream& os) {
    if (o.format == "pretty") {
      os << pretty(doc.field) << '\n';
    } else {
      os << dump_document(doc) << '\n';
    }
  });
  return kExitPass;
}

FieldDocument load_document(const std::string& path) {
  try {
    return parse_document(read_text(path));
  } catch (const ParseError& e) {
    throw UsageError(path + ": " + e.what());
  }
}

int cmd_verify(const Options& o) {
  const FieldDocument doc = load_document(o.field_path);
  FiniteGroup group = [&] {
    try {
      return group_by_name(o.group);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }();
  if (group.dim() != doc.dim()) throw UsageError("group " + o.group + " does not act on a field of this dimension");
  LambentMode mode = doc.dim() == 3 ? LambentMode::kBeltrami3d : LambentMode::kHelmholtzNd;
  if (o.mode == "beltrami") {
    if (doc.dim() != 3) throw UsageError("beltrami mode needs a 3-dimensional field");
    mode = LambentMode::kBeltrami3d;
  } else if (o.mode == "helmholtz") {
    mode = LambentMode::kHelmholtzNd;
  } else if (!o.mode.empty()) {
    throw UsageError("--mode must be beltrami or helmholtz");
  }
  const VerificationReport report = check_lambent(doc.field, group, mode);
  if (o.format == "pretty") {
    std::cout << pretty(report);
  } else {
    std::cout << to_json(report).dump(2) << '\n';
  }
  return report.passed() ? kExitPass : kExitFail;
}

int cmd_group(const Options& o) {
  FiniteGroup group = [&] {
    try {
      return group_by_name(o.group);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }();
  if (o.format == "pretty") {
    std::cout << group.name() << ": order " << group.size() << '\n';
    for (const auto& g : group.elements()) std::cout << g.matrix().to_string() << '\n';
  } else {
    std::cout << to_json(group).dump(2) << '\n';
  }
  return kExitPass;
}

VecField dynamics_field(const Options& o) {
  if (o.field_path.empty()) return dihedral_order_zero_field();
  return load_document(o.field_path).field;
}

int cmd_trace(const Options& o) {
  const VecField v = dynamics_field(o);
  if (o.x0.size() != v.dim()) throw UsageError("--x0 needs " + std::to_string(v.dim()) + " coordinates");
  if (!(o.dt > 0.0) || !(o.t1 > o.t0)) throw UsageError("need --dt > 0 and --t greater than --t0");
  const CompiledField f(v);
  const Orbit orbit = integrate_orbit(f, o.x0, o.t0, o.t1, o.dt);
  emit(o.output, [&](std::ostream& os) { write_orbit_csv(os, orbit); });
  if (v.dim() == 2 && o.x0[0] == o.x0[1]) {
    const DiagonalReport r = diagonal_confinement(f, o.x0, o.t0, o.t1, o.dt);
    std::fprintf(stderr, "max |x-y| = %.3e, final x = %.15g\n", r.max_deviation, r.final_position);
  }
  return kExitPass;
}

int cmd_zeros(const Options& o) {
  const VecField v = dynamics_field(o);
  if (v.dim() != 2) throw UsageError("zeros needs a planar field");
  if (!(o.x_max > 0.0) || !(o.step > 0.0)) throw UsageError("need --xmax > 0 and --step > 0");
  const auto zeros = find_diagonal_zeros(CompiledField(v), o.x_max, o.step);
  if (o.format == "pretty") {
    std::printf("%-4s %-22s %-10s\n", "i", "tau", "|g(tau)|");
    for (std::size_t i = 0; i < zeros.size(); ++i) {
      std::printf("%-4zu %-22.17g %-10.2e\n", i, zeros[i].x, zeros[i].residual);
    }
  } else {
    json out = json::array();
    for (const auto& z : zeros) {
      out.push_back({{"x", z.x}, {"lo", z.lo}, {"hi", z.hi}, {"residual", z.residual}});
    }
    std::cout << out.dump(2) << '\n';
  }
  return kExitPass;
}

int cmd_figure1(const Options& o) {
  const std::filesystem::path dir = o.output.empty() ? "figure1" : o.output;
  std::filesystem::create_directories(dir);
  const CompiledField f(dihedral_order_zero_field());
  const std::vector<std::pair<std::string, std::vector<double>>> starts{
      {"6.0", {6.0, 0.0}}, {"6.5", {6.5, 0.0}}, {"7.0", {7.0, 0.0}}, {"7.5", {7.5, 0.0}}, {"11.0", {11.0, 0.0}}};
  std::vector<Orbit> orbits;
  for (const auto& [label, x0] : starts) {
    orbits.push_back(integrate_orbit_both_ways(f, x0, o.t_span, o.t_span, o.dt));
    std::ofstream csv = open_output(dir / ("orbit_" + label + ".csv"));
    write_orbit_csv(csv, orbits.back());
    std::printf("orbit_%s.csv  %zu samples  %s\n", label.c_str(), orbits.back().samples.size(),
                stays_within(orbits.back(), 30.0) ? "inside [-30,30]^2" : "leaves [-30,30]^2");
  }
  std::ofstream svg = open_output(dir / "orbits.svg");
  write_orbits_svg(svg, orbits);
  std::printf("orbits.svg\n");
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  CLI::App app{"Exact construction and verification of symmetric Beltrami and lambent fields"};
  app.require_subcommand(1);
  const auto format_check = CLI::IsMember({"json", "pretty"});

  auto* generate = app.add_subcommand("generate", "Build a field and print its document");
  generate->add_option("constructor", o.constructor, "tetra | octa | icosa-induced | dihedral")->required();
  generate->add_option("--ell", o.ell, "Family index");
  generate->add_option("--variant", o.variant, "4l+1 or 4l+3");
  generate->add_flag("--precurl", o.precurl, "Emit the solenoidal field before adding its curl");
  generate->add_option("--seed", o.seed, "even-part or golden (icosa-induced)");
  generate->add_option("--a", o.a, "Free parameter of the dihedral family");
  generate->add_option("--scale", o.scale, "Overall factor for the dihedral family");
  generate->add_option("--ell-cap", o.ell_cap, "Largest accepted --ell");
  generate->add_option("-o,--out", o.output, "Output file (default stdout)");
  generate->add_option("--format", o.format)->check(format_check);

  auto* verify = app.add_subcommand("verify", "Run the exact checks on a field document");
  verify->add_option("file", o.field_path, "Field document")->required();
  verify->add_option("--group", o.group, "T | That | O | K | I | D3")->required();
  verify->add_option("--mode", o.mode, "beltrami or helmholtz (default by dimension)");
  verify->add_option("--format", o.format)->check(format_check);

  auto* group = app.add_subcommand("group", "List the elements of a named group");
  group->add_option("name", o.group, "T | That | O | K | I | D3")->required();
  group->add_option("--format", o.format)->check(format_check);

  auto* trace = app.add_subcommand("trace", "Integrate one orbit and write it as CSV");
  trace->add_option("--field", o.field_path, "Field document (default: planar order-zero field)");
  trace->add_option("--x0", o.x0, "Start point, comma separated")->delimiter(',');
  trace->add_option("--t0", o.t0, "Start time");
  trace->add_option("--t", o.t1, "End time");
  trace->add_option("--dt", o.dt, "Step size");
  trace->add_option("-o,--out", o.output, "Output CSV (default stdout)");

  auto* zeros = app.add_subcommand("zeros", "Zeros of the planar field on the diagonal");
  zeros->add_option("--field", o.field_path, "Field document (default: planar order-zero field)");
  zeros->add_option("--xmax", o.x_max, "Scan range [0, xmax]");
  zeros->add_option("--step", o.step, "Scan step");
  zeros->add_option("--format", o.format)->check(format_check);

  auto* figure = app.add_subcommand("figure1", "Trace the five reference orbits to CSV and SVG");
  figure->add_option("-o,--out", o.output, "Output directory");
  figure->add_option("--t", o.t_span, "Trace over [-t, t]");
  figure->add_option("--dt", o.dt, "Step size");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (*generate) return cmd_generate(o);
    if (*verify) return cmd_verify(o);
    if (*group) return cmd_group(o);
    if (*trace) return cmd_trace(o);
    if (*zeros) return cmd_zeros(o);
    if (*figure) return cmd_figure1(o);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const NonFiniteState& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFail;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFail;
  }
  return kExitUsage;
}
