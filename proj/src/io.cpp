#include "lambent/io.hpp"

#include <sstream>

#include "lambent/errors.hpp"

namespace lambent {

namespace {

const char* kVarNames[] = {"x", "y", "z"};

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing key '") + key + "'");
  return j.at(key);
}

std::string rational_text(const json& j) {
  if (!j.is_string()) throw ParseError("rational must be a \"p/q\" string");
  return j.get<std::string>();
}

}  // namespace

json to_json(const QuadExt& x) {
  return {{"a", rational_to_string(x.rational_part())},
          {"b", rational_to_string(x.surd_part())},
          {"d", x.discriminant()}};
}

QuadExt quad_from_json(const json& j) {
  const Rational a = parse_rational(rational_text(field(j, "a")));
  const Rational b = parse_rational(rational_text(field(j, "b")));
  const json& d = field(j, "d");
  if (!d.is_number_integer()) throw ParseError("discriminant must be an integer");
  try {
    return QuadExt(a, b, d.get<int>());
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

json to_json(const SymFun& f) {
  json out = json::array();
  for (const auto& [key, c] : f.terms()) {
    json term{{"coeff", to_json(c)}, {"exponents", key.mono}, {"trig", nullptr}};
    if (key.kind != TrigKind::kNone) {
      json form = json::array();
      for (const auto& e : key.form.coeffs().entries()) form.push_back(to_json(e));
      term["trig"] = {{"kind", key.kind == TrigKind::kSin ? "sin" : "cos"}, {"form", std::move(form)}};
    }
    out.push_back(std::move(term));
  }
  return out;
}

SymFun symfun_from_json(const json& j, std::size_t dim) {
  if (!j.is_array()) throw ParseError("function must be an array of terms");
  SymFun f(dim);
  for (const auto& term : j) {
    const QuadExt c = quad_from_json(field(term, "coeff"));
    const json& ex = field(term, "exponents");
    if (!ex.is_array() || ex.size() != dim) throw ParseError("exponent vector has wrong length");
    Monomial m;
    for (const auto& e : ex) {
      if (!e.is_number_integer() || e.get<int>() < 0) throw ParseError("exponents must be nonnegative integers");
      m.push_back(e.get<int>());
    }
    const json& trig = field(term, "trig");
    TrigKind kind = TrigKind::kNone;
    ExactVector form(dim);
    if (!trig.is_null()) {
      const std::string k = field(trig, "kind").get<std::string>();
      if (k == "sin") {
        kind = TrigKind::kSin;
      } else if (k == "cos") {
        kind = TrigKind::kCos;
      } else {
        throw ParseError("unknown trig kind '" + k + "'");
      }
      const json& fj = field(trig, "form");
      if (!fj.is_array() || fj.size() != dim) throw ParseError("linear form has wrong length");
      for (std::size_t i = 0; i < dim; ++i) form[i] = quad_from_json(fj[i]);
    }
    try {
      f.add_term(c, std::move(m), kind, LinearForm(std::move(form)));
    } catch (const DiscriminantMismatch& e) {
      throw ParseError(e.what());
    }
  }
  return f;
}

json to_json(const ExactMatrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.dim(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.dim(); ++c) row.push_back(to_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

json to_json(const FiniteGroup& g) {
  json elems = json::array();
  for (const auto& e : g.elements()) elems.push_back(to_json(e.matrix()));
  return elems;
}

json to_json(const FieldDocument& doc) {
  json comps = json::array();
  for (const auto& c : doc.field.components()) comps.push_back(to_json(c));
  return {{"version", doc.version},
          {"d", doc.discriminant()},
          {"dimension", doc.dim()},
          {"components", std::move(comps)},
          {"provenance", {{"constructor", doc.constructor}, {"params", doc.params}}}};
}

FieldDocument document_from_json(const json& j) {
  try {
    FieldDocument doc;
    doc.version = field(j, "version").get<int>();
    if (doc.version != kFieldDocumentVersion) throw ParseError("unsupported document version");
    const auto dim = field(j, "dimension").get<std::size_t>();
    if (dim != 2 && dim != 3) throw ParseError("dimension must be 2 or 3");
    const json& comps = field(j, "components");
    if (!comps.is_array() || comps.size() != dim) throw ParseError("component count must equal dimension");
    std::vector<SymFun> fs;
    for (const auto& c : comps) fs.push_back(symfun_from_json(c, dim));
    doc.field = VecField(std::move(fs));
    const int d = field(j, "d").get<int>();
    if (join_discriminant(d, doc.field.discriminant()) != d) throw ParseError("declared discriminant disagrees");
    const json& prov = field(j, "provenance");
    doc.constructor = field(prov, "constructor").get<std::string>();
    doc.params = field(prov, "params");
    return doc;
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed field document: ") + e.what());
  } catch (const DiscriminantMismatch& e) {
    throw ParseError(e.what());
  }
}

std::string dump_document(const FieldDocument& doc) { return to_json(doc).dump(); }

FieldDocument parse_document(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  return document_from_json(j);
}

json to_json(const VerificationReport& report) {
  json checks = json::array();
  for (const auto& c : report.checks) {
    json entry{{"name", c.name}, {"passed", c.passed}};
    if (!c.passed) {
      json comps = json::array();
      for (const auto& comp : c.residual.components()) comps.push_back(to_json(comp));
      entry["residual"] = std::move(comps);
      json viol = json::array();
      for (const auto& g : c.violators) viol.push_back(to_json(g.matrix()));
      entry["violators"] = std::move(viol);
    }
    checks.push_back(std::move(entry));
  }
  return {{"passed", report.passed()}, {"checks", std::move(checks)}};
}

// ------------------------------------------------------------------ pretty

namespace {

std::string pretty_rational(const Rational& r) { return r.get_str(); }

std::string pretty_surd(const Rational& b, int d) {
  const std::string root = "sqrt(" + std::to_string(d) + ")";
  const mpz_class& num = b.get_num();
  const mpz_class& den = b.get_den();
  std::string s;
  if (num == 1) {
    s = root;
  } else if (num == -1) {
    s = "-" + root;
  } else {
    s = num.get_str() + " " + root;
  }
  if (den != 1) s += "/" + den.get_str();
  return s;
}

// Magnitude text for |x|; empty when |x| = 1 and unit_elidable.
std::string magnitude_text(const QuadExt& x, bool unit_elidable) {
  const QuadExt m = quad_sign(x) < 0 ? -x : x;
  if (unit_elidable && m == QuadExt(1)) return "";
  if (m.is_rational()) return pretty_rational(m.rational_part());
  if (sgn(m.rational_part()) == 0) return pretty_surd(m.surd_part(), m.discriminant());
  return "(" + pretty(m) + ")";
}

std::string monomial_text(const Monomial& mono) {
  std::string s;
  for (std::size_t i = 0; i < mono.size(); ++i) {
    if (mono[i] == 0) continue;
    if (!s.empty()) s += " ";
    s += kVarNames[i];
    if (mono[i] > 1) s += "^" + std::to_string(mono[i]);
  }
  return s;
}

}  // namespace

std::string pretty(const QuadExt& x) {
  if (x.is_rational()) return pretty_rational(x.rational_part());
  if (sgn(x.rational_part()) == 0) return pretty_surd(x.surd_part(), x.discriminant());
  std::string b = pretty_surd(x.surd_part(), x.discriminant());
  if (b.front() == '-') return pretty_rational(x.rational_part()) + " - " + b.substr(1);
  return pretty_rational(x.rational_part()) + " + " + b;
}

std::string pretty(const LinearForm& form) {
  std::string s;
  for (std::size_t i = 0; i < form.dim(); ++i) {
    const QuadExt& c = form[i];
    if (c.is_zero()) continue;
    const bool neg = quad_sign(c) < 0;
    if (s.empty()) {
      s += neg ? "-" : "";
    } else {
      s += neg ? " - " : " + ";
    }
    const std::string mag = magnitude_text(c, true);
    s += mag.empty() ? kVarNames[i] : mag + " " + kVarNames[i];
  }
  return s.empty() ? "0" : s;
}

std::string pretty(const SymFun& f) {
  if (f.is_zero()) return "0";
  std::string s;
  for (const auto& [key, c] : f.terms()) {
    const bool neg = quad_sign(c) < 0;
    if (s.empty()) {
      s += neg ? "-" : "";
    } else {
      s += neg ? " - " : " + ";
    }
    std::vector<std::string> parts;
    const std::string mono = monomial_text(key.mono);
    const bool bare = mono.empty() && key.kind == TrigKind::kNone;
    if (auto mag = magnitude_text(c, !bare); !mag.empty()) parts.push_back(mag);
    if (!mono.empty()) parts.push_back(mono);
    if (key.kind != TrigKind::kNone) {
      parts.push_back(std::string(key.kind == TrigKind::kSin ? "sin(" : "cos(") + pretty(key.form) + ")");
    }
    for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? " " : "") + parts[i];
  }
  return s;
}

std::string pretty(const VecField& f) {
  std::ostringstream os;
  for (std::size_t i = 0; i < f.dim(); ++i) {
    os << "F_" << kVarNames[i] << " = " << pretty(f[i]) << "\n";
  }
  return os.str();
}

std::string pretty(const VerificationReport& report) {
  std::ostringstream os;
  for (const auto& c : report.checks) {
    os << (c.passed ? "PASS  " : "FAIL  ") << c.name;
    if (!c.passed) {
      if (!c.violators.empty()) os << "  (" << c.violators.size() << " group elements violated)";
      os << "\n" << pretty(c.residual);
    } else {
      os << "\n";
    }
  }
  os << (report.passed() ? "all checks passed" : "verification FAILED") << "\n";
  return os.str();
}

}  // namespace lambent
