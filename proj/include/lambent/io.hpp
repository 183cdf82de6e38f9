#pragma once

#include <string>

#include "json.hpp"

#include "lambent/exact_matrix.hpp"
#include "lambent/groups.hpp"
#include "lambent/verify.hpp"

namespace lambent {

using nlohmann::json;

inline constexpr int kFieldDocumentVersion = 1;

/// Serialized field plus how it was produced.
struct FieldDocument {
  int version = kFieldDocumentVersion;
  VecField field;
  std::string constructor;
  json params = json::object();

  int discriminant() const { return field.discriminant(); }
  std::size_t dim() const { return field.dim(); }
};

// {"a": "p/q", "b": "r/s", "d": 1|3|5}
json to_json(const QuadExt& x);
QuadExt quad_from_json(const json& j);

// [{"coeff": ..., "exponents": [...], "trig": null | {"kind": "sin"|"cos", "form": [...]}}]
json to_json(const SymFun& f);
SymFun symfun_from_json(const json& j, std::size_t dim);

json to_json(const ExactMatrix& m);
json to_json(const FiniteGroup& g);

json to_json(const FieldDocument& doc);
/// Throws ParseError on malformed input.
FieldDocument document_from_json(const json& j);

/// Compact, key-sorted dump; identical fields give identical bytes.
std::string dump_document(const FieldDocument& doc);
FieldDocument parse_document(const std::string& text);

json to_json(const VerificationReport& report);

/// Human-readable math text, e.g. "y sin(z) + z sin(y) + x cos(y) - x cos(z)".
std::string pretty(const QuadExt& x);
std::string pretty(const LinearForm& form);
std::string pretty(const SymFun& f);
std::string pretty(const VecField& f);
std::string pretty(const VerificationReport& report);

}  // namespace lambent
