#ifndef SPHEREMAP_JSON_IO_HPP
#define SPHEREMAP_JSON_IO_HPP

#include <json.hpp>
#include <string>
#include <string_view>

#include "spheremap/errors.hpp"
#include "spheremap/factory.hpp"
#include "spheremap/fold.hpp"
#include "spheremap/herm_poly.hpp"
#include "spheremap/maps.hpp"
#include "spheremap/normal_form.hpp"
#include "spheremap/verify.hpp"

namespace spheremap {

using Json = nlohmann::ordered_json;

/// Malformed text (line and column are 1-based) or a document that does not
/// match the expected schema (line 0; the message names the JSON path).
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line = 0, std::size_t column = 0);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

Json parse_json_text(std::string_view text);
/// Two-space indented, trailing newline.
std::string dump_json(const Json& j);

Json to_json(const Rational& q);
Rational rational_from_json(const Json& j, const std::string& path = "$");

Json to_json(const CplxRat& c);
CplxRat cplx_from_json(const Json& j, const std::string& path = "$");

Json to_json(const HoloPoly& p);
HoloPoly holo_from_json(const Json& j, std::size_t n, const std::string& path = "$");

/// Maps serialize with "kind": "poly" (unit weights, denominator 1),
/// "weighted" (denominator 1) or "rational".
Json to_json(const RationalMap& f);
Json to_json(const WeightedMap& p);
RationalMap map_from_json(const Json& j, const std::string& path = "$");
/// Accepts a bare map or any document with a "map" member.
RationalMap map_from_document(const Json& j);

/// Only keys with (alpha, beta) <= (beta, alpha) are written; the mirror
/// half is restored on read.
Json to_json(const HermPoly& Q);
HermPoly herm_from_json(const Json& j, const std::string& path = "$");

Json to_json(const FoldProfile& prof);
FoldProfile profile_from_json(const Json& j, const std::string& path = "$");

Json to_json(const NewtonExpansion& e);
NewtonExpansion expansion_from_json(const Json& j, const std::string& path = "$");

Json to_json(const NotAFold& e);

Json to_json(const FactoryTrace& tr);
FactoryTrace trace_from_json(const Json& j, const std::string& path = "$");

Json to_json(const NormalForm& nf);
NormalForm normal_form_from_json(const Json& j, const std::string& path = "$");

Json to_json(const DivisibilityCheck& c);
DivisibilityCheck divisibility_from_json(const Json& j, const std::string& path = "$");

Json to_json(const OutsideReport& r);
OutsideReport outside_from_json(const Json& j, const std::string& path = "$");

Json to_json(const ReflectionReport& r);
ReflectionReport reflection_from_json(const Json& j, const std::string& path = "$");

Json to_json(const BlowupCertificate& c);
BlowupCertificate blowup_from_json(const Json& j, const std::string& path = "$");

Json to_json(const ComplementReport& r);
ComplementReport complement_from_json(const Json& j, const std::string& path = "$");

}  // namespace spheremap

#endif
