#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "fanohodge/bipoly.hpp"
#include "fanohodge/hodge_diamond.hpp"
#include "fanohodge/integer.hpp"
#include "fanohodge/laurent_poly.hpp"
#include "fanohodge/motivic_expression.hpp"
#include "fanohodge/report.hpp"

namespace fanohodge {

// JSON schema. Coefficients are decimal strings; polynomials are arrays of
// [exponent, coefficient] sorted by exponent, where a bivariate exponent is
// itself the pair [p, q]. Object keys keep insertion order.
using Json = nlohmann::ordered_json;

Json to_json(const Integer& value);
Json to_json(const LaurentPoly& p);
Json to_json(const BiPoly& p);
Json to_json(const MotivicExpression& expression);
/// {"dimension": d, "hodge": [[h^{0,0}, ..., h^{0,d}], ...]}
Json to_json(const HodgeDiamond& dia);
/// {"identity", "params", "status", "lhs", "rhs", ["effectivity"],
///  ["lefschetz_symmetric"], ["notes"], "elapsed_ms"}; with include_timing
/// false, elapsed_ms is written as 0.
Json to_json(const VerificationReport& report, bool include_timing = true);

/// Inverses of to_json. Malformed input throws DomainError.
Integer integer_from_json(const Json& json);
LaurentPoly laurent_from_json(const Json& json);
BiPoly bipoly_from_json(const Json& json);
MotivicExpression motivic_from_json(const Json& json);
HodgeDiamond diamond_from_json(const Json& json);
/// The variant alternative is read off the shape of the value; an empty
/// polynomial array reads back as the zero LaurentPoly.
ReportValue report_value_from_json(const Json& json);
/// A "status" disagreeing with the parsed sides throws DomainError.
VerificationReport report_from_json(const Json& json);

std::string to_string(const MotivicExpression& expression);
std::string to_string(const ReportValue& value);

struct TextOptions {
  bool detailed = false;
  bool include_timing = true;
};

/// One summary line, followed by indented lhs/rhs/effectivity lines when
/// options.detailed is set.
std::string render_text(const VerificationReport& report, const TextOptions& options = {});

}  // namespace fanohodge
