#pragma once

#include <string>
#include <utility>
#include <vector>

#include "sturmkit/cfrac.hpp"
#include "sturmkit/decision.hpp"
#include "sturmkit/denjoy.hpp"
#include "sturmkit/iet.hpp"
#include "sturmkit/real.hpp"

// Forward declaration of the vendored json type
#include "json.hpp"

namespace sturmkit {

using Json = nlohmann::json;

// Default digit cap used for formal bases parsed without an explicit
// "precision" field (set by the CLI from --precision / STURMKIT_PRECISION).
void set_default_formal_precision(int digits);
int default_formal_precision();

// Value of a number expression: a + b*sqrt(core), core = 0 for rationals.
struct ParsedReal {
    Rat a, b;
    Int core = 0;  // squarefree, >= 2 when present

    bool is_rational() const { return core == 0 || b == 0; }
};

// Number-expression grammar: rationals, sqrt(uint), + - * /, parentheses.
// Examples: "(1+sqrt(5))/4", "3-sqrt(2)", "7/3", "2*sqrt(8)/3".
ParsedReal parse_number(const std::string& text);

// Mount parsed numbers on a shared basis (promoting rationals as needed);
// throws BasisMismatch when two different quadratic fields appear.
std::vector<RealValue> to_shared_basis(const std::vector<ParsedReal>& values);
RealValue to_real(const ParsedReal& value);

std::string format_real(const RealValue& v);

// Continued fraction text form: "[c0; c1, c2, (p1, p2, ...)]".
ContinuedFraction parse_cf(const std::string& text);

// JSON schemas (all tagged "sturmkit/1" at the top level by the CLI)
Json real_to_json(const RealValue& v);
RealValue real_from_json(const Json& j);
Json cf_to_json(const ContinuedFraction& cf);
ContinuedFraction cf_from_json(const Json& j);
Json mat_to_json(const Mat2& m);
Mat2 mat_from_json(const Json& j);
Mat2 parse_matrix(const std::string& text);  // JSON or "a,b,c,d" entries
Json word_to_json(const Word& w);
Word word_from_json(const Json& j);
Json iet_to_json(const IetSpec& t);
IetSpec iet_from_json(const Json& j);
Json denjoy_to_json(const DenjoyParams& p);
// Parses {"rho": <expr or json>, "reps": [...]} and normalizes.
DenjoyParams denjoy_from_json(const Json& j);
Json decision_to_json(const Decision& d);
Json rauzy_path_to_json(const RauzyPath& p);
Json zmodule_to_json(const ZModule& m);
Json qspan_to_json(const QSpan& s);
Json wedge_to_json(const WedgeValue& w);

}  // namespace sturmkit
