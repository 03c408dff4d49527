#pragma once

// JSON forms. Integers are decimal strings; a divisor class is
//   {"L": "p/2", "A": ["q1/2", ..., "q16/2"]}
// where the class equals (p/2) L + sum (q_i/2) A_i. Parsing also accepts plain integers
// ("3") and reduced halves ("5/2" is read as written).

#include <nlohmann/json.hpp>

#include "nikulin/constructions.hpp"
#include "nikulin/lattice.hpp"
#include "nikulin/pell.hpp"
#include "nikulin/verifiers.hpp"

namespace nikulin {

using Json = nlohmann::ordered_json;

Json class_to_json(const DivisorClass& x);
/// Throws std::invalid_argument on malformed input.
DivisorClass class_from_json(const Json& j);

Json pell_to_json(const PellSolution& s);
PellSolution pell_from_json(const Json& j);

Json classification_to_json(const TClassification& c);
Json verdict_to_json(const Verdict& v);

Json construction_to_json(const EvenBetaConstruction& c);
Json construction_to_json(const OddBetaObstruction& c);
Json construction_to_json(const SubcaseReport& c);
Json construction_to_json(const QuarticDivisor& c);
Json construction_to_json(const DoublePlaneDivisor& c);
Json construction_to_json(const T4Package& c);
Json construction_to_json(const T2Package& c);

}  // namespace nikulin
