#include "nikulin/serialization.hpp"

#include <stdexcept>
#include <string>

namespace nikulin {

namespace {

std::string halves(const BigInt& doubled) { return doubled.str() + "/2"; }

BigInt doubled_from(const Json& j) {
    if (!j.is_string()) throw std::invalid_argument("class coefficient must be a string");
    const std::string s = j.get<std::string>();
    const auto slash = s.find('/');
    if (slash == std::string::npos) return 2 * parse_integer(s);
    if (s.substr(slash + 1) != "2") throw std::invalid_argument("class coefficient denominator must be 2: " + s);
    return parse_integer(std::string_view(s).substr(0, slash));
}

std::string rational(const BigRational& q) {
    if (denominator(q) == 1) return numerator(q).str();
    return numerator(q).str() + "/" + denominator(q).str();
}

Json identities_to_json(const std::vector<IdentityCheck>& checks) {
    Json arr = Json::array();
    for (const IdentityCheck& c : checks) arr.push_back({{"name", c.name}, {"value", c.value}, {"expected", c.expected}});
    return arr;
}

Json classes_to_json(const std::vector<DivisorClass>& xs) {
    Json arr = Json::array();
    for (const DivisorClass& x : xs) arr.push_back(class_to_json(x));
    return arr;
}

template <class Range>
Json range_to_json(const Range& xs) {
    return classes_to_json(std::vector<DivisorClass>(xs.begin(), xs.end()));
}

}  // namespace

Json class_to_json(const DivisorClass& x) {
    Json a = Json::array();
    for (int i = 1; i <= kExceptionalCurves; ++i) a.push_back(halves(-x.two_cA(i)));
    return {{"L", halves(x.two_cL())}, {"A", a}};
}

DivisorClass class_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("L") || !j.contains("A"))
        throw std::invalid_argument("divisor class must be an object with keys L and A");
    const Json& a = j.at("A");
    if (!a.is_array() || a.size() != static_cast<std::size_t>(kExceptionalCurves))
        throw std::invalid_argument("divisor class needs 16 A-coefficients");
    DivisorClass x;
    x.set_two_cL(doubled_from(j.at("L")));
    for (int i = 1; i <= kExceptionalCurves; ++i) x.set_two_cA(i, -doubled_from(a.at(static_cast<std::size_t>(i - 1))));
    return x;
}

Json pell_to_json(const PellSolution& s) { return {{"alpha", s.alpha.str()}, {"beta", s.beta.str()}}; }

PellSolution pell_from_json(const Json& j) {
    if (!j.is_object() || !j.at("alpha").is_string() || !j.at("beta").is_string())
        throw std::invalid_argument("Pell solution must be {alpha, beta} strings");
    return {parse_integer(j.at("alpha").get<std::string>()), parse_integer(j.at("beta").get<std::string>())};
}

Json classification_to_json(const TClassification& c) {
    Json j{{"t", std::to_string(c.t)},
           {"two_t_is_square", c.two_t_is_square},
           {"fundamental", c.fundamental ? pell_to_json(*c.fundamental) : Json(nullptr)},
           {"beta0_even", c.beta0_even ? Json(*c.beta0_even) : Json(nullptr)},
           {"neg_pell", c.neg_pell ? pell_to_json(*c.neg_pell) : Json(nullptr)},
           {"t_mod_12", std::to_string(c.t_mod_12)},
           {"nu", std::to_string(c.nu)},
           {"predicted_structures", std::to_string(c.predicted_structures)}};
    return j;
}

Json verdict_to_json(const Verdict& v) {
    Json params = Json::object();
    for (const auto& [k, val] : v.parameters) params[k] = val;
    Json j{{"claim", v.claim}, {"parameters", params}, {"verdict", v.pass ? "PASS" : "FAIL"}};
    if (v.pass) {
        j["zero_set"] = classes_to_json(v.zero_set);
    } else {
        j["witness"] = v.witness ? class_to_json(*v.witness) : Json(nullptr);
    }
    j["nodes_visited"] = std::to_string(v.nodes_visited);
    j["details"] = v.details;
    return j;
}

Json construction_to_json(const EvenBetaConstruction& c) {
    return {{"case", "even_beta0"},
            {"t", std::to_string(c.t)},
            {"fundamental", pell_to_json(c.fundamental)},
            {"A1_prime", class_to_json(c.A1_prime)},
            {"L_prime", class_to_json(c.L_prime)},
            {"configuration", classes_to_json(c.configuration.classes())},
            {"identities", identities_to_json(c.identities)}};
}

Json construction_to_json(const OddBetaObstruction& c) {
    return {{"case", "odd_beta0"},
            {"t", std::to_string(c.t)},
            {"fundamental", pell_to_json(c.fundamental)},
            {"A1_prime", class_to_json(c.A1_prime)},
            {"half_sum", class_to_json(c.half_sum)},
            {"half_sum_admissible", c.half_sum_admissible},
            {"forced_half_L", class_to_json(c.forced_half_L)},
            {"forced_half_L_admissible", c.forced_half_L_admissible}};
}

Json construction_to_json(const QuarticDivisor& c) {
    return {{"model", "quartic"},
            {"t", std::to_string(c.t)},
            {"d0", c.d0.str()},
            {"e0", c.e0.str()},
            {"D_prime", class_to_json(c.D_prime)},
            {"induced", pell_to_json(c.induced)},
            {"induced_is_fundamental", c.induced_is_fundamental},
            {"identities", identities_to_json(c.identities)}};
}

Json construction_to_json(const DoublePlaneDivisor& c) {
    return {{"model", "double_plane"},
            {"t", std::to_string(c.t)},
            {"d0", c.d0.str()},
            {"e0", c.e0.str()},
            {"D_prime", class_to_json(c.D_prime)},
            {"A1_prime", class_to_json(c.A1_prime)},
            {"identities", identities_to_json(c.identities)}};
}

Json construction_to_json(const SubcaseReport& c) {
    Json j{{"t", std::to_string(c.t)},
           {"fundamental", pell_to_json(c.fundamental)},
           {"d0", c.d0.str()},
           {"e0", c.e0.str()},
           {"D", class_to_json(c.D)},
           {"D_prime", class_to_json(c.D_prime)},
           {"D_prime_squared", c.D_prime_sq.str()},
           {"quotient", c.quotient.str()},
           {"W_scale", rational(c.W_scale)},
           {"same_structure", c.same_structure}};
    j["model"] = c.quartic ? construction_to_json(*c.quartic)
                 : c.double_plane ? construction_to_json(*c.double_plane)
                                  : Json(nullptr);
    return j;
}

Json construction_to_json(const T4Package& c) {
    return {{"case", "t4"},
            {"t", "4"},
            {"A_double_prime", range_to_json(c.A_double_prime)},
            {"L1", class_to_json(c.L1)},
            {"L_prime", class_to_json(c.L_prime)},
            {"A1_prime", class_to_json(c.A1_prime)},
            {"configuration", classes_to_json(c.configuration.classes())},
            {"pairings_checked", std::to_string(c.configuration.pairings_checked())},
            {"identities", identities_to_json(c.identities)}};
}

Json construction_to_json(const T2Package& c) {
    return {{"case", "t2"},
            {"t", "2"},
            {"F", range_to_json(c.F)},
            {"B", range_to_json(c.B)},
            {"C", range_to_json(c.C)},
            {"L_prime", class_to_json(c.L_prime)},
            {"configuration", classes_to_json(c.configuration.classes())},
            {"pairings_checked", std::to_string(c.configuration.pairings_checked())},
            {"identities", identities_to_json(c.identities)}};
}

}  // namespace nikulin
