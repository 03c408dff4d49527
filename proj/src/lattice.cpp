#include "nikulin/lattice.hpp"

namespace nikulin {

namespace {

void append_term(std::string& out, const BigInt& coeff, const std::string& symbol) {
    if (coeff == 0) return;
    const bool negative = coeff < 0;
    const BigInt magnitude = negative ? BigInt(-coeff) : coeff;
    if (out.empty()) {
        if (negative) out += "-";
    } else {
        out += negative ? " - " : " + ";
    }
    if (magnitude != 1) out += magnitude.str();
    out += symbol;
}

}  // namespace

std::string to_display_string(const DivisorClass& x) {
    const bool integral = x.is_integral();
    const BigInt divisor = integral ? 2 : 1;
    std::string body;
    append_term(body, x.two_cL() / divisor, "L");
    for (int i = 1; i <= kExceptionalCurves; ++i) {
        append_term(body, -x.two_cA(i) / divisor, "A" + std::to_string(i));
    }
    if (body.empty()) body = "0";
    return integral ? body : "1/2(" + body + ")";
}

BigInt pair_integer(const DivisorClass& x, const DivisorClass& y, const GramForm& form) {
    const BigInt v = pair_x4(x, y, form);
    if (v % 4 != 0)
        throw ConstructionError("pairing of " + to_display_string(x) + " and " + to_display_string(y) +
                                " is not an integer");
    return v / 4;
}

Support support_with(std::initializer_list<int> exceptional) {
    Support s;
    s.set(0);
    for (int i : exceptional) {
        if (i < 1 || i > kExceptionalCurves) throw std::out_of_range("support index must be in 1..16");
        s.set(static_cast<std::size_t>(i));
    }
    return s;
}

}  // namespace nikulin
