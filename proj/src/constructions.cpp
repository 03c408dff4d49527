#include "nikulin/constructions.hpp"

#include <set>
#include <stdexcept>
#include <string>
#include <utility>

#include "nikulin/errors.hpp"

namespace nikulin {

namespace {

std::string str(const BigRational& q) {
    if (boost::multiprecision::denominator(q) == 1) return boost::multiprecision::numerator(q).str();
    return numerator(q).str() + "/" + denominator(q).str();
}

// Every assertion throws on failure, so a returned construction carries only identities
// that held.
class Recorder {
  public:
    explicit Recorder(const GramForm& form) : form_(form) {}

    void equal(std::string name, const BigRational& value, const BigRational& expected) {
        if (value != expected)
            throw ConstructionError(name + ": got " + str(value) + ", expected " + str(expected));
        checks_.push_back({std::move(name), str(value), str(expected)});
    }

    void pairing(std::string name, const DivisorClass& x, const DivisorClass& y, const BigRational& expected) {
        equal(std::move(name), pair(x, y, form_), expected);
    }

    void same_class(std::string name, const DivisorClass& x, const DivisorClass& y) {
        if (x != y)
            throw ConstructionError(name + ": " + to_display_string(x) + " != " + to_display_string(y));
        checks_.push_back({std::move(name), to_display_string(x), to_display_string(y)});
    }

    void differs(std::string name, const BigRational& value, const BigRational& excluded) {
        if (value == excluded) throw ConstructionError(name + ": unexpectedly equal to " + str(excluded));
        checks_.push_back({std::move(name), str(value), "!= " + str(excluded)});
    }

    // Admissible classes with even integral square.
    void lattice_class(const std::string& name, const DivisorClass& x) {
        if (!is_admissible(x, default_rule(form_)))
            throw ConstructionError(name + " = " + to_display_string(x) + " is not admissible");
        if (self_x4(x, form_) % 8 != 0)
            throw ConstructionError(name + " = " + to_display_string(x) + " has odd or non-integral square");
    }

    std::vector<IdentityCheck> take() { return std::move(checks_); }

  private:
    const GramForm& form_;
    std::vector<IdentityCheck> checks_;
};

DivisorClass linear(const BigInt& cL, const BigInt& cA1) { return cL * L() - cA1 * A(1); }

TClassification classify_non_square(std::int64_t t) {
    TClassification c = classify_t(t);
    if (c.two_t_is_square) throw SquareCase(t);
    return c;
}

DivisorClass sum_of(std::initializer_list<int> indices) {
    DivisorClass s;
    for (int i : indices) s += A(i);
    return s;
}

// x / 2 for integral x: the doubled coefficients of x / 2 are the true coefficients of x.
DivisorClass half_of(const DivisorClass& x) {
    if (!x.is_integral()) throw ConstructionError("half_of: " + to_display_string(x) + " is not integral");
    DivisorClass::Coefficients c = x.doubled();
    for (int i = 0; i < kLatticeRank; ++i) c(i) /= 2;
    return DivisorClass(std::move(c));
}

DivisorClass half_fibre(int block) {
    DivisorClass sum;
    for (int i : kHalfFibreBlocks[static_cast<std::size_t>(block)]) sum += A(i);
    return half_of(L() - sum);
}

}  // namespace

NikulinConfiguration NikulinConfiguration::make(std::vector<DivisorClass> classes, const GramForm& form) {
    if (classes.size() != static_cast<std::size_t>(kExceptionalCurves))
        throw ConstructionError("configuration must contain 16 classes, got " + std::to_string(classes.size()));
    NikulinConfiguration out;
    for (std::size_t i = 0; i < classes.size(); ++i) {
        const DivisorClass& x = classes[i];
        if (!is_admissible(x, default_rule(form)))
            throw ConstructionError("configuration member " + to_display_string(x) + " is not admissible");
        if (self_x4(x, form) != -8)
            throw ConstructionError("configuration member " + to_display_string(x) + " is not a (-2)-class");
        if (!is_effective_candidate(x, form))
            throw ConstructionError("configuration member " + to_display_string(x) + " is not effective");
        ++out.pairings_checked_;
        for (std::size_t j = 0; j < i; ++j) {
            if (pair_x4(x, classes[j], form) != 0)
                throw ConstructionError(to_display_string(x) + " meets " + to_display_string(classes[j]));
            ++out.pairings_checked_;
        }
    }
    out.classes_ = std::move(classes);
    return out;
}

ThreeConditionSolution solve_three_conditions(std::int64_t t, const PellSolution& sol) {
    const BigInt D = 2 * BigInt(t);
    if (sol.norm(D) != 1) throw std::invalid_argument("solve_three_conditions: not a solution of the Pell equation");
    // bL - aA1 orthogonal to beta L - alpha A1: 2t b beta = a alpha. The square is then
    // 4t b^2 - 2 a^2 = 4t (alpha^2 - 2t beta^2) = 4t.
    return {D * sol.beta, sol.alpha};
}

EvenBetaConstruction build_even_beta(std::int64_t t) {
    const TClassification c = classify_non_square(t);
    if (!*c.beta0_even) throw OddBetaCase(t);
    const GramForm form(t);
    Recorder rec(form);

    EvenBetaConstruction out;
    out.t = t;
    out.fundamental = *c.fundamental;
    const auto& [alpha0, beta0] = out.fundamental;
    out.A1_prime = linear(beta0, alpha0);
    const ThreeConditionSolution abc = solve_three_conditions(t, out.fundamental);
    out.L_prime = linear(abc.b, abc.a);

    rec.lattice_class("A1'", out.A1_prime);
    rec.lattice_class("L'", out.L_prime);
    rec.pairing("A1'^2", out.A1_prime, out.A1_prime, -2);
    rec.pairing("L'^2", out.L_prime, out.L_prime, 4 * BigInt(t));
    rec.pairing("L'.A1'", out.L_prime, out.A1_prime, 0);
    rec.pairing("A1.A1'", A(1), out.A1_prime, 2 * alpha0);
    for (int j = 2; j <= kExceptionalCurves; ++j)
        rec.pairing("A" + std::to_string(j) + ".A1'", A(j), out.A1_prime, 0);

    std::vector<DivisorClass> members{out.A1_prime};
    for (int j = 2; j <= kExceptionalCurves; ++j) members.push_back(A(j));
    out.configuration = NikulinConfiguration::make(std::move(members), form);
    out.identities = rec.take();
    return out;
}

OddBetaObstruction check_odd_beta_obstruction(std::int64_t t) {
    const TClassification c = classify_non_square(t);
    if (*c.beta0_even) throw std::invalid_argument("check_odd_beta_obstruction: beta0 is even for t = " + std::to_string(t));
    const GramForm form(t);

    OddBetaObstruction out;
    out.t = t;
    out.fundamental = *c.fundamental;
    const auto& [alpha0, beta0] = out.fundamental;
    out.A1_prime = linear(beta0, alpha0);
    // A1 + A1' = beta0 L - (alpha0 - 1) A1; its true coefficients are the doubled ones of the half.
    out.half_sum = half_of(A(1) + out.A1_prime);
    out.half_sum_admissible = is_admissible(out.half_sum, default_rule(form));
    // alpha0 is odd (alpha0^2 = 1 + 2t beta0^2), so the corrections below are integral.
    out.forced_half_L = out.half_sum - BigInt((beta0 - 1) / 2) * L() + BigInt((alpha0 - 1) / 2) * A(1);
    out.forced_half_L_admissible = is_admissible(out.forced_half_L, default_rule(form));
    if (out.forced_half_L != DivisorClass::from_doubled(1, {}))
        throw ConstructionError("odd-beta obstruction did not reduce to L/2");
    return out;
}

QuarticPair solve_quartic_relation(std::int64_t t, const QuarticSearchOptions& options) {
    if (t < 1) throw std::invalid_argument("solve_quartic_relation: t must be >= 1");
    using Reason = NoQuarticCase::Reason;
    if (t % 2 == 0) throw NoQuarticCase(t, Reason::modular_obstruction, "no solution modulo 2 (t even)");

    // 2 d^2 + 1 = t e^2 needs a common residue modulo every m.
    std::vector<std::int64_t> moduli{16, 9, 5, 7, 11, 13};
    for (std::int64_t p : distinct_prime_factors(t)) {
        std::int64_t q = p;
        while (t % (q * p) == 0 && q <= 100'000 / p) q *= p;
        if (q <= 100'000) moduli.push_back(q);
    }
    for (std::int64_t m : moduli) {
        std::set<std::int64_t> lhs;
        for (std::int64_t d = 0; d < m; ++d) lhs.insert((2 * d * d + 1) % m);
        bool hit = false;
        const std::int64_t tm = t % m;
        for (std::int64_t e = 0; e < m && !hit; ++e) hit = lhs.count(tm * (e * e % m) % m) > 0;
        if (!hit) throw NoQuarticCase(t, Reason::modular_obstruction, "no solution modulo " + std::to_string(m));
    }

    const BigInt D = 2 * BigInt(t);
    if (t >= 3) {
        // |(2d)^2 - 2t e^2| = 2 < sqrt(2t) and gcd(2d, e) = 1: a convergent. The values
        // p_k^2 - D q_k^2 repeat with period r, so two periods cover every case.
        const CFExpansion cf = cf_sqrt(D);
        const auto conv = convergents(cf, 2 * cf.period_length() - 1);
        for (const Convergent& c : conv) {
            if (c.p * c.p - D * c.q * c.q == -2 && is_even(c.p) && c.p > 0)
                return {c.p / 2, c.q, "continued fraction"};
        }
        throw NoQuarticCase(t, Reason::convergents_exhausted, "no convergent of sqrt(" + D.str() + ") has norm -2");
    }
    for (BigInt e = 1; e <= options.max_e0; ++e) {
        const BigInt v = BigInt(t) * e * e - 1;
        if (v > 0 && is_even(v) && is_square(v / 2)) return {isqrt(v / 2), e, "scan"};
    }
    throw NoQuarticCase(t, Reason::bound_exhausted, "no solution with e <= " + options.max_e0.str());
}

QuarticDivisor build_quartic_divisor(std::int64_t t, const QuarticSearchOptions& options) {
    const QuarticPair qp = solve_quartic_relation(t, options);
    const GramForm form(t);
    Recorder rec(form);

    QuarticDivisor out;
    out.t = t;
    out.d0 = qp.d0;
    out.e0 = qp.e0;
    out.D_prime = linear(out.e0, 2 * out.d0);
    out.induced = {1 + 4 * out.d0 * out.d0, 2 * out.d0 * out.e0};
    out.induced_A1_prime = linear(out.induced.beta, out.induced.alpha);
    const auto fund = fundamental_solution(2 * BigInt(t));
    out.induced_is_fundamental = fund && *fund == out.induced;

    rec.equal("2d0^2 - t e0^2", 2 * out.d0 * out.d0 - BigInt(t) * out.e0 * out.e0, -1);
    rec.equal("induced norm", out.induced.norm(2 * BigInt(t)), 1);
    rec.lattice_class("D'", out.D_prime);
    rec.pairing("D'^2", out.D_prime, out.D_prime, 4);
    rec.pairing("D'.A1", out.D_prime, A(1), 4 * out.d0);
    rec.pairing("D'.A1'", out.D_prime, out.induced_A1_prime, 4 * out.d0);
    rec.pairing("A1'^2", out.induced_A1_prime, out.induced_A1_prime, -2);
    for (int j = 2; j <= kExceptionalCurves; ++j)
        rec.pairing("D'.A" + std::to_string(j), out.D_prime, A(j), 0);
    out.identities = rec.take();
    return out;
}

DoublePlaneDivisor build_double_plane_divisor(std::int64_t t) {
    const TClassification c = classify_non_square(t);
    if (!c.neg_pell) throw NoNegPell(t);
    const GramForm form(t);
    Recorder rec(form);

    DoublePlaneDivisor out;
    out.t = t;
    out.d0 = c.neg_pell->alpha;
    out.e0 = c.neg_pell->beta;
    out.D_prime = linear(out.e0, out.d0);
    const PellSolution squared{1 + 2 * out.d0 * out.d0, 2 * out.e0 * out.d0};
    if (squared != *c.fundamental)
        throw ConstructionError("(d0 + e0 sqrt 2t)^2 is not the fundamental solution for t = " + std::to_string(t));
    out.A1_prime = linear(c.fundamental->beta, c.fundamental->alpha);

    rec.equal("d0^2 - 2t e0^2", out.d0 * out.d0 - 2 * BigInt(t) * out.e0 * out.e0, -1);
    rec.lattice_class("D'", out.D_prime);
    rec.pairing("D'^2", out.D_prime, out.D_prime, 2);
    rec.same_class("A1 + A1' = 2d0 D'", A(1) + out.A1_prime, (2 * out.d0) * out.D_prime);
    rec.pairing("D'.A1", out.D_prime, A(1), 2 * out.d0);
    rec.pairing("D'.A1'", out.D_prime, out.A1_prime, 2 * out.d0);
    out.identities = rec.take();
    return out;
}

SubcaseReport subcase_classify(std::int64_t t) {
    const TClassification c = classify_non_square(t);
    if (!*c.beta0_even) throw OddBetaCase(t);
    const GramForm form(t);

    SubcaseReport out;
    out.t = t;
    out.fundamental = *c.fundamental;
    const auto& [alpha0, beta0] = out.fundamental;
    const BigInt g = boost::multiprecision::gcd(beta0, alpha0 - 1);
    if (!is_even(g)) throw ConstructionError("gcd(beta0, alpha0 - 1) is odd");
    out.d0 = g / 2;
    out.e0 = beta0 / g;
    const BigInt two_d0 = 2 * out.d0;

    // A1 + A1' = beta0 L - (alpha0 - 1) A1 has even coefficients.
    out.D = half_of(A(1) + linear(beta0, alpha0));
    if (!out.D.is_integral()) throw ConstructionError("1/2 (A1 + A1') is not integral");
    out.D_prime = linear(beta0 / two_d0, (alpha0 - 1) / two_d0);
    if (out.d0 * out.D_prime != out.D) throw ConstructionError("D is not d0 D'");
    out.D_prime_sq = pair_integer(out.D_prime, out.D_prime, form);
    if ((alpha0 - 1) % (2 * out.d0 * out.d0) != 0) throw ConstructionError("2 d0^2 does not divide alpha0 - 1");
    out.quotient = (alpha0 - 1) / (2 * out.d0 * out.d0);
    if (out.D_prime_sq != 2 * out.quotient) throw ConstructionError("D'^2 != 2 quotient");
    out.W_scale = BigRational(2 * out.d0 * out.d0, alpha0 - 1);
    out.same_structure = c.neg_pell.has_value();

    const BigInt d2 = out.d0 * out.d0, te2 = BigInt(t) * out.e0 * out.e0;
    if ((out.quotient == 1) != (d2 - 2 * te2 == -1))
        throw ConstructionError("quotient 1 does not match d0^2 - 2t e0^2 = -1");
    if ((out.quotient == 2) != (2 * d2 - te2 == -1))
        throw ConstructionError("quotient 2 does not match 2 d0^2 - t e0^2 = -1");
    if (out.same_structure != (out.quotient == 1))
        throw ConstructionError("negative Pell solvability disagrees with quotient 1");

    if (out.quotient == 1) out.double_plane = build_double_plane_divisor(t);
    if (out.quotient == 2) out.quartic = build_quartic_divisor(t);
    return out;
}

T4Package build_t4_configuration() {
    const GramForm form(4);
    Recorder rec(form);
    T4Package out;
    const DivisorClass block = sum_of({1, 2, 3, 4});
    // A_i'' = 1/2 (L - A1 - A2 - A3 - A4) - A_i.
    for (int i = 1; i <= 4; ++i) out.A_double_prime[static_cast<std::size_t>(i - 1)] = half_of(L() - block) - A(i);
    out.L1 = BigInt(3) * L() - BigInt(4) * block;
    out.L_prime = linear(3, 8);
    out.A1_prime = linear(1, 3);

    for (int i = 0; i < 4; ++i) {
        const std::string n = "A" + std::to_string(i + 1) + "''";
        rec.lattice_class(n, out.A_double_prime[i]);
        rec.pairing(n + "^2", out.A_double_prime[i], out.A_double_prime[i], -2);
        rec.pairing("L1." + n, out.L1, out.A_double_prime[i], 0);
        for (int j = 0; j < i; ++j)
            rec.pairing("A" + std::to_string(j + 1) + "''." + n, out.A_double_prime[j], out.A_double_prime[i], 0);
    }
    rec.pairing("L1^2", out.L1, out.L1, 16);
    rec.same_class("A1' = 2A1'' + A2 + A3 + A4", out.A1_prime, BigInt(2) * out.A_double_prime[0] + sum_of({2, 3, 4}));
    rec.pairing("A1''.L'", out.A_double_prime[0], out.L_prime, 0);
    for (int i = 1; i < 4; ++i)
        rec.differs("A" + std::to_string(i + 1) + "''.L'", pair(out.A_double_prime[i], out.L_prime, form), 0);

    std::vector<DivisorClass> members(out.A_double_prime.begin(), out.A_double_prime.end());
    for (int j = 5; j <= kExceptionalCurves; ++j) members.push_back(A(j));
    out.configuration = NikulinConfiguration::make(std::move(members), form);
    out.identities = rec.take();
    return out;
}

T2Package build_t2_configuration() {
    const GramForm form(2);
    Recorder rec(form);
    T2Package out;
    for (int k = 0; k < 4; ++k) out.F[static_cast<std::size_t>(k)] = half_fibre(k);
    for (int j = 1; j <= 8; ++j)
        out.B[static_cast<std::size_t>(j - 1)] = (j <= 4 ? out.F[1] : out.F[0]) - A(j);
    for (int k = 5; k <= kExceptionalCurves; ++k) out.C[static_cast<std::size_t>(k - 5)] = out.F[0] - A(k);
    out.L_prime = BigInt(3) * L() - BigInt(2) * sum_of({1, 2, 3, 4, 5, 6, 7, 8});

    for (int k = 0; k < 4; ++k) {
        const std::string n = "F" + std::to_string(k + 1);
        rec.lattice_class(n, out.F[k]);
        rec.pairing(n + "^2", out.F[k], out.F[k], 0);
        rec.pairing("L." + n, L(), out.F[k], 4);
        for (int j = 0; j < k; ++j) rec.pairing("F" + std::to_string(j + 1) + "." + n, out.F[j], out.F[k], 2);
    }
    for (int j = 0; j < 8; ++j) {
        const std::string n = "B" + std::to_string(j + 1);
        rec.lattice_class(n, out.B[j]);
        rec.pairing(n + "^2", out.B[j], out.B[j], -2);
        rec.differs("L." + n, pair(L(), out.B[j], form), 0);
        for (int k = 0; k < j; ++k) rec.pairing("B" + std::to_string(k + 1) + "." + n, out.B[k], out.B[j], 0);
        for (int i = 9; i <= kExceptionalCurves; ++i)
            rec.pairing(n + ".A" + std::to_string(i), out.B[j], A(i), 0);
    }
    for (int k = 5; k <= kExceptionalCurves; ++k) {
        const DivisorClass& ck = out.C[static_cast<std::size_t>(k - 5)];
        const std::string n = "C" + std::to_string(k);
        rec.lattice_class(n, ck);
        rec.pairing(n + "^2", ck, ck, -2);
        rec.pairing(n + ".A" + std::to_string(k), ck, A(k), 2);
    }
    rec.lattice_class("L'", out.L_prime);
    rec.pairing("L'^2", out.L_prime, out.L_prime, 8);

    std::vector<DivisorClass> members(out.B.begin(), out.B.end());
    for (int i = 9; i <= kExceptionalCurves; ++i) members.push_back(A(i));
    for (const DivisorClass& m : members) rec.pairing("L'." + to_display_string(m), out.L_prime, m, 0);
    out.configuration = NikulinConfiguration::make(std::move(members), form);
    out.identities = rec.take();
    return out;
}

}  // namespace nikulin
