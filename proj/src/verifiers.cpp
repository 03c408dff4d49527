#include "nikulin/verifiers.hpp"

#include <algorithm>
#include <iterator>
#include <map>
#include <stdexcept>
#include <string>

#include "nikulin/constructions.hpp"
#include "nikulin/errors.hpp"
#include "nikulin/pell.hpp"

namespace nikulin {

namespace {

using Box = EnumerationBox<BigInt>;

std::string half_units(const BigInt& doubled) {
    return is_even(doubled) ? BigInt(doubled / 2).str() : doubled.str() + "/2";
}

// Sorted a and b; the first element of the symmetric difference.
std::optional<DivisorClass> first_difference(const std::vector<DivisorClass>& a, const std::vector<DivisorClass>& b) {
    std::vector<DivisorClass> diff;
    std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(diff));
    if (diff.empty()) return std::nullopt;
    return diff.front();
}

// Splits pair <= 0 classes into the zero set and the first negative class, then compares.
void settle(Verdict& v, const std::vector<DivisorClass>& found, const DivisorClass& N, const GramForm& form,
            std::vector<DivisorClass> expected) {
    std::sort(expected.begin(), expected.end());
    for (const DivisorClass& x : found) {
        const BigInt p = pair_x4(x, N, form);
        if (p == 0) {
            v.zero_set.push_back(x);
        } else if (p < 0 && !v.witness) {
            v.witness = x;
            v.details.push_back("negative pairing: " + to_display_string(x));
        }
    }
    if (!v.witness) {
        v.witness = first_difference(v.zero_set, expected);
        if (v.witness) v.details.push_back("zero set differs from expectation at " + to_display_string(*v.witness));
    }
    v.pass = !v.witness;
}

TClassification even_beta_classification(std::int64_t t) {
    TClassification c = classify_t(t);
    if (c.two_t_is_square) throw SquareCase(t);
    if (!*c.beta0_even) throw OddBetaCase(t);
    return c;
}

}  // namespace

Verdict verify_contracted_set(const DivisorClass& N, std::vector<DivisorClass> expected, const GramForm& form,
                              const VerifierOptions& options) {
    for (int i = 2; i <= kExceptionalCurves; ++i) {
        if (N.two_cA(i) != 0) throw std::invalid_argument("verify_contracted_set: N must be supported on {L, A1}");
    }
    const BigInt& X = N.two_cL();
    const BigInt& Y = N.two_cA(1);
    const BigInt n4 = self_x4(N, form);
    if (X <= 0 || n4 <= 0) throw std::invalid_argument("verify_contracted_set: N must satisfy N^2 > 0 and N.L > 0");
    if (!is_admissible(N, default_rule(form))) throw std::invalid_argument("verify_contracted_set: N is not admissible");

    Verdict v;
    v.claim = "contracted_set";
    v.parameters = {{"t", std::to_string(form.t())}, {"N", to_display_string(N)}};

    // N.Gamma <= 0 with alpha > 0 needs 2t a X <= b1 Y; combined with b1^2 <= 2t a^2 + 4 this
    // gives a^2 t (4 N^2) <= 4 Y^2 and leaves at most 4 (quarter units) for the tail.
    const BigInt a_max = Y <= 0 ? BigInt(0) : isqrt(BigInt(4 * Y * Y / (BigInt(form.t()) * n4)));
    if (a_max > options.node_cap) throw BoundOverflow(static_cast<std::uint64_t>(a_max), options.node_cap);
    v.details.push_back("alpha <= " + half_units(a_max) + " for every (-2)-class meeting N non-positively");
    v.details.push_back("off-support norm <= 1");

    Box box;
    box.support = support_with({1});
    box.two_bound_uL = std::max(a_max, BigInt(1));
    box.max_tail_norm_x4 = 4;
    box.nonpositive_against = N;
    box.node_cap = options.node_cap;
    const auto result = enumerate_minus2(box, form);
    v.nodes_visited = result.nodes_visited;
    settle(v, result.classes, N, form, std::move(expected));
    return v;
}

Verdict verify_contracted_set_L_prime(std::int64_t t, const VerifierOptions& options) {
    const EvenBetaConstruction c = build_even_beta(t);
    Verdict v = verify_contracted_set(c.L_prime, c.configuration.classes(), GramForm(t), options);
    v.claim = "contracted_set_L_prime";
    return v;
}

Verdict verify_contracted_set_D_prime(std::int64_t t, const VerifierOptions& options) {
    const SubcaseReport s = subcase_classify(t);
    std::vector<DivisorClass> expected;
    for (int j = 2; j <= kExceptionalCurves; ++j) expected.push_back(A(j));
    Verdict v = verify_contracted_set(s.D_prime, std::move(expected), GramForm(t), options);
    v.claim = "contracted_set_D_prime";
    v.parameters.emplace_back("quotient", s.quotient.str());
    return v;
}

Verdict verify_lemma_treize(std::int64_t t, std::uint64_t m_max) {
    if (m_max < 1) throw std::invalid_argument("verify_lemma_treize: m_max must be >= 1");
    const TClassification c = even_beta_classification(t);
    const GramForm form(t);
    const BigInt D = 2 * BigInt(t);
    const auto& [alpha0, beta0] = *c.fundamental;
    const DivisorClass A1p = beta0 * L() - alpha0 * A(1);

    Verdict v;
    v.claim = "lemma_treize";
    v.parameters = {{"t", std::to_string(t)}, {"m_max", std::to_string(m_max)}};
    v.pass = true;

    BigInt u_prev, lambda_prev;
    for (std::uint64_t m = 1; m <= m_max && v.pass; ++m) {
        ++v.nodes_visited;
        const PellSolution s = nth_solution(D, *c.fundamental, m);
        const BigInt& lambda = s.alpha;
        const BigInt& mu = s.beta;
        const DivisorClass C = mu * L() - lambda * A(1);
        const BigInt numerator_v = alpha0 * mu - beta0 * lambda;
        std::string failure;
        if (self_x4(C, form) != -8) failure = "not a (-2)-class";
        else if (mu % beta0 != 0 || numerator_v % beta0 != 0) failure = "coefficients are not integral";
        const BigInt u = mu / beta0;
        const BigInt w = numerator_v / beta0;
        if (failure.empty() && (u < 0 || w < 0)) failure = "negative coefficient";
        if (failure.empty() && u * A1p + w * A(1) != C) failure = "decomposition does not reproduce the class";
        if (failure.empty() && m > 1 && (u != alpha0 * u_prev + lambda_prev || w != u_prev))
            failure = "recurrence u' = alpha0 u + lambda, v' = u broken";
        if (!failure.empty()) {
            v.pass = false;
            v.witness = C;
            v.details.push_back("m = " + std::to_string(m) + ": " + failure);
            break;
        }
        v.details.push_back("m = " + std::to_string(m) + ": (" + lambda.str() + ", " + mu.str() + ") -> " +
                            u.str() + " A1' + " + w.str() + " A1");
        u_prev = u;
        lambda_prev = lambda;
    }
    return v;
}

Verdict verify_quartic_degree_one(std::int64_t t) {
    const QuarticDivisor q = build_quartic_divisor(t);
    const GramForm form(t);
    const BigInt bt(t);
    const BigInt& d0 = q.d0;
    const BigInt& e0 = q.e0;

    Verdict v;
    v.claim = "quartic_degree_one";
    v.parameters = {{"t", std::to_string(t)}, {"d0", d0.str()}, {"e0", e0.str()}};
    v.pass = true;
    auto fail = [&](std::string why) {
        v.pass = false;
        v.details.push_back(std::move(why));
    };

    // An elliptic E = (a/2)L - sum (b_i/2)A_i with D'.E = 2 satisfies a t e0 - b1 d0 = 1 and
    // 2t a^2 = b1^2 + S, S = sum_{i>=2} b_i^2, hence
    //   (e0^2 t - 2 d0^2) b1^2 - 4 d0 b1 + e0^2 t S - 2 = 0.
    const BigInt lead = e0 * e0 * bt - 2 * d0 * d0;
    if (lead != 1) fail("leading coefficient e0^2 t - 2 d0^2 = " + lead.str());
    auto delta = [&](const BigInt& S) { return 4 * d0 * d0 + 2 - e0 * e0 * bt * S; };
    for (int S = 0; S <= 3; ++S) {
        ++v.nodes_visited;
        if (delta(S) != (1 + 2 * d0 * d0) * (2 - S))
            fail("reduced discriminant at S = " + std::to_string(S) + " is " + delta(S).str());
    }
    if (delta(3) >= 0) fail("discriminant non-negative at S = 3");
    v.details.push_back("S >= 3: reduced discriminant (1 + 2 d0^2)(2 - S) < 0");

    if (is_square(delta(0))) {
        fail("S = 0: 2(1 + 2 d0^2) = " + delta(0).str() + " is a square");
    } else {
        v.details.push_back("S = 0: 2(1 + 2 d0^2) = " + delta(0).str() + " is not a square");
    }

    // S in {1, 2}: S entries b_i = 1 among i >= 2, so at most S + 1 half-integer coefficients
    // whatever the parities of a and b1.
    for (int S = 1; S <= 2; ++S) {
        for (int pa = 1; pa <= 2; ++pa) {
            for (int pb = 1; pb <= 2; ++pb) {
                ++v.nodes_visited;
                DivisorClass E = DivisorClass::from_doubled(pa, {});
                E.set_two_cA(1, pb);
                for (int i = 2; i < 2 + S; ++i) E.set_two_cA(i, 1);
                if (is_admissible(E, default_rule(form))) {
                    v.witness = E;
                    fail("S = " + std::to_string(S) + ": admissible pattern " + to_display_string(E));
                }
            }
        }
        v.details.push_back("S = " + std::to_string(S) + ": every parity pattern is inadmissible");
    }
    return v;
}

Verdict verify_t4_nefness(const VerifierOptions& options) {
    const T4Package pkg = build_t4_configuration();
    const GramForm form(4);
    Verdict v;
    v.claim = "t4_nefness";
    v.parameters = {{"t", "4"}, {"L1", to_display_string(pkg.L1)}};

    // L1.Gamma <= 0  <=>  6a <= b1 + b2 + b3 + b4, and Cauchy-Schwarz with sum b_i^2 = 8a^2 + 4
    // gives 36 a^2 <= 4 (8 a^2 + 4); the tail keeps 8a^2 + 4 - 9a^2 = 4 - a^2, which is 4 at
    // a = 0 (the curves A5..A16) and at most 3 above it.
    BigInt a_max = 0;
    while (36 * (a_max + 1) * (a_max + 1) <= 4 * (8 * (a_max + 1) * (a_max + 1) + 4)) ++a_max;
    const BigInt tail_cap = 4;
    v.details.push_back("alpha <= " + half_units(a_max) + ", off-support norm <= 1");

    Box box;
    box.support = support_with({1, 2, 3, 4});
    box.two_bound_uL = a_max;
    box.max_tail_norm_x4 = tail_cap;
    box.nonpositive_against = pkg.L1;
    box.node_cap = options.node_cap;
    const auto result = enumerate_minus2(box, form);
    v.nodes_visited = result.nodes_visited;

    std::vector<DivisorClass> expected(pkg.configuration.classes());
    settle(v, result.classes, pkg.L1, form, std::move(expected));

    // Branch replay without any half-integer rule: which raw vectors did admissibility remove?
    box.rule = HalfIntegerRule::none;
    const auto raw = enumerate_minus2(box, form);
    v.nodes_visited += raw.nodes_visited;
    std::map<std::pair<BigInt, BigInt>, int> raw_branches, kept_branches;
    for (const DivisorClass& x : raw.classes)
        if (x.two_cL() > 0) ++raw_branches[{x.two_cL(), x.two_cA(1)}];
    for (const DivisorClass& x : result.classes)
        if (x.two_cL() > 0) ++kept_branches[{x.two_cL(), x.two_cA(1)}];
    for (BigInt a = 1; a <= a_max; ++a) {
        for (BigInt b1 = 0; b1 * b1 <= 8 * a * a + 4; ++b1) {
            const int r = raw_branches[{a, b1}];
            const int k = kept_branches[{a, b1}];
            v.details.push_back("alpha = " + half_units(a) + ", b1 = " + half_units(b1) + ": " + std::to_string(r) +
                                " raw completions, " + std::to_string(k) + " admissible");
        }
    }
    return v;
}

Verdict verify_t2_f1_nef(const VerifierOptions& options) {
    const T2Package pkg = build_t2_configuration();
    const GramForm form(2);
    const DivisorClass& F1 = pkg.F[0];
    Verdict v;
    v.claim = "t2_f1_nef";
    v.parameters = {{"t", "2"}, {"F1", to_display_string(F1)}};
    v.pass = true;
    auto fail = [&](std::string why, const DivisorClass& w) {
        if (!v.witness) v.witness = w;
        v.pass = false;
        v.details.push_back(std::move(why));
    };

    if (self_x4(F1, form) != 0) fail("F1^2 != 0", F1);
    const BigInt degree_x4 = pair_x4(F1, L(), form);
    if (degree_x4 != 16) fail("F1.L != 4", F1);

    // F1 = E + (fixed part): L.E = 8 alpha_E = 4 (2 alpha_E) <= F1.L = 4 with 2 alpha_E >= 1.
    std::vector<BigInt> moving;
    for (BigInt a = 1; 4 * a * form.t() * 2 <= degree_x4; ++a) moving.push_back(a);
    if (moving.size() != 1 || moving.front() != 1) fail("moving part is not forced to alpha = 1/2", F1);
    v.details.push_back("moving part has alpha = 1/2, so the fixed part is orthogonal to L");

    // Fixed components orthogonal to L have alpha = 0: the exceptional curves.
    Box box;
    box.support = support_with({});
    box.two_bound_uL = 1;
    box.max_tail_norm_x4 = 2 * form.t() + 4;
    box.node_cap = options.node_cap;
    const auto result = enumerate_minus2(box, form);
    v.nodes_visited = result.nodes_visited;
    for (const DivisorClass& x : result.classes) {
        const BigInt p = pair_x4(F1, x, form);
        if (x.two_cL() == 0) {
            if (p != 0 && p != 4) fail("F1." + to_display_string(x) + " not in {0, 1}", x);
            if (p == 0) v.zero_set.push_back(x);
        } else if (p < 0) {
            fail("F1 meets " + to_display_string(x) + " negatively", x);
        }
    }
    v.details.push_back(std::to_string(result.classes.size()) + " (-2)-classes with alpha <= 1/2 meet F1 non-negatively");
    return v;
}

Verdict verify_even_propagation(std::int64_t t, std::uint64_t n_max) {
    const TClassification c = even_beta_classification(t);
    const BigInt D = 2 * BigInt(t);
    Verdict v;
    v.claim = "even_propagation";
    v.parameters = {{"t", std::to_string(t)}, {"n_max", std::to_string(n_max)}};
    v.pass = true;
    for (std::uint64_t n = 0; n <= n_max; ++n) {
        ++v.nodes_visited;
        const PellSolution s = nth_solution(D, *c.fundamental, n);
        if (!is_even(s.beta)) {
            v.pass = false;
            v.details.push_back("n = " + std::to_string(n) + ": beta = " + s.beta.str() + " is odd");
            break;
        }
    }
    if (v.pass) v.details.push_back("beta even for n = 0.." + std::to_string(n_max));
    return v;
}

}  // namespace nikulin
