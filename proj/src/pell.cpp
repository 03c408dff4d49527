#include "nikulin/pell.hpp"

#include <stdexcept>
#include <string>

#include "nikulin/errors.hpp"

namespace nikulin {

namespace {

struct PellPair {
    std::optional<PellSolution> positive;
    std::optional<PellSolution> negative;
};

// Both equations from one expansion: with r the period length, p_{r-1}^2 - D q_{r-1}^2 =
// (-1)^r, so odd r yields the -1 solution at r - 1 and the +1 solution at 2r - 1.
PellPair solve_from_cf(const CFExpansion& cf) {
    const std::size_t r = cf.period_length();
    const bool odd = (r % 2) == 1;
    const auto conv = convergents(cf, odd ? 2 * r - 1 : r - 1);
    PellPair out;
    const Convergent& plus = conv.back();
    out.positive = PellSolution{plus.p, plus.q};
    if (odd) out.negative = PellSolution{conv[r - 1].p, conv[r - 1].q};
    return out;
}

void require_positive(std::int64_t value, const char* what) {
    if (value < 1) throw std::invalid_argument(std::string(what) + " must be >= 1");
}

}  // namespace

CFExpansion cf_sqrt(const BigInt& D) {
    if (D < 2) throw std::invalid_argument("cf_sqrt: radicand must be >= 2");
    const BigInt a0 = isqrt(D);
    if (a0 * a0 == D) throw std::invalid_argument("cf_sqrt: radicand " + D.str() + " is a perfect square");

    CFExpansion cf{D, a0, {}};
    BigInt m = 0;
    BigInt d = 1;
    BigInt a = a0;
    const BigInt stop = 2 * a0;
    do {
        m = d * a - m;
        d = (D - m * m) / d;
        a = (a0 + m) / d;
        cf.period.push_back(a);
    } while (a != stop);
    return cf;
}

std::vector<Convergent> convergents(const CFExpansion& cf, std::size_t last) {
    std::vector<Convergent> out;
    out.reserve(last + 1);
    BigInt p_prev = 1, p = cf.a0;
    BigInt q_prev = 0, q = 1;
    out.push_back({p, q});
    for (std::size_t k = 1; k <= last; ++k) {
        const BigInt& a = cf.term(k);
        BigInt p_next = a * p + p_prev;
        BigInt q_next = a * q + q_prev;
        p_prev = std::move(p);
        q_prev = std::move(q);
        p = std::move(p_next);
        q = std::move(q_next);
        out.push_back({p, q});
    }
    return out;
}

std::optional<PellSolution> fundamental_solution(const BigInt& D) {
    if (D < 1) throw std::invalid_argument("fundamental_solution: D must be >= 1");
    if (is_square(D)) return std::nullopt;
    return solve_from_cf(cf_sqrt(D)).positive;
}

std::optional<PellSolution> negative_fundamental_solution(const BigInt& D) {
    if (D < 1) throw std::invalid_argument("negative_fundamental_solution: D must be >= 1");
    if (is_square(D)) return std::nullopt;
    return solve_from_cf(cf_sqrt(D)).negative;
}

PellSolution nth_solution(const BigInt& D, const PellSolution& fund, std::uint64_t n) {
    if (fund.norm(D) != 1)
        throw std::invalid_argument("nth_solution: (" + fund.alpha.str() + ", " + fund.beta.str() +
                                    ") does not solve alpha^2 - " + D.str() + " beta^2 = 1");
    PellSolution cur{1, 0};
    for (std::uint64_t k = 0; k < n; ++k) {
        BigInt x = fund.alpha * cur.alpha + D * fund.beta * cur.beta;
        BigInt y = fund.alpha * cur.beta + fund.beta * cur.alpha;
        cur = {std::move(x), std::move(y)};
    }
    return cur;
}

std::vector<std::int64_t> distinct_prime_factors(std::int64_t n) {
    require_positive(n, "distinct_prime_factors: n");
    std::vector<std::int64_t> primes;
    for (std::int64_t p = 2; p <= n / p; ++p) {
        if (n % p != 0) continue;
        primes.push_back(p);
        while (n % p == 0) n /= p;
    }
    if (n > 1) primes.push_back(n);
    return primes;
}

TClassification classify_t(std::int64_t t) {
    require_positive(t, "classify_t: t");
    TClassification c;
    c.t = t;
    c.t_mod_12 = static_cast<int>(t % 12);
    c.nu = static_cast<int>(distinct_prime_factors(t).size());
    c.predicted_structures = std::uint64_t{1} << c.nu;

    const BigInt D = 2 * BigInt(t);
    c.two_t_is_square = is_square(D);
    if (c.two_t_is_square) return c;

    PellPair sols = solve_from_cf(cf_sqrt(D));
    c.fundamental = std::move(sols.positive);
    c.beta0_even = is_even(c.fundamental->beta);
    c.neg_pell = std::move(sols.negative);
    return c;
}

AppendixFamilyMember appendix_family(std::int64_t k) {
    require_positive(k, "appendix_family: k");
    AppendixFamilyMember m;
    m.k = k;
    m.t = k * (k + 1) / 2;
    m.solution = {2 * BigInt(k) + 1, 2};

    const auto fund = fundamental_solution(2 * BigInt(m.t));
    if (!fund || *fund != m.solution)
        throw ConstructionError("appendix_family: (2k+1, 2) is not the fundamental solution for k = " +
                                std::to_string(k));
    // gcd(beta, alpha0 - 1) = gcd(2, 2k) = 2.
    m.d0 = boost::multiprecision::gcd(m.solution.beta, m.solution.alpha - 1) / 2;
    if (m.d0 != 1) throw ConstructionError("appendix_family: d0 != 1 for k = " + std::to_string(k));
    return m;
}

Family8s2 family_8s2(std::uint64_t n) {
    if (n < 1) throw std::invalid_argument("family_8s2: n must be >= 1");
    const BigInt eight = 8;
    Family8s2 f;
    f.n = n;
    f.base = nth_solution(eight, PellSolution{3, 1}, n);
    f.odd_s = f.base.beta;
    f.odd_fundamental = {f.base.alpha, 1};
    if (fundamental_solution(eight * f.odd_s * f.odd_s) != f.odd_fundamental)
        throw ConstructionError("family_8s2: (x_n, 1) is not fundamental for n = " + std::to_string(n));

    if (n % 2 == 0) {
        if (!is_even(f.base.beta)) throw ConstructionError("family_8s2: y_n odd for even n");
        f.even_s = f.base.beta / 2;
        f.even_fundamental = PellSolution{f.base.alpha, 2};
        if (fundamental_solution(eight * *f.even_s * *f.even_s) != f.even_fundamental)
            throw ConstructionError("family_8s2: (x_n, 2) is not fundamental for n = " + std::to_string(n));
    }
    return f;
}

double ParityScanReport::beta0_even_density() const noexcept {
    return tested == 0 ? 0.0 : static_cast<double>(beta0_even_count) / static_cast<double>(tested);
}
double ParityScanReport::neg_pell_unsolvable_density() const noexcept {
    return tested == 0 ? 0.0 : static_cast<double>(neg_pell_unsolvable_count) / static_cast<double>(tested);
}
double ParityScanReport::even_and_unsolvable_density() const noexcept {
    return tested == 0 ? 0.0 : static_cast<double>(even_and_unsolvable_count) / static_cast<double>(tested);
}

ParityScanReport scan_parity_lemmas(std::int64_t t_max) { return scan_parity_lemmas(1, t_max); }

ParityScanReport scan_parity_lemmas(std::int64_t t_min, std::int64_t t_max) {
    require_positive(t_min, "scan_parity_lemmas: t_min");
    if (t_max < t_min) throw std::invalid_argument("scan_parity_lemmas: empty range");
    ParityScanReport report;
    report.t_min = t_min;
    report.t_max = t_max;
    for (std::int64_t t = t_min; t <= t_max; ++t) {
        const TClassification c = classify_t(t);
        if (c.two_t_is_square) continue;
        ++report.tested;
        const bool even = *c.beta0_even;
        const bool solvable = c.neg_pell.has_value();
        if (t % 4 != 0 && !even) report.beta_parity_violations.push_back(t);
        if (solvable && c.t_mod_12 != 1 && c.t_mod_12 != 5) report.neg_pell_congruence_violations.push_back(t);
        if (even) ++report.beta0_even_count;
        if (!solvable) ++report.neg_pell_unsolvable_count;
        if (even && !solvable) ++report.even_and_unsolvable_count;
    }
    return report;
}

EightSScanReport scan_8s_family(std::int64_t s_max) {
    require_positive(s_max, "scan_8s_family: s_max");
    EightSScanReport report;
    report.s_max = s_max;
    for (std::int64_t s = 1; s <= s_max; ++s) {
        const auto fund = fundamental_solution(8 * BigInt(s));
        if (!fund) {
            report.skipped_square.push_back(s);
            continue;
        }
        if (is_even(fund->beta)) report.beta0_even.push_back(s);
    }
    return report;
}

}  // namespace nikulin
