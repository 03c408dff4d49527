#pragma once

// Pell-Fermat equations alpha^2 - D beta^2 = +-1 over arbitrary-precision integers,
// and the arithmetic classification of the polarization parameter t (D = 2t).

#include <cstdint>
#include <optional>
#include <vector>

#include "nikulin/integer.hpp"

namespace nikulin {

/// A non-negative pair (alpha, beta); which of alpha^2 - D beta^2 = +1 or -1 it
/// solves is fixed by the operation that produced it.
struct PellSolution {
    BigInt alpha;
    BigInt beta;

    /// alpha^2 - D beta^2.
    BigInt norm(const BigInt& D) const { return alpha * alpha - D * beta * beta; }

    friend bool operator==(const PellSolution&, const PellSolution&) = default;
};

/// Simple continued fraction sqrt(D) = [a0; period, period, ...].
struct CFExpansion {
    BigInt radicand;
    BigInt a0;
    std::vector<BigInt> period;  // last element is always 2 a0

    std::size_t period_length() const noexcept { return period.size(); }
    /// Partial quotient a_k for any k >= 0.
    const BigInt& term(std::size_t k) const { return k == 0 ? a0 : period[(k - 1) % period.size()]; }
};

/// Numerator and denominator of the k-th convergent p_k / q_k.
struct Convergent {
    BigInt p;
    BigInt q;
};

CFExpansion cf_sqrt(const BigInt& D);

/// Convergents p_0/q_0 .. p_last/q_last of sqrt(D).
std::vector<Convergent> convergents(const CFExpansion& cf, std::size_t last);

/// Minimal positive solution of alpha^2 - D beta^2 = 1; absent iff D is a square.
std::optional<PellSolution> fundamental_solution(const BigInt& D);

/// Minimal positive solution of alpha^2 - D beta^2 = -1; present iff the period of
/// sqrt(D) has odd length (absent for square D).
std::optional<PellSolution> negative_fundamental_solution(const BigInt& D);

/// (alpha0 + beta0 sqrt D)^n through x' = a0 x + D b0 y, y' = a0 y + b0 x; n = 0 gives (1, 0).
PellSolution nth_solution(const BigInt& D, const PellSolution& fund, std::uint64_t n);

/// Distinct prime divisors of n (trial division), n >= 1.
std::vector<std::int64_t> distinct_prime_factors(std::int64_t n);

/// Arithmetic dossier of t >= 1 (D = 2t). `nu` counts distinct primes of t = M^2 / 2;
/// predicted_structures = 2^nu is the number of Kummer structures for generic A.
struct TClassification {
    std::int64_t t = 0;
    bool two_t_is_square = false;
    std::optional<PellSolution> fundamental;
    std::optional<bool> beta0_even;
    std::optional<PellSolution> neg_pell;
    int t_mod_12 = 0;
    int nu = 0;
    std::uint64_t predicted_structures = 1;
};

TClassification classify_t(std::int64_t t);

/// t = k(k+1)/2 with its fundamental solution (2k+1, 2); verified against the solver.
struct AppendixFamilyMember {
    std::int64_t k = 0;
    std::int64_t t = 0;
    PellSolution solution;
    BigInt d0;  // gcd(beta0, alpha0 - 1) / 2, always 1 in this family
};

AppendixFamilyMember appendix_family(std::int64_t k);

/// n-th solution (x_n, y_n) of x^2 - 8 y^2 = 1 and the two derived families:
/// alpha^2 - 8 s^2 beta^2 = 1 with s = y_n has fundamental (x_n, 1) (odd beta0), and for
/// even n, s = y_n / 2 has fundamental (x_n, 2) (even beta0).
struct Family8s2 {
    std::uint64_t n = 0;
    PellSolution base;  // (x_n, y_n)
    BigInt odd_s;
    PellSolution odd_fundamental;
    std::optional<BigInt> even_s;
    std::optional<PellSolution> even_fundamental;
};

Family8s2 family_8s2(std::uint64_t n);

/// Empirical check of "t != 0 mod 4 => beta0 even" and "negative Pell solvable => t = 1, 5
/// mod 12" for t = t_min..t_max (square 2t skipped).
struct ParityScanReport {
    std::int64_t t_min = 1;
    std::int64_t t_max = 0;
    std::uint64_t tested = 0;  // non-square 2t
    std::vector<std::int64_t> beta_parity_violations;
    std::vector<std::int64_t> neg_pell_congruence_violations;
    std::uint64_t beta0_even_count = 0;
    std::uint64_t neg_pell_unsolvable_count = 0;
    std::uint64_t even_and_unsolvable_count = 0;

    bool clean() const noexcept {
        return beta_parity_violations.empty() && neg_pell_congruence_violations.empty();
    }
    double beta0_even_density() const noexcept;
    double neg_pell_unsolvable_density() const noexcept;
    double even_and_unsolvable_density() const noexcept;
};

ParityScanReport scan_parity_lemmas(std::int64_t t_max);
ParityScanReport scan_parity_lemmas(std::int64_t t_min, std::int64_t t_max);

/// The s-restricted variant: s = 1..s_max with 8s non-square, listing s whose fundamental
/// solution of alpha^2 - 8s beta^2 = 1 has even beta0.
struct EightSScanReport {
    std::int64_t s_max = 0;
    std::vector<std::int64_t> skipped_square;
    std::vector<std::int64_t> beta0_even;
};

EightSScanReport scan_8s_family(std::int64_t s_max);

}  // namespace nikulin
