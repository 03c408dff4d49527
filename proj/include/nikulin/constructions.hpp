#pragma once

// Explicit (-2)-classes and Nikulin configurations for each arithmetic case of t:
// beta0 even (A1' and the polarization L'), beta0 odd (the 2-divisibility obstruction,
// and the t = 4 configuration), 2t square (the t = 2 half-fibre configuration).
//
// Only lattice-level consequences are certified here. Irreducibility of the constructed
// curves is a geometric statement the lattice alone cannot decide.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nikulin/lattice.hpp"
#include "nikulin/pell.hpp"

namespace nikulin {

/// One asserted identity, kept for reporting.
struct IdentityCheck {
    std::string name;
    std::string value;
    std::string expected;
};

/// Sixteen pairwise orthogonal effective (-2)-classes. Only make() produces a non-empty one.
class NikulinConfiguration {
  public:
    NikulinConfiguration() = default;

    /// Throws ConstructionError naming the first violated invariant.
    static NikulinConfiguration make(std::vector<DivisorClass> classes, const GramForm& form);

    const std::vector<DivisorClass>& classes() const noexcept { return classes_; }
    /// Self-intersections plus pairwise products checked by make().
    std::size_t pairings_checked() const noexcept { return pairings_checked_; }

  private:
    std::vector<DivisorClass> classes_;
    std::size_t pairings_checked_ = 0;
};

/// (a, b) = (2t beta, alpha): L' = bL - aA1 is orthogonal to A1' = beta L - alpha A1 and L'^2 = L^2.
struct ThreeConditionSolution {
    BigInt a;
    BigInt b;
};

ThreeConditionSolution solve_three_conditions(std::int64_t t, const PellSolution& sol);

struct EvenBetaConstruction {
    std::int64_t t = 0;
    PellSolution fundamental;
    DivisorClass A1_prime;  // beta0 L - alpha0 A1
    DivisorClass L_prime;   // alpha0 L - 2t beta0 A1
    NikulinConfiguration configuration;  // {A1', A2, ..., A16}
    std::vector<IdentityCheck> identities;
};

/// Throws SquareCase or OddBetaCase outside the even-beta0 case.
EvenBetaConstruction build_even_beta(std::int64_t t);

/// For odd beta0: 1/2 (A1 + A1') = (beta0/2) L - ((alpha0-1)/2) A1 would have to be
/// integral, which puts L/2 in NS(X).
struct OddBetaObstruction {
    std::int64_t t = 0;
    PellSolution fundamental;
    DivisorClass A1_prime;
    DivisorClass half_sum;         // 1/2 (A1 + A1')
    bool half_sum_admissible = false;
    DivisorClass forced_half_L;    // 1/2 L = half_sum - ((beta0-1)/2) L + ((alpha0-1)/2) A1
    bool forced_half_L_admissible = false;
};

/// Throws SquareCase for square 2t and std::invalid_argument for even beta0.
OddBetaObstruction check_odd_beta_obstruction(std::int64_t t);

/// Positive solution of 2 d^2 - t e^2 = -1.
struct QuarticPair {
    BigInt d0;
    BigInt e0;
    std::string method;  // "continued fraction" or "scan"
};

struct QuarticSearchOptions {
    BigInt max_e0 = 1'000'000;  // brute-force bound, used only for t < 3
};

/// Minimal positive solution of 2 d^2 - t e^2 = -1, or NoQuarticCase.
/// Modular filters first; for t >= 3 every primitive solution of (2d)^2 - 2t e^2 = -2 is a
/// convergent of sqrt(2t), so one expansion decides; t < 3 falls back to a bounded scan.
QuarticPair solve_quartic_relation(std::int64_t t, const QuarticSearchOptions& options = {});

struct QuarticDivisor {
    std::int64_t t = 0;
    BigInt d0;
    BigInt e0;
    DivisorClass D_prime;          // e0 L - 2 d0 A1, D'^2 = 4
    PellSolution induced;          // (1 + 4 d0^2, 2 d0 e0)
    bool induced_is_fundamental = false;
    DivisorClass induced_A1_prime; // induced.beta L - induced.alpha A1
    std::vector<IdentityCheck> identities;
};

QuarticDivisor build_quartic_divisor(std::int64_t t, const QuarticSearchOptions& options = {});

struct DoublePlaneDivisor {
    std::int64_t t = 0;
    BigInt d0;
    BigInt e0;
    DivisorClass D_prime;   // e0 L - d0 A1, D'^2 = 2
    DivisorClass A1_prime;  // from the fundamental solution (1 + 2 d0^2, 2 e0 d0)
    std::vector<IdentityCheck> identities;
};

/// Throws NoNegPell when alpha^2 - 2t beta^2 = -1 is unsolvable.
DoublePlaneDivisor build_double_plane_divisor(std::int64_t t);

/// d0 = gcd(beta0, alpha0 - 1) / 2, D = 1/2 (A1 + A1'), D' = D / d0 and
/// quotient = (alpha0 - 1) / (2 d0^2) = D'^2 / 2.
struct SubcaseReport {
    std::int64_t t = 0;
    PellSolution fundamental;
    BigInt d0;
    BigInt e0;
    DivisorClass D;
    DivisorClass D_prime;
    BigInt D_prime_sq;
    BigInt quotient;
    BigRational W_scale;  // W = W_scale * D', W_scale = 2 d0^2 / (alpha0 - 1)
    bool same_structure = false;  // negative Pell solvable
    std::optional<QuarticDivisor> quartic;         // quotient == 2
    std::optional<DoublePlaneDivisor> double_plane; // quotient == 1
};

/// Requires 2t non-square and beta0 even (SquareCase / OddBetaCase otherwise).
SubcaseReport subcase_classify(std::int64_t t);

struct T4Package {
    std::array<DivisorClass, 4> A_double_prime;  // A1''..A4''
    DivisorClass L1;       // 3L - 4(A1 + A2 + A3 + A4)
    DivisorClass L_prime;  // 3L - 8A1
    DivisorClass A1_prime; // L - 3A1
    NikulinConfiguration configuration;  // {A1'', .., A4'', A5, .., A16}
    std::vector<IdentityCheck> identities;
};

T4Package build_t4_configuration();

struct T2Package {
    std::array<DivisorClass, 4> F;   // F_k = 1/2 (L - sum of block k)
    std::array<DivisorClass, 8> B;   // B_j = F2 - A_j (j <= 4), F1 - A_j (5 <= j <= 8)
    std::array<DivisorClass, 12> C;  // C_k = F1 - A_k, k = 5..16
    DivisorClass L_prime;            // 3L - 2(A1 + ... + A8)
    NikulinConfiguration configuration;  // {B1, .., B8, A9, .., A16}
    std::vector<IdentityCheck> identities;
};

T2Package build_t2_configuration();

}  // namespace nikulin
