#pragma once

// Decision procedures for the finiteness claims. Each one reduces the claim to a finite
// box through an explicit bound, enumerates the box, and reports PASS/FAIL together with
// the zero set or a counterexample.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nikulin/lattice.hpp"

namespace nikulin {

struct Verdict {
    std::string claim;
    std::vector<std::pair<std::string, std::string>> parameters;
    bool pass = false;
    std::vector<DivisorClass> zero_set;   // sorted
    std::optional<DivisorClass> witness;  // set on FAIL when a class refutes the claim
    std::vector<std::string> details;     // derived bounds and case notes
    std::uint64_t nodes_visited = 0;
};

struct VerifierOptions {
    std::uint64_t node_cap = 1'000'000;
};

/// N = xL - yA1 with x > 0 and N^2 > 0. Any (-2)-class Gamma with N.Gamma <= 0 satisfies
/// (2 alpha)^2 <= 4 (2y)^2 / (t (4 N^2)) and a tail norm <= 1, so the enumerated box is complete.
/// PASS iff no effective (-2)-class meets N negatively and those orthogonal to N are
/// exactly `expected`. Throws BoundOverflow when the box exceeds options.node_cap.
Verdict verify_contracted_set(const DivisorClass& N, std::vector<DivisorClass> expected, const GramForm& form,
                              const VerifierOptions& options = {});

/// L' for even beta0; expected zero set {A1', A2, .., A16}.
Verdict verify_contracted_set_L_prime(std::int64_t t, const VerifierOptions& options = {});

/// D' in the quartic or double-plane sub-case; expected zero set {A2, .., A16}.
Verdict verify_contracted_set_D_prime(std::int64_t t, const VerifierOptions& options = {});

/// For m = 1..m_max the (-2)-class C_m = mu L - lambda A1 from the m-th Pell solution equals
/// u A1' + v A1 with u = mu / beta0 and v = (alpha0 mu - beta0 lambda) / beta0 non-negative
/// integers (u' = alpha0 u + lambda, v' = u).
Verdict verify_lemma_treize(std::int64_t t, std::uint64_t m_max);

/// Quartic sub-case: no (-2)-class E has degree D'.E = 1.
Verdict verify_quartic_degree_one(std::int64_t t);

/// t = 4: L1 = 3L - 4(A1 + A2 + A3 + A4) is nef and contracts exactly A1'', .., A4'', A5, .., A16.
Verdict verify_t4_nefness(const VerifierOptions& options = {});

/// t = 2: F1 is nef with F1.A_j in {0, 1} for every j.
Verdict verify_t2_f1_nef(const VerifierOptions& options = {});

/// beta of every solution (alpha0 + beta0 sqrt 2t)^n, n = 0..n_max, is even.
Verdict verify_even_propagation(std::int64_t t, std::uint64_t n_max);

}  // namespace nikulin
