#pragma once

// Reference implementations used only by tests. None of them shares code with the library
// beyond the BigInt alias: Pell values come from direct search or certificates, lattice
// enumeration from a signed grid in plain 64-bit arithmetic.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "nikulin/integer.hpp"

namespace oracle {

using nikulin::BigInt;

inline std::int64_t floor_sqrt(std::int64_t n) {
    auto r = static_cast<std::int64_t>(std::sqrt(static_cast<long double>(n)));
    while (r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

struct SmallPell {
    std::int64_t alpha;
    std::int64_t beta;
};

/// Smallest beta in 1..beta_max with 1 + D beta^2 a square; D beta_max^2 must fit in 63 bits.
inline std::optional<SmallPell> minimal_pell_by_scan(std::int64_t D, std::int64_t beta_max) {
    for (std::int64_t b = 1; b <= beta_max; ++b) {
        const std::int64_t v = 1 + D * b * b;
        const std::int64_t r = floor_sqrt(v);
        if (r * r == v) return SmallPell{r, b};
    }
    return std::nullopt;
}

/// Smallest beta in 1..beta_max with D beta^2 - 1 a square.
inline std::optional<SmallPell> minimal_negative_pell_by_scan(std::int64_t D, std::int64_t beta_max) {
    for (std::int64_t b = 1; b <= beta_max; ++b) {
        const std::int64_t v = D * b * b - 1;
        const std::int64_t r = floor_sqrt(v);
        if (r * r == v) return SmallPell{r, b};
    }
    return std::nullopt;
}

/// Chebyshev T_k(x) compared against target: -1, 0, +1.
inline int compare_chebyshev(std::uint64_t k, const BigInt& x, const BigInt& target) {
    BigInt prev = 1, cur = x;
    for (std::uint64_t i = 1; i < k; ++i) {
        BigInt next = 2 * x * cur - prev;
        prev = std::move(cur);
        cur = std::move(next);
        if (cur > target) return 1;
    }
    return cur < target ? -1 : (cur == target ? 0 : 1);
}

/// Every positive solution of x^2 - D y^2 = 1 is a power eps^k of the fundamental unit, and
/// then x = T_k(x_eps) with x_eps >= 2 an integer. Returns true when (x, y) solves the equation
/// and no z + w sqrt D with z >= 2 has p-th power x + y sqrt D for a prime p: then (x, y) is
/// the fundamental solution.
inline bool certify_fundamental(const BigInt& D, const BigInt& x, const BigInt& y) {
    if (y <= 0 || x * x - D * y * y != 1) return false;
    // eps^p <= x + y sqrt D < 2x and eps >= 2 + sqrt 3 bound p.
    const double log_x = static_cast<double>(boost::multiprecision::msb(x) + 1) * std::log(2.0);
    const auto p_max = static_cast<std::uint64_t>((log_x + std::log(2.0)) / std::log(2.0 + std::sqrt(3.0))) + 1;
    for (std::uint64_t p = 2; p <= p_max; ++p) {
        bool prime = true;
        for (std::uint64_t q = 2; q * q <= p; ++q) prime = prime && (p % q != 0);
        if (!prime) continue;
        BigInt lo = 2, hi = 2;
        while (compare_chebyshev(p, hi, x) < 0) hi *= 2;
        while (lo < hi) {
            const BigInt mid = (lo + hi) / 2;
            if (compare_chebyshev(p, mid, x) < 0) lo = mid + 1;
            else hi = mid;
        }
        if (compare_chebyshev(p, lo, x) != 0) continue;
        // eps^p = T_p(z) + w U_{p-1}(z) sqrt D: a genuine p-th root also needs the y-part.
        BigInt u_prev = 1, u_cur = 2 * lo;  // U_0, U_1
        for (std::uint64_t i = 1; i + 1 < p; ++i) {
            BigInt next = 2 * lo * u_cur - u_prev;
            u_prev = std::move(u_cur);
            u_cur = std::move(next);
        }
        const BigInt& u = u_cur;  // U_{p-1}(z)
        if (y % u == 0) {
            const BigInt w = y / u;
            if (lo * lo - D * w * w == 1) return false;
        }
    }
    return true;
}

// --- (-2)-classes on a signed grid -------------------------------------------------

/// Doubled coordinates (2 alpha, 2 beta_1..2 beta_16) of alpha L - sum beta_i A_i.
using Vec = std::array<std::int64_t, 17>;

inline std::int64_t pair_x4(const Vec& x, const Vec& y, std::int64_t t) {
    std::int64_t s = 4 * t * x[0] * y[0];
    for (int i = 1; i <= 16; ++i) s -= 2 * x[i] * y[i];
    return s;
}

inline bool odd(std::int64_t v) { return (v % 2) != 0; }

/// Half-integer counts; with `blocks`, a half alpha with exactly four halves must use one of
/// {1-4}, {5-8}, {9-12}, {13-16}.
inline bool admissible(const Vec& x, bool blocks) {
    int halves = 0;
    for (int i = 1; i <= 16; ++i) halves += odd(x[i]);
    if (odd(x[0])) {
        if (halves < 4) return false;
        if (blocks && halves == 4) {
            for (int b = 0; b < 4; ++b) {
                bool all = true;
                for (int i = 4 * b + 1; i <= 4 * b + 4; ++i) all = all && odd(x[i]);
                if (all) return true;
            }
            return false;
        }
        return true;
    }
    return halves == 0 || halves >= 8;
}

/// The A_i themselves, or alpha > 0 with every beta_i >= 0.
inline bool curve_candidate(const Vec& x) {
    if (x[0] == 0) {
        int minus_two = 0, zero = 0;
        for (int i = 1; i <= 16; ++i) {
            minus_two += x[i] == -2;
            zero += x[i] == 0;
        }
        return minus_two == 1 && zero == 15;
    }
    if (x[0] < 0) return false;
    return std::all_of(x.begin() + 1, x.end(), [](std::int64_t b) { return b >= 0; });
}

struct GridBox {
    std::int64_t t = 1;
    std::vector<int> support;     // exceptional indices with unrestricted coordinates
    std::int64_t two_bound = 1;   // |2 alpha| <= two_bound
    std::int64_t tail_cap_x4 = 12;
    bool blocks = false;
    std::optional<Vec> nonpositive_against;
};

/// Every vector of the box with x^2 = -2 that passes the filters, sorted. Coordinates are
/// scanned over their full signed range; only partial sums of squares prune.
inline std::vector<Vec> grid_minus2(const GridBox& box) {
    std::vector<Vec> out;
    std::vector<int> on = box.support, off;
    for (int i = 1; i <= 16; ++i)
        if (std::find(on.begin(), on.end(), i) == on.end()) off.push_back(i);

    Vec x{};
    for (std::int64_t a = -box.two_bound; a <= box.two_bound; ++a) {
        x.fill(0);
        x[0] = a;
        const std::int64_t total = 2 * box.t * a * a + 4;
        const std::int64_t reach = floor_sqrt(total);
        // Depth-first over on-support then off-support coordinates.
        std::vector<int> order = on;
        order.insert(order.end(), off.begin(), off.end());
        const std::size_t split = on.size();
        auto rec = [&](auto&& self, std::size_t pos, std::int64_t used, std::int64_t tail) -> void {
            // The tail must absorb exactly what the support left over.
            if (pos == split && total - used > box.tail_cap_x4) return;
            if (pos == order.size()) {
                if (used != total) return;
                if (!curve_candidate(x) || !admissible(x, box.blocks)) return;
                if (box.nonpositive_against && pair_x4(x, *box.nonpositive_against, box.t) > 0) return;
                out.push_back(x);
                return;
            }
            const int idx = order[pos];
            for (std::int64_t b = -reach; b <= reach; ++b) {
                const std::int64_t sq = b * b;
                if (used + sq > total) continue;
                const std::int64_t new_tail = pos >= split ? tail + sq : tail;
                if (new_tail > box.tail_cap_x4) continue;
                x[idx] = b;
                self(self, pos + 1, used + sq, new_tail);
            }
            x[idx] = 0;
        };
        rec(rec, 0, 0, 0);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

// --- hand-rolled generators ---------------------------------------------------------

class Gen {
  public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
        return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng_);
    }

    /// Random doubled coordinates in [-bound, bound].
    Vec vec(std::int64_t bound) {
        Vec v{};
        for (auto& c : v) c = uniform(-bound, bound);
        return v;
    }

    /// Random integer with up to `digits` decimal digits, any sign.
    BigInt big(int digits) {
        BigInt v = 0;
        const int n = static_cast<int>(uniform(1, digits));
        for (int i = 0; i < n; ++i) v = v * 10 + uniform(0, 9);
        return uniform(0, 1) ? BigInt(-v) : v;
    }

  private:
    std::mt19937_64 rng_;
};

}  // namespace oracle
