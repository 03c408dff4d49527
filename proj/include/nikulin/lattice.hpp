#pragma once

// Divisor classes in the span of L, A1..A16 on a generic Kummer surface of degree 4t:
//   L^2 = 4t,  Ai^2 = -2,  L.Ai = 0,  Ai.Aj = 0 (i != j).
// A class alpha L - sum beta_i A_i with alpha, beta_i in Z/2 is stored through its
// doubled coefficients (2 alpha, 2 beta_1, ..., 2 beta_16); beta_i is stored with the
// sign it carries in that expression, so A_i itself has 2 beta_i = -2.
//
// Admissibility encodes only necessary conditions for membership in NS(X): the exact
// index-2 overlattice of Z L + K is not modelled. Every verifier in this library runs
// over a superset of NS(X), so the absence of a violating class is still conclusive.

#include <algorithm>
#include <array>
#include <bitset>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Core>
#include <boost/multiprecision/eigen.hpp>

#include "nikulin/errors.hpp"
#include "nikulin/integer.hpp"

namespace nikulin {

inline constexpr int kExceptionalCurves = 16;
inline constexpr int kLatticeRank = kExceptionalCurves + 1;

template <class Scalar>
bool is_odd(const Scalar& v) {
    return v % 2 != 0;
}

template <class Scalar>
class BasicDivisorClass {
  public:
    using Coefficients = Eigen::Matrix<Scalar, kLatticeRank, 1>;

    BasicDivisorClass() : doubled_(Coefficients::Zero()) {}
    explicit BasicDivisorClass(Coefficients doubled) : doubled_(std::move(doubled)) {}

    static BasicDivisorClass from_doubled(Scalar two_cL, const std::array<Scalar, kExceptionalCurves>& two_cA) {
        Coefficients c;
        c(0) = std::move(two_cL);
        for (int i = 0; i < kExceptionalCurves; ++i) c(i + 1) = two_cA[i];
        return BasicDivisorClass(std::move(c));
    }

    /// The polarization L.
    static BasicDivisorClass polarization() {
        BasicDivisorClass x;
        x.doubled_(0) = Scalar(2);
        return x;
    }

    /// The exceptional curve A_i, 1 <= i <= 16.
    static BasicDivisorClass exceptional(int i) {
        check_index(i);
        BasicDivisorClass x;
        x.doubled_(i) = Scalar(-2);
        return x;
    }

    const Coefficients& doubled() const noexcept { return doubled_; }
    const Scalar& two_cL() const { return doubled_(0); }
    const Scalar& two_cA(int i) const {
        check_index(i);
        return doubled_(i);
    }
    void set_two_cL(Scalar v) { doubled_(0) = std::move(v); }
    void set_two_cA(int i, Scalar v) {
        check_index(i);
        doubled_(i) = std::move(v);
    }

    bool has_half_integer_L() const { return is_odd(doubled_(0)); }
    int half_integer_beta_count() const {
        int n = 0;
        for (int i = 1; i <= kExceptionalCurves; ++i) n += is_odd(doubled_(i)) ? 1 : 0;
        return n;
    }
    bool is_integral() const { return !has_half_integer_L() && half_integer_beta_count() == 0; }
    bool is_zero() const { return doubled_.isZero(); }

    /// x / 2; requires every true coefficient of x to be an integer.
    BasicDivisorClass halved() const {
        if (!is_integral()) throw std::invalid_argument("halved: class has half-integer coefficients");
        Coefficients c = doubled_;
        for (int i = 0; i < kLatticeRank; ++i) c(i) /= Scalar(2);
        return BasicDivisorClass(std::move(c));
    }

    template <class Other>
    BasicDivisorClass<Other> cast() const {
        typename BasicDivisorClass<Other>::Coefficients c;
        for (int i = 0; i < kLatticeRank; ++i) c(i) = Other(doubled_(i));
        return BasicDivisorClass<Other>(std::move(c));
    }

    BasicDivisorClass& operator+=(const BasicDivisorClass& o) {
        doubled_ += o.doubled_;
        return *this;
    }
    BasicDivisorClass& operator-=(const BasicDivisorClass& o) {
        doubled_ -= o.doubled_;
        return *this;
    }
    friend BasicDivisorClass operator+(BasicDivisorClass a, const BasicDivisorClass& b) { return a += b; }
    friend BasicDivisorClass operator-(BasicDivisorClass a, const BasicDivisorClass& b) { return a -= b; }
    friend BasicDivisorClass operator-(const BasicDivisorClass& a) { return BasicDivisorClass(Coefficients(-a.doubled_)); }
    friend BasicDivisorClass operator*(const Scalar& k, const BasicDivisorClass& a) {
        return BasicDivisorClass(Coefficients(a.doubled_ * k));
    }

    friend bool operator==(const BasicDivisorClass& a, const BasicDivisorClass& b) { return a.doubled_ == b.doubled_; }
    friend bool operator!=(const BasicDivisorClass& a, const BasicDivisorClass& b) { return !(a == b); }
    /// Lexicographic on (2 alpha, 2 beta_1, ..., 2 beta_16).
    friend bool operator<(const BasicDivisorClass& a, const BasicDivisorClass& b) {
        for (int i = 0; i < kLatticeRank; ++i) {
            if (a.doubled_(i) != b.doubled_(i)) return a.doubled_(i) < b.doubled_(i);
        }
        return false;
    }

  private:
    static void check_index(int i) {
        if (i < 1 || i > kExceptionalCurves) throw std::out_of_range("exceptional curve index must be in 1..16");
    }

    Coefficients doubled_;
};

using DivisorClass = BasicDivisorClass<BigInt>;

inline DivisorClass L() { return DivisorClass::polarization(); }
inline DivisorClass A(int i) { return DivisorClass::exceptional(i); }

/// Human-readable form, e.g. "2L - 5A1" or "1/2(L - 3A1 - A2 - A3 - A4)".
std::string to_display_string(const DivisorClass& x);

/// Intersection pairing of the generic Kummer surface of degree 4t.
class GramForm {
  public:
    explicit GramForm(std::int64_t t) : t_(t) {
        if (t < 1) throw std::invalid_argument("GramForm: t must be >= 1");
    }
    std::int64_t t() const noexcept { return t_; }

    /// Diagonal of the form in doubled coordinates scaled by 4: (4t, -2, ..., -2).
    template <class Scalar>
    Eigen::Matrix<Scalar, kLatticeRank, 1> diagonal() const {
        Eigen::Matrix<Scalar, kLatticeRank, 1> d;
        d(0) = Scalar(4 * t_);
        for (int i = 1; i < kLatticeRank; ++i) d(i) = Scalar(-2);
        return d;
    }

  private:
    std::int64_t t_;
};

/// 4 (x . y); always an integer.
template <class Scalar>
Scalar pair_x4(const BasicDivisorClass<Scalar>& x, const BasicDivisorClass<Scalar>& y, const GramForm& form) {
    return x.doubled().cwiseProduct(form.diagonal<Scalar>()).dot(y.doubled());
}

template <class Scalar>
Scalar self_x4(const BasicDivisorClass<Scalar>& x, const GramForm& form) {
    return pair_x4(x, x, form);
}

/// x . y as an exact rational (denominator divides 4).
inline BigRational pair(const DivisorClass& x, const DivisorClass& y, const GramForm& form) {
    return BigRational(pair_x4(x, y, form), BigInt(4));
}

/// x . y when it is known to be an integer; throws ConstructionError otherwise.
BigInt pair_integer(const DivisorClass& x, const DivisorClass& y, const GramForm& form);

enum class HalfIntegerRule {
    none,             // no restriction (raw (-2)-vectors)
    necessary,        // half-integer counts: alpha in Z/2 \ Z => >= 4 halves; alpha in Z => 0 or >= 8
    labelled_blocks,  // necessary, and a half alpha with exactly 4 halves uses a labelled block
};

/// The fixed labelling used for even t: the four-element supports of half-integer classes
/// with half-integer L-coefficient are {1-4}, {5-8}, {9-12}, {13-16}.
inline constexpr std::array<std::array<int, 4>, 4> kHalfFibreBlocks{{
    {1, 2, 3, 4}, {5, 6, 7, 8}, {9, 10, 11, 12}, {13, 14, 15, 16}}};

/// labelled_blocks for even t, necessary otherwise.
inline HalfIntegerRule default_rule(const GramForm& form) {
    return form.t() % 2 == 0 ? HalfIntegerRule::labelled_blocks : HalfIntegerRule::necessary;
}

template <class Scalar>
bool is_admissible(const BasicDivisorClass<Scalar>& x, HalfIntegerRule rule = HalfIntegerRule::necessary) {
    if (rule == HalfIntegerRule::none) return true;
    const int halves = x.half_integer_beta_count();
    if (x.has_half_integer_L()) {
        if (halves < 4) return false;
    } else if (halves != 0 && halves < 8) {
        return false;
    }
    if (rule == HalfIntegerRule::labelled_blocks && x.has_half_integer_L() && halves == 4) {
        return std::any_of(kHalfFibreBlocks.begin(), kHalfFibreBlocks.end(), [&](const auto& block) {
            return std::all_of(block.begin(), block.end(), [&](int i) { return is_odd(x.two_cA(i)); });
        });
    }
    return true;
}

/// For a (-2)-class: true iff x is one of the A_i or x . L > 0. Throws for x^2 != -2.
template <class Scalar>
bool is_effective_candidate(const BasicDivisorClass<Scalar>& x, const GramForm& form) {
    if (self_x4(x, form) != Scalar(-8)) throw std::invalid_argument("is_effective_candidate: class is not a (-2)-class");
    for (int i = 1; i <= kExceptionalCurves; ++i) {
        if (x == BasicDivisorClass<Scalar>::exceptional(i)) return true;
    }
    return pair_x4(x, BasicDivisorClass<Scalar>::polarization(), form) > Scalar(0);
}

/// Index set inside {L, A1..A16}; bit 0 is L, bit i is A_i.
using Support = std::bitset<kLatticeRank>;

/// {L} together with the listed exceptional curves.
Support support_with(std::initializer_list<int> exceptional);

/// Search region of enumerate_minus2.
template <class Scalar>
struct EnumerationBox {
    Support support = Support{1};
    Scalar two_bound_uL = Scalar(1);        // alpha ranges over (0, two_bound_uL / 2]
    Scalar max_tail_norm_x4 = Scalar(12);   // 4 * cap on sum of beta_j^2 off the support (cap 3)
    std::optional<HalfIntegerRule> rule;    // defaults to default_rule(form)
    std::optional<BasicDivisorClass<Scalar>> nonpositive_against;  // keep only x . N <= 0
    std::uint64_t node_cap = 1'000'000;
};

template <class Scalar>
struct EnumerationResult {
    std::vector<BasicDivisorClass<Scalar>> classes;
    std::uint64_t nodes_visited = 0;
};

namespace detail {

template <class Scalar>
class Minus2Enumerator {
  public:
    Minus2Enumerator(const EnumerationBox<Scalar>& box, const GramForm& form)
        : box_(box), form_(form), rule_(box.rule.value_or(default_rule(form))) {
        for (int i = 1; i <= kExceptionalCurves; ++i) (box.support[i] ? on_ : off_).push_back(i);
    }

    EnumerationResult<Scalar> run() {
        emit_exceptional_curves();
        for (Scalar a = 1; a <= box_.two_bound_uL; ++a) {
            current_.set_two_cL(a);
            for (int i = 1; i <= kExceptionalCurves; ++i) current_.set_two_cA(i, Scalar(0));
            // x^2 = -2  <=>  sum (2 beta_i)^2 = 2t (2 alpha)^2 + 4.
            const Scalar total = Scalar(2 * form_.t()) * a * a + Scalar(4);
            assign_support(0, total);
        }
        std::sort(result_.classes.begin(), result_.classes.end());
        return std::move(result_);
    }

  private:
    void visit() {
        if (++result_.nodes_visited > box_.node_cap) throw BoundOverflow(result_.nodes_visited, box_.node_cap);
    }

    bool passes_half_space(const BasicDivisorClass<Scalar>& x) const {
        return !box_.nonpositive_against || pair_x4(x, *box_.nonpositive_against, form_) <= Scalar(0);
    }

    // alpha = 0 forces sum beta_i^2 = 1, and four halves are never admissible with integral
    // alpha: the only effective classes at this level are the A_i.
    void emit_exceptional_curves() {
        for (int i = 1; i <= kExceptionalCurves; ++i) {
            visit();
            if (!box_.support[i] && box_.max_tail_norm_x4 < Scalar(4)) continue;
            auto x = BasicDivisorClass<Scalar>::exceptional(i);
            if (passes_half_space(x)) result_.classes.push_back(std::move(x));
        }
    }

    void assign_support(std::size_t pos, const Scalar& remaining) {
        if (pos == on_.size()) {
            visit();
            if (remaining > box_.max_tail_norm_x4) return;
            // N is supported on the support, so the tail does not change x . N.
            if (!passes_half_space(current_)) return;
            assign_tail(0, remaining);
            return;
        }
        const int idx = on_[pos];
        for (Scalar b = 0; b * b <= remaining; ++b) {
            current_.set_two_cA(idx, b);
            assign_support(pos + 1, remaining - b * b);
        }
        current_.set_two_cA(idx, Scalar(0));
    }

    void assign_tail(std::size_t pos, const Scalar& remaining) {
        if (pos == off_.size()) {
            if (remaining != Scalar(0)) return;
            visit();
            if (is_admissible(current_, rule_)) result_.classes.push_back(current_);
            return;
        }
        const int idx = off_[pos];
        for (Scalar b = 0; b * b <= remaining; ++b) {
            current_.set_two_cA(idx, b);
            assign_tail(pos + 1, remaining - b * b);
        }
        current_.set_two_cA(idx, Scalar(0));
    }

    const EnumerationBox<Scalar>& box_;
    const GramForm& form_;
    HalfIntegerRule rule_;
    std::vector<int> on_;
    std::vector<int> off_;
    BasicDivisorClass<Scalar> current_;
    EnumerationResult<Scalar> result_;
};

}  // namespace detail

/// Every admissible (-2)-class in the box that can be an irreducible curve: the sixteen A_i,
/// and the classes alpha L - sum beta_i A_i with 0 < alpha <= bound and all beta_i >= 0
/// (an irreducible curve other than A_i meets A_i non-negatively). Off the support the
/// coefficients form a tail with sum beta_j^2 <= max_tail_norm_x4 / 4. Sorted
/// lexicographically on doubled coefficients.
template <class Scalar>
EnumerationResult<Scalar> enumerate_minus2(const EnumerationBox<Scalar>& box, const GramForm& form) {
    if (!box.support[0]) throw std::invalid_argument("enumerate_minus2: support must contain L");
    if (box.two_bound_uL < Scalar(1)) throw std::invalid_argument("enumerate_minus2: bound on alpha must be positive");
    if (box.max_tail_norm_x4 < Scalar(0)) throw std::invalid_argument("enumerate_minus2: negative tail cap");
    if (box.nonpositive_against) {
        for (int i = 1; i <= kExceptionalCurves; ++i) {
            if (!box.support[i] && box.nonpositive_against->two_cA(i) != Scalar(0))
                throw std::invalid_argument("enumerate_minus2: half-space normal must live on the support");
        }
    }
    return detail::Minus2Enumerator<Scalar>(box, form).run();
}

}  // namespace nikulin
