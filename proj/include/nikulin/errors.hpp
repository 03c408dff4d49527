#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace nikulin {

/// Base of every domain error; precondition violations use std::invalid_argument.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// 2t is a perfect square: no (-2)-class of the form beta L - alpha A1 exists.
/// The t = 2 construction (build_t2_configuration) is the applicable alternative.
class SquareCase : public Error {
  public:
    explicit SquareCase(std::int64_t t)
        : Error("2t = " + std::to_string(2 * t) +
                " is a square; use the half-fibre construction (t = 2) instead"),
          t_(t) {}
    std::int64_t t() const noexcept { return t_; }

  private:
    std::int64_t t_;
};

/// beta0 is odd: beta0 L - alpha0 A1 is reducible. See check_odd_beta_obstruction
/// and, for t = 4, build_t4_configuration.
class OddBetaCase : public Error {
  public:
    explicit OddBetaCase(std::int64_t t)
        : Error("beta0 is odd for t = " + std::to_string(t) +
                "; use check_odd_beta_obstruction (or build_t4_configuration for t = 4)"),
          t_(t) {}
    std::int64_t t() const noexcept { return t_; }

  private:
    std::int64_t t_;
};

class NoNegPell : public Error {
  public:
    explicit NoNegPell(std::int64_t t)
        : Error("alpha^2 - " + std::to_string(2 * t) + " beta^2 = -1 has no solution"), t_(t) {}
    std::int64_t t() const noexcept { return t_; }

  private:
    std::int64_t t_;
};

/// 2 d^2 - t e^2 = -1 has no positive solution (proven), or none was found
/// within the brute-force bound (unresolved).
class NoQuarticCase : public Error {
  public:
    enum class Reason {
        modular_obstruction,   // no solution modulo some m: proven
        convergents_exhausted, // t >= 3: every primitive solution is a convergent; proven
        bound_exhausted        // scan bound reached without a decision
    };

    NoQuarticCase(std::int64_t t, Reason reason, std::string detail)
        : Error("2d^2 - " + std::to_string(t) + " e^2 = -1: " + detail), t_(t), reason_(reason) {}

    std::int64_t t() const noexcept { return t_; }
    Reason reason() const noexcept { return reason_; }
    bool proven() const noexcept { return reason_ != Reason::bound_exhausted; }

  private:
    std::int64_t t_;
    Reason reason_;
};

class BoundOverflow : public Error {
  public:
    BoundOverflow(std::uint64_t required, std::uint64_t cap)
        : Error("enumeration needs more than " + std::to_string(cap) + " nodes (at least " +
                std::to_string(required) + ")"),
          required_(required), cap_(cap) {}
    std::uint64_t required() const noexcept { return required_; }
    std::uint64_t cap() const noexcept { return cap_; }

  private:
    std::uint64_t required_;
    std::uint64_t cap_;
};

/// An identity that a construction asserts failed to hold (a solver or lattice bug).
class ConstructionError : public std::logic_error {
  public:
    using std::logic_error::logic_error;
};

}  // namespace nikulin
