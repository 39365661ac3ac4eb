#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <limits>
#include <string>

namespace tetra {

/// p-adic order: a nonnegative integer, or +infinity for the argument 0.
class Valuation {
 public:
  constexpr explicit Valuation(std::uint64_t v) : v_(v) {}
  static constexpr Valuation infinity() { return Valuation(kInf); }

  constexpr bool is_infinite() const noexcept { return v_ == kInf; }
  /// Throws std::domain_error when infinite.
  std::uint64_t value() const;

  std::string to_string() const;

  friend constexpr bool operator==(Valuation, Valuation) = default;
  friend constexpr auto operator<=>(Valuation a, Valuation b) { return a.v_ <=> b.v_; }
  friend constexpr Valuation operator+(Valuation a, Valuation b) {
    return (a.is_infinite() || b.is_infinite()) ? infinity() : Valuation(a.v_ + b.v_);
  }

 private:
  static constexpr std::uint64_t kInf = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t v_;
};

/// Largest q with p^q | |d|; infinity for d = 0. Any prime p is accepted.
/// Throws std::invalid_argument if p < 2 or p is composite.
Valuation padic_valuation(const mpz_class& d, std::uint64_t p);
Valuation padic_valuation(std::int64_t d, std::uint64_t p);

// Finite-valued shorthands for the callers that know the argument is nonzero.
std::uint64_t v2(const mpz_class& d);
std::uint64_t v5(const mpz_class& d);

}  // namespace tetra
