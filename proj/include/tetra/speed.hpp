#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "tetra/bignum.hpp"

namespace tetra {

/// Constant congruence speed V(a), or undefined for positive multiples of 10,
/// together with the case of the closed form that produced it.
struct SpeedResult {
  std::optional<std::uint64_t> speed;
  std::string rule;

  bool undefined() const noexcept { return !speed.has_value(); }
  /// Throws std::domain_error if undefined.
  std::uint64_t value() const;

  friend bool operator==(const SpeedResult&, const SpeedResult&) = default;
};

enum class Tier { Zero, One, Two, ThreeOrMore, Undefined };

std::string to_string(Tier t);

/// Tier of a known speed value.
Tier tier_of(const SpeedResult& r);

/// Closed-form upper bound on V(a): v5(a-1), v5(a^2+1), v5(a+1) by a mod 5,
/// or v2(a^2-1)-1 for a = 5 (mod 10).
/// Requires a >= 2 and a != 0 (mod 10); throws std::invalid_argument otherwise.
std::uint64_t tilde_v(const Base& a);

/// V(a) from the twelve-way split on a mod 100 / mod 10 (min of a 2-adic and
/// a 5-adic valuation on the exceptional classes 1, 51, 7, 43, 57, 93, 49, 99).
SpeedResult speed_mod100_split(const Base& a);

/// V(a) from the eleven-way split on a mod 20 / mod 10.
SpeedResult speed_mod20_split(const Base& a);

/// V(a) from the full key-digit map. The production path; total on N0.
///
/// Coprime bases select an alpha constant by a mod 20 and pick the 2-adic rule
/// exactly when the key digit differs from alpha by 5.
SpeedResult speed_exact(const Base& a);

/// v2(a-1) for a = 5 (mod 20), v2(a+1) for a = 15 (mod 20). An independent
/// route for the 5 (mod 10) class. Throws std::invalid_argument otherwise.
SpeedResult special_class_speeds(const Base& a);

/// Tier by residues alone (mod 25, mod 40, mod 1000). Requires a >= 1;
/// returns Tier::Undefined for multiples of 10.
Tier classify_tier(const Base& a);

}  // namespace tetra
