#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "tetra/bignum.hpp"

namespace tetra {

/// Digit window for the oracle: towers are compared mod 10^N, N doubling from
/// initial_digits until the two residues differ somewhere below the top, or
/// max_digits is reached (BudgetExceeded).
struct OracleOptions {
  std::uint64_t initial_digits = 64;
  std::uint64_t max_digits = 8192;
};

/// Number of trailing digits shared by ^b a and ^(b+1) a.
///
/// Conventions: a = 0 never freezes a digit; a = 1 has one frozen digit at
/// every height; a positive multiple of 10 counts the trailing zeros of ^b a,
/// i.e. ^(b-1)a * min(v2(a), v5(a)), which throws BudgetExceeded when
/// ^(b-1)a leaves the 64-bit range.
std::uint64_t stable_digit_count(const BigUint& a, std::uint64_t b, const OracleOptions& opts = {});

/// Measured congruence speeds V(a,1..B).
struct SpeedSequence {
  BigUint a;
  std::vector<std::uint64_t> speeds;  // speeds[b-1] = V(a,b)
  std::vector<std::uint64_t> frozen;  // frozen[b-1] = n(b) = V(a,1) + ... + V(a,b)
  /// First height from which every measured entry is equal; present only
  /// when that constant tail has at least two entries.
  std::optional<std::uint64_t> stabilized_at;
  /// True when stabilized_at is at most tilde_v(a)+2 and the run reaches one
  /// height past it, which pins the constant speed.
  bool certified = false;

  std::uint64_t max_b() const noexcept { return speeds.size(); }
};

SpeedSequence speed_sequence(const BigUint& a, std::uint64_t max_b, const OracleOptions& opts = {});

/// The height tilde_v(a)+3 a sequence needs to certify V(a); 3 for a = 1.
/// Requires a >= 1 and a != 0 (mod 10).
std::uint64_t certifying_height(const BigUint& a);

/// Smallest height from which V(a,b) is constant, measured on a run to the
/// certifying height. a = 1 gives 2.
std::uint64_t measure_bbar(const BigUint& a, const OracleOptions& opts = {});

/// The constant speed as measured on a certifying run.
std::uint64_t measure_speed(const BigUint& a, const OracleOptions& opts = {});

}  // namespace tetra
