#include "tetra/oracle.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

#include "tetra/errors.hpp"
#include "tetra/speed.hpp"
#include "tetra/tower.hpp"
#include "tetra/valuation.hpp"

namespace tetra {

namespace {

constexpr std::uint64_t kU64Max = std::numeric_limits<std::uint64_t>::max();

std::uint64_t trailing_zero_count(const BigUint& a, std::uint64_t b) {
  const std::uint64_t exponent = capped_tower(a.mpz(), b - 1, kU64Max);
  if (exponent == kU64Max) {
    throw BudgetExceeded("trailing zeros of ^" + std::to_string(b) + " " + a.to_decimal() +
                             " exceed the 64-bit range",
                         kU64Max);
  }
  const std::uint64_t per_factor = std::min(v2(a.mpz()), v5(a.mpz()));
  if (per_factor != 0 && exponent > kU64Max / per_factor) {
    throw BudgetExceeded("trailing-zero count overflows 64 bits", kU64Max);
  }
  return exponent * per_factor;
}

// Compares ^b a and ^(b+1) a mod 10^window, widening window in place.
std::uint64_t count_in_window(const BigUint& a, std::uint64_t b, std::uint64_t& window,
                              const OracleOptions& opts) {
  for (;;) {
    const mpz_class lower = tower_mod_2_5(a.mpz(), b, window, window);
    const mpz_class upper = tower_mod_2_5(a.mpz(), b + 1, window, window);
    const std::uint64_t common = common_trailing_digits(lower, upper, window);
    if (common < window) return common;
    if (window >= opts.max_digits) {
      throw BudgetExceeded("needs-larger-budget: ^" + std::to_string(b) + " " + a.to_decimal() +
                               " and its successor agree on all " + std::to_string(window) +
                               " digits",
                           opts.max_digits);
    }
    window = std::min(window * 2, opts.max_digits);
  }
}

// A stable digit has to be a digit of ^b a, so short towers cap the count
// at their length (^2 5 = 3125 agrees with ^3 5 on five places, 03125).
std::uint64_t cap_to_length(const BigUint& a, std::uint64_t b, std::uint64_t n) {
  if (n == 0) return 0;
  if (b == 1) return std::min<std::uint64_t>(n, a.decimal_length());
  // a >= 2, so a^e has at least n digits once e >= 4n.
  const std::uint64_t limit = 4 * n + 4;
  const std::uint64_t e = capped_tower(a.mpz(), b - 1, limit);
  if (e >= limit) return n;
  mpz_class t;
  mpz_pow_ui(t.get_mpz_t(), a.mpz().get_mpz_t(), e);
  return std::min<std::uint64_t>(n, t.get_str(10).size());
}

void check(const OracleOptions& opts) {
  if (opts.initial_digits == 0 || opts.max_digits < opts.initial_digits) {
    throw std::invalid_argument("oracle digit budget must satisfy 1 <= initial <= max");
  }
}

}  // namespace

std::uint64_t stable_digit_count(const BigUint& a, std::uint64_t b, const OracleOptions& opts) {
  if (b == 0) throw std::invalid_argument("stable_digit_count: height starts at 1");
  check(opts);
  if (a.is_zero()) return 0;
  if (a == BigUint(1)) return 1;
  if (a.mod_u64(10) == 0) return trailing_zero_count(a, b);
  std::uint64_t window = opts.initial_digits;
  return cap_to_length(a, b, count_in_window(a, b, window, opts));
}

SpeedSequence speed_sequence(const BigUint& a, std::uint64_t max_b, const OracleOptions& opts) {
  if (max_b == 0) throw std::invalid_argument("speed_sequence: max_b must be at least 1");
  check(opts);
  SpeedSequence seq{a, {}, {}, std::nullopt, false};
  seq.speeds.reserve(max_b);
  seq.frozen.reserve(max_b);

  const bool coprime_or_5 = !a.is_zero() && a != BigUint(1) && a.mod_u64(10) != 0;
  std::uint64_t window = opts.initial_digits;
  std::uint64_t previous = 0;
  for (std::uint64_t b = 1; b <= max_b; ++b) {
    const std::uint64_t n =
        coprime_or_5 ? cap_to_length(a, b, count_in_window(a, b, window, opts))
                     : stable_digit_count(a, b, opts);
    if (n < previous) {
      throw std::logic_error("frozen digit count decreased at height " + std::to_string(b) +
                             " for base " + a.to_decimal());
    }
    seq.frozen.push_back(n);
    seq.speeds.push_back(n - previous);
    previous = n;
  }

  std::uint64_t start = max_b;
  while (start > 1 && seq.speeds[start - 2] == seq.speeds.back()) --start;
  if (start < max_b) seq.stabilized_at = start;

  if (seq.stabilized_at) {
    if (a.is_zero() || a == BigUint(1)) {
      seq.certified = true;
    } else if (a.mod_u64(10) != 0) {
      const std::uint64_t bound = tilde_v(Base(a)) + 2;
      seq.certified = *seq.stabilized_at <= bound && max_b >= bound;
    }
  }
  return seq;
}

std::uint64_t certifying_height(const BigUint& a) {
  if (a.is_zero()) return 2;
  if (a == BigUint(1)) return 3;
  if (a.mod_u64(10) == 0) {
    throw std::invalid_argument("certifying_height: " + a.to_decimal() + " is a multiple of 10");
  }
  return tilde_v(Base(a)) + 3;
}

std::uint64_t measure_bbar(const BigUint& a, const OracleOptions& opts) {
  if (a == BigUint(1)) return 2;
  const SpeedSequence seq = speed_sequence(a, certifying_height(a), opts);
  if (!seq.certified) {
    throw std::logic_error("speed of " + a.to_decimal() + " did not settle by tilde_v(a)+2");
  }
  return *seq.stabilized_at;
}

std::uint64_t measure_speed(const BigUint& a, const OracleOptions& opts) {
  const SpeedSequence seq = speed_sequence(a, certifying_height(a), opts);
  if (!seq.certified) {
    throw std::logic_error("speed of " + a.to_decimal() + " did not settle by tilde_v(a)+2");
  }
  return seq.speeds.back();
}

}  // namespace tetra
