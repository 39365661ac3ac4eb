#pragma once

// Slow, independent reference implementations used only by tests.

#include <gmpxx.h>

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace ref {

// Repeated division; the zero case is the caller's business.
std::uint64_t valuation(mpz_class d, unsigned long p);

// ^b a mod 2^x 5^y by Euler's totient: a^e = a^(e mod phi + phi) once e is
// past every prime exponent of the modulus, exact arithmetic below that.
mpz_class tower_mod(const mpz_class& a, std::uint64_t b, std::uint64_t x, std::uint64_t y);

// ^b a mod 10^n.
mpz_class tower_mod10(const mpz_class& a, std::uint64_t b, std::uint64_t n);

// The exact tower, or -1 once it exceeds limit.
mpz_class exact_tower(const mpz_class& a, std::uint64_t b, const mpz_class& limit);

// Frozen digits of ^b a: common trailing digits of ^b a and ^(b+1) a,
// never more than the length of ^b a. Compared mod 10^window.
std::uint64_t frozen_digits(const mpz_class& a, std::uint64_t b, std::uint64_t window);

// All y mod 10^n with y^5 = y (mod 10^(n+lookahead)) ending in the two
// given digits, found by lifting one digit at a time.
std::vector<mpz_class> hensel_lifts(unsigned x2, unsigned x1, std::size_t n, std::size_t lookahead = 3);

// n digits of r mod 10^n, zero-padded.
std::string padded(const mpz_class& r, std::size_t n);

// Decimal expansions of the fifteen solutions of y^5 = y, as published
// (lengths vary; each is a suffix of the true expansion).
struct Printed {
  const char* tag;
  const char* digits;
};
const std::vector<Printed>& printed_alphas();

}  // namespace ref

namespace prop {

inline constexpr std::uint64_t kSeed = 20231017;

// Fixed-seed generator for hand-rolled property runs.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}
  std::uint64_t uniform(std::uint64_t lo, std::uint64_t hi) {
    return std::uniform_int_distribution<std::uint64_t>(lo, hi)(rng_);
  }
  std::int64_t signed_uniform(std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng_);
  }
  // A decimal string with 1..max_len digits and no leading zero.
  std::string decimal(std::size_t max_len);

 private:
  std::mt19937_64 rng_;
};

}  // namespace prop
