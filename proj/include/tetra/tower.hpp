#pragma once

#include <cstdint>

#include "tetra/bignum.hpp"

namespace tetra {

/// ^height a modulo 10^digits.
///
/// Heights start at 1 (^1 a = a). The base 0 follows the limit convention
/// ^b 0 = 1 for even b and 0 for odd b. Throws std::invalid_argument for
/// height = 0 or digits = 0.
BigUint tetration_mod(const BigUint& a, std::uint64_t height, std::uint64_t digits);

/// ^height a modulo 2^e2 * 5^e5. The evaluator tetration_mod is built on;
/// exposed so the recursion can be checked against exact towers directly.
mpz_class tower_mod_2_5(const mpz_class& a, std::uint64_t height, std::uint64_t e2,
                        std::uint64_t e5);

/// min(^height a, cap), exact. height = 0 yields 1 (the empty tower).
std::uint64_t capped_tower(const mpz_class& a, std::uint64_t height, std::uint64_t cap);

/// The j-th rightmost decimal digit of a (j >= 1); 0 beyond the length of a.
unsigned digit(const BigUint& a, std::uint64_t j);

/// Number of common trailing decimal digits of two residues mod 10^digits,
/// capped at digits.
std::uint64_t common_trailing_digits(const mpz_class& x, const mpz_class& y, std::uint64_t digits);

}  // namespace tetra
