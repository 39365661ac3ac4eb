#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace tetra {

/// Arbitrary-precision nonnegative integer.
///
/// Thin value type over GMP. Subtraction that would go negative throws, so the
/// invariant "never negative" holds for every live object. Signed intermediates
/// (a - 1, a^2 + 1, ...) are expressed with mpz_class directly via mpz().
class BigUint {
 public:
  BigUint() = default;
  BigUint(std::uint64_t v);  // NOLINT(google-explicit-constructor)
  explicit BigUint(mpz_class v);

  /// Parses a nonempty string of ASCII decimal digits. Leading zeros are
  /// accepted; signs, whitespace and separators are not.
  static BigUint from_decimal(std::string_view text);

  std::string to_decimal() const;

  const mpz_class& mpz() const noexcept { return v_; }

  bool is_zero() const noexcept { return sgn(v_) == 0; }
  bool fits_u64() const noexcept;
  std::uint64_t to_u64() const;  // throws std::overflow_error

  /// Residue modulo a small nonzero modulus.
  std::uint64_t mod_u64(std::uint64_t m) const;

  /// Number of decimal digits; 1 for zero.
  std::size_t decimal_length() const;

  BigUint& operator+=(const BigUint& o);
  BigUint& operator-=(const BigUint& o);  // throws std::domain_error if o > *this
  BigUint& operator*=(const BigUint& o);

  friend BigUint operator+(BigUint a, const BigUint& b) { return a += b; }
  friend BigUint operator-(BigUint a, const BigUint& b) { return a -= b; }
  friend BigUint operator*(BigUint a, const BigUint& b) { return a *= b; }

  friend bool operator==(const BigUint& a, const BigUint& b) { return cmp(a.v_, b.v_) == 0; }
  friend std::strong_ordering operator<=>(const BigUint& a, const BigUint& b) {
    const int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpz_class v_;
};

/// A tetration base: the integer plus its residue mod 1000, from which the
/// residues mod 10, 20, 25, 40, 100 and 1000 used by the case splits follow.
class Base {
 public:
  Base(BigUint value);  // NOLINT(google-explicit-constructor)
  Base(std::uint64_t value) : Base(BigUint(value)) {}  // NOLINT

  const BigUint& value() const noexcept { return value_; }
  const mpz_class& mpz() const noexcept { return value_.mpz(); }

  /// m must divide 1000.
  unsigned mod(unsigned m) const;

  bool is(std::uint64_t v) const { return value_ == BigUint(v); }

 private:
  BigUint value_;
  unsigned mod1000_;
};

}  // namespace tetra
