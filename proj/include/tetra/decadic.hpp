#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

#include "tetra/bignum.hpp"

namespace tetra {

/// Names one of the fifteen 10-adic solutions of y^5 = y by its last two
/// digits (x2, x1): alpha_00, alpha_01, alpha_51, ..., alpha_99.
class AlphaTag {
 public:
  /// Throws std::invalid_argument for a pair that is not a solution mod 100.
  AlphaTag(unsigned x2, unsigned x1);
  /// "51", "07", ... exactly two digits.
  static AlphaTag parse(std::string_view text);

  unsigned x2() const noexcept { return x2_; }
  unsigned x1() const noexcept { return x1_; }
  std::string str() const;

  friend bool operator==(AlphaTag, AlphaTag) = default;

 private:
  unsigned x2_;
  unsigned x1_;
};

/// All fifteen tags, alpha_00 first, in the order they are usually listed.
const std::array<AlphaTag, 15>& all_alpha_tags();

struct AlphaDigits {
  AlphaTag tag;
  std::size_t n;
  std::string digits;  // exactly n chars, most significant left

  /// alpha[l], the l-th rightmost digit (1-based, l <= n).
  unsigned at(std::size_t l) const;
};

/// n trailing digits of the nontrivial idempotent e5 = lim 5^(2^k)
/// (e5 = 0 in Z_5 and 1 in Z_2).
std::string idempotent_e5(std::size_t n);

/// n trailing digits of t2 = lim 2^(5^k) (t2 = 0 in Z_2, a primitive fourth
/// root of unity in Z_5).
std::string two_tower_t2(std::size_t n);

/// alpha_{x2 x1} mod 10^n as a zero-padded digit string. Served from a
/// process-wide, lock-protected cache of e5 and t2.
AlphaDigits alpha_digits(AlphaTag tag, std::size_t n);

/// Same value, computed from scratch without touching the cache.
AlphaDigits alpha_digits_uncached(AlphaTag tag, std::size_t n);

struct KeyDigitReport {
  std::size_t l;                   // first disagreeing position, >= 2
  unsigned s_l;                    // digit of a there (0 past its length)
  int diff;                        // s_l - alpha[l]
  std::size_t matched_prefix_len;  // l - 1
};

/// The key digit of a relative to alpha_tag: the first position l at which
/// a (with implied leading zeros) and alpha disagree.
///
/// Requires a >= 2 and last digit of a equal to tag.x1(); throws
/// std::invalid_argument otherwise.
KeyDigitReport key_digit(const BigUint& a, AlphaTag tag);

}  // namespace tetra
