#pragma once

#include <cstdint>
#include <string>

#include "tetra/bignum.hpp"
#include "tetra/oracle.hpp"

namespace tetra {

enum class CountKind { Exact, Bounded };

/// Number of stable digits #S(a,b): either exact, or an interval.
/// formula names the closed form (or oracle route) that produced it.
struct StableCount {
  CountKind kind = CountKind::Exact;
  std::uint64_t value = 0;  // Exact only
  std::uint64_t lower = 0;  // Bounded only
  std::uint64_t upper = 0;
  std::string formula;

  static StableCount exact(std::uint64_t v, std::string formula);
  static StableCount bounded(std::uint64_t lo, std::uint64_t hi, std::string formula);

  bool contains(std::uint64_t n) const;
};

/// Exact #S(a,b) for a = 2, 4, 5, 6, 8 (mod 10):
///   2,18 (mod 20): 0 at b = 1, then (b-2) v5(a^2+1)
///   8,12 (mod 20): (b-1) v5(a^2+1)
///   4 (mod 10):    (b-1) v5(a+1)
///   6 (mod 10):    (b+1) v5(a-1), b >= 2
///   15 (mod 20):   b (v2(a^2-1)-1) + 1, b >= 2
///   5 (mod 20):    (b+1) (v2(a^2-1)-1), b >= 2, a > 5
///   a = 5:         1, 4, then 8 + 2(b-3)
/// Throws OutOfRange below a formula's stated height and
/// std::invalid_argument for any other class.
StableCount stable_exact(const Base& a, std::uint64_t b);

/// Interval for bases coprime to 10:
///   3,7 (mod 20): [(b-1) V, b V + 1]   (any b)
///   otherwise:    [b V, (b+1) V]       (b >= 2)
StableCount stable_bounds(const Base& a, std::uint64_t b);

/// Linear law #S(a,b) = b*V + offset followed from height bbar-1 onward.
enum class Shape { BMinusOneV, BV, BVPlusOne, BPlusOneV };

std::string to_string(Shape s);

struct ShapeReport {
  Shape shape;
  std::uint64_t speed;
  std::uint64_t bbar;
  std::uint64_t count_at_bbar;       // oracle #S(a, bbar)
  std::uint64_t count_after_bbar;    // oracle #S(a, bbar+1)
  bool selected_by_second_speed;     // 3,7 (mod 20): chosen from V(a,2) vs V(a)

  /// The shape's value at height b.
  std::uint64_t predict(std::uint64_t b) const;
};

/// Shape of the stable-digit law for a base coprime to 10 (a >= 3), measured
/// with the oracle. For 3,7 (mod 20) the choice is (b-1)V iff V(a,2) = V(a),
/// else bV+1; other classes are classified from #S at bbar. With V = 1 the
/// laws bV+1 and (b+1)V coincide and bV+1 is reported.
ShapeReport stable_shape(const Base& a, const OracleOptions& opts = {});

/// #S(a,b) for any a >= 0.
///
/// Exact from stable_exact where the class and height allow; otherwise from
/// the oracle: measured prefix sums up to the certifying height, extended
/// linearly with V(a) beyond it. With use_oracle = false coprime bases get
/// stable_bounds instead.
StableCount stable_count(const Base& a, std::uint64_t b, const OracleOptions& opts = {},
                         bool use_oracle = true);

/// #S(a,b) over the number of decimal digits of ^b a.
struct StableRatio {
  std::uint64_t numerator;
  BigUint denominator;

  double approx() const;
};

/// Throws NotRepresentable when ^(b-1)a exceeds 10^18.
StableRatio stable_ratio(const Base& a, std::uint64_t b, const OracleOptions& opts = {});

/// Number of decimal digits of ^b a, certified with interval arithmetic.
BigUint tower_digit_count(const BigUint& a, std::uint64_t b);

struct HeightPlan {
  std::uint64_t target;
  std::uint64_t height;
};

/// Smallest b with #S(a,b) >= target. Requires a >= 2, a != 0 (mod 10).
HeightPlan min_height(const Base& a, std::uint64_t target, const OracleOptions& opts = {});

/// Closed-form upper bound on bbar(a): 4 for a = 5, tilde_v(a)+2 for
/// a = 2, 3, 6, 7, 18 (mod 20), tilde_v(a)+1 otherwise.
std::uint64_t bbar_bound(const Base& a);

}  // namespace tetra
