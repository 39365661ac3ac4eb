#include "tetra/stability.hpp"

#include <mpfr.h>

#include <limits>
#include <stdexcept>

#include "tetra/errors.hpp"
#include "tetra/speed.hpp"
#include "tetra/tower.hpp"
#include "tetra/valuation.hpp"

namespace tetra {

namespace {

std::uint64_t mul(std::uint64_t x, std::uint64_t y) {
  std::uint64_t r = 0;
  if (__builtin_mul_overflow(x, y, &r)) throw std::overflow_error("stable digit count overflows 64 bits");
  return r;
}

std::uint64_t add(std::uint64_t x, std::uint64_t y) {
  std::uint64_t r = 0;
  if (__builtin_add_overflow(x, y, &r)) throw std::overflow_error("stable digit count overflows 64 bits");
  return r;
}

bool coprime_to_ten(const Base& a) {
  const unsigned m10 = a.mod(10);
  return m10 == 1 || m10 == 3 || m10 == 7 || m10 == 9;
}

void require_height(std::uint64_t b) {
  if (b == 0) throw std::invalid_argument("height starts at 1");
}

void require_coprime_base(const Base& a, const char* who) {
  if (!coprime_to_ten(a) || a.is(1)) {
    throw std::invalid_argument(std::string(who) + ": base must be coprime to 10 and at least 3");
  }
}

void require_nontrivial(const Base& a, const char* who) {
  if (a.is(0) || a.is(1) || a.mod(10) == 0) {
    throw std::invalid_argument(std::string(who) + ": base must be >= 2 and not a multiple of 10");
  }
}

SpeedSequence certified_sequence(const Base& a, const OracleOptions& opts) {
  SpeedSequence seq = speed_sequence(a.value(), certifying_height(a.value()), opts);
  if (!seq.certified) {
    throw std::logic_error("speed of " + a.value().to_decimal() + " did not settle by tilde_v(a)+2");
  }
  const std::uint64_t v = speed_exact(a).value();
  if (seq.speeds.back() != v) {
    throw std::logic_error("closed-form speed " + std::to_string(v) + " disagrees with measured " +
                           std::to_string(seq.speeds.back()) + " for " + a.value().to_decimal());
  }
  return seq;
}

bool is_power_of_ten(const mpz_class& a, std::uint64_t& exponent) {
  if (sgn(a) <= 0) return false;
  const std::string s = a.get_str(10);
  if (s[0] != '1') return false;
  for (std::size_t i = 1; i < s.size(); ++i) {
    if (s[i] != '0') return false;
  }
  exponent = s.size() - 1;
  return true;
}

// floor(e * log10(a)) for a >= 2 not a power of 10, by widening-precision
// interval evaluation. The product is irrational, so the loop terminates.
mpz_class floor_exponent_log10(const mpz_class& a, std::uint64_t e) {
  for (mpfr_prec_t prec = 128; prec <= (mpfr_prec_t{1} << 20); prec *= 2) {
    mpfr_t lo, hi;
    mpfr_init2(lo, prec);
    mpfr_init2(hi, prec);
    mpfr_set_z(lo, a.get_mpz_t(), MPFR_RNDD);
    mpfr_set_z(hi, a.get_mpz_t(), MPFR_RNDU);
    mpfr_log10(lo, lo, MPFR_RNDD);
    mpfr_log10(hi, hi, MPFR_RNDU);
    mpfr_mul_ui(lo, lo, e, MPFR_RNDD);
    mpfr_mul_ui(hi, hi, e, MPFR_RNDU);
    mpz_class flo, fhi;
    mpfr_get_z(flo.get_mpz_t(), lo, MPFR_RNDD);
    mpfr_get_z(fhi.get_mpz_t(), hi, MPFR_RNDD);
    mpfr_clear(lo);
    mpfr_clear(hi);
    if (flo == fhi) return flo;
  }
  throw NotRepresentable("could not certify the digit count of a tower");
}

}  // namespace

StableCount StableCount::exact(std::uint64_t v, std::string formula) {
  return StableCount{CountKind::Exact, v, v, v, std::move(formula)};
}

StableCount StableCount::bounded(std::uint64_t lo, std::uint64_t hi, std::string formula) {
  return StableCount{CountKind::Bounded, 0, lo, hi, std::move(formula)};
}

bool StableCount::contains(std::uint64_t n) const {
  return kind == CountKind::Exact ? n == value : (lower <= n && n <= upper);
}

StableCount stable_exact(const Base& a, std::uint64_t b) {
  require_height(b);
  const unsigned m10 = a.mod(10);
  const unsigned m20 = a.mod(20);
  const mpz_class& x = a.mpz();

  if (a.is(5)) {
    if (b == 1) return StableCount::exact(1, "a=5: 1 at b=1");
    if (b == 2) return StableCount::exact(4, "a=5: 4 at b=2");
    return StableCount::exact(add(8, mul(2, b - 3)), "a=5: 8+2*(b-3)");
  }
  if (m20 == 2 || m20 == 18) {
    if (b == 1) return StableCount::exact(0, "a=2,18 (mod 20): 0 at b=1");
    return StableCount::exact(mul(b - 2, v5(x * x + 1)), "a=2,18 (mod 20): (b-2)*v5(a^2+1)");
  }
  if (m20 == 8 || m20 == 12) {
    return StableCount::exact(mul(b - 1, v5(x * x + 1)), "a=8,12 (mod 20): (b-1)*v5(a^2+1)");
  }
  if (m10 == 4) return StableCount::exact(mul(b - 1, v5(x + 1)), "a=4 (mod 10): (b-1)*v5(a+1)");
  if (m10 == 6) {
    if (b < 2) throw OutOfRange("a=6 (mod 10): closed form starts at b=2");
    return StableCount::exact(mul(b + 1, v5(x - 1)), "a=6 (mod 10): (b+1)*v5(a-1)");
  }
  if (m20 == 15) {
    if (b < 2) throw OutOfRange("a=15 (mod 20): closed form starts at b=2");
    return StableCount::exact(add(mul(b, v2(x * x - 1) - 1), 1), "a=15 (mod 20): b*(v2(a^2-1)-1)+1");
  }
  if (m20 == 5) {
    if (b < 2) throw OutOfRange("a=5 (mod 20): closed form starts at b=2");
    return StableCount::exact(mul(b + 1, v2(x * x - 1) - 1), "a=5 (mod 20), a>5: (b+1)*(v2(a^2-1)-1)");
  }
  throw std::invalid_argument("stable_exact: base must be 2, 4, 5, 6 or 8 (mod 10)");
}

StableCount stable_bounds(const Base& a, std::uint64_t b) {
  require_height(b);
  require_coprime_base(a, "stable_bounds");
  const std::uint64_t v = speed_exact(a).value();
  const unsigned m20 = a.mod(20);
  if (m20 == 3 || m20 == 7) {
    return StableCount::bounded(mul(b - 1, v), add(mul(b, v), 1), "a=3,7 (mod 20): [(b-1)*V, b*V+1]");
  }
  if (b < 2) throw OutOfRange("coprime bounds [b*V, (b+1)*V] start at b=2");
  return StableCount::bounded(mul(b, v), mul(b + 1, v), "[b*V, (b+1)*V]");
}

std::string to_string(Shape s) {
  switch (s) {
    case Shape::BMinusOneV: return "(b-1)*V";
    case Shape::BV: return "b*V";
    case Shape::BVPlusOne: return "b*V+1";
    case Shape::BPlusOneV: return "(b+1)*V";
  }
  return "?";
}

std::uint64_t ShapeReport::predict(std::uint64_t b) const {
  switch (shape) {
    case Shape::BMinusOneV: return mul(b - 1, speed);
    case Shape::BV: return mul(b, speed);
    case Shape::BVPlusOne: return add(mul(b, speed), 1);
    case Shape::BPlusOneV: return mul(b + 1, speed);
  }
  return 0;
}

ShapeReport stable_shape(const Base& a, const OracleOptions& opts) {
  require_coprime_base(a, "stable_shape");
  const SpeedSequence seq = certified_sequence(a, opts);
  const std::uint64_t v = seq.speeds.back();
  const std::uint64_t bbar = *seq.stabilized_at;
  ShapeReport r{Shape::BV, v, bbar, seq.frozen[bbar - 1], seq.frozen[bbar], false};

  const unsigned m20 = a.mod(20);
  if (m20 == 3 || m20 == 7) {
    r.shape = seq.speeds[1] == v ? Shape::BMinusOneV : Shape::BVPlusOne;
    r.selected_by_second_speed = true;
    return r;
  }
  const auto at_bbar = static_cast<std::int64_t>(r.count_at_bbar);
  const auto linear = static_cast<std::int64_t>(mul(bbar, v));
  const std::int64_t offset = at_bbar - linear;
  const auto sv = static_cast<std::int64_t>(v);
  if (offset == -sv) {
    r.shape = Shape::BMinusOneV;
  } else if (offset == 0) {
    r.shape = Shape::BV;
  } else if (offset == 1) {
    r.shape = Shape::BVPlusOne;
  } else if (offset == sv) {
    r.shape = Shape::BPlusOneV;
  } else {
    throw std::logic_error("stable digits of " + a.value().to_decimal() +
                           " follow none of the four linear laws");
  }
  return r;
}

StableCount stable_count(const Base& a, std::uint64_t b, const OracleOptions& opts, bool use_oracle) {
  require_height(b);
  if (a.is(0)) return StableCount::exact(0, "a=0 freezes no digit");
  if (a.is(1)) return StableCount::exact(1, "a=1: one frozen digit");
  if (a.mod(10) == 0) {
    return StableCount::exact(stable_digit_count(a.value(), b, opts), "trailing zeros of ^b a");
  }
  if (!coprime_to_ten(a)) {
    try {
      return stable_exact(a, b);
    } catch (const OutOfRange&) {
      if (!use_oracle) throw;
      return StableCount::exact(stable_digit_count(a.value(), b, opts), "oracle: ^b a vs ^(b+1) a");
    }
  }
  if (!use_oracle) return stable_bounds(a, b);

  const std::uint64_t horizon = certifying_height(a.value());
  if (b <= horizon) {
    return StableCount::exact(stable_digit_count(a.value(), b, opts), "oracle: ^b a vs ^(b+1) a");
  }
  const SpeedSequence seq = certified_sequence(a, opts);
  const std::uint64_t bbar = *seq.stabilized_at;
  const std::uint64_t prefix = bbar >= 2 ? seq.frozen[bbar - 2] : 0;
  return StableCount::exact(add(prefix, mul(b - bbar + 1, seq.speeds.back())),
                            "measured prefix to bbar-1 + (b-bbar+1)*V");
}

double StableRatio::approx() const {
  return static_cast<double>(numerator) / denominator.mpz().get_d();
}

BigUint tower_digit_count(const BigUint& a, std::uint64_t b) {
  require_height(b);
  if (a.is_zero() || a == BigUint(1)) return BigUint(1);
  if (b == 1) return BigUint(a.decimal_length());

  constexpr std::uint64_t kMaxExponent = 1'000'000'000'000'000'000ULL;
  const std::uint64_t e = capped_tower(a.mpz(), b - 1, kMaxExponent + 1);
  if (e > kMaxExponent) {
    throw NotRepresentable("^" + std::to_string(b - 1) + " " + a.to_decimal() + " exceeds 10^18");
  }
  std::uint64_t j = 0;
  if (is_power_of_ten(a.mpz(), j)) return BigUint(mpz_class(mpz_class(j) * e + 1));
  return BigUint(mpz_class(floor_exponent_log10(a.mpz(), e) + 1));
}

StableRatio stable_ratio(const Base& a, std::uint64_t b, const OracleOptions& opts) {
  BigUint digits = tower_digit_count(a.value(), b);
  const StableCount count = stable_count(a, b, opts);
  return StableRatio{count.value, std::move(digits)};
}

HeightPlan min_height(const Base& a, std::uint64_t target, const OracleOptions& opts) {
  require_nontrivial(a, "min_height");
  if (target == 0) return HeightPlan{0, 1};
  const SpeedSequence seq = certified_sequence(a, opts);
  for (std::uint64_t b = 1; b <= seq.max_b(); ++b) {
    if (seq.frozen[b - 1] >= target) return HeightPlan{target, b};
  }
  const std::uint64_t v = seq.speeds.back();
  const std::uint64_t missing = target - seq.frozen.back();
  return HeightPlan{target, add(seq.max_b(), (missing + v - 1) / v)};
}

std::uint64_t bbar_bound(const Base& a) {
  require_nontrivial(a, "bbar_bound");
  if (a.is(5)) return 4;
  const std::uint64_t tv = tilde_v(a);
  const unsigned m20 = a.mod(20);
  // Classes where the speed can still move at height tilde_v + 1 (a = 2, 6).
  if (m20 == 2 || m20 == 3 || m20 == 6 || m20 == 7 || m20 == 18) return tv + 2;
  return tv + 1;
}

}  // namespace tetra
