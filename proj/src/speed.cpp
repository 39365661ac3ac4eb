#include "tetra/speed.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

#include "tetra/decadic.hpp"
#include "tetra/valuation.hpp"

namespace tetra {

namespace {

// The four shifted arguments every closed form draws its valuations from.
struct Shifts {
  mpz_class minus1, plus1, square_plus1, square_minus1;

  explicit Shifts(const mpz_class& a)
      : minus1(a - 1), plus1(a + 1), square_plus1(a * a + 1), square_minus1(a * a - 1) {}
};

SpeedResult make(std::uint64_t v, std::string rule) { return SpeedResult{v, std::move(rule)}; }

SpeedResult undefined_speed() { return SpeedResult{std::nullopt, "a=0 (mod 10), a>0 -> undefined"}; }

bool trivial(const Base& a) { return a.is(0) || a.is(1); }

SpeedResult trivial_speed() { return make(0, "a in {0,1} -> 0"); }

template <std::size_t N>
bool in(unsigned x, const std::array<unsigned, N>& set) {
  return std::find(set.begin(), set.end(), x) != set.end();
}

constexpr std::array<unsigned, 16> kSpeedOneMod25{2,  3,  4,  6,  8,  9,  11, 12,
                                                  13, 14, 16, 17, 19, 21, 22, 23};
constexpr std::array<unsigned, 24> kSpeedThreeMod1000{1,   57,  68,  124, 126, 182, 193, 249,
                                                      318, 374, 376, 432, 568, 624, 626, 682,
                                                      751, 807, 818, 874, 876, 932, 943, 999};

// Coprime-class row of the key-digit map: alpha constant and the two rules.
struct KeyRow {
  unsigned mod20;
  unsigned x2, x1;
  const char* five_adic;
  const char* two_adic;
};

constexpr std::array<KeyRow, 8> kKeyRows{{
    {1, 0, 1, "v5(a-1)", "v2(a-1)"},
    {11, 5, 1, "v5(a-1)", "v2(a+1)"},
    {3, 4, 3, "v5(a^2+1)", "v2(a+1)"},
    {13, 9, 3, "v5(a^2+1)", "v2(a-1)"},
    {7, 0, 7, "v5(a^2+1)", "v2(a+1)"},
    {17, 5, 7, "v5(a^2+1)", "v2(a-1)"},
    {9, 4, 9, "v5(a+1)", "v2(a-1)"},
    {19, 9, 9, "v5(a+1)", "v2(a+1)"},
}};

std::uint64_t evaluate(std::string_view rule, const Shifts& s) {
  if (rule == "v5(a-1)") return v5(s.minus1);
  if (rule == "v5(a+1)") return v5(s.plus1);
  if (rule == "v5(a^2+1)") return v5(s.square_plus1);
  if (rule == "v2(a-1)") return v2(s.minus1);
  if (rule == "v2(a+1)") return v2(s.plus1);
  throw std::logic_error("unknown valuation rule");
}

}  // namespace

std::uint64_t SpeedResult::value() const {
  if (!speed) throw std::domain_error("congruence speed is undefined for positive multiples of 10");
  return *speed;
}

std::string to_string(Tier t) {
  switch (t) {
    case Tier::Zero: return "V=0";
    case Tier::One: return "V=1";
    case Tier::Two: return "V=2";
    case Tier::ThreeOrMore: return "V>=3";
    case Tier::Undefined: return "undefined";
  }
  return "?";
}

Tier tier_of(const SpeedResult& r) {
  if (r.undefined()) return Tier::Undefined;
  switch (*r.speed) {
    case 0: return Tier::Zero;
    case 1: return Tier::One;
    case 2: return Tier::Two;
    default: return Tier::ThreeOrMore;
  }
}

std::uint64_t tilde_v(const Base& a) {
  if (trivial(a)) throw std::invalid_argument("tilde_v: base must be at least 2");
  if (a.mod(10) == 0) throw std::invalid_argument("tilde_v: base is a multiple of 10");
  const Shifts s(a.mpz());
  if (a.mod(10) == 5) return v2(s.square_minus1) - 1;
  switch (a.mod(5)) {
    case 1: return v5(s.minus1);
    case 2:
    case 3: return v5(s.square_plus1);
    default: return v5(s.plus1);
  }
}

SpeedResult speed_mod100_split(const Base& a) {
  if (trivial(a)) return trivial_speed();
  const unsigned m10 = a.mod(10);
  const unsigned m100 = a.mod(100);
  if (m10 == 0) return undefined_speed();
  const Shifts s(a.mpz());
  if (m100 == 1) return make(std::min(v2(s.minus1), v5(s.minus1)), "a=1 (mod 100) -> min{v2(a-1), v5(a-1)}");
  if (m100 == 51) return make(std::min(v2(s.plus1), v5(s.minus1)), "a=51 (mod 100) -> min{v2(a+1), v5(a-1)}");
  if (m10 == 2 || m10 == 8) return make(v5(s.square_plus1), "a={2,8} (mod 10) -> v5(a^2+1)");
  if (m100 == 7 || m100 == 43) {
    return make(std::min(v2(s.plus1), v5(s.square_plus1)), "a={7,43} (mod 100) -> min{v2(a+1), v5(a^2+1)}");
  }
  if (m100 == 57 || m100 == 93) {
    return make(std::min(v2(s.minus1), v5(s.square_plus1)), "a={57,93} (mod 100) -> min{v2(a-1), v5(a^2+1)}");
  }
  if (m10 == 4) return make(v5(s.plus1), "a=4 (mod 10) -> v5(a+1)");
  if (m10 == 5) return make(v2(s.square_minus1) - 1, "a=5 (mod 10) -> v2(a^2-1)-1");
  if (m10 == 6) return make(v5(s.minus1), "a=6 (mod 10) -> v5(a-1)");
  if (m100 == 49) return make(std::min(v2(s.minus1), v5(s.plus1)), "a=49 (mod 100) -> min{v2(a-1), v5(a+1)}");
  if (m100 == 99) return make(std::min(v2(s.plus1), v5(s.plus1)), "a=99 (mod 100) -> min{v2(a+1), v5(a+1)}");
  return make(1, "otherwise -> 1");
}

SpeedResult speed_mod20_split(const Base& a) {
  if (trivial(a)) return trivial_speed();
  const unsigned m10 = a.mod(10);
  const unsigned m20 = a.mod(20);
  if (m10 == 0) return undefined_speed();
  const Shifts s(a.mpz());
  switch (m20) {
    case 1: return make(std::min(v2(s.minus1), v5(s.minus1)), "a=1 (mod 20) -> min{v2(a-1), v5(a-1)}");
    case 11: return make(std::min(v2(s.plus1), v5(s.minus1)), "a=11 (mod 20) -> min{v2(a+1), v5(a-1)}");
    case 3:
    case 7: return make(std::min(v2(s.plus1), v5(s.square_plus1)), "a={3,7} (mod 20) -> min{v2(a+1), v5(a^2+1)}");
    case 13:
    case 17: return make(std::min(v2(s.minus1), v5(s.square_plus1)), "a={13,17} (mod 20) -> min{v2(a-1), v5(a^2+1)}");
    case 5: return make(v2(s.minus1), "a=5 (mod 20) -> v2(a-1)");
    case 15: return make(v2(s.plus1), "a=15 (mod 20) -> v2(a+1)");
    case 9: return make(std::min(v2(s.minus1), v5(s.plus1)), "a=9 (mod 20) -> min{v2(a-1), v5(a+1)}");
    case 19: return make(std::min(v2(s.plus1), v5(s.plus1)), "a=19 (mod 20) -> min{v2(a+1), v5(a+1)}");
    default: break;
  }
  if (m10 == 2 || m10 == 8) return make(v5(s.square_plus1), "a={2,8} (mod 10) -> v5(a^2+1)");
  if (m10 == 4) return make(v5(s.plus1), "a=4 (mod 10) -> v5(a+1)");
  return make(v5(s.minus1), "a=6 (mod 10) -> v5(a-1)");
}

SpeedResult speed_exact(const Base& a) {
  if (trivial(a)) return trivial_speed();
  const unsigned m10 = a.mod(10);
  const unsigned m20 = a.mod(20);
  if (m10 == 0) return undefined_speed();
  const Shifts s(a.mpz());
  if (m10 == 2 || m10 == 8) return make(v5(s.square_plus1), "a={2,8} (mod 10) -> v5(a^2+1)");
  if (m10 == 4) return make(v5(s.plus1), "a=4 (mod 10) -> v5(a+1)");
  if (m10 == 6) return make(v5(s.minus1), "a=6 (mod 10) -> v5(a-1)");
  if (m20 == 5) return make(v2(s.minus1), "a=5 (mod 20) -> v2(a-1)");
  if (m20 == 15) return make(v2(s.plus1), "a=15 (mod 20) -> v2(a+1)");

  const auto row = std::find_if(kKeyRows.begin(), kKeyRows.end(),
                                [m20](const KeyRow& r) { return r.mod20 == m20; });
  if (row == kKeyRows.end()) throw std::logic_error("speed_exact: uncovered residue class");
  const AlphaTag tag(row->x2, row->x1);
  const KeyDigitReport key = key_digit(a.value(), tag);
  const bool critical = key.diff == 5 || key.diff == -5;

  std::string rule = "a=" + std::to_string(m20) + " (mod 20), ";
  if (tag.x2() == 0 && tag.x1() == 1) {
    rule += critical ? "s_l=5" : "s_l!=5";
  } else if (tag.x2() == 9 && tag.x1() == 9) {
    rule += critical ? "s_l=4" : "s_l!=4";
  } else {
    rule += std::string("|s_l-alpha_") + tag.str() + "[l]|" + (critical ? "=5" : "!=5");
  }
  const char* chosen = critical ? row->two_adic : row->five_adic;
  rule += " -> ";
  rule += chosen;
  return make(evaluate(chosen, s), std::move(rule));
}

SpeedResult special_class_speeds(const Base& a) {
  if (a.mod(10) != 5) throw std::invalid_argument("special_class_speeds: base must be 5 (mod 10)");
  const Shifts s(a.mpz());
  if (a.mod(20) == 5) return make(v2(s.minus1), "a=5 (mod 20) -> v2(a-1)");
  return make(v2(s.plus1), "a=15 (mod 20) -> v2(a+1)");
}

Tier classify_tier(const Base& a) {
  if (a.is(1)) return Tier::Zero;
  if (a.mod(10) == 0) return Tier::Undefined;
  if (in(a.mod(25), kSpeedOneMod25)) return Tier::One;
  const unsigned m40 = a.mod(40);
  if (m40 == 5 || m40 == 35) return Tier::Two;
  if (m40 == 15 || m40 == 25) return Tier::ThreeOrMore;
  if (in(a.mod(1000), kSpeedThreeMod1000)) return Tier::ThreeOrMore;
  const unsigned m25 = a.mod(25);
  if (m25 == 1 || m25 == 7 || m25 == 18 || m25 == 24) return Tier::Two;
  throw std::logic_error("classify_tier: residue classes do not cover " + a.value().to_decimal());
}

}  // namespace tetra
