#include "tetra/decadic.hpp"

#include <mutex>
#include <stdexcept>
#include <utility>

namespace tetra {

namespace {

// alpha = c0 + ce * e5 + ct * t2 (mod 10^n)
struct Combination {
  unsigned x2, x1;
  int c0, ce, ct;
};

constexpr std::array<Combination, 15> kCombinations{{
    {0, 0, 0, 0, 0},    // 0
    {0, 1, 1, 0, 0},    // 1
    {5, 1, 1, -2, 0},   // 1 - 2 e5
    {3, 2, 0, 0, 1},    // t2
    {9, 3, 0, 1, -1},   // e5 - t2
    {4, 3, 0, -1, -1},  // -e5 - t2
    {2, 4, -1, 1, 0},   // e5 - 1
    {2, 5, 0, 1, 0},    // e5
    {7, 5, 0, -1, 0},   // -e5
    {7, 6, 1, -1, 0},   // 1 - e5
    {0, 7, 0, -1, 1},   // -e5 + t2
    {5, 7, 0, 1, 1},    // e5 + t2
    {6, 8, 0, 0, -1},   // -t2
    {4, 9, -1, 2, 0},   // 2 e5 - 1
    {9, 9, -1, 0, 0},   // -1
}};

const Combination& combination_for(AlphaTag tag) {
  for (const auto& c : kCombinations) {
    if (c.x2 == tag.x2() && c.x1 == tag.x1()) return c;
  }
  throw std::logic_error("AlphaTag without a combination");
}

mpz_class power_of_ten(std::size_t n) {
  mpz_class m;
  mpz_ui_pow_ui(m.get_mpz_t(), 10, n);
  return m;
}

void require_depth(std::size_t n) {
  if (n == 0) throw std::invalid_argument("decadic depth must be at least 1");
}

// Iterates x <- x^k mod 10^n until it stops moving. Each step fixes at least
// one more digit, so n + a few steps always suffice.
mpz_class fixed_point(unsigned long start, unsigned long k, std::size_t n) {
  const mpz_class m = power_of_ten(n);
  mpz_class x(start);
  mpz_class next;
  for (std::size_t step = 0; step < n + 8; ++step) {
    mpz_powm_ui(next.get_mpz_t(), x.get_mpz_t(), k, m.get_mpz_t());
    if (next == x) return x;
    x = next;
  }
  throw std::logic_error("decadic fixed-point iteration did not converge");
}

std::string pad(const mpz_class& r, std::size_t n) {
  std::string s = r.get_str(10);
  if (s.size() < n) s.insert(0, n - s.size(), '0');
  return s;
}

AlphaDigits combine(AlphaTag tag, std::size_t n, const mpz_class& e5, const mpz_class& t2) {
  const auto& c = combination_for(tag);
  const mpz_class m = power_of_ten(n);
  mpz_class r = c.c0 + c.ce * e5 + c.ct * t2;
  r %= m;
  if (sgn(r) < 0) r += m;
  return AlphaDigits{tag, n, pad(r, n)};
}

class ConstantCache {
 public:
  std::pair<mpz_class, mpz_class> get(std::size_t n) {
    std::lock_guard lock(mu_);
    if (depth_ < n) {
      const std::size_t want = std::max({n, 2 * depth_, std::size_t{64}});
      e5_ = fixed_point(5, 2, want);
      t2_ = fixed_point(2, 5, want);
      depth_ = want;
    }
    const mpz_class m = power_of_ten(n);
    return {e5_ % m, t2_ % m};
  }

 private:
  std::mutex mu_;
  std::size_t depth_ = 0;
  mpz_class e5_;
  mpz_class t2_;
};

ConstantCache& cache() {
  static ConstantCache instance;
  return instance;
}

}  // namespace

AlphaTag::AlphaTag(unsigned x2, unsigned x1) : x2_(x2), x1_(x1) {
  for (const auto& c : kCombinations) {
    if (c.x2 == x2 && c.x1 == x1) return;
  }
  throw std::invalid_argument("no 10-adic solution of y^5 = y ends in " + std::to_string(x2) +
                              std::to_string(x1));
}

AlphaTag AlphaTag::parse(std::string_view text) {
  if (text.size() != 2 || text[0] < '0' || text[0] > '9' || text[1] < '0' || text[1] > '9') {
    throw std::invalid_argument("alpha tag must be two digits, got '" + std::string(text) + "'");
  }
  return AlphaTag(static_cast<unsigned>(text[0] - '0'), static_cast<unsigned>(text[1] - '0'));
}

std::string AlphaTag::str() const { return std::to_string(x2_) + std::to_string(x1_); }

const std::array<AlphaTag, 15>& all_alpha_tags() {
  static const std::array<AlphaTag, 15> tags = [] {
    std::array<AlphaTag, 15> out{{{0, 0}, {0, 0}, {0, 0}, {0, 0}, {0, 0},
                                  {0, 0}, {0, 0}, {0, 0}, {0, 0}, {0, 0},
                                  {0, 0}, {0, 0}, {0, 0}, {0, 0}, {0, 0}}};
    for (std::size_t i = 0; i < kCombinations.size(); ++i) {
      out[i] = AlphaTag(kCombinations[i].x2, kCombinations[i].x1);
    }
    return out;
  }();
  return tags;
}

unsigned AlphaDigits::at(std::size_t l) const {
  if (l == 0 || l > n) throw std::out_of_range("alpha digit index out of range");
  return static_cast<unsigned>(digits[n - l] - '0');
}

std::string idempotent_e5(std::size_t n) {
  require_depth(n);
  return pad(fixed_point(5, 2, n), n);
}

std::string two_tower_t2(std::size_t n) {
  require_depth(n);
  return pad(fixed_point(2, 5, n), n);
}

AlphaDigits alpha_digits(AlphaTag tag, std::size_t n) {
  require_depth(n);
  auto [e5, t2] = cache().get(n);
  return combine(tag, n, e5, t2);
}

AlphaDigits alpha_digits_uncached(AlphaTag tag, std::size_t n) {
  require_depth(n);
  return combine(tag, n, fixed_point(5, 2, n), fixed_point(2, 5, n));
}

KeyDigitReport key_digit(const BigUint& a, AlphaTag tag) {
  if (a < BigUint(2)) throw std::invalid_argument("key_digit: base must be at least 2");
  if (a.mod_u64(10) != tag.x1()) {
    throw std::invalid_argument("key_digit: last digit of " + a.to_decimal() +
                                " does not match alpha_" + tag.str());
  }
  const std::string s = a.to_decimal();
  const std::size_t len = s.size();
  constexpr std::size_t kMaxDepth = std::size_t{1} << 20;
  for (std::size_t depth = len + 1; depth <= kMaxDepth; depth *= 2) {
    const AlphaDigits alpha = alpha_digits(tag, depth);
    for (std::size_t l = 2; l <= depth; ++l) {
      const unsigned s_l = l <= len ? static_cast<unsigned>(s[len - l] - '0') : 0U;
      const unsigned al = alpha.at(l);
      if (s_l != al) {
        return KeyDigitReport{l, s_l, static_cast<int>(s_l) - static_cast<int>(al), l - 1};
      }
    }
  }
  // Only reachable when a equals alpha itself (e.g. a = 1 against alpha_01).
  throw std::invalid_argument("key_digit: " + a.to_decimal() + " has no key digit against alpha_" +
                              tag.str());
}

}  // namespace tetra
