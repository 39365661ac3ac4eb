#include "tetra/tower.hpp"

#include <algorithm>
#include <stdexcept>

#include "tetra/valuation.hpp"

namespace tetra {

namespace {

mpz_class prime_power(unsigned long p, std::uint64_t k) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), p, k);
  return r;
}

// Exponent of 2 in the Carmichael function of 2^k.
std::uint64_t lambda_pow2_exp(std::uint64_t k) {
  if (k <= 1) return 0;
  if (k == 2) return 1;
  return k - 2;
}

// ^h a modulo p^k where the exponent E = ^(h-1) a is known as
//   reduced: E mod L, with lambda(p^k) | L
//   capped:  min(E, cap) for some cap >= k
mpz_class prime_power_part(const mpz_class& a, unsigned long p, std::uint64_t k,
                           const mpz_class& reduced, std::uint64_t capped) {
  const mpz_class modulus = prime_power(p, k);
  mpz_class base = a % modulus;
  mpz_class out;
  if (mpz_divisible_ui_p(a.get_mpz_t(), p) != 0) {
    // v_p(a^E) >= E, so once E >= k the power vanishes mod p^k.
    if (capped >= k) return 0;
    mpz_powm_ui(out.get_mpz_t(), base.get_mpz_t(), capped, modulus.get_mpz_t());
    return out;
  }
  // Coprime: the multiplicative order divides lambda(p^k), which divides L.
  mpz_class lambda = (p == 2) ? prime_power(2, lambda_pow2_exp(k)) : 4 * prime_power(5, k - 1);
  mpz_class e = reduced % lambda;
  mpz_powm(out.get_mpz_t(), base.get_mpz_t(), e.get_mpz_t(), modulus.get_mpz_t());
  return out;
}

}  // namespace

std::uint64_t capped_tower(const mpz_class& a, std::uint64_t height, std::uint64_t cap) {
  const auto clamp = [cap](std::uint64_t v) { return std::min(v, cap); };
  if (height == 0) return clamp(1);
  if (sgn(a) == 0) return clamp(height % 2 == 0 ? 1 : 0);
  if (a == 1) return clamp(1);
  if (height == 1) return cmp(a, cap) >= 0 ? cap : clamp(a.get_ui());

  // a >= 2, so a^e >= 2^e; an exponent of 64 already overflows any cap.
  const std::uint64_t e = capped_tower(a, height - 1, 64);
  if (e >= 64 || cmp(a, cap) >= 0) return cap;
  mpz_class power;
  mpz_pow_ui(power.get_mpz_t(), a.get_mpz_t(), e);
  return cmp(power, cap) >= 0 ? cap : power.get_ui();
}

mpz_class tower_mod_2_5(const mpz_class& a, std::uint64_t height, std::uint64_t e2,
                        std::uint64_t e5) {
  if (height == 0) throw std::invalid_argument("tower height must be at least 1");
  if (sgn(a) < 0) throw std::invalid_argument("tower base must be nonnegative");
  if (e2 == 0 && e5 == 0) return 0;

  const mpz_class m2 = prime_power(2, e2);
  const mpz_class m5 = prime_power(5, e5);
  const mpz_class modulus = m2 * m5;

  if (sgn(a) == 0) return height % 2 == 0 ? mpz_class(1) % modulus : mpz_class(0);
  if (a == 1) return mpz_class(1) % modulus;
  if (height == 1) return a % modulus;

  // lcm(lambda(2^e2), lambda(5^e5)) = 2^l2 * 5^l5
  const std::uint64_t l2 = std::max(lambda_pow2_exp(e2), e5 >= 1 ? std::uint64_t{2} : 0);
  const std::uint64_t l5 = e5 >= 1 ? e5 - 1 : 0;
  const mpz_class reduced = tower_mod_2_5(a, height - 1, l2, l5);
  const std::uint64_t capped = capped_tower(a, height - 1, std::max(e2, e5));

  mpz_class r2 = e2 > 0 ? prime_power_part(a, 2, e2, reduced, capped) : mpz_class(0);
  mpz_class r5 = e5 > 0 ? prime_power_part(a, 5, e5, reduced, capped) : mpz_class(0);
  if (e2 == 0) return r5;
  if (e5 == 0) return r2;

  // CRT: x = r5 + m5 * ((r2 - r5) * m5^-1 mod m2)
  mpz_class inv;
  mpz_invert(inv.get_mpz_t(), m5.get_mpz_t(), m2.get_mpz_t());
  mpz_class t = ((r2 - r5) * inv) % m2;
  if (sgn(t) < 0) t += m2;
  return r5 + m5 * t;
}

BigUint tetration_mod(const BigUint& a, std::uint64_t height, std::uint64_t digits) {
  if (height == 0) throw std::invalid_argument("tetration_mod: height starts at 1");
  if (digits == 0) throw std::invalid_argument("tetration_mod: modulus must be 10^N with N >= 1");
  return BigUint(tower_mod_2_5(a.mpz(), height, digits, digits));
}

unsigned digit(const BigUint& a, std::uint64_t j) {
  if (j == 0) throw std::invalid_argument("digit index starts at 1");
  if (j > a.decimal_length()) return 0;
  mpz_class q;
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, j - 1);
  mpz_tdiv_q(q.get_mpz_t(), a.mpz().get_mpz_t(), scale.get_mpz_t());
  return static_cast<unsigned>(mpz_fdiv_ui(q.get_mpz_t(), 10));
}

std::uint64_t common_trailing_digits(const mpz_class& x, const mpz_class& y,
                                     std::uint64_t digits) {
  mpz_class d = x - y;
  mpz_class modulus;
  mpz_ui_pow_ui(modulus.get_mpz_t(), 10, digits);
  d %= modulus;
  if (sgn(d) == 0) return digits;
  return std::min({v2(d), v5(d), digits});
}

}  // namespace tetra
