#include "reference.hpp"

#include <algorithm>
#include <stdexcept>

namespace ref {

std::uint64_t valuation(mpz_class d, unsigned long p) {
  if (d < 0) d = -d;
  std::uint64_t q = 0;
  while (d % p == 0) {
    d /= p;
    ++q;
  }
  return q;
}

mpz_class exact_tower(const mpz_class& a, std::uint64_t b, const mpz_class& limit) {
  if (b == 0) return 1;
  if (a == 0) return b % 2 == 0 ? 1 : 0;
  if (a == 1) return 1;
  if (b == 1) return a <= limit ? a : mpz_class(-1);
  const mpz_class e = exact_tower(a, b - 1, limit);
  if (e < 0) return -1;
  // a >= 2, so a^e > limit as soon as e exceeds its bit length.
  if (e > static_cast<unsigned long>(mpz_sizeinbase(limit.get_mpz_t(), 2))) return -1;
  mpz_class r;
  mpz_pow_ui(r.get_mpz_t(), a.get_mpz_t(), e.get_ui());
  return r <= limit ? r : mpz_class(-1);
}

namespace {

mpz_class pow_2_5(std::uint64_t x, std::uint64_t y) {
  mpz_class m = 1;
  mpz_mul_2exp(m.get_mpz_t(), m.get_mpz_t(), x);
  mpz_class f;
  mpz_ui_pow_ui(f.get_mpz_t(), 5, y);
  return m * f;
}

}  // namespace

mpz_class tower_mod(const mpz_class& a, std::uint64_t b, std::uint64_t x, std::uint64_t y) {
  const mpz_class m = pow_2_5(x, y);
  if (m == 1) return 0;
  if (b == 1 || a <= 1) {
    const mpz_class t = exact_tower(a, b, 1);
    mpz_class r = (t < 0 ? a : t) % m;
    return r;
  }
  const mpz_class threshold = std::max(x, y) + 1;
  const mpz_class e = exact_tower(a, b - 1, threshold);
  mpz_class r;
  if (e >= 0) {
    mpz_powm(r.get_mpz_t(), a.get_mpz_t(), e.get_mpz_t(), m.get_mpz_t());
    return r;
  }
  // phi(2^x 5^y) = 2^(x-1) * 2^2 * 5^(y-1), dropping absent factors.
  const std::uint64_t px = (x ? x - 1 : 0) + (y ? 2 : 0);
  const std::uint64_t py = y ? y - 1 : 0;
  const mpz_class phi = pow_2_5(px, py);
  const mpz_class reduced = tower_mod(a, b - 1, px, py) + phi;
  mpz_powm(r.get_mpz_t(), a.get_mpz_t(), reduced.get_mpz_t(), m.get_mpz_t());
  return r;
}

mpz_class tower_mod10(const mpz_class& a, std::uint64_t b, std::uint64_t n) {
  return tower_mod(a, b, n, n);
}

std::uint64_t frozen_digits(const mpz_class& a, std::uint64_t b, std::uint64_t window) {
  const mpz_class lo = tower_mod10(a, b, window);
  const mpz_class hi = tower_mod10(a, b + 1, window);
  const std::string s = padded(lo, window);
  const std::string t = padded(hi, window);
  std::uint64_t n = 0;
  while (n < window && s[window - 1 - n] == t[window - 1 - n]) ++n;
  if (n == window) throw std::runtime_error("frozen_digits: window too small");
  mpz_class limit;
  mpz_ui_pow_ui(limit.get_mpz_t(), 10, window);
  const mpz_class exact = exact_tower(a, b, limit);
  if (exact >= 0) n = std::min<std::uint64_t>(n, exact.get_str().size());
  return n;
}

std::vector<mpz_class> hensel_lifts(unsigned x2, unsigned x1, std::size_t n, std::size_t lookahead) {
  std::vector<mpz_class> level{mpz_class(10 * x2 + x1)};
  mpz_class m = 100;
  {
    mpz_class r;
    mpz_powm_ui(r.get_mpz_t(), level[0].get_mpz_t(), 5, m.get_mpz_t());
    if (r != level[0]) return {};
  }
  for (std::size_t k = 3; k <= n + lookahead; ++k) {
    const mpz_class step = m;
    m *= 10;
    std::vector<mpz_class> next;
    for (const auto& c : level) {
      for (unsigned d = 0; d < 10; ++d) {
        const mpz_class y = c + d * step;
        mpz_class r;
        mpz_powm_ui(r.get_mpz_t(), y.get_mpz_t(), 5, m.get_mpz_t());
        if (r == y) next.push_back(y);
      }
    }
    level = std::move(next);
  }
  mpz_class target;
  mpz_ui_pow_ui(target.get_mpz_t(), 10, n);
  std::vector<mpz_class> out;
  for (const auto& c : level) {
    const mpz_class r = c % target;
    if (std::find(out.begin(), out.end(), r) == out.end()) out.push_back(r);
  }
  return out;
}

std::string padded(const mpz_class& r, std::size_t n) {
  std::string s = r.get_str();
  if (s.size() < n) s.insert(0, n - s.size(), '0');
  return s;
}

const std::vector<Printed>& printed_alphas() {
  static const std::vector<Printed> table = {
      {"00", "00000000000000000000"},
      {"01", "0000000000000000000000000000000000000000000000000000000000000000001"},
      {"51", "0219875666980838272377998885153153538207781991786760045215487480163574218751"},
      {"32", "0275906862593839649523223304553032451441224165530407839804103263499879186432"},
      {"93", "9614155303915741214287777252870390779454884838576212137588152996418333704193"},
      {"43", "9834030970896579486665776138023544317662666830362972182803640476581907922943"},
      {"24", "9890062166509580863811000557423423230896109004106619977392256259918212890624"},
      {"25", "9890062166509580863811000557423423230896109004106619977392256259918212890625"},
      {"75", "0109937833490419136188999442576576769103890995893380022607743740081787109375"},
      {"76", "0109937833490419136188999442576576769103890995893380022607743740081787109376"},
      {"07", "0385844696084258785712222747129609220545115161423787862411847003581666295807"},
      {"57", "0165969029103420513334223861976455682337333169637027817196359523418092077057"},
      {"68", "9724093137406160350476776695446967548558775834469592160195896736500120813568"},
      {"49", "9780124333019161727622001114846846461792218008213239954784512519836425781249"},
      {"99", "99999999999999999999999999999999999999999999999999999999999999"},
  };
  return table;
}

}  // namespace ref

namespace prop {

std::string Gen::decimal(std::size_t max_len) {
  const std::size_t len = uniform(1, max_len);
  std::string s(len, '0');
  s[0] = static_cast<char>('1' + uniform(0, 8));
  for (std::size_t i = 1; i < len; ++i) s[i] = static_cast<char>('0' + uniform(0, 9));
  return s;
}

}  // namespace prop
