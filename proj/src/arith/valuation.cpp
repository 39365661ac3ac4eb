#include "tetra/valuation.hpp"

#include <stdexcept>

namespace tetra {

std::uint64_t Valuation::value() const {
  if (is_infinite()) throw std::domain_error("valuation is infinite");
  return v_;
}

std::string Valuation::to_string() const { return is_infinite() ? "inf" : std::to_string(v_); }

namespace {

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  mpz_class z(static_cast<unsigned long>(p));
  return mpz_probab_prime_p(z.get_mpz_t(), 40) != 0;
}

std::uint64_t finite(const mpz_class& d, std::uint64_t p) {
  if (sgn(d) == 0) throw std::domain_error("valuation of zero is infinite");
  if (p == 2) return mpz_scan1(d.get_mpz_t(), 0);
  mpz_class rest;
  mpz_class prime(static_cast<unsigned long>(p));
  return mpz_remove(rest.get_mpz_t(), d.get_mpz_t(), prime.get_mpz_t());
}

}  // namespace

Valuation padic_valuation(const mpz_class& d, std::uint64_t p) {
  if (p != 2 && p != 5 && !is_prime(p)) {
    throw std::invalid_argument("padic_valuation: p = " + std::to_string(p) + " is not prime");
  }
  if (sgn(d) == 0) return Valuation::infinity();
  return Valuation(finite(d, p));
}

Valuation padic_valuation(std::int64_t d, std::uint64_t p) {
  return padic_valuation(mpz_class(static_cast<long>(d)), p);
}

std::uint64_t v2(const mpz_class& d) { return finite(d, 2); }
std::uint64_t v5(const mpz_class& d) { return finite(d, 5); }

}  // namespace tetra
