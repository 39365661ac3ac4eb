#include "tetra/bignum.hpp"

#include <stdexcept>

namespace tetra {

BigUint::BigUint(std::uint64_t v) : v_(static_cast<unsigned long>(v)) {}

BigUint::BigUint(mpz_class v) : v_(std::move(v)) {
  if (sgn(v_) < 0) throw std::domain_error("BigUint: negative value");
}

BigUint BigUint::from_decimal(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty integer literal");
  for (char c : text) {
    if (c < '0' || c > '9') {
      throw std::invalid_argument("not a nonnegative decimal integer: '" + std::string(text) + "'");
    }
  }
  return BigUint(mpz_class(std::string(text), 10));
}

std::string BigUint::to_decimal() const { return v_.get_str(10); }

bool BigUint::fits_u64() const noexcept { return mpz_fits_ulong_p(v_.get_mpz_t()) != 0; }

std::uint64_t BigUint::to_u64() const {
  if (!fits_u64()) throw std::overflow_error("BigUint does not fit in 64 bits");
  return v_.get_ui();
}

std::uint64_t BigUint::mod_u64(std::uint64_t m) const {
  if (m == 0) throw std::invalid_argument("mod_u64: zero modulus");
  return mpz_fdiv_ui(v_.get_mpz_t(), m);
}

std::size_t BigUint::decimal_length() const {
  // mpz_sizeinbase may overshoot by one for base 10.
  return is_zero() ? 1 : v_.get_str(10).size();
}

BigUint& BigUint::operator+=(const BigUint& o) {
  v_ += o.v_;
  return *this;
}

BigUint& BigUint::operator-=(const BigUint& o) {
  if (cmp(v_, o.v_) < 0) throw std::domain_error("BigUint: subtraction underflow");
  v_ -= o.v_;
  return *this;
}

BigUint& BigUint::operator*=(const BigUint& o) {
  v_ *= o.v_;
  return *this;
}

Base::Base(BigUint value)
    : value_(std::move(value)), mod1000_(static_cast<unsigned>(value_.mod_u64(1000))) {}

unsigned Base::mod(unsigned m) const {
  if (m == 0 || 1000 % m != 0) throw std::invalid_argument("Base::mod: modulus must divide 1000");
  return mod1000_ % m;
}

}  // namespace tetra
