#include "xl/field.hpp"

#include <limits>

namespace xl {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t q = 3; q * q <= n; q += 2) {
    if (n % q == 0) return false;
  }
  return true;
}

PrimeField::PrimeField(std::uint64_t p) {
  if (p < 2 || p > kMaxModulus) {
    throw std::invalid_argument("modulus " + std::to_string(p) + " outside [2, 2^31)");
  }
  if (!is_prime(p)) throw CompositeModulus(p);
  p_ = static_cast<std::uint32_t>(p);
  barrett_ = std::numeric_limits<std::uint64_t>::max() / p_;
}

FieldElement PrimeField::element(std::int64_t x) const {
  std::int64_t r = x % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return FieldElement{static_cast<std::uint32_t>(r)};
}

FieldElement PrimeField::inv(FieldElement a) const {
  if (a.is_zero()) throw DivisionByZero();
  std::int64_t old_r = a.value(), r = p_;
  std::int64_t old_s = 1, s = 0;
  while (r != 0) {
    const std::int64_t q = old_r / r;
    std::int64_t t = old_r - q * r;
    old_r = r;
    r = t;
    t = old_s - q * s;
    old_s = s;
    s = t;
  }
  return element(old_s);
}

FieldElement PrimeField::inv_fermat(FieldElement a) const {
  if (a.is_zero()) throw DivisionByZero();
  return pow(a, p_ - 2);
}

FieldElement PrimeField::pow(FieldElement a, std::uint64_t e) const {
  FieldElement result = one();
  FieldElement base = a;
  while (e != 0) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

}  // namespace xl
