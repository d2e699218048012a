#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace xl {

class CompositeModulus : public std::invalid_argument {
 public:
  explicit CompositeModulus(std::uint64_t p)
      : std::invalid_argument("modulus " + std::to_string(p) + " is not prime") {}
};

class DivisionByZero : public std::domain_error {
 public:
  DivisionByZero() : std::domain_error("inverse of zero in GF(p)") {}
};

// A residue in [0, p). The owning PrimeField is not stored; arithmetic goes
// through the field so that rows of elements stay four bytes wide.
class FieldElement {
 public:
  constexpr FieldElement() = default;
  constexpr explicit FieldElement(std::uint32_t residue) : residue_(residue) {}

  constexpr std::uint32_t value() const { return residue_; }
  constexpr bool is_zero() const { return residue_ == 0; }

  friend constexpr auto operator<=>(FieldElement, FieldElement) = default;

 private:
  std::uint32_t residue_ = 0;
};

bool is_prime(std::uint64_t n);

/// Prime field GF(p) for p < 2^31.
///
/// Products are formed in 64 bits and reduced with a precomputed Barrett
/// constant, so `reduce` accepts any 64-bit value.
class PrimeField {
 public:
  static constexpr std::uint64_t kMaxModulus = (std::uint64_t{1} << 31) - 1;

  /// Throws CompositeModulus if p is not prime, std::invalid_argument if
  /// p < 2 or p > kMaxModulus.
  explicit PrimeField(std::uint64_t p);

  std::uint32_t modulus() const { return p_; }

  std::uint32_t reduce(std::uint64_t x) const {
    const auto q = static_cast<std::uint64_t>((static_cast<unsigned __int128>(x) * barrett_) >> 64);
    std::uint64_t r = x - q * p_;
    if (r >= p_) r -= p_;
    return static_cast<std::uint32_t>(r);
  }

  FieldElement element(std::int64_t x) const;
  FieldElement zero() const { return FieldElement{0}; }
  FieldElement one() const { return FieldElement{1}; }

  FieldElement add(FieldElement a, FieldElement b) const {
    std::uint32_t s = a.value() + b.value();
    if (s >= p_) s -= p_;
    return FieldElement{s};
  }
  FieldElement sub(FieldElement a, FieldElement b) const {
    return FieldElement{a.value() >= b.value() ? a.value() - b.value() : a.value() + p_ - b.value()};
  }
  FieldElement neg(FieldElement a) const { return FieldElement{a.value() == 0 ? 0 : p_ - a.value()}; }
  FieldElement mul(FieldElement a, FieldElement b) const {
    return FieldElement{reduce(std::uint64_t{a.value()} * b.value())};
  }

  /// Extended Euclid. Throws DivisionByZero on 0.
  FieldElement inv(FieldElement a) const;
  /// a^(p-2); kept to cross-check `inv`.
  FieldElement inv_fermat(FieldElement a) const;
  /// Square-and-multiply; pow(a, 0) = 1 for every a, including 0.
  FieldElement pow(FieldElement a, std::uint64_t e) const;

  bool operator==(const PrimeField& other) const { return p_ == other.p_; }

 private:
  std::uint32_t p_;
  std::uint64_t barrett_;
};

}  // namespace xl
