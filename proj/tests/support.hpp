#pragma once

#include <random>
#include <vector>

#include "xl/field.hpp"
#include "xl/polynomial.hpp"
#include "xl/random.hpp"

namespace xl::test {

inline FieldElement random_element(std::mt19937_64& rng, const PrimeField& f) {
  return FieldElement{uniform_below(rng, f.modulus())};
}

inline FieldElement random_nonzero(std::mt19937_64& rng, const PrimeField& f) {
  return FieldElement{1 + uniform_below(rng, f.modulus() - 1)};
}

inline std::vector<FieldElement> random_point(std::mt19937_64& rng, const PrimeField& f, std::size_t n) {
  std::vector<FieldElement> pt(n);
  for (auto& v : pt) v = random_element(rng, f);
  return pt;
}

inline Monomial random_monomial(std::mt19937_64& rng, std::size_t n, int max_per_var) {
  std::vector<std::uint8_t> e(n);
  for (auto& x : e) x = static_cast<std::uint8_t>(uniform_below(rng, static_cast<std::uint32_t>(max_per_var) + 1));
  return Monomial(std::move(e));
}

inline Polynomial random_polynomial(std::mt19937_64& rng, const PrimeField& f, std::size_t n, int terms,
                                    int max_per_var) {
  std::vector<Term> t;
  for (int i = 0; i < terms; ++i) t.push_back({random_monomial(rng, n, max_per_var), random_element(rng, f)});
  return Polynomial(f, n, std::move(t));
}

}  // namespace xl::test
