#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <vector>

#include "xl/field.hpp"

namespace xl {

class DimensionMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Exponent vector x_1^e_1 ... x_n^e_n. Each exponent is capped at 255.
class Monomial {
 public:
  Monomial() = default;
  /// The constant monomial 1 in n variables.
  explicit Monomial(std::size_t n) : exponents_(n, 0) {}
  explicit Monomial(std::vector<std::uint8_t> exponents);
  Monomial(std::initializer_list<int> exponents);

  std::size_t ambient() const { return exponents_.size(); }
  int degree() const { return degree_; }
  int exponent(std::size_t i) const { return exponents_[i]; }
  std::span<const std::uint8_t> exponents() const { return exponents_; }

  /// True when the support is contained in {x_1}; includes the constant 1.
  bool is_pure_first() const;

  Monomial operator*(const Monomial& other) const;

  /// Lexicographic on the exponent vector (x_1 first). This is the storage
  /// order of polynomial terms, not the elimination order.
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
    return a.exponents_ <=> b.exponents_;
  }
  friend bool operator==(const Monomial& a, const Monomial& b) { return a.exponents_ == b.exponents_; }

  std::size_t hash() const;

 private:
  std::vector<std::uint8_t> exponents_;
  int degree_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

struct Term {
  Monomial monomial;
  FieldElement coeff;
};

/// Sparse polynomial over GF(p): a term list sorted by Monomial, with no
/// zero coefficients.
class Polynomial {
 public:
  Polynomial(PrimeField field, std::size_t n) : field_(field), n_(n) {}
  /// Like terms are combined and zero coefficients dropped.
  Polynomial(PrimeField field, std::size_t n, std::vector<Term> terms);

  static Polynomial constant(PrimeField field, std::size_t n, FieldElement c);

  const PrimeField& field() const { return field_; }
  std::size_t ambient() const { return n_; }
  std::span<const Term> terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Total degree; -1 for the zero polynomial.
  int degree() const;
  FieldElement coefficient(const Monomial& m) const;
  FieldElement constant_term() const { return coefficient(Monomial(n_)); }
  /// The homogeneous part of the given degree.
  Polynomial homogeneous_part(int degree) const;

  Polynomial operator+(const Polynomial& other) const;
  Polynomial operator-(const Polynomial& other) const;
  Polynomial scaled(FieldElement c) const;

  bool operator==(const Polynomial& other) const;

 private:
  void check_compatible(const Polynomial& other) const;

  PrimeField field_;
  std::size_t n_;
  std::vector<Term> terms_;
};

Polynomial multiply(const Polynomial& poly, const Monomial& mono);

/// Direct evaluation sum c * prod point_i^e_i. Throws DimensionMismatch.
FieldElement evaluate(const Polynomial& poly, std::span<const FieldElement> point);
FieldElement evaluate(const Monomial& mono, const PrimeField& field, std::span<const FieldElement> point);

/// Substitutes x_1 = value; the result lives in variables x_2..x_n,
/// relabelled x_1..x_{n-1}.
Polynomial substitute_first(const Polynomial& poly, FieldElement value);

bool is_univariate_in_first(const Polynomial& poly);
/// Dense coefficients of a polynomial supported on {x_1}, indexed by degree.
std::vector<FieldElement> univariate_coefficients(const Polynomial& poly);

/// Column order used by XL elimination. Monomials involving any of
/// x_2..x_n come first, graded by degree, ties broken lexicographically on
/// (e_n, ..., e_1). The pure powers 1, x_1, ..., x_1^D come last, ascending.
class XLOrder {
 public:
  XLOrder(std::size_t n, int D) : n_(n), D_(D) {}

  std::size_t ambient() const { return n_; }
  int max_degree() const { return D_; }

  std::weak_ordering compare(const Monomial& a, const Monomial& b) const;
  bool operator()(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }

 private:
  std::size_t n_;
  int D_;
};

/// All C(n+D, n) monomials of degree <= D, sorted by `order`.
std::vector<Monomial> enumerate_monomials(std::size_t n, int D, const XLOrder& order);
std::vector<Monomial> enumerate_monomials(std::size_t n, int D);

struct PolySystem {
  PrimeField field;
  std::size_t n;
  std::vector<Polynomial> polys;

  /// c = #polys - n; may be <= 0 for intermediate systems.
  long overdeterminedness() const { return static_cast<long>(polys.size()) - static_cast<long>(n); }
  int max_degree() const;
  /// Throws unless every polynomial is nonzero with ambient n and c >= 1.
  void validate() const;
};

/// n + c dense polynomials of degree d with uniform coefficients. A
/// polynomial whose degree-d part vanishes is redrawn. Deterministic in seed.
PolySystem random_system(std::size_t n, std::size_t c, int d, const PrimeField& field, std::uint64_t seed);

/// Replaces each f_i by f_i - f_i(point).
PolySystem plant_solution(const PolySystem& system, std::span<const FieldElement> point);

}  // namespace xl
