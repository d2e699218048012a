#include "xl/polynomial.hpp"

#include <algorithm>
#include <random>
#include <string>
#include <string_view>

#include "xl/random.hpp"

namespace xl {

namespace {

std::uint8_t checked_exponent(int e) {
  if (e < 0 || e > 255) throw std::out_of_range("monomial exponent " + std::to_string(e) + " outside [0, 255]");
  return static_cast<std::uint8_t>(e);
}

void append_monomials(std::size_t n, int remaining, std::vector<std::uint8_t>& current,
                      std::vector<Monomial>& out) {
  if (current.size() == n) {
    out.emplace_back(current);
    return;
  }
  for (int e = 0; e <= remaining; ++e) {
    current.push_back(static_cast<std::uint8_t>(e));
    append_monomials(n, remaining - e, current, out);
    current.pop_back();
  }
}

}  // namespace

Monomial::Monomial(std::vector<std::uint8_t> exponents) : exponents_(std::move(exponents)) {
  for (auto e : exponents_) degree_ += e;
}

Monomial::Monomial(std::initializer_list<int> exponents) {
  exponents_.reserve(exponents.size());
  for (int e : exponents) {
    exponents_.push_back(checked_exponent(e));
    degree_ += e;
  }
}

bool Monomial::is_pure_first() const {
  return std::all_of(exponents_.begin() + (exponents_.empty() ? 0 : 1), exponents_.end(),
                     [](std::uint8_t e) { return e == 0; });
}

Monomial Monomial::operator*(const Monomial& other) const {
  if (ambient() != other.ambient()) throw DimensionMismatch("monomial ambient dimensions differ");
  std::vector<std::uint8_t> e(ambient());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = checked_exponent(exponents_[i] + other.exponents_[i]);
  return Monomial(std::move(e));
}

std::size_t Monomial::hash() const {
  std::string_view bytes(reinterpret_cast<const char*>(exponents_.data()), exponents_.size());
  return std::hash<std::string_view>{}(bytes);
}

Polynomial::Polynomial(PrimeField field, std::size_t n, std::vector<Term> terms) : field_(field), n_(n) {
  for (const auto& t : terms) {
    if (t.monomial.ambient() != n) throw DimensionMismatch("term ambient dimension differs from polynomial");
  }
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.monomial < b.monomial; });
  for (auto& t : terms) {
    if (!terms_.empty() && terms_.back().monomial == t.monomial) {
      terms_.back().coeff = field_.add(terms_.back().coeff, t.coeff);
    } else {
      terms_.push_back(std::move(t));
    }
  }
  std::erase_if(terms_, [](const Term& t) { return t.coeff.is_zero(); });
}

Polynomial Polynomial::constant(PrimeField field, std::size_t n, FieldElement c) {
  return Polynomial(field, n, {Term{Monomial(n), c}});
}

int Polynomial::degree() const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, t.monomial.degree());
  return d;
}

FieldElement Polynomial::coefficient(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [](const Term& t, const Monomial& key) { return t.monomial < key; });
  if (it != terms_.end() && it->monomial == m) return it->coeff;
  return field_.zero();
}

Polynomial Polynomial::homogeneous_part(int degree) const {
  Polynomial out(field_, n_);
  for (const auto& t : terms_) {
    if (t.monomial.degree() == degree) out.terms_.push_back(t);
  }
  return out;
}

void Polynomial::check_compatible(const Polynomial& other) const {
  if (n_ != other.n_) throw DimensionMismatch("polynomial ambient dimensions differ");
  if (!(field_ == other.field_)) throw std::invalid_argument("polynomials over different fields");
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
  check_compatible(other);
  std::vector<Term> all(terms_.begin(), terms_.end());
  all.insert(all.end(), other.terms_.begin(), other.terms_.end());
  return Polynomial(field_, n_, std::move(all));
}

Polynomial Polynomial::operator-(const Polynomial& other) const {
  return *this + other.scaled(field_.neg(field_.one()));
}

Polynomial Polynomial::scaled(FieldElement c) const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) out.push_back({t.monomial, field_.mul(t.coeff, c)});
  return Polynomial(field_, n_, std::move(out));
}

bool Polynomial::operator==(const Polynomial& other) const {
  if (n_ != other.n_ || !(field_ == other.field_) || terms_.size() != other.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (terms_[i].monomial != other.terms_[i].monomial || terms_[i].coeff != other.terms_[i].coeff) return false;
  }
  return true;
}

Polynomial multiply(const Polynomial& poly, const Monomial& mono) {
  if (mono.ambient() != poly.ambient()) throw DimensionMismatch("monomial ambient dimension differs from polynomial");
  std::vector<Term> out;
  out.reserve(poly.terms().size());
  for (const auto& t : poly.terms()) out.push_back({t.monomial * mono, t.coeff});
  return Polynomial(poly.field(), poly.ambient(), std::move(out));
}

FieldElement evaluate(const Monomial& mono, const PrimeField& field, std::span<const FieldElement> point) {
  if (point.size() != mono.ambient()) throw DimensionMismatch("point length differs from ambient dimension");
  FieldElement v = field.one();
  for (std::size_t i = 0; i < point.size(); ++i) v = field.mul(v, field.pow(point[i], mono.exponent(i)));
  return v;
}

FieldElement evaluate(const Polynomial& poly, std::span<const FieldElement> point) {
  if (point.size() != poly.ambient()) throw DimensionMismatch("point length differs from ambient dimension");
  const auto& f = poly.field();
  FieldElement sum = f.zero();
  for (const auto& t : poly.terms()) sum = f.add(sum, f.mul(t.coeff, evaluate(t.monomial, f, point)));
  return sum;
}

Polynomial substitute_first(const Polynomial& poly, FieldElement value) {
  if (poly.ambient() == 0) throw DimensionMismatch("no variable to substitute");
  const auto& f = poly.field();
  const std::size_t m = poly.ambient() - 1;
  std::vector<Term> out;
  out.reserve(poly.terms().size());
  for (const auto& t : poly.terms()) {
    auto e = t.monomial.exponents();
    std::vector<std::uint8_t> rest(e.begin() + 1, e.end());
    out.push_back({Monomial(std::move(rest)), f.mul(t.coeff, f.pow(value, e[0]))});
  }
  return Polynomial(f, m, std::move(out));
}

bool is_univariate_in_first(const Polynomial& poly) {
  return std::all_of(poly.terms().begin(), poly.terms().end(),
                     [](const Term& t) { return t.monomial.is_pure_first(); });
}

std::vector<FieldElement> univariate_coefficients(const Polynomial& poly) {
  if (!is_univariate_in_first(poly)) throw std::invalid_argument("polynomial is not univariate in x1");
  std::vector<FieldElement> c(static_cast<std::size_t>(std::max(poly.degree(), 0)) + 1, poly.field().zero());
  for (const auto& t : poly.terms()) c[t.monomial.degree()] = t.coeff;
  return c;
}

std::weak_ordering XLOrder::compare(const Monomial& a, const Monomial& b) const {
  const bool pa = a.is_pure_first(), pb = b.is_pure_first();
  if (pa != pb) return pa ? std::weak_ordering::greater : std::weak_ordering::less;
  if (a.degree() != b.degree()) return a.degree() <=> b.degree();
  for (std::size_t i = a.ambient(); i-- > 0;) {
    if (a.exponent(i) != b.exponent(i)) return a.exponent(i) <=> b.exponent(i);
  }
  return std::weak_ordering::equivalent;
}

std::vector<Monomial> enumerate_monomials(std::size_t n, int D, const XLOrder& order) {
  if (n < 1 || D < 0) throw std::invalid_argument("enumerate_monomials needs n >= 1 and D >= 0");
  if (D > 255) throw std::out_of_range("degree bound exceeds exponent capacity");
  std::vector<Monomial> out;
  std::vector<std::uint8_t> current;
  current.reserve(n);
  append_monomials(n, D, current, out);
  std::sort(out.begin(), out.end(), order);
  return out;
}

std::vector<Monomial> enumerate_monomials(std::size_t n, int D) { return enumerate_monomials(n, D, XLOrder(n, D)); }

int PolySystem::max_degree() const {
  int d = -1;
  for (const auto& f : polys) d = std::max(d, f.degree());
  return d;
}

void PolySystem::validate() const {
  if (n < 1) throw std::invalid_argument("system needs at least one variable");
  if (overdeterminedness() < 1) throw std::invalid_argument("system needs more polynomials than variables (c >= 1)");
  for (const auto& f : polys) {
    if (f.ambient() != n) throw DimensionMismatch("polynomial ambient dimension differs from system");
    if (f.is_zero()) throw std::invalid_argument("system contains the zero polynomial");
    if (!(f.field() == field)) throw std::invalid_argument("polynomial over a different field");
  }
}

PolySystem random_system(std::size_t n, std::size_t c, int d, const PrimeField& field, std::uint64_t seed) {
  if (n < 1 || c < 1 || d < 2) throw std::invalid_argument("random_system needs n >= 1, c >= 1, d >= 2");
  std::mt19937_64 rng(seed);
  const auto monomials = enumerate_monomials(n, d);
  PolySystem sys{field, n, {}};
  sys.polys.reserve(n + c);
  while (sys.polys.size() < n + c) {
    std::vector<Term> terms;
    terms.reserve(monomials.size());
    for (const auto& m : monomials) terms.push_back({m, FieldElement{uniform_below(rng, field.modulus())}});
    Polynomial f(field, n, std::move(terms));
    if (f.degree() == d) sys.polys.push_back(std::move(f));
  }
  return sys;
}

PolySystem plant_solution(const PolySystem& system, std::span<const FieldElement> point) {
  if (point.size() != system.n) throw DimensionMismatch("planted point length differs from n");
  PolySystem out{system.field, system.n, {}};
  out.polys.reserve(system.polys.size());
  for (const auto& f : system.polys) {
    out.polys.push_back(f - Polynomial::constant(system.field, system.n, evaluate(f, point)));
  }
  return out;
}

}  // namespace xl
