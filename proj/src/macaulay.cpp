#include "xl/macaulay.hpp"

#include <algorithm>
#include <unordered_map>

namespace xl {

namespace {

std::size_t monomial_count(std::size_t n, int D) {
  // C(n + D, n), exact in 64 bits for every size the matrix could hold.
  std::size_t r = 1;
  for (std::size_t i = 1; i <= n; ++i) r = r * (static_cast<std::size_t>(D) + i) / i;
  return r;
}

void check_degree(const PolySystem& system, int D, DegreeCheck check) {
  const int needed = system.max_degree() + (check == DegreeCheck::Strict ? 1 : 0);
  if (D < needed || D < 0) throw DTooSmall(D, std::max(needed, 0));
}

}  // namespace

Polynomial MacaulayMatrix::row_polynomial(std::size_t i) const {
  std::vector<Term> terms;
  const auto row = entries.row(i);
  for (std::size_t j = 0; j < row.size(); ++j) {
    if (!row[j].is_zero()) terms.push_back({columns[j], row[j]});
  }
  return Polynomial(field, n, std::move(terms));
}

std::size_t macaulay_cells(const PolySystem& system, int D) {
  std::size_t rows = 0;
  for (const auto& f : system.polys) {
    if (!f.is_zero() && f.degree() <= D) rows += monomial_count(system.n, D - f.degree());
  }
  return rows * monomial_count(system.n, D);
}

MacaulayMatrix build_macaulay(const PolySystem& system, int D, DegreeCheck check) {
  check_degree(system, D, check);
  MacaulayMatrix m{system.field, system.n, D, enumerate_monomials(system.n, D), {}, {}};
  std::unordered_map<Monomial, std::size_t, MonomialHash> column_of;
  column_of.reserve(m.columns.size());
  for (std::size_t j = 0; j < m.columns.size(); ++j) column_of.emplace(m.columns[j], j);

  for (std::size_t i = 0; i < system.polys.size(); ++i) {
    const auto& f = system.polys[i];
    if (f.is_zero()) continue;
    for (auto& shift : enumerate_monomials(system.n, D - f.degree())) m.origins.push_back({i, std::move(shift)});
  }
  m.entries = DenseMatrix(m.origins.size(), m.columns.size());
  for (std::size_t r = 0; r < m.origins.size(); ++r) {
    const auto& origin = m.origins[r];
    auto row = m.entries.row(r);
    for (const auto& t : system.polys[origin.poly_index].terms()) {
      row[column_of.at(t.monomial * origin.shift)] = t.coeff;
    }
  }
  return m;
}

EliminationResult eliminate(const MacaulayMatrix& matrix, Execution exec) {
  DenseMatrix work = matrix.entries;
  auto reduction = row_reduce(work, matrix.field, exec);
  work.truncate(reduction.rank);
  EliminationResult out{matrix.field, matrix.n, matrix.D, matrix.pure_block_start(), reduction.rank,
                        std::move(work),  std::move(reduction.pivot_columns), {}};
  for (std::size_t i = 0; i < out.rank; ++i) {
    if (out.pivot_columns[i] >= out.pure_block_start) out.univariate_rows.push_back(i);
  }
  return out;
}

long chi_measured(const PolySystem& system, int D, Execution exec) {
  const auto m = build_macaulay(system, D, DegreeCheck::AllowEqual);
  const auto e = eliminate(m, exec);
  return static_cast<long>(m.columns.size()) - static_cast<long>(e.rank);
}

std::vector<Polynomial> detect_univariate(const EliminationResult& result) {
  std::vector<Polynomial> out;
  out.reserve(result.univariate_rows.size());
  for (std::size_t i : result.univariate_rows) {
    const auto row = result.echelon.row(i);
    std::vector<Term> terms;
    for (std::size_t j = result.pure_block_start; j < row.size(); ++j) {
      if (row[j].is_zero()) continue;
      std::vector<std::uint8_t> e(result.n, 0);
      e[0] = static_cast<std::uint8_t>(j - result.pure_block_start);
      terms.push_back({Monomial(std::move(e)), row[j]});
    }
    out.emplace_back(result.field, result.n, std::move(terms));
  }
  return out;
}

std::vector<FieldElement> univariate_roots(const Polynomial& poly) {
  if (poly.is_zero()) throw std::invalid_argument("univariate_roots of the zero polynomial");
  const auto coeffs = univariate_coefficients(poly);
  const auto& f = poly.field();
  std::vector<FieldElement> roots;
  for (std::uint32_t x = 0; x < f.modulus(); ++x) {
    FieldElement acc = f.zero();
    for (std::size_t k = coeffs.size(); k-- > 0;) acc = f.add(f.mul(acc, FieldElement{x}), coeffs[k]);
    if (acc.is_zero()) roots.push_back(FieldElement{x});
  }
  return roots;
}

}  // namespace xl
