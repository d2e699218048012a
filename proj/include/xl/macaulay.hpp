#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "xl/elimination.hpp"
#include "xl/polynomial.hpp"

namespace xl {

class DTooSmall : public std::invalid_argument {
 public:
  DTooSmall(int D, int needed)
      : std::invalid_argument("D=" + std::to_string(D) + " too small; need D >= " + std::to_string(needed)) {}
};

struct RowOrigin {
  std::size_t poly_index;
  Monomial shift;
};

/// Rows are the products m * f_i with deg(m) <= D - deg(f_i); columns are
/// the monomials of degree <= D in XLOrder. The row space is V_D.
struct MacaulayMatrix {
  PrimeField field;
  std::size_t n;
  int D;
  std::vector<Monomial> columns;
  DenseMatrix entries;
  std::vector<RowOrigin> origins;

  /// Index of the column for the constant 1; columns from here on are
  /// 1, x_1, ..., x_1^D.
  std::size_t pure_block_start() const { return columns.size() - static_cast<std::size_t>(D) - 1; }
  Polynomial row_polynomial(std::size_t i) const;
};

enum class DegreeCheck {
  Strict,      // D >= 1 + max deg f_i, the XL input condition
  AllowEqual,  // D >= max deg f_i
};

MacaulayMatrix build_macaulay(const PolySystem& system, int D, DegreeCheck check = DegreeCheck::Strict);

/// rows * columns of the matrix build_macaulay would produce.
std::size_t macaulay_cells(const PolySystem& system, int D);

/// Reduced row echelon basis of V_D. Rows whose pivot falls in the pure
/// x_1 block are zero on every mixed column: these are the univariate ones.
struct EliminationResult {
  PrimeField field;
  std::size_t n;
  int D;
  std::size_t pure_block_start;
  std::size_t rank;
  DenseMatrix echelon;  // rank x columns
  std::vector<std::size_t> pivot_columns;
  std::vector<std::size_t> univariate_rows;
};

EliminationResult eliminate(const MacaulayMatrix& matrix, Execution exec = Execution::Parallel);

/// C(n+D, n) - rank(V_D). Defined from D = max deg f_i on, one below the
/// XL input condition.
long chi_measured(const PolySystem& system, int D, Execution exec = Execution::Parallel);

/// The univariate rows of the echelon basis as polynomials in x_1 (ambient n).
std::vector<Polynomial> detect_univariate(const EliminationResult& result);

/// Exact roots in GF(p) by evaluating at every field element; ascending.
std::vector<FieldElement> univariate_roots(const Polynomial& poly);

}  // namespace xl
