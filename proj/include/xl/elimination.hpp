#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "xl/field.hpp"

namespace xl {

/// Row-major dense matrix over GF(p).
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  std::span<FieldElement> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  std::span<const FieldElement> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
  FieldElement& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  FieldElement at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  void swap_rows(std::size_t a, std::size_t b);
  /// Keeps the first `rows` rows.
  void truncate(std::size_t rows);

  bool operator==(const DenseMatrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<FieldElement> data_;
};

enum class Execution { Serial, Parallel };

struct RowReduction {
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_columns;  // ascending, one per nonzero row
};

/// Reduced row echelon form in place, pivots searched left to right. Rows
/// [0, rank) hold the basis; the rest are zero. The RREF of a row space is
/// unique, so both paths produce identical matrices.
RowReduction row_reduce(DenseMatrix& m, const PrimeField& field, Execution exec = Execution::Parallel);

/// Textbook Gauss-Jordan, one pivot at a time over all rows.
RowReduction row_reduce_serial(DenseMatrix& m, const PrimeField& field);

/// Forward elimination then back substitution, each pivot step splitting
/// the row updates across OpenMP threads.
RowReduction row_reduce_parallel(DenseMatrix& m, const PrimeField& field);

}  // namespace xl
