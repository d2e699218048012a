#include "xl/elimination.hpp"

#include <algorithm>
#include <cstdint>

namespace xl {

namespace {

// row[j] -= factor * pivot[j] for j in [from, cols).
inline void axpy_tail(std::span<FieldElement> row, std::span<const FieldElement> pivot, std::uint32_t factor,
                      std::size_t from, const PrimeField& field) {
  const std::uint32_t p = field.modulus();
  const std::uint64_t neg = p - factor;
  for (std::size_t j = from; j < row.size(); ++j) {
    row[j] = FieldElement{field.reduce(row[j].value() + neg * pivot[j].value())};
  }
}

inline void scale_tail(std::span<FieldElement> row, FieldElement s, std::size_t from, const PrimeField& field) {
  for (std::size_t j = from; j < row.size(); ++j) row[j] = field.mul(row[j], s);
}

}  // namespace

void DenseMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  std::swap_ranges(data_.begin() + a * cols_, data_.begin() + (a + 1) * cols_, data_.begin() + b * cols_);
}

void DenseMatrix::truncate(std::size_t rows) {
  rows_ = std::min(rows, rows_);
  data_.resize(rows_ * cols_);
}

RowReduction row_reduce_serial(DenseMatrix& m, const PrimeField& field) {
  RowReduction out;
  std::size_t r = 0;
  for (std::size_t col = 0; col < m.cols() && r < m.rows(); ++col) {
    std::size_t pivot = r;
    while (pivot < m.rows() && m.at(pivot, col).is_zero()) ++pivot;
    if (pivot == m.rows()) continue;
    m.swap_rows(r, pivot);
    scale_tail(m.row(r), field.inv(m.at(r, col)), col, field);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m.at(i, col).is_zero()) continue;
      axpy_tail(m.row(i), m.row(r), m.at(i, col).value(), col, field);
    }
    out.pivot_columns.push_back(col);
    ++r;
  }
  out.rank = r;
  return out;
}

RowReduction row_reduce_parallel(DenseMatrix& m, const PrimeField& field) {
  RowReduction out;
  const std::size_t rows = m.rows();
  std::size_t r = 0;
  for (std::size_t col = 0; col < m.cols() && r < rows; ++col) {
    std::size_t pivot = r;
    while (pivot < rows && m.at(pivot, col).is_zero()) ++pivot;
    if (pivot == rows) continue;
    m.swap_rows(r, pivot);
    scale_tail(m.row(r), field.inv(m.at(r, col)), col, field);
    const std::span<const FieldElement> prow = m.row(r);
    const auto first = static_cast<std::ptrdiff_t>(r + 1);
    const auto last = static_cast<std::ptrdiff_t>(rows);
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = first; i < last; ++i) {
      auto row = m.row(static_cast<std::size_t>(i));
      if (!row[col].is_zero()) axpy_tail(row, prow, row[col].value(), col, field);
    }
    out.pivot_columns.push_back(col);
    ++r;
  }
  out.rank = r;

  for (std::size_t k = r; k-- > 0;) {
    const std::size_t col = out.pivot_columns[k];
    const std::span<const FieldElement> prow = m.row(k);
    const auto last = static_cast<std::ptrdiff_t>(k);
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < last; ++i) {
      auto row = m.row(static_cast<std::size_t>(i));
      if (!row[col].is_zero()) axpy_tail(row, prow, row[col].value(), col, field);
    }
  }
  return out;
}

RowReduction row_reduce(DenseMatrix& m, const PrimeField& field, Execution exec) {
  return exec == Execution::Serial ? row_reduce_serial(m, field) : row_reduce_parallel(m, field);
}

}  // namespace xl
