#pragma once

// Dense integer matrices with arbitrary-precision entries.  Small and
// boring on purpose: the matrices arising from resolutions are modest in
// size, and exactness matters more than speed.

#include <cstddef>
#include <string>
#include <vector>

#include "zerok/integers.hpp"

namespace zerok {

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);

  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Int& at(std::size_t i, std::size_t j);
  const Int& at(std::size_t i, std::size_t j) const;

  bool operator==(const IntMatrix&) const = default;

  bool is_zero() const;
  IntMatrix transpose() const;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  void scale_row(std::size_t a, const Int& c);
  void scale_col(std::size_t a, const Int& c);
  // row[a] += c * row[b]
  void add_row(std::size_t a, std::size_t b, const Int& c);
  // col[a] += c * col[b]
  void add_col(std::size_t a, std::size_t b, const Int& c);

  // Columns j0..j1-1 as a new matrix.
  IntMatrix col_slice(std::size_t j0, std::size_t j1) const;
  // Rows i0..i1-1 as a new matrix.
  IntMatrix row_slice(std::size_t i0, std::size_t i1) const;

  std::string to_string() const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Int> data_;  // row major
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);

// Exact determinant by Bareiss elimination (square input).
Int determinant(const IntMatrix& a);

}  // namespace zerok
