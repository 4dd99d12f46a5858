#include "zerok/matrix.hpp"

#include <sstream>

#include "zerok/errors.hpp"

namespace zerok {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Int& IntMatrix::at(std::size_t i, std::size_t j) {
  if (i >= rows_ || j >= cols_) throw input_error("matrix index out of range");
  return data_[i * cols_ + j];
}

const Int& IntMatrix::at(std::size_t i, std::size_t j) const {
  if (i >= rows_ || j >= cols_) throw input_error("matrix index out of range");
  return data_[i * cols_ + j];
}

bool IntMatrix::is_zero() const {
  for (const auto& x : data_)
    if (x != 0) return false;
  return true;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) std::swap(at(a, j), at(b, j));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < rows_; ++i) std::swap(at(i, a), at(i, b));
}

void IntMatrix::scale_row(std::size_t a, const Int& c) {
  for (std::size_t j = 0; j < cols_; ++j) at(a, j) *= c;
}

void IntMatrix::scale_col(std::size_t a, const Int& c) {
  for (std::size_t i = 0; i < rows_; ++i) at(i, a) *= c;
}

void IntMatrix::add_row(std::size_t a, std::size_t b, const Int& c) {
  for (std::size_t j = 0; j < cols_; ++j) at(a, j) += c * at(b, j);
}

void IntMatrix::add_col(std::size_t a, std::size_t b, const Int& c) {
  for (std::size_t i = 0; i < rows_; ++i) at(i, a) += c * at(i, b);
}

IntMatrix IntMatrix::col_slice(std::size_t j0, std::size_t j1) const {
  if (j0 > j1 || j1 > cols_) throw input_error("bad column slice");
  IntMatrix m(rows_, j1 - j0);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = j0; j < j1; ++j) m.at(i, j - j0) = at(i, j);
  return m;
}

IntMatrix IntMatrix::row_slice(std::size_t i0, std::size_t i1) const {
  if (i0 > i1 || i1 > rows_) throw input_error("bad row slice");
  IntMatrix m(i1 - i0, cols_);
  for (std::size_t i = i0; i < i1; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m.at(i - i0, j) = at(i, j);
  return m;
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i == 0 ? "[" : " ");
    for (std::size_t j = 0; j < cols_; ++j)
      os << (j ? " " : "[") << at(i, j).str();
    os << "]" << (i + 1 == rows_ ? "]" : "\n");
  }
  if (rows_ == 0) os << "[]";
  return os.str();
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw input_error("matrix product shape mismatch");
  IntMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Int& aik = a.at(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c.at(i, j) += aik * b.at(k, j);
    }
  return c;
}

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw input_error("matrix sum shape mismatch");
  IntMatrix c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c.at(i, j) = a.at(i, j) + b.at(i, j);
  return c;
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw input_error("matrix difference shape mismatch");
  IntMatrix c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c.at(i, j) = a.at(i, j) - b.at(i, j);
  return c;
}

Int determinant(const IntMatrix& a) {
  if (a.rows() != a.cols()) throw input_error("determinant of non-square matrix");
  std::size_t n = a.rows();
  if (n == 0) return 1;
  // Bareiss fraction-free elimination; every division below is exact.
  IntMatrix m = a;
  Int prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m.at(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && m.at(p, k) == 0) ++p;
      if (p == n) return 0;
      m.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        m.at(i, j) = (m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j)) / prev;
    prev = m.at(k, k);
  }
  return sign > 0 ? m.at(n - 1, n - 1) : Int(-m.at(n - 1, n - 1));
}

}  // namespace zerok
