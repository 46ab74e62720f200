#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "rirformer/errors.hpp"

namespace rirformer {

// Dense row-major matrix of RIRs: one row per array point, one column per
// time sample.
template <typename T>
struct Matrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<T> values;

  Matrix() = default;
  Matrix(std::size_t r, std::size_t c, T fill = T(0))
      : rows(r), cols(c), values(r * c, fill) {}
  Matrix(std::size_t r, std::size_t c, std::vector<T> v)
      : rows(r), cols(c), values(std::move(v)) {
    if (values.size() != r * c) throw DimensionError("matrix value count mismatch");
  }

  std::span<T> row(std::size_t i) { return {values.data() + i * cols, cols}; }
  std::span<const T> row(std::size_t i) const { return {values.data() + i * cols, cols}; }
  T& operator()(std::size_t r, std::size_t c) { return values[r * cols + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return values[r * cols + c]; }

  friend bool operator==(const Matrix&, const Matrix&) = default;
};

template <typename To, typename From>
Matrix<To> matrix_cast(const Matrix<From>& m) {
  Matrix<To> out(m.rows, m.cols);
  for (std::size_t i = 0; i < m.values.size(); ++i) out.values[i] = To(m.values[i]);
  return out;
}

template <typename T>
Matrix<T> select_rows(const Matrix<T>& m, std::span<const std::size_t> rows) {
  Matrix<T> out(rows.size(), m.cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto src = m.row(rows[i]);
    std::copy(src.begin(), src.end(), out.row(i).begin());
  }
  return out;
}

}  // namespace rirformer
