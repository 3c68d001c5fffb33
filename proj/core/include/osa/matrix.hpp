// Copyright 2026 The osa-sim Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef OSA_MATRIX_HPP
#define OSA_MATRIX_HPP

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <vector>

namespace osa {

/// Small dense row-major matrix of doubles. Weight and index matrices in this
/// library are K x N with K, N in the tens, so no linear-algebra package is
/// pulled in for them.
class Matrix {
 public:
  Matrix() = default;

  Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), values_(rows * cols, fill) {}

  static Matrix from_rows(std::initializer_list<std::initializer_list<double>> rows) {
    Matrix m;
    m.rows_ = rows.size();
    m.cols_ = rows.size() == 0 ? 0 : rows.begin()->size();
    m.values_.reserve(m.rows_ * m.cols_);
    for (const auto& row : rows) {
      if (row.size() != m.cols_) {
        throw std::invalid_argument("Matrix::from_rows: ragged rows");
      }
      m.values_.insert(m.values_.end(), row.begin(), row.end());
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return values_.empty(); }

  double& operator()(std::size_t r, std::size_t c) { return values_[r * cols_ + c]; }
  double operator()(std::size_t r, std::size_t c) const { return values_[r * cols_ + c]; }

  double at(std::size_t r, std::size_t c) const {
    if (r >= rows_ || c >= cols_) throw std::out_of_range("Matrix::at: index out of range");
    return values_[r * cols_ + c];
  }

  std::vector<double> row(std::size_t r) const {
    return std::vector<double>(values_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                               values_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
  }

  void set_row(std::size_t r, const std::vector<double>& values) {
    if (values.size() != cols_) throw std::invalid_argument("Matrix::set_row: size mismatch");
    for (std::size_t c = 0; c < cols_; ++c) (*this)(r, c) = values[c];
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.values_ == b.values_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> values_;
};

}  // namespace osa

#endif  // OSA_MATRIX_HPP
