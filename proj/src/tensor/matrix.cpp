#include <stdexcept>

#include "lgkit/tensor.hpp"

namespace lgkit {

Matrix::Matrix(int rows, int cols)
    : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols)) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimension");
}

Matrix::Matrix(int rows, int cols, std::vector<RationalFn> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
  if (data_.size() != static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols)) {
    throw std::invalid_argument("matrix data does not match its shape");
  }
}

Matrix Matrix::identity(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = RationalFn(1);
  return m;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) {
    throw std::invalid_argument("cannot multiply " + std::to_string(a.rows_) + "x" + std::to_string(a.cols_) +
                                " by " + std::to_string(b.rows_) + "x" + std::to_string(b.cols_));
  }
  Matrix c(a.rows_, b.cols_);
  for (int i = 0; i < a.rows_; ++i) {
    for (int k = 0; k < a.cols_; ++k) {
      const RationalFn& x = a.at(i, k);
      if (x.is_zero()) continue;
      for (int j = 0; j < b.cols_; ++j) {
        const RationalFn& y = b.at(k, j);
        if (!y.is_zero()) c.at(i, j) += x * y;
      }
    }
  }
  return c;
}

Matrix operator*(const RationalFn& s, const Matrix& a) {
  Matrix c = a;
  for (auto& x : c.data_) x = s * x;
  return c;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix c(a.rows_ * b.rows_, a.cols_ * b.cols_);
  for (int i = 0; i < a.rows_; ++i) {
    for (int j = 0; j < a.cols_; ++j) {
      const RationalFn& x = a.at(i, j);
      if (x.is_zero()) continue;
      for (int k = 0; k < b.rows_; ++k) {
        for (int l = 0; l < b.cols_; ++l) {
          const RationalFn& y = b.at(k, l);
          if (!y.is_zero()) c.at(i * b.rows_ + k, j * b.cols_ + l) = x * y;
        }
      }
    }
  }
  return c;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

}  // namespace lgkit
