#pragma once

#include <string>
#include <vector>

#include "prol/scalar.hpp"

namespace prol {

/// Dense matrix of exact scalars with optional column labels.
class ExactMatrix {
 public:
  ExactMatrix() = default;
  ExactMatrix(Field field, std::size_t rows, std::size_t cols);
  ExactMatrix(Field field, std::vector<std::vector<Scalar>> rows, std::size_t cols);

  static ExactMatrix identity(Field field, std::size_t n);

  Field field() const { return field_; }
  std::size_t rows() const { return data_.size(); }
  std::size_t cols() const { return cols_; }
  const Scalar& at(std::size_t r, std::size_t c) const { return data_[r][c]; }
  Scalar& at(std::size_t r, std::size_t c) { return data_[r][c]; }
  const std::vector<Scalar>& row(std::size_t r) const { return data_[r]; }
  void push_row(std::vector<Scalar> row);

  std::vector<std::string> col_labels;
  std::vector<std::string> row_labels;

  friend bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
    return a.field_ == b.field_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  Field field_{};
  std::size_t cols_ = 0;
  std::vector<std::vector<Scalar>> data_;
};

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);
std::vector<Scalar> operator*(const ExactMatrix& a, const std::vector<Scalar>& v);

/// Reduced row echelon form; pivots receives the pivot column of each nonzero row.
ExactMatrix rref(const ExactMatrix& m, std::vector<std::size_t>* pivots = nullptr);
/// Rank via fraction-free (Bareiss) elimination over Q, plain elimination over F_p.
std::size_t rank(const ExactMatrix& m);
/// Basis of {v : M v = 0}, one vector per free column (that entry 1, other free entries 0).
std::vector<std::vector<Scalar>> kernel_basis(const ExactMatrix& m);
/// Matrix whose columns are the given vectors.
ExactMatrix from_columns(Field field, const std::vector<std::vector<Scalar>>& cols, std::size_t height);

}  // namespace prol
