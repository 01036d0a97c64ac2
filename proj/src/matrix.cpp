#include "prol/matrix.hpp"

#include <stdexcept>

namespace prol {

ExactMatrix::ExactMatrix(Field field, std::size_t rows, std::size_t cols)
    : field_(field), cols_(cols), data_(rows, std::vector<Scalar>(cols, Scalar::zero(field))) {}

ExactMatrix::ExactMatrix(Field field, std::vector<std::vector<Scalar>> rows, std::size_t cols)
    : field_(field), cols_(cols), data_(std::move(rows)) {
  for (const auto& r : data_) {
    if (r.size() != cols_) throw std::invalid_argument("ragged matrix");
  }
}

ExactMatrix ExactMatrix::identity(Field field, std::size_t n) {
  ExactMatrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar::one(field);
  return m;
}

void ExactMatrix::push_row(std::vector<Scalar> row) {
  if (row.size() != cols_) throw std::invalid_argument("row has the wrong length");
  data_.push_back(std::move(row));
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix dimensions do not match");
  ExactMatrix out(a.field(), a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a.at(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        if (!b.at(k, j).is_zero()) out.at(i, j) += a.at(i, k) * b.at(k, j);
      }
    }
  }
  out.row_labels = a.row_labels;
  out.col_labels = b.col_labels;
  return out;
}

std::vector<Scalar> operator*(const ExactMatrix& a, const std::vector<Scalar>& v) {
  if (a.cols() != v.size()) throw std::invalid_argument("vector length does not match");
  std::vector<Scalar> out(a.rows(), Scalar::zero(a.field()));
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (!a.at(i, k).is_zero() && !v[k].is_zero()) out[i] += a.at(i, k) * v[k];
    }
  }
  return out;
}

ExactMatrix rref(const ExactMatrix& m, std::vector<std::size_t>* pivots) {
  ExactMatrix a = m;
  std::vector<std::size_t> piv;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t p = r;
    while (p < a.rows() && a.at(p, c).is_zero()) ++p;
    if (p == a.rows()) continue;
    if (p != r) {
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a.at(p, j), a.at(r, j));
    }
    const Scalar inv = a.at(r, c).inverse();
    for (std::size_t j = c; j < a.cols(); ++j) a.at(r, j) *= inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || a.at(i, c).is_zero()) continue;
      const Scalar f = a.at(i, c);
      for (std::size_t j = c; j < a.cols(); ++j) {
        if (!a.at(r, j).is_zero()) a.at(i, j) -= f * a.at(r, j);
      }
    }
    piv.push_back(c);
    ++r;
  }
  if (pivots) *pivots = std::move(piv);
  return a;
}

namespace {

/// Bareiss elimination over integers after clearing denominators row by row.
std::size_t bareiss_rank(const ExactMatrix& m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::vector<std::vector<mpz_class>> a(rows, std::vector<mpz_class>(cols));
  for (std::size_t i = 0; i < rows; ++i) {
    mpz_class den = 1;
    for (std::size_t j = 0; j < cols; ++j) {
      mpq_class q = m.at(i, j).to_rational();
      mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den_mpz_t());
    }
    for (std::size_t j = 0; j < cols; ++j) {
      mpq_class q = m.at(i, j).to_rational() * den;
      a[i][j] = q.get_num();
    }
  }
  mpz_class prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        mpz_class v = a[r][c] * a[i][j] - a[i][c] * a[r][j];
        if (!mpz_divisible_p(v.get_mpz_t(), prev.get_mpz_t())) throw std::logic_error("Bareiss division not exact");
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        a[i][j] = std::move(v);
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    ++r;
  }
  return r;
}

}  // namespace

std::size_t rank(const ExactMatrix& m) {
  if (m.field().is_rational()) return bareiss_rank(m);
  std::vector<std::size_t> piv;
  rref(m, &piv);
  return piv.size();
}

std::vector<std::vector<Scalar>> kernel_basis(const ExactMatrix& m) {
  std::vector<std::size_t> piv;
  const ExactMatrix a = rref(m, &piv);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : piv) is_pivot[c] = true;
  std::vector<std::vector<Scalar>> out;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    std::vector<Scalar> v(m.cols(), Scalar::zero(m.field()));
    v[f] = Scalar::one(m.field());
    for (std::size_t r = 0; r < piv.size(); ++r) v[piv[r]] = -a.at(r, f);
    out.push_back(std::move(v));
  }
  return out;
}

ExactMatrix from_columns(Field field, const std::vector<std::vector<Scalar>>& cols, std::size_t height) {
  ExactMatrix out(field, height, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != height) throw std::invalid_argument("column has the wrong length");
    for (std::size_t i = 0; i < height; ++i) out.at(i, j) = cols[j][i];
  }
  return out;
}

}  // namespace prol
