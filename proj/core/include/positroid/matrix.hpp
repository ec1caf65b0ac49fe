#pragma once

#include <cstddef>
#include <vector>

#include "positroid/errors.hpp"
#include "positroid/rational.hpp"

namespace positroid {

// Dense exact-rational matrix. Sizes here are tiny (n <= 16 columns), so
// plain Gaussian elimination over the rationals is the right tool.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows, std::vector<Rational>(cols)) {}
  explicit RatMatrix(std::vector<std::vector<Rational>> a) : a_(std::move(a)) {
    rows_ = a_.size();
    cols_ = rows_ ? a_[0].size() : 0;
    for (const auto& row : a_)
      if (row.size() != cols_) throw Error("RatMatrix: ragged rows");
  }

  static RatMatrix identity(std::size_t n) {
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.a_[i][i] = 1;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& at(std::size_t r, std::size_t c) { return a_[r][c]; }
  const Rational& at(std::size_t r, std::size_t c) const { return a_[r][c]; }
  const std::vector<Rational>& row(std::size_t r) const { return a_[r]; }

  friend bool operator==(const RatMatrix& x, const RatMatrix& y) {
    return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
  }

  RatMatrix operator*(const RatMatrix& o) const {
    if (cols_ != o.rows_) throw Error("RatMatrix: size mismatch in product");
    RatMatrix out(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        if (a_[i][k].is_zero()) continue;
        for (std::size_t j = 0; j < o.cols_; ++j) {
          if (o.a_[k][j].is_zero()) continue;
          out.a_[i][j] += a_[i][k] * o.a_[k][j];
        }
      }
    return out;
  }

  // Reduced row echelon form. Throws RankError if the rows are dependent:
  // callers feed full-row-rank representatives and rely on that contract.
  RatMatrix rref(std::vector<std::size_t>* pivot_cols = nullptr) const {
    RatMatrix m = *this;
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
      std::size_t sel = r;
      while (sel < rows_ && m.a_[sel][c].is_zero()) ++sel;
      if (sel == rows_) continue;
      std::swap(m.a_[sel], m.a_[r]);
      Rational inv = m.a_[r][c].inverse();
      for (std::size_t j = c; j < cols_; ++j) m.a_[r][j] *= inv;
      for (std::size_t i = 0; i < rows_; ++i) {
        if (i == r || m.a_[i][c].is_zero()) continue;
        Rational f = m.a_[i][c];
        for (std::size_t j = c; j < cols_; ++j) m.a_[i][j] -= f * m.a_[r][j];
      }
      pivots.push_back(c);
      ++r;
    }
    if (r < rows_) throw RankError("rref: rank-deficient matrix");
    if (pivot_cols) *pivot_cols = pivots;
    return m;
  }

  Rational det() const {
    if (rows_ != cols_) throw Error("det: not square");
    RatMatrix m = *this;
    Rational d = 1;
    for (std::size_t c = 0; c < cols_; ++c) {
      std::size_t sel = c;
      while (sel < rows_ && m.a_[sel][c].is_zero()) ++sel;
      if (sel == rows_) return Rational(0);
      if (sel != c) {
        std::swap(m.a_[sel], m.a_[c]);
        d = -d;
      }
      d *= m.a_[c][c];
      Rational inv = m.a_[c][c].inverse();
      for (std::size_t i = c + 1; i < rows_; ++i) {
        if (m.a_[i][c].is_zero()) continue;
        Rational f = m.a_[i][c] * inv;
        for (std::size_t j = c; j < cols_; ++j) m.a_[i][j] -= f * m.a_[c][j];
      }
    }
    return d;
  }

  // Determinant of the square submatrix on all rows and the given columns.
  Rational maximal_minor(const std::vector<std::size_t>& cols) const {
    if (cols.size() != rows_) throw Error("maximal_minor: need #cols == #rows");
    return submatrix_det(index_range(rows_), cols);
  }

  Rational submatrix_det(const std::vector<std::size_t>& rs,
                         const std::vector<std::size_t>& cs) const {
    if (rs.size() != cs.size()) throw Error("submatrix_det: not square");
    RatMatrix m(rs.size(), cs.size());
    for (std::size_t i = 0; i < rs.size(); ++i)
      for (std::size_t j = 0; j < cs.size(); ++j) m.a_[i][j] = a_[rs[i]][cs[j]];
    return m.det();
  }

 private:
  static std::vector<std::size_t> index_range(std::size_t n) {
    std::vector<std::size_t> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = i;
    return v;
  }

  std::size_t rows_ = 0, cols_ = 0;
  std::vector<std::vector<Rational>> a_;
};

}  // namespace positroid
