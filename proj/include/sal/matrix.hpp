#ifndef SAL_MATRIX_HPP
#define SAL_MATRIX_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "sal/rational.hpp"

namespace sal {

using Vec = std::vector<Rational>;

Vec zero_vec(std::size_t dim);
bool is_zero_vec(const Vec& v);
Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec scale(const Rational& c, const Vec& v);
Rational dot(const Vec& a, const Vec& b);

// Dense row-major matrix of exact rationals.
class Matrix {
public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n);
  static Matrix zero(std::size_t rows, std::size_t cols);
  // scale * (n_value * I - all-ones) of the given size; the Gram shape of
  // the Killing form (size and n_value differ there).
  static Matrix scaled_n_identity_minus_ones(std::size_t size, const Rational& n_value,
                                             const Rational& scale);
  static Matrix from_rows(const std::vector<Vec>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vec row(std::size_t r) const;
  Vec col(std::size_t c) const;

  bool is_square() const { return rows_ == cols_; }
  bool is_symmetric() const;

  Matrix transposed() const;
  Matrix operator*(const Matrix& o) const;
  Vec apply(const Vec& x) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  bool operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }

  Rational trace() const;

private:
  std::size_t rows_, cols_;
  std::vector<Rational> data_;
};

struct RrefResult {
  Matrix rref;
  std::vector<std::size_t> pivot_cols;
  std::size_t rank() const { return pivot_cols.size(); }
};

// Reduced row-echelon form over the rationals. Elimination runs fraction-free
// (Bareiss-style on a row-scaled integer copy); pivots are normalized to 1
// only at the end.
RrefResult rref(const Matrix& m);

// Basis of the null space; size = cols - rank. Each vector has a 1 in its
// free coordinate.
std::vector<Vec> kernel_basis(const Matrix& m);

// Exact determinant by Bareiss fraction-free elimination.
Rational determinant(const Matrix& m);

// Exact sign tests on leading principal minors; requires square symmetric
// input. Equivalent to positive definiteness over any real-closed extension.
bool is_positive_definite(const Matrix& m);

// kernel_basis(m - lambda*I).
std::vector<Vec> eigenspace(const Matrix& m, const Rational& lambda);

// Row space tracked in reduced echelon form, for rank/membership/ideal work.
class EchelonBasis {
public:
  explicit EchelonBasis(std::size_t ambient_dim) : dim_(ambient_dim) {}

  std::size_t dim() const { return dim_; }
  std::size_t rank() const { return rows_.size(); }
  const std::vector<Vec>& rows() const { return rows_; }

  // Reduces v against the current rows; returns the residue.
  Vec reduce(const Vec& v) const;
  bool contains(const Vec& v) const { return is_zero_vec(reduce(v)); }
  // Inserts v if independent; returns true when the rank grew.
  bool insert(const Vec& v);

private:
  std::size_t dim_;
  std::vector<Vec> rows_;          // reduced echelon rows, pivot = 1
  std::vector<std::size_t> pivots_;  // pivot column of each row, increasing
};

EchelonBasis span_of(const std::vector<Vec>& vs, std::size_t dim);

}  // namespace sal

#endif
