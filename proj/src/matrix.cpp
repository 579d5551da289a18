#include "sal/matrix.hpp"

#include <algorithm>
#include <ostream>

#include "sal/error.hpp"

namespace sal {

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational Rational::parse(const std::string& text) {
  auto fail = [&] { throw Error(ErrorCode::ParseError, "not a rational: '" + text + "'"); };
  if (text.empty()) fail();
  std::string num = text, den = "1";
  if (auto slash = text.find('/'); slash != std::string::npos) {
    num = text.substr(0, slash);
    den = text.substr(slash + 1);
  }
  auto is_int = [](const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9') return false;
    return true;
  };
  if (!is_int(num) || !is_int(den)) fail();
  if (num[0] == '+') num.erase(0, 1);  // mpz_set_str rejects a leading '+'
  if (den[0] == '+') den.erase(0, 1);
  mpz_class n(num), d(den);
  if (sgn(d) == 0) fail();
  return Rational(n, d);
}

Vec zero_vec(std::size_t dim) { return Vec(dim); }

bool is_zero_vec(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x.is_zero(); });
}

Vec add(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw Error(ErrorCode::DimMismatch, "vector add");
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Vec sub(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw Error(ErrorCode::DimMismatch, "vector sub");
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Vec scale(const Rational& c, const Vec& v) {
  Vec r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = c * v[i];
  return r;
}

Rational dot(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw Error(ErrorCode::DimMismatch, "dot");
  Rational s;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!a[i].is_zero() && !b[i].is_zero()) s += a[i] * b[i];
  return s;
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Matrix Matrix::zero(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }

Matrix Matrix::scaled_n_identity_minus_ones(std::size_t size, const Rational& n_value,
                                            const Rational& scale) {
  Matrix m(size, size);
  Rational diag = scale * (n_value - 1);
  Rational off = -scale;
  for (std::size_t i = 0; i < size; ++i)
    for (std::size_t j = 0; j < size; ++j) m.at(i, j) = (i == j) ? diag : off;
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vec>& rows) {
  if (rows.empty()) return Matrix(0, 0);
  Matrix m(rows.size(), rows[0].size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.cols()) throw Error(ErrorCode::DimMismatch, "ragged rows");
    for (std::size_t c = 0; c < m.cols(); ++c) m.at(r, c) = rows[r][c];
  }
  return m;
}

Vec Matrix::row(std::size_t r) const {
  Vec v(cols_);
  for (std::size_t c = 0; c < cols_; ++c) v[c] = at(r, c);
  return v;
}

Vec Matrix::col(std::size_t c) const {
  Vec v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = at(r, c);
  return v;
}

bool Matrix::is_symmetric() const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i + 1; j < cols_; ++j)
      if (at(i, j) != at(j, i)) return false;
  return true;
}

Matrix Matrix::transposed() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
  return t;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw Error(ErrorCode::DimMismatch, "matrix product");
  Matrix p(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& a = at(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) {
        const Rational& b = o.at(k, j);
        if (!b.is_zero()) p.at(i, j) += a * b;
      }
    }
  return p;
}

Vec Matrix::apply(const Vec& x) const {
  if (cols_ != x.size()) throw Error(ErrorCode::DimMismatch, "matrix apply");
  Vec y(rows_);
  for (std::size_t j = 0; j < cols_; ++j) {
    if (x[j].is_zero()) continue;
    for (std::size_t i = 0; i < rows_; ++i) {
      const Rational& a = at(i, j);
      if (!a.is_zero()) y[i] += a * x[j];
    }
  }
  return y;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw Error(ErrorCode::DimMismatch, "matrix add");
  Matrix r(rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] + o.data_[i];
  return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw Error(ErrorCode::DimMismatch, "matrix sub");
  Matrix r(rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] - o.data_[i];
  return r;
}

Rational Matrix::trace() const {
  if (!is_square()) throw Error(ErrorCode::NonSquare, "trace");
  Rational t;
  for (std::size_t i = 0; i < rows_; ++i) t += at(i, i);
  return t;
}

namespace {

// Row-scales a rational matrix to integers. Returns the integer grid and the
// per-row scale factor s_r (row r of the result equals s_r times row r of m).
struct IntRows {
  std::vector<std::vector<mpz_class>> a;
  std::vector<mpz_class> scale;
};

IntRows to_integer_rows(const Matrix& m) {
  IntRows out;
  out.a.resize(m.rows());
  out.scale.resize(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    mpz_class l = 1;
    for (std::size_t c = 0; c < m.cols(); ++c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m.at(r, c).den().get_mpz_t());
    out.scale[r] = l;
    out.a[r].resize(m.cols());
    for (std::size_t c = 0; c < m.cols(); ++c)
      out.a[r][c] = m.at(r, c).num() * (l / m.at(r, c).den());
  }
  return out;
}

}  // namespace

RrefResult rref(const Matrix& m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  IntRows w = to_integer_rows(m);
  auto& a = w.a;

  std::vector<std::size_t> pivot_cols;
  mpz_class prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && sgn(a[p][c]) == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    const mpz_class pivot = a[r][c];
    // Fraction-free Gauss-Jordan step: eliminates column c from every other
    // row; each surviving entry stays an exact integer after dividing by the
    // previous pivot.
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r) continue;
      const mpz_class f = a[i][c];
      for (std::size_t j = 0; j < cols; ++j) {
        mpz_class t = a[i][j] * pivot - f * a[r][j];
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        a[i][j] = t;
      }
    }
    prev = pivot;
    pivot_cols.push_back(c);
    ++r;
  }

  Matrix out(rows, cols);
  for (std::size_t i = 0; i < r; ++i) {
    const mpz_class& lead = a[i][pivot_cols[i]];
    for (std::size_t j = 0; j < cols; ++j)
      if (sgn(a[i][j]) != 0) out.at(i, j) = Rational(a[i][j], lead);
  }
  return {std::move(out), std::move(pivot_cols)};
}

std::vector<Vec> kernel_basis(const Matrix& m) {
  RrefResult r = rref(m);
  const std::size_t cols = m.cols();
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t c : r.pivot_cols) is_pivot[c] = true;

  std::vector<Vec> basis;
  for (std::size_t freec = 0; freec < cols; ++freec) {
    if (is_pivot[freec]) continue;
    Vec v(cols);
    v[freec] = 1;
    for (std::size_t i = 0; i < r.pivot_cols.size(); ++i)
      v[r.pivot_cols[i]] = -r.rref.at(i, freec);
    basis.push_back(std::move(v));
  }
  return basis;
}

Rational determinant(const Matrix& m) {
  if (!m.is_square()) throw Error(ErrorCode::NonSquare, "determinant");
  const std::size_t n = m.rows();
  if (n == 0) return Rational(1);

  IntRows w = to_integer_rows(m);
  auto& a = w.a;
  mpz_class denom = 1;
  for (const auto& s : w.scale) denom *= s;

  int sign = 1;
  mpz_class prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t p = k;
    while (p < n && sgn(a[p][k]) == 0) ++p;
    if (p == n) return Rational(0);
    if (p != k) {
      std::swap(a[p], a[k]);
      sign = -sign;
    }
    const mpz_class pivot = a[k][k];
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        mpz_class t = a[i][j] * pivot - a[i][k] * a[k][j];
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        a[i][j] = t;
      }
      a[i][k] = 0;
    }
    prev = pivot;
  }
  mpz_class det = a[n - 1][n - 1];
  if (sign < 0) det = -det;
  return Rational(det, denom);
}

bool is_positive_definite(const Matrix& m) {
  if (!m.is_square()) throw Error(ErrorCode::NonSquare, "is_positive_definite");
  if (!m.is_symmetric()) throw Error(ErrorCode::NonSymmetric, "is_positive_definite");
  for (std::size_t k = 1; k <= m.rows(); ++k) {
    Matrix lead(k, k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) lead.at(i, j) = m.at(i, j);
    if (determinant(lead).sign() <= 0) return false;
  }
  return true;
}

std::vector<Vec> eigenspace(const Matrix& m, const Rational& lambda) {
  if (!m.is_square()) throw Error(ErrorCode::NonSquare, "eigenspace");
  Matrix shifted = m;
  for (std::size_t i = 0; i < m.rows(); ++i) shifted.at(i, i) -= lambda;
  return kernel_basis(shifted);
}

Vec EchelonBasis::reduce(const Vec& v) const {
  if (v.size() != dim_) throw Error(ErrorCode::DimMismatch, "EchelonBasis::reduce");
  Vec r = v;
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const Rational& c = r[pivots_[i]];
    if (c.is_zero()) continue;
    const Rational f = c;  // pivot entries are 1
    for (std::size_t j = 0; j < dim_; ++j)
      if (!rows_[i][j].is_zero()) r[j] -= f * rows_[i][j];
  }
  return r;
}

bool EchelonBasis::insert(const Vec& v) {
  Vec r = reduce(v);
  std::size_t p = 0;
  while (p < dim_ && r[p].is_zero()) ++p;
  if (p == dim_) return false;
  Rational inv = Rational(1) / r[p];
  for (auto& x : r) x *= inv;
  // keep existing rows reduced against the new one
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const Rational f = rows_[i][p];
    if (f.is_zero()) continue;
    for (std::size_t j = 0; j < dim_; ++j)
      if (!r[j].is_zero()) rows_[i][j] -= f * r[j];
  }
  auto pos = std::upper_bound(pivots_.begin(), pivots_.end(), p) - pivots_.begin();
  rows_.insert(rows_.begin() + pos, std::move(r));
  pivots_.insert(pivots_.begin() + pos, p);
  return true;
}

EchelonBasis span_of(const std::vector<Vec>& vs, std::size_t dim) {
  EchelonBasis b(dim);
  for (const auto& v : vs) b.insert(v);
  return b;
}

}  // namespace sal
