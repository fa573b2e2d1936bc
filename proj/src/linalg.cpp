#include "cmlattice/linalg.hpp"

#include <sstream>
#include <utility>

#include "cmlattice/error.hpp"

namespace cmlattice {

namespace {

bool is_prime(std::int64_t p) {
  if (p < 2) return false;
  for (std::int64_t q = 2; q * q <= p; ++q)
    if (p % q == 0) return false;
  return true;
}

std::int64_t small(const mpq_class& v) { return v.get_num().get_si(); }

std::int64_t mod_pow(std::int64_t base, std::int64_t exp, std::int64_t p) {
  std::int64_t result = 1;
  base %= p;
  while (exp > 0) {
    if (exp & 1) result = result * base % p;
    base = base * base % p;
    exp >>= 1;
  }
  return result;
}

void require_same_field(const Matrix& a, const Matrix& b) {
  if (!(a.field() == b.field()))
    throw std::invalid_argument("matrix operands live over different fields");
}

// Fraction-free Gauss-Jordan on an integer matrix. After processing pivot k
// every pivot entry equals the current pivot, and each division by the
// previous pivot is exact (entries are minors of the input).
RowReduction reduce_rational(const Matrix& m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<std::vector<mpz_class>> a(rows, std::vector<mpz_class>(cols));
  for (std::size_t i = 0; i < rows; ++i) {
    mpz_class scale = 1;
    for (std::size_t j = 0; j < cols; ++j) {
      mpz_class den = m(i, j).get_den();
      mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), den.get_mpz_t());
    }
    for (std::size_t j = 0; j < cols; ++j) {
      mpq_class scaled = m(i, j) * scale;
      a[i][j] = scaled.get_num();
    }
  }

  std::vector<std::size_t> pivots;
  mpz_class previous = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t found = r;
    while (found < rows && a[found][c] == 0) ++found;
    if (found == rows) continue;
    std::swap(a[found], a[r]);
    const mpz_class pivot = a[r][c];
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r) continue;
      const mpz_class factor = a[i][c];
      for (std::size_t j = 0; j < cols; ++j) {
        mpz_class value = pivot * a[i][j] - factor * a[r][j];
        if (!mpz_divisible_p(value.get_mpz_t(), previous.get_mpz_t()))
          throw std::logic_error("fraction-free elimination produced an inexact division");
        mpz_divexact(value.get_mpz_t(), value.get_mpz_t(), previous.get_mpz_t());
        a[i][j] = std::move(value);
      }
    }
    previous = pivot;
    pivots.push_back(c);
    ++r;
  }

  Matrix reduced(m.field(), rows, cols);
  for (std::size_t k = 0; k < pivots.size(); ++k) {
    const mpz_class& pivot = a[k][pivots[k]];
    for (std::size_t j = 0; j < cols; ++j) {
      if (a[k][j] != 0) reduced.set(k, j, mpq_class(a[k][j], pivot));
    }
  }
  return {std::move(reduced), std::move(pivots)};
}

RowReduction reduce_modular(const Matrix& m) {
  const std::int64_t p = m.field().characteristic();
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<std::vector<std::int64_t>> a(rows, std::vector<std::int64_t>(cols));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) a[i][j] = small(m(i, j));

  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t found = r;
    while (found < rows && a[found][c] == 0) ++found;
    if (found == rows) continue;
    std::swap(a[found], a[r]);
    const std::int64_t inv = mod_pow(a[r][c], p - 2, p);
    for (std::size_t j = 0; j < cols; ++j) a[r][j] = a[r][j] * inv % p;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      const std::int64_t factor = a[i][c];
      for (std::size_t j = 0; j < cols; ++j) {
        a[i][j] = (a[i][j] - factor * a[r][j]) % p;
        if (a[i][j] < 0) a[i][j] += p;
      }
    }
    pivots.push_back(c);
    ++r;
  }

  Matrix reduced(m.field(), rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      if (a[i][j] != 0) reduced.set(i, j, a[i][j]);
  return {std::move(reduced), std::move(pivots)};
}

}  // namespace

// ---------------------------------------------------------------- Field

Field Field::prime(std::int64_t p) {
  if (p >= (std::int64_t{1} << 31) || !is_prime(p))
    throw Error(ErrorCode::ValidationError,
                "field characteristic " + std::to_string(p) + " is not a prime below 2^31",
                "field-not-prime");
  return Field(p);
}

Field Field::parse(const std::string& text) {
  if (text == "q" || text == "Q" || text == "rationals") return rationals();
  if (text.size() > 2 && (text.rfind("p:", 0) == 0)) {
    std::size_t used = 0;
    std::int64_t p = 0;
    try {
      p = std::stoll(text.substr(2), &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == text.size() - 2) return prime(p);
  }
  throw Error(ErrorCode::ValidationError, "unrecognised field '" + text + "' (expected q or p:N)",
              "bad-field");
}

std::string Field::name() const {
  return is_rational() ? "q" : "p:" + std::to_string(characteristic_);
}

mpq_class Field::promote(const mpq_class& value) const {
  if (is_rational()) {
    mpq_class v = value;
    v.canonicalize();
    return v;
  }
  const mpz_class p = static_cast<long>(characteristic_);
  mpz_class num = value.get_num() % p;
  mpz_class den = value.get_den() % p;
  if (num < 0) num += p;
  if (den < 0) den += p;
  if (den == 0)
    throw Error(ErrorCode::ValidationError, "denominator vanishes in " + name(), "bad-scalar");
  mpz_class inv;
  mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t());
  mpz_class result = (num * inv) % p;
  return mpq_class(result);
}

mpq_class Field::promote(std::int64_t value) const {
  return promote(mpq_class(static_cast<long>(value)));
}

mpq_class Field::add(const mpq_class& a, const mpq_class& b) const {
  if (is_rational()) return a + b;
  return mpq_class((small(a) + small(b)) % characteristic_);
}

mpq_class Field::sub(const mpq_class& a, const mpq_class& b) const {
  if (is_rational()) return a - b;
  return mpq_class((small(a) - small(b) + characteristic_) % characteristic_);
}

mpq_class Field::mul(const mpq_class& a, const mpq_class& b) const {
  if (is_rational()) return a * b;
  return mpq_class(small(a) * small(b) % characteristic_);
}

mpq_class Field::neg(const mpq_class& a) const {
  if (is_rational()) return -a;
  return mpq_class((characteristic_ - small(a)) % characteristic_);
}

mpq_class Field::inverse(const mpq_class& a) const {
  if (a == 0) throw std::domain_error("inverse of zero");
  if (is_rational()) return 1 / a;
  return mpq_class(mod_pow(small(a), characteristic_ - 2, characteristic_));
}

// ---------------------------------------------------------------- Matrix

Matrix::Matrix(const Field& field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols) {}

Matrix Matrix::identity(const Field& field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

Matrix Matrix::from_rows(const Field& field,
                         std::initializer_list<std::initializer_list<std::int64_t>> rows) {
  std::vector<std::vector<std::int64_t>> copy;
  for (const auto& row : rows) copy.emplace_back(row);
  return from_rows(field, copy);
}

Matrix Matrix::from_rows(const Field& field, const std::vector<std::vector<std::int64_t>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  Matrix m(field, rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw std::invalid_argument("ragged matrix rows");
    for (std::size_t j = 0; j < cols; ++j) m.set(i, j, rows[i][j]);
  }
  return m;
}

void Matrix::set(std::size_t r, std::size_t c, const mpq_class& value) {
  data_[r * cols_ + c] = field_.promote(value);
}

void Matrix::set(std::size_t r, std::size_t c, std::int64_t value) {
  data_[r * cols_ + c] = field_.promote(value);
}

bool Matrix::is_zero() const {
  for (const auto& v : data_)
    if (v != 0) return false;
  return true;
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.data_[j * rows_ + i] = (*this)(i, j);
  return t;
}

Matrix Matrix::scaled(const mpq_class& factor) const {
  Matrix out(field_, rows_, cols_);
  const mpq_class f = field_.promote(factor);
  for (std::size_t k = 0; k < data_.size(); ++k) out.data_[k] = field_.mul(data_[k], f);
  return out;
}

Matrix Matrix::column(std::size_t c) const { return columns(c, 1); }

Matrix Matrix::columns(std::size_t first, std::size_t count) const {
  Matrix out(field_, rows_, count);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < count; ++j) out.data_[i * count + j] = (*this)(i, first + j);
  return out;
}

Matrix Matrix::row_range(std::size_t first, std::size_t count) const {
  Matrix out(field_, count, cols_);
  for (std::size_t i = 0; i < count; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out.data_[i * cols_ + j] = (*this)(first + i, j);
  return out;
}

Matrix Matrix::select_columns(const std::vector<std::size_t>& indices) const {
  Matrix out(field_, rows_, indices.size());
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < indices.size(); ++j)
      out.data_[i * indices.size() + j] = (*this)(i, indices[j]);
  return out;
}

Matrix Matrix::hstack(const Matrix& right) const {
  require_same_field(*this, right);
  if (rows_ != right.rows_) throw std::invalid_argument("hstack: row counts differ");
  Matrix out(field_, rows_, cols_ + right.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out.data_[i * out.cols_ + j] = (*this)(i, j);
    for (std::size_t j = 0; j < right.cols_; ++j)
      out.data_[i * out.cols_ + cols_ + j] = right(i, j);
  }
  return out;
}

Matrix Matrix::operator*(const Matrix& rhs) const {
  require_same_field(*this, rhs);
  if (cols_ != rhs.rows_) throw std::invalid_argument("matrix product: shape mismatch");
  Matrix out(field_, rows_, rhs.cols_);
  if (field_.is_rational()) {
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        const mpq_class& a = (*this)(i, k);
        if (a == 0) continue;
        for (std::size_t j = 0; j < rhs.cols_; ++j) {
          const mpq_class& b = rhs(k, j);
          if (b != 0) out.data_[i * rhs.cols_ + j] += a * b;
        }
      }
    return out;
  }
  const std::int64_t p = field_.characteristic();
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < rhs.cols_; ++j) {
      std::int64_t acc = 0;
      for (std::size_t k = 0; k < cols_; ++k) acc = (acc + small((*this)(i, k)) * small(rhs(k, j))) % p;
      out.data_[i * rhs.cols_ + j] = acc;
    }
  return out;
}

Matrix Matrix::operator+(const Matrix& rhs) const {
  require_same_field(*this, rhs);
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw std::invalid_argument("matrix sum: shape mismatch");
  Matrix out(field_, rows_, cols_);
  for (std::size_t k = 0; k < data_.size(); ++k) out.data_[k] = field_.add(data_[k], rhs.data_[k]);
  return out;
}

Matrix Matrix::operator-(const Matrix& rhs) const {
  require_same_field(*this, rhs);
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
    throw std::invalid_argument("matrix difference: shape mismatch");
  Matrix out(field_, rows_, cols_);
  for (std::size_t k = 0; k < data_.size(); ++k) out.data_[k] = field_.sub(data_[k], rhs.data_[k]);
  return out;
}

bool Matrix::operator==(const Matrix& rhs) const {
  return field_ == rhs.field_ && rows_ == rhs.rows_ && cols_ == rhs.cols_ && data_ == rhs.data_;
}

std::string Matrix::to_string() const {
  std::ostringstream out;
  out << "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    out << (i ? "; " : "");
    for (std::size_t j = 0; j < cols_; ++j) out << (j ? " " : "") << (*this)(i, j);
  }
  out << "] (" << rows_ << "x" << cols_ << " over " << field_.name() << ")";
  return out.str();
}

// ---------------------------------------------------------------- elimination

RowReduction row_reduce(const Matrix& m) {
  return m.field().is_rational() ? reduce_rational(m) : reduce_modular(m);
}

std::size_t rank(const Matrix& m) { return row_reduce(m).pivot_columns.size(); }

Matrix kernel_basis(const Matrix& m) {
  const RowReduction rr = row_reduce(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : rr.pivot_columns) is_pivot[c] = true;
  Matrix basis(m.field(), m.cols(), m.cols() - rr.pivot_columns.size());
  std::size_t out = 0;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    basis.set(free, out, 1);
    for (std::size_t k = 0; k < rr.pivot_columns.size(); ++k)
      basis.set(rr.pivot_columns[k], out, m.field().neg(rr.reduced(k, free)));
    ++out;
  }
  return basis;
}

SolveResult solve(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("solve: row counts differ");
  const RowReduction rr = row_reduce(a.hstack(b));
  SolveResult result;
  for (std::size_t c : rr.pivot_columns)
    if (c >= a.cols()) return result;
  result.solvable = true;
  result.solution = Matrix(a.field(), a.cols(), b.cols());
  for (std::size_t k = 0; k < rr.pivot_columns.size(); ++k)
    for (std::size_t j = 0; j < b.cols(); ++j)
      result.solution.set(rr.pivot_columns[k], j, rr.reduced(k, a.cols() + j));
  return result;
}

mpq_class determinant(const Matrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  const Field& f = m.field();
  const std::size_t n = m.rows();
  std::vector<std::vector<mpq_class>> a(n, std::vector<mpq_class>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m(i, j);
  mpq_class det = f.promote(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t r = c;
    while (r < n && a[r][c] == 0) ++r;
    if (r == n) return f.promote(0);
    if (r != c) {
      std::swap(a[r], a[c]);
      det = f.neg(det);
    }
    det = f.mul(det, a[c][c]);
    const mpq_class inv = f.inverse(a[c][c]);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (a[i][c] == 0) continue;
      const mpq_class factor = f.mul(a[i][c], inv);
      for (std::size_t j = c; j < n; ++j) a[i][j] = f.sub(a[i][j], f.mul(factor, a[c][j]));
    }
  }
  return det;
}

}  // namespace cmlattice
