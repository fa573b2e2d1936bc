#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace cmlattice {

/// The coefficient field: the rationals or a prime field F_p.
///
/// Scalars are always stored as `mpq_class`. Over F_p every stored value is
/// the canonical representative in [0, p), so equality of stored values is
/// equality in the field.
class Field {
 public:
  static Field rationals() { return Field(0); }
  /// Throws Error(ValidationError) unless 2 <= p < 2^31 and p is prime.
  static Field prime(std::int64_t p);
  /// Accepts "q" or "p:N".
  static Field parse(const std::string& text);

  bool is_rational() const { return characteristic_ == 0; }
  std::int64_t characteristic() const { return characteristic_; }
  std::string name() const;

  /// Image of a rational number in this field. Over F_p the denominator must
  /// be invertible.
  mpq_class promote(const mpq_class& value) const;
  mpq_class promote(std::int64_t value) const;

  mpq_class add(const mpq_class& a, const mpq_class& b) const;
  mpq_class sub(const mpq_class& a, const mpq_class& b) const;
  mpq_class mul(const mpq_class& a, const mpq_class& b) const;
  mpq_class neg(const mpq_class& a) const;
  mpq_class inverse(const mpq_class& a) const;

  bool operator==(const Field& other) const = default;

 private:
  explicit Field(std::int64_t characteristic) : characteristic_(characteristic) {}
  std::int64_t characteristic_;
};

/// Dense matrix over a Field.
class Matrix {
 public:
  Matrix() : Matrix(Field::rationals(), 0, 0) {}
  Matrix(const Field& field, std::size_t rows, std::size_t cols);

  static Matrix identity(const Field& field, std::size_t n);
  static Matrix from_rows(const Field& field,
                          std::initializer_list<std::initializer_list<std::int64_t>> rows);
  static Matrix from_rows(const Field& field,
                          const std::vector<std::vector<std::int64_t>>& rows);

  const Field& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  const mpq_class& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }
  /// Stores `value` promoted into the field.
  void set(std::size_t r, std::size_t c, const mpq_class& value);
  void set(std::size_t r, std::size_t c, std::int64_t value);

  bool is_zero() const;
  Matrix transpose() const;
  Matrix scaled(const mpq_class& factor) const;
  Matrix column(std::size_t c) const;
  /// Columns [first, first + count).
  Matrix columns(std::size_t first, std::size_t count) const;
  /// Rows [first, first + count).
  Matrix row_range(std::size_t first, std::size_t count) const;
  Matrix select_columns(const std::vector<std::size_t>& indices) const;
  Matrix hstack(const Matrix& right) const;

  Matrix operator*(const Matrix& rhs) const;
  Matrix operator+(const Matrix& rhs) const;
  Matrix operator-(const Matrix& rhs) const;
  bool operator==(const Matrix& rhs) const;

  std::string to_string() const;

 private:
  Field field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<mpq_class> data_;
};

/// Reduced row echelon form with the pivot columns chosen left to right.
struct RowReduction {
  Matrix reduced;
  std::vector<std::size_t> pivot_columns;
};

/// Over Q this uses fraction-free Gauss-Jordan elimination on the
/// denominator-cleared integer matrix; over F_p plain elimination.
RowReduction row_reduce(const Matrix& m);

std::size_t rank(const Matrix& m);

/// Columns form the canonical basis of the null space read off the reduced
/// row echelon form: one column per free variable, with a 1 in that slot.
Matrix kernel_basis(const Matrix& m);

/// Solves a * x = b for a matrix right-hand side b. `solvable` is false when
/// no solution exists.
struct SolveResult {
  bool solvable = false;
  Matrix solution;
};
SolveResult solve(const Matrix& a, const Matrix& b);

/// Determinant of a square matrix.
mpq_class determinant(const Matrix& m);

}  // namespace cmlattice
