#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace catx {

using Rational = mpq_class;
using Vector = std::vector<Rational>;

/// "p/q" or "p"; throws InputError on anything else or a zero denominator.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);

/// Dense row-major matrix over Q.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vector row(std::size_t r) const;
  Matrix transpose() const;
  bool is_zero() const;
  Rational trace() const;

  Matrix operator*(const Matrix& other) const;
  Matrix operator+(const Matrix& other) const;
  Matrix operator-(const Matrix& other) const;
  Matrix scaled(const Rational& s) const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

std::size_t rank(const Matrix& m);
Rational determinant(const Matrix& m);
std::optional<Matrix> inverse(const Matrix& m);

/// Basis (as rows) of the right null space {x : m x = 0}.
std::vector<Vector> nullspace(const Matrix& m);
/// Basis (as rows) of the left null space {x : x m = 0}.
std::vector<Vector> left_nullspace(const Matrix& m);

/// Some x with x * m = b (row-vector convention), if one exists.
std::optional<Vector> solve_left(const Matrix& m, const Vector& b);

/// A subspace of Q^n kept in reduced row echelon form.
class Subspace {
 public:
  explicit Subspace(std::size_t ambient) : ambient_(ambient) {}

  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return rows_.size(); }
  const std::vector<Vector>& basis() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  /// Adds v to the span; returns true if the dimension grew.
  bool add(const Vector& v);
  /// v minus its projection along the pivot coordinates; zero iff v is inside.
  Vector reduce(const Vector& v) const;
  bool contains(const Vector& v) const;
  bool contains(const Subspace& other) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.rows_ == b.rows_;
  }

 private:
  std::size_t ambient_;
  std::vector<Vector> rows_;
  std::vector<std::size_t> pivots_;
};

bool is_zero(const Vector& v);

}  // namespace catx
