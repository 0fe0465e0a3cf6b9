#pragma once

#include <cstddef>
#include <vector>

#include "tvx/rational.hpp"

namespace tvx {

/// Dense row-major matrix of exact rationals.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<std::vector<Rational>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<Rational> row(std::size_t r) const;
  std::vector<Rational> col(std::size_t c) const;

  bool is_zero() const;
  bool operator==(const Matrix& other) const = default;

  Matrix transpose() const;
  Matrix& operator*=(const Rational& s);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);
Matrix kron(const Matrix& a, const Matrix& b);

/// Row vector times matrix.
std::vector<Rational> operator*(const std::vector<Rational>& v, const Matrix& m);

std::size_t rank(Matrix m);

/// Basis of {v : m·v = 0}, one vector per free column, in reduced form.
std::vector<std::vector<Rational>> nullspace(Matrix m);

/// Throws if singular.
Matrix inverse(const Matrix& m);

/// Scale so all entries are integers with gcd 1 and the first nonzero entry
/// is positive. Returns the factor that was applied. Zero input is returned
/// unchanged with factor 1.
Rational make_primitive(std::vector<Rational>& values);

}  // namespace tvx
