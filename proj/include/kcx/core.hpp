#pragma once

// Shared arithmetic vocabulary: arbitrary-precision integers, dense integer
// matrices, the error hierarchy and the search budget used by every bounded
// procedure in the library.

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace kcx {

using Int = mpz_class;
using Vec = std::vector<Int>;

Vec make_vec(std::initializer_list<long> xs);
std::string to_string(const Vec &v);
bool is_zero(const Vec &v);
Vec add(const Vec &a, const Vec &b);
Vec sub(const Vec &a, const Vec &b);
Vec scale(const Int &k, const Vec &v);
Vec concat(const Vec &a, const Vec &b);
Vec slice(const Vec &v, std::size_t begin, std::size_t count);

/// Euclidean remainder in [0, |m|); m == 0 leaves the value untouched.
Int mod_floor(const Int &a, const Int &m);
Int gcd(const Int &a, const Int &b);
Int lcm(const Int &a, const Int &b);

class Matrix {
public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);
  Matrix(std::initializer_list<std::initializer_list<long>> rows);

  static Matrix identity(std::size_t n);
  static Matrix from_columns(std::size_t rows, const std::vector<Vec> &cols);
  static Matrix from_rows(std::size_t cols, const std::vector<Vec> &rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Int &operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Int &operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  Vec column(std::size_t c) const;
  Vec row(std::size_t r) const;
  void set_column(std::size_t c, const Vec &v);

  Matrix transpose() const;
  Matrix operator*(const Matrix &o) const;
  Vec operator*(const Vec &v) const;
  Matrix operator+(const Matrix &o) const;
  Matrix operator-(const Matrix &o) const;
  bool operator==(const Matrix &o) const;
  bool is_zero() const;

  /// Block diagonal sum.
  static Matrix direct_sum(const std::vector<Matrix> &blocks);
  /// [A | B], equal row counts.
  static Matrix hcat(const Matrix &a, const Matrix &b);
  /// [A ; B], equal column counts.
  static Matrix vcat(const Matrix &a, const Matrix &b);

  Int determinant() const;
  std::string to_string() const;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Int> data_;
};

class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class DimensionError : public Error {
public:
  using Error::Error;
};

/// A documented precondition of an operation does not hold.
class PreconditionError : public Error {
public:
  using Error::Error;
};

/// The representation is outside what the structural algorithms handle.
class UnsupportedError : public Error {
public:
  using Error::Error;
};

class BudgetExhausted : public Error {
public:
  using Error::Error;
};

class ParseError : public Error {
public:
  ParseError(const std::string &msg, std::size_t line, std::size_t column);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

private:
  std::size_t line_;
  std::size_t column_;
};

/// Counts elementary search steps. Every bounded search draws from one; the
/// first step past the limit reports exhaustion instead of continuing.
class Budget {
public:
  explicit Budget(std::uint64_t limit = 10000) : limit_(limit) {}

  /// Consumes one step; returns false once the limit is exceeded.
  bool step(std::uint64_t n = 1) {
    used_ += n;
    return used_ <= limit_;
  }
  /// Consumes one step or throws BudgetExhausted naming the search.
  void require(const char *what, std::uint64_t n = 1);
  bool exhausted() const { return used_ > limit_; }
  std::uint64_t used() const { return used_; }
  std::uint64_t limit() const { return limit_; }

private:
  std::uint64_t limit_;
  std::uint64_t used_ = 0;
};

} // namespace kcx
