#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace ftq {

using Int = std::int64_t;

/// Raised whenever a fixed-width intermediate would wrap.
class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

inline Int checked_add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("integer overflow in addition");
  return r;
}

inline Int checked_sub(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("integer overflow in subtraction");
  return r;
}

inline Int checked_mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("integer overflow in multiplication");
  return r;
}

inline Int checked_neg(Int a) { return checked_sub(0, a); }

/// Nonnegative residue of a modulo m (m > 0).
inline Int mod_floor(Int a, Int m) {
  Int r = a % m;
  return r < 0 ? r + m : r;
}

/// Floor division for m > 0.
inline Int div_floor(Int a, Int m) {
  Int q = a / m;
  if ((a % m != 0) && (a < 0)) --q;
  return q;
}

inline Int gcd(Int a, Int b) { return std::gcd(a, b); }

/// Extended Euclid: returns g = gcd(a,b) >= 0 and sets u, v with u*a + v*b = g.
Int extended_gcd(Int a, Int b, Int& u, Int& v);

bool is_prime(Int n);

/// Prime factors of n > 0, ascending, without multiplicity.
std::vector<Int> prime_divisors(Int n);

/// Dense row-major integer matrix.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}
  IntMatrix(std::initializer_list<std::initializer_list<Int>> rows);

  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Int& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  Int operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::vector<Int> column(std::size_t j) const;
  std::vector<Int> row(std::size_t i) const;

  IntMatrix operator*(const IntMatrix& other) const;
  std::vector<Int> operator*(const std::vector<Int>& v) const;
  bool operator==(const IntMatrix& other) const = default;

  /// Horizontal concatenation [*this | other]; row counts must agree.
  IntMatrix hconcat(const IntMatrix& other) const;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  /// row[dst] += k * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, Int k);
  /// col[dst] += k * col[src]
  void add_col_multiple(std::size_t dst, std::size_t src, Int k);
  void negate_row(std::size_t i);
  void negate_col(std::size_t j);

  /// Exact determinant of a square matrix (fraction-free Bareiss).
  Int determinant() const;

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Int> data_;
};

using BigInt = boost::multiprecision::cpp_int;

/// Checked conversion; throws OverflowError when v does not fit in Int.
Int narrow(const BigInt& v);

/// Dense row-major matrix over arbitrary-precision integers.
class BigMatrix {
 public:
  BigMatrix() = default;
  BigMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  explicit BigMatrix(const IntMatrix& m);

  static BigMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  BigInt& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const BigInt& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  BigMatrix operator*(const BigMatrix& other) const;
  std::vector<BigInt> operator*(const std::vector<Int>& v) const;
  bool operator==(const BigMatrix& other) const = default;

  BigMatrix transposed() const;
  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  void add_row_multiple(std::size_t dst, std::size_t src, const BigInt& k);
  void add_col_multiple(std::size_t dst, std::size_t src, const BigInt& k);
  void negate_row(std::size_t i);
  void negate_col(std::size_t j);

  /// Entrywise checked conversion to Int.
  IntMatrix narrow() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigInt> data_;
};

}  // namespace ftq
