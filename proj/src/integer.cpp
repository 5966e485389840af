#include "ftq/integer.hpp"

#include <limits>

#include <sstream>
#include <utility>

namespace ftq {

Int extended_gcd(Int a, Int b, Int& u, Int& v) {
  Int old_r = a, r = b;
  Int old_s = 1, s = 0;
  Int old_t = 0, t = 1;
  while (r != 0) {
    const Int q = old_r / r;
    old_r = checked_sub(old_r, checked_mul(q, r));
    std::swap(old_r, r);
    old_s = checked_sub(old_s, checked_mul(q, s));
    std::swap(old_s, s);
    old_t = checked_sub(old_t, checked_mul(q, t));
    std::swap(old_t, t);
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_s = -old_s;
    old_t = -old_t;
  }
  u = old_s;
  v = old_t;
  return old_r;
}

bool is_prime(Int n) {
  if (n < 2) return false;
  for (Int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<Int> prime_divisors(Int n) {
  std::vector<Int> out;
  for (Int d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<Int>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

std::vector<Int> IntMatrix::column(std::size_t j) const {
  std::vector<Int> c(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
  return c;
}

std::vector<Int> IntMatrix::row(std::size_t i) const {
  return {data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
          data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_)};
}

IntMatrix IntMatrix::operator*(const IntMatrix& other) const {
  if (cols_ != other.rows_) throw std::invalid_argument("matrix shape mismatch in product");
  IntMatrix out(rows_, other.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Int a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < other.cols_; ++j)
        out(i, j) = checked_add(out(i, j), checked_mul(a, other(k, j)));
    }
  return out;
}

std::vector<Int> IntMatrix::operator*(const std::vector<Int>& v) const {
  if (cols_ != v.size()) throw std::invalid_argument("matrix/vector shape mismatch");
  std::vector<Int> out(rows_, 0);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      out[i] = checked_add(out[i], checked_mul((*this)(i, j), v[j]));
  return out;
}

IntMatrix IntMatrix::hconcat(const IntMatrix& other) const {
  if (rows_ != other.rows_) throw std::invalid_argument("row mismatch in hconcat");
  IntMatrix out(rows_, cols_ + other.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out(i, j) = (*this)(i, j);
    for (std::size_t j = 0; j < other.cols_; ++j) out(i, cols_ + j) = other(i, j);
  }
  return out;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src, Int k) {
  if (k == 0) return;
  for (std::size_t j = 0; j < cols_; ++j)
    (*this)(dst, j) = checked_add((*this)(dst, j), checked_mul(k, (*this)(src, j)));
}

void IntMatrix::add_col_multiple(std::size_t dst, std::size_t src, Int k) {
  if (k == 0) return;
  for (std::size_t i = 0; i < rows_; ++i)
    (*this)(i, dst) = checked_add((*this)(i, dst), checked_mul(k, (*this)(i, src)));
}

void IntMatrix::negate_row(std::size_t i) {
  for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = checked_neg((*this)(i, j));
}

void IntMatrix::negate_col(std::size_t j) {
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = checked_neg((*this)(i, j));
}

Int IntMatrix::determinant() const {
  if (rows_ != cols_) throw std::invalid_argument("determinant of non-square matrix");
  const std::size_t n = rows_;
  if (n == 0) return 1;
  IntMatrix a = *this;
  Int sign = 1;
  Int prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      a.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        // Bareiss step; the division is exact.
        const Int num = checked_sub(checked_mul(a(i, j), a(k, k)), checked_mul(a(i, k), a(k, j)));
        a(i, j) = num / prev;
      }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < rows_; ++i) {
    if (i) os << " ; ";
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j) os << ' ';
      os << (*this)(i, j);
    }
  }
  return os.str();
}

Int narrow(const BigInt& v) {
  static const BigInt lo = std::numeric_limits<Int>::min();
  static const BigInt hi = std::numeric_limits<Int>::max();
  if (v < lo || v > hi) throw OverflowError("integer exceeds 64 bits");
  return static_cast<Int>(v);
}

BigMatrix::BigMatrix(const IntMatrix& m) : BigMatrix(m.rows(), m.cols()) {
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = m(i, j);
}

BigMatrix BigMatrix::identity(std::size_t n) {
  BigMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

BigMatrix BigMatrix::operator*(const BigMatrix& other) const {
  if (cols_ != other.rows_) throw std::invalid_argument("matrix shape mismatch in product");
  BigMatrix out(rows_, other.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      if ((*this)(i, k) == 0) continue;
      for (std::size_t j = 0; j < other.cols_; ++j) out(i, j) += (*this)(i, k) * other(k, j);
    }
  return out;
}

std::vector<BigInt> BigMatrix::operator*(const std::vector<Int>& v) const {
  if (cols_ != v.size()) throw std::invalid_argument("matrix-vector shape mismatch");
  std::vector<BigInt> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out[i] += (*this)(i, j) * v[j];
  return out;
}

BigMatrix BigMatrix::transposed() const {
  BigMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

void BigMatrix::swap_rows(std::size_t a, std::size_t b) {
  for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
}

void BigMatrix::swap_cols(std::size_t a, std::size_t b) {
  for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
}

void BigMatrix::add_row_multiple(std::size_t dst, std::size_t src, const BigInt& k) {
  for (std::size_t c = 0; c < cols_; ++c) (*this)(dst, c) += k * (*this)(src, c);
}

void BigMatrix::add_col_multiple(std::size_t dst, std::size_t src, const BigInt& k) {
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, dst) += k * (*this)(r, src);
}

void BigMatrix::negate_row(std::size_t i) {
  for (std::size_t c = 0; c < cols_; ++c) (*this)(i, c) = -(*this)(i, c);
}

void BigMatrix::negate_col(std::size_t j) {
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, j) = -(*this)(r, j);
}

IntMatrix BigMatrix::narrow() const {
  IntMatrix out(rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(i, j) = ftq::narrow((*this)(i, j));
  return out;
}

}  // namespace ftq
