#include <stdexcept>

#include "ftq/curve.hpp"

namespace ftq {

namespace {

constexpr Int kMaxFieldOrder = Int{1} << 16;

std::vector<Int> to_digits(Int x, Int p, int e) {
  std::vector<Int> d(static_cast<std::size_t>(e));
  for (int i = 0; i < e; ++i) {
    d[static_cast<std::size_t>(i)] = x % p;
    x /= p;
  }
  return d;
}

Int from_digits(const std::vector<Int>& d, Int p) {
  Int x = 0;
  for (std::size_t i = d.size(); i-- > 0;) x = x * p + d[i];
  return x;
}

}  // namespace

FiniteField::FiniteField(Int p, int e) : p_(p), e_(e) {
  if (!is_prime(p)) throw std::invalid_argument("field characteristic must be prime, got " + std::to_string(p));
  if (e < 1) throw std::invalid_argument("extension degree must be >= 1");
  q_ = 1;
  for (int i = 0; i < e; ++i) {
    q_ = checked_mul(q_, p);
    if (q_ > kMaxFieldOrder) throw std::invalid_argument("field order exceeds 2^16");
  }

  const auto n = static_cast<std::size_t>(q_);
  exp_.assign(n - 1, 0);
  log_.assign(n, 0);

  // Try monic moduli t^e + c_{e-1} t^{e-1} + ... + c_0 in lexicographic order of
  // the coefficient vector; accept the first one in which t has order q - 1.
  for (Int code = 0; code < q_; ++code) {
    const std::vector<Int> low = to_digits(code, p, e);
    if (low[0] == 0) continue;
    std::vector<Int> cur(static_cast<std::size_t>(e), 0);
    cur[0] = 1;
    bool primitive = true;
    for (Int k = 0; k < q_ - 1; ++k) {
      const Int v = from_digits(cur, p);
      if (k > 0 && v == 1) {
        primitive = false;
        break;
      }
      exp_[static_cast<std::size_t>(k)] = static_cast<Elem>(v);
      // cur *= t  (mod the candidate modulus)
      const Int top = cur[static_cast<std::size_t>(e - 1)];
      for (int i = e - 1; i > 0; --i) cur[static_cast<std::size_t>(i)] = cur[static_cast<std::size_t>(i - 1)];
      cur[0] = 0;
      for (int i = 0; i < e; ++i)
        cur[static_cast<std::size_t>(i)] = mod_floor(cur[static_cast<std::size_t>(i)] - top * low[static_cast<std::size_t>(i)], p);
    }
    if (!primitive || from_digits(cur, p) != 1) continue;
    modulus_ = low;
    modulus_.push_back(1);
    break;
  }
  if (modulus_.empty()) throw std::logic_error("no primitive modulus found");
  for (std::size_t k = 0; k + 1 < n; ++k) log_[exp_[k]] = static_cast<std::uint32_t>(k);
}

FiniteField FiniteField::of_order(Int q) {
  if (q < 2) throw std::invalid_argument("field order must be a prime power, got " + std::to_string(q));
  const std::vector<Int> ps = prime_divisors(q);
  if (ps.size() != 1) throw std::invalid_argument("field order must be a prime power, got " + std::to_string(q));
  int e = 0;
  for (Int r = q; r > 1; r /= ps[0]) ++e;
  return FiniteField(ps[0], e);
}

FiniteField::Elem FiniteField::add(Elem x, Elem y) const {
  if (e_ == 1) return static_cast<Elem>((x + y) % static_cast<Elem>(p_));
  Elem out = 0, scale = 1;
  const auto p = static_cast<Elem>(p_);
  for (int i = 0; i < e_; ++i) {
    out += ((x % p + y % p) % p) * scale;
    x /= p;
    y /= p;
    scale *= p;
  }
  return out;
}

FiniteField::Elem FiniteField::neg(Elem x) const {
  if (e_ == 1) return x == 0 ? 0 : static_cast<Elem>(p_) - x;
  Elem out = 0, scale = 1;
  const auto p = static_cast<Elem>(p_);
  for (int i = 0; i < e_; ++i) {
    out += ((p - x % p) % p) * scale;
    x /= p;
    scale *= p;
  }
  return out;
}

FiniteField::Elem FiniteField::sub(Elem x, Elem y) const { return add(x, neg(y)); }

FiniteField::Elem FiniteField::mul(Elem x, Elem y) const {
  if (x == 0 || y == 0) return 0;
  const std::uint64_t s = std::uint64_t{log_[x]} + log_[y];
  return exp_[s % static_cast<std::uint64_t>(q_ - 1)];
}

FiniteField::Elem FiniteField::inv(Elem x) const {
  if (x == 0) throw std::domain_error("inverse of zero");
  const auto order = static_cast<std::uint32_t>(q_ - 1);
  return exp_[(order - log_[x]) % order];
}

FiniteField::Elem FiniteField::pow(Elem x, Int k) const {
  if (x == 0) {
    if (k < 0) throw std::domain_error("negative power of zero");
    return k == 0 ? 1 : 0;
  }
  const Int l = mod_floor(checked_mul(static_cast<Int>(log_[x]), mod_floor(k, q_ - 1)), q_ - 1);
  return exp_[static_cast<std::size_t>(l)];
}

FiniteField::Elem FiniteField::from_int(Int n) const { return static_cast<Elem>(mod_floor(n, p_)); }

}  // namespace ftq
