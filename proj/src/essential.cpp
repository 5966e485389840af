#include "ftq/essential.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace ftq {

void GradedAlgebraSpec::validate() const {
  if (!is_prime(ell)) throw std::invalid_argument("ell must be prime, got " + std::to_string(ell));
  if (n > 31) throw std::invalid_argument("rank above 31 is not supported");
}

GradedElement::GradedElement(GradedAlgebraSpec spec) : spec_(spec) { spec_.validate(); }

GradedElement GradedElement::constant(const GradedAlgebraSpec& spec, Int c) {
  GradedElement e(spec);
  e.add_term(Monomial{std::vector<std::uint32_t>(spec.n, 0), 0}, c);
  return e;
}

GradedElement GradedElement::polynomial_generator(const GradedAlgebraSpec& spec, std::size_t i) {
  if (i >= spec.n) throw std::out_of_range("generator index out of range");
  GradedElement e(spec);
  Monomial m{std::vector<std::uint32_t>(spec.n, 0), 0};
  m.exponents[i] = 1;
  e.add_term(m, 1);
  return e;
}

GradedElement GradedElement::exterior_generator(const GradedAlgebraSpec& spec, std::size_t i) {
  if (!spec.odd()) throw std::invalid_argument("no exterior generators for ell = 2");
  if (i >= spec.n) throw std::out_of_range("generator index out of range");
  GradedElement e(spec);
  e.add_term(Monomial{std::vector<std::uint32_t>(spec.n, 0), std::uint32_t{1} << i}, 1);
  return e;
}

void GradedElement::add_term(const Monomial& m, Int c) {
  if (m.exponents.size() != spec_.n) throw std::invalid_argument("monomial has the wrong number of variables");
  if (!spec_.odd() && m.exterior != 0) throw std::invalid_argument("exterior generators require odd ell");
  c = mod_floor(c, spec_.ell);
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second = (it->second + c) % spec_.ell;
    if (it->second == 0) terms_.erase(it);
  }
}

Int GradedElement::monomial_degree(const Monomial& m) const {
  Int d = 0;
  for (auto e : m.exponents) d += static_cast<Int>(e) * spec_.polynomial_degree();
  return d + std::popcount(m.exterior);
}

std::optional<Int> GradedElement::degree() const {
  std::optional<Int> d;
  for (const auto& [m, c] : terms_) {
    const Int md = monomial_degree(m);
    if (d && *d != md) return std::nullopt;
    d = md;
  }
  return d;
}

GradedElement GradedElement::operator+(const GradedElement& o) const {
  if (!(spec_ == o.spec_)) throw std::invalid_argument("adding elements of different algebras");
  GradedElement r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, c);
  return r;
}

GradedElement GradedElement::operator-(const GradedElement& o) const { return *this + o.scaled(-1); }

GradedElement GradedElement::scaled(Int c) const {
  GradedElement r(spec_);
  for (const auto& [m, v] : terms_) r.add_term(m, checked_mul(v, c));
  return r;
}

GradedElement GradedElement::operator*(const GradedElement& o) const {
  if (!(spec_ == o.spec_)) throw std::invalid_argument("multiplying elements of different algebras");
  GradedElement r(spec_);
  for (const auto& [m1, c1] : terms_)
    for (const auto& [m2, c2] : o.terms_) {
      if (m1.exterior & m2.exterior) continue;
      // x_S x_T = (-1)^{#(i in S, j in T, i > j)} x_{S u T}
      int swaps = 0;
      for (std::uint32_t t = m2.exterior; t; t &= t - 1) {
        const int j = std::countr_zero(t);
        swaps += std::popcount(m1.exterior >> (j + 1));
      }
      Monomial m{m1.exponents, m1.exterior | m2.exterior};
      for (std::size_t i = 0; i < m.exponents.size(); ++i) m.exponents[i] += m2.exponents[i];
      Int c = (c1 * c2) % spec_.ell;
      if (swaps & 1) c = -c;
      r.add_term(m, c);
    }
  return r;
}

std::string GradedElement::to_string() const {
  if (terms_.empty()) return "0";
  const char poly = spec_.odd() ? 'y' : 'x';
  std::ostringstream os;
  bool first_term = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    if (!first_term) os << " + ";
    first_term = false;
    std::vector<std::string> factors;
    for (std::size_t i = 0; i < m.exponents.size(); ++i) {
      if (m.exponents[i] == 0) continue;
      std::string f = std::string(1, poly) + std::to_string(i + 1);
      if (m.exponents[i] > 1) f += "^" + std::to_string(m.exponents[i]);
      factors.push_back(std::move(f));
    }
    for (std::size_t i = 0; i < m.exponents.size(); ++i)
      if (m.exterior >> i & 1) factors.push_back("x" + std::to_string(i + 1));
    if (c != 1 || factors.empty()) factors.insert(factors.begin(), std::to_string(c));
    for (std::size_t i = 0; i < factors.size(); ++i) os << (i ? "*" : "") << factors[i];
  }
  return os.str();
}

// ---------------------------------------------------------------------------

GradedElement essential_product(const GradedAlgebraSpec& spec, Int bound) {
  spec.validate();
  if (spec.n == 0) throw std::invalid_argument("essential product needs rank >= 1");
  Int size = 1;
  for (std::size_t i = 0; i < spec.n; ++i) {
    size = checked_mul(size, spec.ell);
    if (size > bound)
      throw std::invalid_argument("ell^n exceeds the essential-product bound " + std::to_string(bound));
  }

  GradedElement acc = GradedElement::constant(spec, 1);
  std::vector<Int> v(spec.n, 0);
  for (Int count = 1; count < size; ++count) {
    // next nonzero vector in base-ell counting order
    for (std::size_t i = 0; i < spec.n; ++i) {
      if (++v[i] < spec.ell) break;
      v[i] = 0;
    }
    GradedElement linear(spec);
    for (std::size_t i = 0; i < spec.n; ++i)
      if (v[i] != 0) linear = linear + GradedElement::polynomial_generator(spec, i).scaled(v[i]);
    acc = acc * linear;
  }
  return acc;
}

std::size_t rank_mod(const SubgroupMatrix& m, Int ell) {
  if (m.empty()) return 0;
  std::vector<std::vector<Int>> a = m;
  for (auto& row : a)
    for (auto& x : row) x = mod_floor(x, ell);
  const std::size_t rows = a.size(), cols = a[0].size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t p = rank;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[rank]);
    Int u, v;
    extended_gcd(a[rank][c], ell, u, v);
    const Int inv = mod_floor(u, ell);
    for (auto& x : a[rank]) x = (x * inv) % ell;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || a[r][c] == 0) continue;
      const Int f = a[r][c];
      for (std::size_t j = 0; j < cols; ++j) a[r][j] = mod_floor(a[r][j] - f * a[rank][j], ell);
    }
    ++rank;
  }
  return rank;
}

namespace {

// Substitute generator i of the source by sum_j m[i][j] * generator j of the target.
GradedElement substitute(const GradedElement& e, const SubgroupMatrix& m, std::size_t k) {
  const GradedAlgebraSpec& src = e.spec();
  const GradedAlgebraSpec dst{src.ell, k};
  if (m.size() != src.n) throw std::invalid_argument("subgroup matrix needs one row per generator");
  for (const auto& row : m)
    if (row.size() != k) throw std::invalid_argument("ragged subgroup matrix");

  std::vector<GradedElement> poly_images, ext_images;
  for (std::size_t i = 0; i < src.n; ++i) {
    GradedElement p(dst), x(dst);
    for (std::size_t j = 0; j < k; ++j) {
      if (mod_floor(m[i][j], src.ell) == 0) continue;
      p = p + GradedElement::polynomial_generator(dst, j).scaled(m[i][j]);
      if (src.odd()) x = x + GradedElement::exterior_generator(dst, j).scaled(m[i][j]);
    }
    poly_images.push_back(std::move(p));
    ext_images.push_back(std::move(x));
  }

  std::vector<std::vector<GradedElement>> powers(src.n);
  auto power = [&](std::size_t i, std::uint32_t e) -> const GradedElement& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(GradedElement::constant(dst, 1));
    while (cache.size() <= e) cache.push_back(cache.back() * poly_images[i]);
    return cache[e];
  };

  GradedElement out(dst);
  for (const auto& [mono, c] : e.terms()) {
    GradedElement t = GradedElement::constant(dst, c);
    for (std::size_t i = 0; i < src.n && !t.is_zero(); ++i)
      if (mono.exponents[i]) t = t * power(i, mono.exponents[i]);
    for (std::size_t i = 0; i < src.n && !t.is_zero(); ++i)
      if (mono.exterior >> i & 1) t = t * ext_images[i];
    out = out + t;
  }
  return out;
}

}  // namespace

GradedElement restrict(const GradedElement& e, const SubgroupMatrix& m) {
  const std::size_t k = m.empty() ? 0 : m[0].size();
  if (m.size() != e.spec().n) throw std::invalid_argument("subgroup matrix needs one row per generator");
  if (k > e.spec().n) throw std::invalid_argument("subgroup rank exceeds the ambient rank");
  if (rank_mod(m, e.spec().ell) != k) throw std::invalid_argument("subgroup matrix columns are not independent mod ell");
  return substitute(e, m, k);
}

std::vector<SubgroupMatrix> proper_subgroups(Int ell, std::size_t n) {
  std::vector<SubgroupMatrix> out;
  for (std::size_t k = 0; k < n; ++k) {
    // Pivot positions p_0 < ... < p_{k-1} of a reduced row-echelon k x n basis.
    std::vector<std::size_t> piv(k);
    std::iota(piv.begin(), piv.end(), 0);
    while (true) {
      // Free slots: (row r, column c) with c > piv[r] and c not a pivot.
      std::vector<std::pair<std::size_t, std::size_t>> free_slots;
      for (std::size_t r = 0; r < k; ++r)
        for (std::size_t c = piv[r] + 1; c < n; ++c)
          if (std::find(piv.begin(), piv.end(), c) == piv.end()) free_slots.emplace_back(r, c);
      std::vector<Int> vals(free_slots.size(), 0);
      while (true) {
        SubgroupMatrix m(n, std::vector<Int>(k, 0));
        for (std::size_t r = 0; r < k; ++r) m[piv[r]][r] = 1;
        for (std::size_t s = 0; s < free_slots.size(); ++s) m[free_slots[s].second][free_slots[s].first] = vals[s];
        out.push_back(std::move(m));
        std::size_t s = 0;
        for (; s < vals.size(); ++s) {
          if (++vals[s] < ell) break;
          vals[s] = 0;
        }
        if (s == vals.size()) break;
      }
      // next pivot combination
      std::size_t i = k;
      while (i > 0 && piv[i - 1] == n - k + i - 1) --i;
      if (i == 0) break;
      ++piv[i - 1];
      for (std::size_t j = i; j < k; ++j) piv[j] = piv[j - 1] + 1;
    }
  }
  return out;
}

GradedElement permute(const GradedElement& e, const std::vector<std::size_t>& perm) {
  const std::size_t n = e.spec().n;
  if (perm.size() != n) throw std::invalid_argument("permutation has the wrong length");
  SubgroupMatrix m(n, std::vector<Int>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    if (perm[i] >= n) throw std::invalid_argument("not a permutation");
    m[i][perm[i]] = 1;
  }
  return restrict(e, m);
}

bool weyl_invariance(const GradedElement& e) {
  const std::size_t n = e.spec().n;
  if (n < 2) return true;
  // S_n is generated by the transposition (0 1) and the n-cycle.
  std::vector<std::size_t> swap01(n), cycle(n);
  std::iota(swap01.begin(), swap01.end(), 0);
  std::swap(swap01[0], swap01[1]);
  for (std::size_t i = 0; i < n; ++i) cycle[i] = (i + 1) % n;
  return permute(e, swap01) == e && permute(e, cycle) == e;
}

bool regularity_check(const GradedElement& e) {
  if (e.is_zero()) return false;
  for (const auto& [m, c] : e.terms())
    if (m.exterior != 0) return false;
  return true;
}

}  // namespace ftq
