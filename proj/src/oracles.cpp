#include "ftq/oracles.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>
#include <stdexcept>

namespace ftq::oracle {

namespace {

// Visit every size-k subset of {0..n-1} in lexicographic order.
template <typename F>
void for_each_subset(std::size_t n, std::size_t k, F&& f) {
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  if (k > n) return;
  while (true) {
    f(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

std::vector<Int> determinantal_invariant_factors(const IntMatrix& m) {
  const std::size_t r = std::min(m.rows(), m.cols());
  std::vector<Int> det_div(r + 1, 0);  // D_k; D_0 = 1
  det_div[0] = 1;
  for (std::size_t k = 1; k <= r; ++k) {
    Int g = 0;
    for_each_subset(m.rows(), k, [&](const std::vector<std::size_t>& rows) {
      for_each_subset(m.cols(), k, [&](const std::vector<std::size_t>& cols) {
        IntMatrix minor(k, k);
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t j = 0; j < k; ++j) minor(i, j) = m(rows[i], cols[j]);
        g = std::gcd(g, minor.determinant());
      });
    });
    det_div[k] = g < 0 ? -g : g;
  }
  std::vector<Int> out(r, 0);
  for (std::size_t k = 1; k <= r; ++k) out[k - 1] = det_div[k] == 0 ? 0 : det_div[k] / det_div[k - 1];
  return out;
}

std::vector<Int> torsion_profile(const FinGenAbGroup& g, Int max_k) {
  if (!g.is_finite()) throw std::invalid_argument("torsion profile of an infinite group");
  std::vector<Int> out;
  for (Int k = 1; k <= max_k; ++k) {
    Int c = 1;
    for (Int d : g.invariant_factors()) c *= std::gcd(k, d);
    out.push_back(c);
  }
  return out;
}

EnumeratedMap enumerate_map(const GroupHom& f, Int max_k) {
  const FinGenAbGroup& dom = f.domain();
  const FinGenAbGroup& cod = f.codomain();
  EnumeratedMap out;
  std::set<Element> image;
  for (const Element& x : dom.elements()) {
    const Element y = f(x);
    if (cod.is_zero(y)) out.kernel.push_back(x);
    if (image.insert(y).second) out.image.push_back(y);
  }
  const std::vector<Element> cod_elems = cod.elements();
  const auto im_size = static_cast<Int>(image.size());
  for (Int k = 1; k <= max_k; ++k) {
    out.kernel_profile.push_back(static_cast<Int>(
        std::count_if(out.kernel.begin(), out.kernel.end(), [&](const Element& x) { return dom.is_zero(dom.scale(x, k)); })));
    const auto lifts = std::count_if(cod_elems.begin(), cod_elems.end(), [&](const Element& y) { return image.count(cod.scale(y, k)) > 0; });
    out.coker_profile.push_back(static_cast<Int>(lifts) / im_size);
  }
  return out;
}

bool enumerated_contains(const EnumeratedMap& e, const Element& y) {
  return std::find(e.image.begin(), e.image.end(), y) != e.image.end();
}

Int kronecker_symbol(Int d, Int n) {
  if (n <= 0) throw std::invalid_argument("kronecker symbol needs n > 0");
  Int result = 1;
  for (Int p : prime_divisors(n)) {
    Int e = 0;
    for (Int m = n; m % p == 0; m /= p) ++e;
    Int chi;
    if (p == 2) {
      if (d % 2 == 0) {
        chi = 0;
      } else {
        const Int r = mod_floor(d, 8);
        chi = (r == 1 || r == 7) ? 1 : -1;
      }
    } else {
      // Euler's criterion
      const Int a = mod_floor(d, p);
      if (a == 0) {
        chi = 0;
      } else {
        Int acc = 1, base = a, ex = (p - 1) / 2;
        while (ex > 0) {
          if (ex & 1) acc = acc * base % p;
          base = base * base % p;
          ex >>= 1;
        }
        chi = acc == 1 ? 1 : -1;
      }
    }
    for (Int i = 0; i < e; ++i) result *= chi;
  }
  return result;
}

Int analytic_class_number(Int d) {
  if (d >= 0) throw std::invalid_argument("analytic class number needs d < 0");
  const Int ad = -d;
  const Int w = d == -3 ? 6 : (d == -4 ? 4 : 2);
  Int sum = 0;
  for (Int a = 1; a < ad; ++a) sum += kronecker_symbol(d, a) * a;
  const Int num = -w * sum;
  if (num % (2 * ad) != 0) throw std::logic_error("class number formula not integral");
  return num / (2 * ad);
}

bool cayley_table_is_abelian_group(const std::vector<std::vector<std::size_t>>& t) {
  const std::size_t h = t.size();
  for (std::size_t i = 0; i < h; ++i) {
    if (t[i].size() != h || t[0][i] != i) return false;
    std::vector<bool> hit(h, false);
    for (std::size_t j = 0; j < h; ++j) {
      if (t[i][j] >= h || hit[t[i][j]]) return false;
      hit[t[i][j]] = true;
      if (t[i][j] != t[j][i]) return false;
    }
  }
  for (std::size_t a = 0; a < h; ++a)
    for (std::size_t b = 0; b < h; ++b)
      for (std::size_t c = 0; c < h; ++c)
        if (t[t[a][b]][c] != t[a][t[b][c]]) return false;
  return true;
}

Int naive_point_count(const FiniteField& f, FiniteField::Elem a, FiniteField::Elem b) {
  const auto q = static_cast<FiniteField::Elem>(f.q());
  Int count = 1;
  for (FiniteField::Elem x = 0; x < q; ++x) {
    const auto rhs = f.add(f.add(f.mul(x, f.mul(x, x)), f.mul(a, x)), b);
    for (FiniteField::Elem y = 0; y < q; ++y)
      if (f.mul(y, y) == rhs) ++count;
  }
  return count;
}

Int enumerated_dimension(const ComponentRing& c, Int n) {
  if (c.param > 20) throw std::invalid_argument("monomial enumeration limited to 20 exterior generators");
  const std::uint32_t subsets = std::uint32_t{1} << c.param;
  Int count = 0;
  auto even = [](Int x) { return mod_floor(x, 2) == 0; };
  for (std::uint32_t mask = 0; mask < subsets; ++mask) {
    const Int t = std::popcount(mask);
    if (c.is_laurent()) {
      // a^m x_T with 2m + |T| = n, m any integer
      if (!even(n - t)) continue;
      const Int m = (n - t) / 2;
      if (c.shape == Shape::Invariant && !even(m + t)) continue;
      ++count;
    } else {
      // b^m a^delta x_T with 2m + delta + |T| = n, m >= 0
      for (Int delta = 0; delta <= 1; ++delta) {
        const Int rest = n - delta - t;
        if (rest < 0 || !even(rest)) continue;
        const Int m = rest / 2;
        if (c.shape == Shape::MonomialFF && !even(m + delta + t)) continue;
        ++count;
      }
    }
  }
  return count;
}

FinGenAbGroup random_finite_group(std::mt19937_64& rng, Int max_order, std::size_t max_factors) {
  std::uniform_int_distribution<std::size_t> nf(0, max_factors);
  const std::size_t want = nf(rng);
  std::vector<Int> factors;
  Int order = 1;
  for (std::size_t i = 0; i < want; ++i) {
    const Int prev = factors.empty() ? 1 : factors.back();
    // next factor is a multiple of prev, at least 2
    const Int max_mult = max_order / (order * prev);
    const Int min_mult = factors.empty() ? 2 : 1;
    if (max_mult < min_mult) break;
    std::uniform_int_distribution<Int> mult(min_mult, std::min<Int>(max_mult, 12));
    const Int d = prev * mult(rng);
    if (d < 2 || order * d > max_order) break;
    factors.push_back(d);
    order *= d;
  }
  return FinGenAbGroup(0, std::move(factors));
}

GroupHom random_hom(std::mt19937_64& rng, const FinGenAbGroup& domain, const FinGenAbGroup& codomain) {
  IntMatrix m(codomain.num_generators(), domain.num_generators());
  for (std::size_t j = 0; j < domain.num_generators(); ++j) {
    const Int dj = domain.generator_order(j);
    for (std::size_t i = 0; i < codomain.num_generators(); ++i) {
      const Int mi = codomain.generator_order(i);
      if (mi == 0) {
        if (dj == 0) m(i, j) = std::uniform_int_distribution<Int>(-5, 5)(rng);
        continue;
      }
      if (dj == 0) {
        m(i, j) = std::uniform_int_distribution<Int>(0, mi - 1)(rng);
      } else {
        const Int g = std::gcd(mi, dj);
        m(i, j) = std::uniform_int_distribution<Int>(0, g - 1)(rng) * (mi / g);
      }
    }
  }
  return {domain, codomain, std::move(m)};
}

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, Int lo, Int hi) {
  std::uniform_int_distribution<Int> dist(lo, hi);
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = dist(rng);
  return m;
}

}  // namespace ftq::oracle
