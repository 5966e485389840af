#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <numeric>

#include "ftq/essential.hpp"

using namespace ftq;

namespace {

// Dense polynomial over F_ell in n variables, each exponent below `cap`.
struct Dense {
  Int ell;
  std::size_t n;
  std::size_t cap;
  std::vector<Int> c;

  Dense(Int ell_, std::size_t n_, std::size_t cap_) : ell(ell_), n(n_), cap(cap_) {
    std::size_t size = 1;
    for (std::size_t i = 0; i < n; ++i) size *= cap;
    c.assign(size, 0);
  }
  std::vector<std::uint32_t> exponents(std::size_t idx) const {
    std::vector<std::uint32_t> e(n);
    for (std::size_t i = 0; i < n; ++i) {
      e[i] = static_cast<std::uint32_t>(idx % cap);
      idx /= cap;
    }
    return e;
  }
};

// Multiplies by the linear form sum v_i * t_i.
Dense times_linear(const Dense& p, const std::vector<Int>& v) {
  Dense out(p.ell, p.n, p.cap);
  std::size_t stride = 1;
  for (std::size_t i = 0; i < p.n; ++i) {
    for (std::size_t idx = 0; idx < p.c.size(); ++idx) {
      if (p.c[idx] == 0 || v[i] == 0) continue;
      REQUIRE((idx / stride) % p.cap + 1 < p.cap);
      Int& slot = out.c[idx + stride];
      slot = (slot + p.c[idx] * v[i]) % p.ell;
    }
    stride *= p.cap;
  }
  return out;
}

// Product of all nonzero linear forms in the polynomial generators.
std::map<Monomial, Int> dense_essential(Int ell, std::size_t n) {
  Int size = 1;
  for (std::size_t i = 0; i < n; ++i) size *= ell;
  Dense p(ell, n, static_cast<std::size_t>(size));
  p.c[0] = 1;
  for (Int code = 1; code < size; ++code) {
    std::vector<Int> v(n);
    Int r = code;
    for (std::size_t i = 0; i < n; ++i) {
      v[i] = r % ell;
      r /= ell;
    }
    p = times_linear(p, v);
  }
  std::map<Monomial, Int> terms;
  for (std::size_t idx = 0; idx < p.c.size(); ++idx)
    if (p.c[idx] != 0) terms[Monomial{p.exponents(idx), 0}] = p.c[idx];
  return terms;
}

const std::vector<std::pair<Int, std::size_t>> kCases = {{2, 1}, {2, 2}, {2, 3}, {3, 1}, {3, 2}};

}  // namespace

TEST_CASE("essential product examples") {
  CHECK(essential_product({2, 1}).to_string() == "x1");
  CHECK(essential_product({2, 2}).to_string() == "x1^2*x2 + x1*x2^2");
  CHECK(essential_product({3, 1}).to_string() == "2*y1^2");
  CHECK(essential_product({3, 2}).to_string() == "y1^6*y2^2 + y1^4*y2^4 + y1^2*y2^6");
}

TEST_CASE("essential products agree with dense multiplication") {
  for (const auto& [ell, n] : kCases) REQUIRE(essential_product({ell, n}).terms() == dense_essential(ell, n));
  CHECK(essential_product({2, 4}).terms() == dense_essential(2, 4));
  CHECK(essential_product({5, 1}).terms() == dense_essential(5, 1));
}

TEST_CASE("essential product input limits") {
  CHECK_THROWS(essential_product({4, 1}));
  CHECK_THROWS(essential_product({2, 0}));
  CHECK_THROWS(essential_product({3, 7}));  // 3^7 above the default bound
  CHECK_NOTHROW(essential_product({3, 3}));
}

TEST_CASE("restriction examples") {
  const GradedAlgebraSpec s{2, 2};
  const GradedElement x1 = GradedElement::polynomial_generator(s, 0);
  const GradedElement x2 = GradedElement::polynomial_generator(s, 1);
  const GradedElement r = restrict(x1 * x2, {{1}, {1}});
  CHECK(r.to_string() == "x1^2");
  CHECK(restrict(essential_product(s), {{1}, {1}}).is_zero());
  CHECK(restrict(essential_product(s), {{1}, {0}}).is_zero());

  const GradedAlgebraSpec t{3, 2};
  const GradedElement y2 = GradedElement::polynomial_generator(t, 1);
  CHECK(restrict(y2, {{1}, {2}}).to_string() == "2*y1");
  const GradedElement z2 = GradedElement::exterior_generator(t, 1);
  CHECK(restrict(z2, {{1}, {2}}).to_string() == "2*x1");

  CHECK_THROWS(restrict(x1, {{1, 1}, {1, 1}}));  // dependent columns
  CHECK_THROWS(restrict(x1, {{1}}));
}

TEST_CASE("proper subgroup counts") {
  // subspaces of dimension 0..n-1 of F_ell^n
  CHECK(proper_subgroups(2, 1).size() == 1);
  CHECK(proper_subgroups(2, 2).size() == 1 + 3);
  CHECK(proper_subgroups(2, 3).size() == 1 + 7 + 7);
  CHECK(proper_subgroups(3, 2).size() == 1 + 4);
  CHECK(proper_subgroups(3, 3).size() == 1 + 13 + 13);
}

TEST_CASE("Weyl invariance and regularity examples") {
  const GradedAlgebraSpec s{2, 2};
  const GradedElement x1 = GradedElement::polynomial_generator(s, 0);
  CHECK_FALSE(weyl_invariance(x1));
  CHECK(weyl_invariance(x1 * GradedElement::polynomial_generator(s, 1)));
  CHECK(permute(x1, {1, 0}) == GradedElement::polynomial_generator(s, 1));

  const GradedAlgebraSpec t{3, 1};
  CHECK(regularity_check(essential_product(t)));
  CHECK_FALSE(regularity_check(GradedElement::exterior_generator(t, 0)));
  CHECK_FALSE(regularity_check(GradedElement(t)));
  CHECK_FALSE(regularity_check(GradedElement::polynomial_generator(t, 0) * GradedElement::exterior_generator(t, 0)));
  CHECK(regularity_check(x1));
}

TEST_CASE("essential products vanish on every proper subgroup") {
  for (const auto& [ell, n] : kCases) {
    const GradedElement e = essential_product({ell, n});
    for (const SubgroupMatrix& m : proper_subgroups(ell, n)) REQUIRE(restrict(e, m).is_zero());
  }
}

TEST_CASE("essential products are invariant under every permutation") {
  for (const auto& [ell, n] : kCases) {
    const GradedElement e = essential_product({ell, n});
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
      REQUIRE(permute(e, perm) == e);
    } while (std::next_permutation(perm.begin(), perm.end()));
    REQUIRE(weyl_invariance(e));
  }
}

TEST_CASE("essential products have the expected degree and are regular") {
  for (const auto& [ell, n] : kCases) {
    const GradedElement e = essential_product({ell, n});
    Int count = 1;
    for (std::size_t i = 0; i < n; ++i) count *= ell;
    REQUIRE(e.degree());
    REQUIRE(*e.degree() == (count - 1) * (ell == 2 ? 1 : 2));
    REQUIRE(regularity_check(e));
    if (ell == 2) REQUIRE(weyl_invariance(e * e));
  }
}
