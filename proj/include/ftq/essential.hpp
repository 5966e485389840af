#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ftq/integer.hpp"

namespace ftq {

/// Mod-ell cohomology of (Z/ell)^n.
///
/// ell = 2: F_2[x_1..x_n], |x_i| = 1.
/// ell odd: F_ell[y_1..y_n] (x) Ext(x_1..x_n), |y_i| = 2, |x_i| = 1.
struct GradedAlgebraSpec {
  Int ell = 2;
  std::size_t n = 1;

  void validate() const;
  bool odd() const { return ell != 2; }
  /// Degree of a polynomial generator.
  Int polynomial_degree() const { return odd() ? 2 : 1; }
  bool operator==(const GradedAlgebraSpec&) const = default;
};

/// Polynomial exponents plus a set of exterior generators (odd ell only).
struct Monomial {
  std::vector<std::uint32_t> exponents;
  std::uint32_t exterior = 0;  // bit i set <=> x_i present

  auto operator<=>(const Monomial&) const = default;
};

class GradedElement {
 public:
  explicit GradedElement(GradedAlgebraSpec spec);

  static GradedElement constant(const GradedAlgebraSpec& spec, Int c);
  /// Polynomial generator: x_i for ell = 2, y_i for odd ell.
  static GradedElement polynomial_generator(const GradedAlgebraSpec& spec, std::size_t i);
  /// Exterior generator x_i; odd ell only.
  static GradedElement exterior_generator(const GradedAlgebraSpec& spec, std::size_t i);

  const GradedAlgebraSpec& spec() const { return spec_; }
  const std::map<Monomial, Int>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  /// Degree when homogeneous (zero has no degree).
  std::optional<Int> degree() const;
  Int monomial_degree(const Monomial& m) const;

  GradedElement operator+(const GradedElement& o) const;
  GradedElement operator-(const GradedElement& o) const;
  GradedElement operator*(const GradedElement& o) const;
  GradedElement scaled(Int c) const;
  bool operator==(const GradedElement& o) const { return spec_ == o.spec_ && terms_ == o.terms_; }

  void add_term(const Monomial& m, Int c);

  /// Leading terms first, e.g. "x1^2*x2 + x1*x2^2" or "2*y1^2".
  std::string to_string() const;

 private:
  GradedAlgebraSpec spec_;
  std::map<Monomial, Int> terms_;  // coefficients in [1, ell)
};

/// n x k matrix over F_ell; column j is the j-th basis vector of the subgroup.
using SubgroupMatrix = std::vector<std::vector<Int>>;

inline constexpr Int kDefaultEssentialBound = 729;  // ell^n <= 3^6

/// Product of all nonzero classes in degree 1 (ell = 2) or in the span of the
/// y_i in degree 2 (odd ell).
GradedElement essential_product(const GradedAlgebraSpec& spec, Int bound = kDefaultEssentialBound);

/// Rank of a matrix over F_ell.
std::size_t rank_mod(const SubgroupMatrix& m, Int ell);

/// Image under the restriction to the subgroup spanned by the columns of m.
GradedElement restrict(const GradedElement& e, const SubgroupMatrix& m);

/// Every proper subgroup of (Z/ell)^n, one reduced-echelon basis each.
std::vector<SubgroupMatrix> proper_subgroups(Int ell, std::size_t n);

/// Action of a coordinate permutation: generator i goes to generator perm[i].
GradedElement permute(const GradedElement& e, const std::vector<std::size_t>& perm);

bool weyl_invariance(const GradedElement& e);

/// Nonzero and inside the central polynomial subring.
bool regularity_check(const GradedElement& e);

}  // namespace ftq
