#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "ftq/integer.hpp"

namespace ftq {

/// Coordinates of a group element with respect to the canonical generators.
using Element = std::vector<Int>;

inline constexpr std::size_t kDefaultEnumerationBound = 1'000'000;

class EnumerationLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// left * m * right = diag(diag), with left_inv / right_inv the exact inverses.
/// Transforms stay in arbitrary precision; callers narrow what they keep.
struct SmithForm {
  BigMatrix left;
  BigMatrix left_inv;
  std::vector<Int> diag;  // length min(rows, cols); d1 | d2 | ..., zeros last
  BigMatrix right;
  BigMatrix right_inv;

  std::size_t rank() const;
};

SmithForm smith_normal_form(const IntMatrix& m);

/// Columns form a Z-basis of {v : m v = 0}.
IntMatrix integer_kernel(const IntMatrix& m);

/// Z^free_rank + sum_i Z/invariant_factors[i], in canonical form.
///
/// Generators are ordered torsion first (in divisibility order), then free.
class FinGenAbGroup {
 public:
  FinGenAbGroup() = default;
  FinGenAbGroup(std::size_t free_rank, std::vector<Int> invariant_factors);

  static FinGenAbGroup cyclic(Int n);
  static FinGenAbGroup free(std::size_t rank);

  std::size_t free_rank() const { return free_rank_; }
  const std::vector<Int>& invariant_factors() const { return invariant_factors_; }
  std::size_t torsion_rank() const { return invariant_factors_.size(); }
  std::size_t num_generators() const { return free_rank_ + invariant_factors_.size(); }
  bool is_finite() const { return free_rank_ == 0; }
  bool is_trivial() const { return num_generators() == 0; }

  /// Order of generator i, 0 for a free generator.
  Int generator_order(std::size_t i) const;

  /// Group order; throws for infinite groups.
  Int order() const;

  Element zero() const { return Element(num_generators(), 0); }
  Element reduce(Element x) const;
  bool is_reduced(const Element& x) const;
  Element add(const Element& x, const Element& y) const;
  Element negate(const Element& x) const;
  Element scale(const Element& x, Int k) const;
  bool is_zero(const Element& x) const;

  /// Diagonal relation matrix: num_generators() x torsion_rank().
  IntMatrix relation_matrix() const;

  /// All elements in mixed-radix order; requires a finite group of order <= bound.
  std::vector<Element> elements(std::size_t bound = kDefaultEnumerationBound) const;
  /// Position of a reduced element of a finite group in elements().
  std::size_t index_of(const Element& x) const;

  std::string to_string() const;

  bool operator==(const FinGenAbGroup&) const = default;

 private:
  std::size_t free_rank_ = 0;
  std::vector<Int> invariant_factors_;
};

/// Z^k / (column span of a relation matrix) together with the coordinate change.
struct Quotient {
  FinGenAbGroup group;
  IntMatrix to_canonical;    // group generators x k : Z^k -> group (reduce after applying)
  IntMatrix from_canonical;  // k x group generators : a lift of each canonical generator
};

Quotient quotient_by_relations(const IntMatrix& relations);

/// Homomorphism given by an integer matrix (codomain generators x domain generators).
class GroupHom {
 public:
  GroupHom() = default;
  GroupHom(FinGenAbGroup domain, FinGenAbGroup codomain, IntMatrix matrix);

  static GroupHom identity(const FinGenAbGroup& g);
  static GroupHom zero(const FinGenAbGroup& domain, const FinGenAbGroup& codomain);

  const FinGenAbGroup& domain() const { return domain_; }
  const FinGenAbGroup& codomain() const { return codomain_; }
  const IntMatrix& matrix() const { return matrix_; }

  Element operator()(const Element& x) const;

  /// (*this) o inner
  GroupHom compose(const GroupHom& inner) const;

  bool operator==(const GroupHom&) const = default;

 private:
  FinGenAbGroup domain_;
  FinGenAbGroup codomain_;
  IntMatrix matrix_;  // columns reduced modulo the codomain relations
};

struct KernelResult {
  FinGenAbGroup group;
  GroupHom inclusion;
};

struct CokernelResult {
  FinGenAbGroup group;
  GroupHom projection;
};

KernelResult kernel(const GroupHom& f);
CokernelResult cokernel(const GroupHom& f);

/// Decides y in image(f) through the Smith form of [matrix | codomain relations].
bool contains_in_image(const GroupHom& f, const Element& y);

std::size_t mod_ell_dimension(const FinGenAbGroup& g, Int ell);

/// Direct sum g + h, re-canonicalised.  from_canonical maps canonical
/// generators to coordinates in (g generators, h generators).
Quotient direct_sum(const FinGenAbGroup& g, const FinGenAbGroup& h);

/// Endomorphism whose square is the identity.
class Involution {
 public:
  explicit Involution(GroupHom underlying);

  static Involution negation(const FinGenAbGroup& g);
  static Involution identity(const FinGenAbGroup& g);

  const GroupHom& underlying() const { return hom_; }
  const FinGenAbGroup& group() const { return hom_.domain(); }
  Element operator()(const Element& x) const { return hom_(x); }

  bool operator==(const Involution&) const = default;

 private:
  GroupHom hom_;
};

struct Orbit {
  std::vector<Element> members;
  bool fixed = false;
};

/// Orbits of s on a finite group, ordered by their first element in enumeration order.
std::vector<Orbit> involution_orbits(const FinGenAbGroup& g, const Involution& s,
                                     std::size_t bound = kDefaultEnumerationBound);

std::string element_to_string(const Element& x);

}  // namespace ftq
