#pragma once

// Brute-force reference computations.  Nothing here calls the Smith form,
// kernel/cokernel, composition or closed-form dimension code it is used to check.

#include <map>
#include <random>
#include <vector>

#include "ftq/abelian.hpp"
#include "ftq/cohomengine.hpp"
#include "ftq/curve.hpp"

namespace ftq::oracle {

/// Invariant factors from determinantal divisors: D_k = gcd of all k x k minors,
/// d_k = D_k / D_{k-1}.  Zeros pad up to min(rows, cols).
std::vector<Int> determinantal_invariant_factors(const IntMatrix& m);

/// Number of elements killed by k, for every k in 1..max_k.
std::vector<Int> torsion_profile(const FinGenAbGroup& g, Int max_k);

struct EnumeratedMap {
  std::vector<Element> kernel;       // domain elements with f(x) = 0
  std::vector<Element> image;        // distinct images, enumeration order
  std::vector<Int> kernel_profile;   // #{x in ker : kx = 0}, k = 1..max_k
  std::vector<Int> coker_profile;    // #{y in C/im : ky = 0}, k = 1..max_k
};

EnumeratedMap enumerate_map(const GroupHom& f, Int max_k);

bool enumerated_contains(const EnumeratedMap& e, const Element& y);

/// Analytic class number of a negative fundamental discriminant (Dirichlet).
Int analytic_class_number(Int d);
Int kronecker_symbol(Int d, Int n);

/// Group axioms of a Cayley table with identity index 0.
bool cayley_table_is_abelian_group(const std::vector<std::vector<std::size_t>>& table);

/// #{(x, y) in F_q^2 : y^2 = x^3 + a x + b} + 1, by direct evaluation.
Int naive_point_count(const FiniteField& f, FiniteField::Elem a, FiniteField::Elem b);

/// Dimension by listing every monomial of the presentation in degree n.
Int enumerated_dimension(const ComponentRing& c, Int n);

// Random inputs for property checks.

FinGenAbGroup random_finite_group(std::mt19937_64& rng, Int max_order, std::size_t max_factors = 3);
GroupHom random_hom(std::mt19937_64& rng, const FinGenAbGroup& domain, const FinGenAbGroup& codomain);
IntMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, Int lo, Int hi);

}  // namespace ftq::oracle
