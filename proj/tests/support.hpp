#pragma once

// Random inputs shared by the unit tests and the acceptance binary.

#include <random>
#include <string>
#include <vector>

#include "ftq/arithdata.hpp"
#include "ftq/cohomengine.hpp"
#include "ftq/oracles.hpp"

namespace ftq::testing {

inline Int random_odd_prime(std::mt19937_64& rng) {
  static const std::vector<Int> primes = {3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47};
  return primes[std::uniform_int_distribution<std::size_t>(0, primes.size() - 1)(rng)];
}

inline Element random_element(std::mt19937_64& rng, const FinGenAbGroup& g) {
  Element x(g.num_generators(), 0);
  for (std::size_t i = 0; i < x.size(); ++i) {
    const Int d = g.generator_order(i);
    x[i] = d == 0 ? std::uniform_int_distribution<Int>(-6, 6)(rng) : std::uniform_int_distribution<Int>(0, d - 1)(rng);
  }
  return x;
}

/// A valid datum that need not be split: arbitrary finite class groups, an
/// arbitrary norm map, a Steinitz class anywhere in cl_K, and sigma either
/// negation or the identity on ker(nm0).
inline ArithmeticDatum random_datum(std::mt19937_64& rng, Int max_order = 200) {
  ArithmeticDatum d;
  d.ell = random_odd_prime(rng);
  d.trace_in_K = std::bernoulli_distribution(0.8)(rng);
  d.split = false;
  d.cl_K = oracle::random_finite_group(rng, max_order);
  d.cl_A = oracle::random_finite_group(rng, max_order);
  d.nm0 = oracle::random_hom(rng, d.cl_A, d.cl_K);
  d.steinitz = random_element(rng, d.cl_K);
  d.unit_rank_K = std::uniform_int_distribution<std::size_t>(0, 6)(rng);
  d.ker_nm1_rank = std::uniform_int_distribution<std::size_t>(0, 6)(rng);
  const std::size_t two_rank = std::uniform_int_distribution<std::size_t>(0, 2)(rng);
  d.coker_nm1 = FinGenAbGroup(0, std::vector<Int>(two_rank, 2));
  const FinGenAbGroup ker = kernel(d.nm0).group;
  d.sigma = std::bernoulli_distribution(0.5)(rng) ? Involution::negation(ker) : Involution::identity(ker);
  d.s_contains_ell = std::bernoulli_distribution(0.5)(rng);
  d.validate();
  return d;
}

inline ArithmeticDatum random_split_datum(std::mt19937_64& rng, Int max_order = 200) {
  const FinGenAbGroup cl_K = oracle::random_finite_group(rng, max_order);
  const std::size_t rank = std::uniform_int_distribution<std::size_t>(0, 6)(rng);
  return build_split_datum(cl_K, rank, random_odd_prime(rng));
}

/// Curve input for which ell | q - 1 holds: P^1 minus rational points.
struct RandomCurve {
  CurveSpec curve;
  Int q = 0;
  Int ell = 0;
};

inline RandomCurve random_p1_curve(std::mt19937_64& rng) {
  // (q, ell) with ell | q - 1 and ell odd
  static const std::vector<std::pair<Int, Int>> fields = {{7, 3}, {11, 5}, {13, 3}, {19, 3}, {25, 3}, {31, 5}, {29, 7}};
  const auto [q, ell] = fields[std::uniform_int_distribution<std::size_t>(0, fields.size() - 1)(rng)];
  const std::size_t s = std::uniform_int_distribution<std::size_t>(1, 7)(rng);
  std::vector<Int> degrees;
  std::uniform_int_distribution<Int> deg(1, 3);
  for (std::size_t i = 0; i < s; ++i) degrees.push_back(deg(rng));
  return {P1Minus{degrees}, q, ell};
}

}  // namespace ftq::testing
