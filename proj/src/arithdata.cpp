#include <algorithm>

#include "ftq/arithdata.hpp"

namespace ftq {

void PlaceSpec::validate() const {
  if (real_places == 0 && complex_places == 0 && finite_places.empty())
    throw std::invalid_argument("place set S must be non-empty");
  for (const auto& [p, f] : finite_places)
    if (!is_prime(p) || f < 1) throw std::invalid_argument("finite place needs a prime residue characteristic and degree >= 1");
}

std::size_t s_unit_rank(const PlaceSpec& p) {
  p.validate();
  return p.real_places + p.complex_places + p.finite_places.size() - 1;
}

GroupHom sum_map(const FinGenAbGroup& g) {
  const Quotient q = direct_sum(g, g);
  const std::size_t n = g.num_generators();
  IntMatrix m(n, q.group.num_generators());
  for (std::size_t c = 0; c < q.group.num_generators(); ++c)
    for (std::size_t i = 0; i < n; ++i) m(i, c) = checked_add(q.from_canonical(i, c), q.from_canonical(n + i, c));
  return {q.group, g, std::move(m)};
}

ArithmeticDatum build_split_datum(const FinGenAbGroup& cl_K, std::size_t unit_rank_K, Int ell) {
  if (ell == 2 || !is_prime(ell)) throw std::invalid_argument("ell must be an odd prime, got " + std::to_string(ell));
  if (!cl_K.is_finite()) throw std::invalid_argument("class group must be finite");
  cl_K.elements();  // enumeration precondition

  ArithmeticDatum d;
  d.ell = ell;
  d.trace_in_K = true;
  d.split = true;
  d.cl_K = cl_K;
  d.nm0 = sum_map(cl_K);
  d.cl_A = d.nm0.domain();
  d.steinitz = cl_K.zero();
  d.unit_rank_K = unit_rank_K;
  d.ker_nm1_rank = unit_rank_K;
  d.coker_nm1 = FinGenAbGroup{};
  d.sigma = Involution::negation(kernel(d.nm0).group);
  d.s_contains_ell = true;
  for (const char* key : {"ell", "trace_in_K", "split", "cl_K", "cl_A", "nm0", "steinitz", "unit_rank_K",
                          "ker_nm1_rank", "coker_nm1", "sigma"})
    d.provenance[key] = Provenance::computed;
  return d;
}

void ArithmeticDatum::validate() const {
  if (ell == 2 || !is_prime(ell)) throw ConsistencyError("ell_odd_prime", "ell = " + std::to_string(ell));
  if (split && !trace_in_K) throw ConsistencyError("split_implies_trace", "split = true requires trace_in_K = true");
  if (!cl_K.is_finite()) throw ConsistencyError("cl_K_finite", "cl_K = " + cl_K.to_string());
  if (!cl_A.is_finite()) throw ConsistencyError("cl_A_finite", "cl_A = " + cl_A.to_string());
  if (!(nm0.domain() == cl_A)) throw ConsistencyError("nm0_domain", "nm0 must start at cl_A");
  if (!(nm0.codomain() == cl_K)) throw ConsistencyError("nm0_codomain", "nm0 must land in cl_K");
  if (!cl_K.is_reduced(steinitz))
    throw ConsistencyError("steinitz_in_cl_K", "coordinates " + element_to_string(steinitz) + " do not name an element of " + cl_K.to_string());
  if (!coker_nm1.is_finite()) throw ConsistencyError("coker_nm1_finite", "coker_nm1 = " + coker_nm1.to_string());
  if (std::any_of(coker_nm1.invariant_factors().begin(), coker_nm1.invariant_factors().end(), [](Int d) { return d != 2; }))
    throw ConsistencyError("coker_nm1_exponent_2", "coker_nm1 = " + coker_nm1.to_string() + " is not killed by 2");

  const KernelResult ker = kernel(nm0);
  if (!(sigma.group() == ker.group))
    throw ConsistencyError("sigma_on_ker_nm0", "sigma acts on " + sigma.group().to_string() + " but ker(nm0) = " + ker.group.to_string());

  if (!split) return;
  if (!(cl_A == direct_sum(cl_K, cl_K).group))
    throw ConsistencyError("split_cl_A", "cl_A = " + cl_A.to_string() + " is not cl_K + cl_K");
  if (!cokernel(nm0).group.is_trivial()) throw ConsistencyError("split_nm0_surjective", "nm0 is not onto cl_K");
  if (!(ker.group == cl_K)) throw ConsistencyError("split_nm0_kernel", "ker(nm0) = " + ker.group.to_string() + " differs from cl_K");
  if (!cl_K.is_zero(steinitz)) throw ConsistencyError("split_steinitz_zero", "steinitz = " + element_to_string(steinitz));
  if (!coker_nm1.is_trivial()) throw ConsistencyError("split_coker_nm1_trivial", "coker_nm1 = " + coker_nm1.to_string());
  if (ker_nm1_rank != unit_rank_K)
    throw ConsistencyError("split_ker_nm1_rank", "ker_nm1_rank = " + std::to_string(ker_nm1_rank) +
                                                     " but unit_rank_K = " + std::to_string(unit_rank_K));
  if (!(sigma == Involution::negation(ker.group))) throw ConsistencyError("split_sigma_negation", "sigma must be negation");
}

}  // namespace ftq
