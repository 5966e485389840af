#include "ftq/cohomengine.hpp"

#include <sstream>
#include <stdexcept>

namespace ftq {

namespace {

Int binomial(Int n, Int k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  Int r = 1;
  for (Int i = 1; i <= k; ++i) r = checked_mul(r, n - k + i) / i;
  return r;
}

bool even(Int x) { return mod_floor(x, 2) == 0; }

std::string join_tokens(const std::vector<std::string>& v) {
  if (v.empty()) return "none";
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + v[i];
  return out;
}

}  // namespace

std::string shape_name(Shape s) {
  switch (s) {
    case Shape::NonInvariant: return "NonInvariant";
    case Shape::Invariant: return "Invariant";
    case Shape::UnitsFF: return "UnitsFF";
    case Shape::MonomialFF: return "MonomialFF";
  }
  return "?";
}

std::string to_string(Outcome o) {
  switch (o) {
    case Outcome::holds: return "holds";
    case Outcome::fails: return "fails";
    case Outcome::inconclusive: return "inconclusive";
  }
  return "?";
}

Int graded_dimension(const ComponentRing& c, Int n) {
  const auto p = static_cast<Int>(c.param);
  Int dim = 0;
  switch (c.shape) {
    case Shape::NonInvariant:
      for (Int k = 0; k <= p; ++k)
        if (even(n - k)) dim = checked_add(dim, binomial(p, k));
      return dim;
    case Shape::Invariant:
      for (Int k = 0; k <= p; ++k) {
        if (!even(n - k)) continue;
        const Int m = (n - k) / 2;
        if (even(m + k)) dim = checked_add(dim, binomial(p, k));
      }
      return dim;
    case Shape::UnitsFF:
    case Shape::MonomialFF:
      if (n < 0) return 0;
      for (Int delta = 0; delta <= 1; ++delta)
        for (Int j = 0; j <= p; ++j) {
          const Int rest = n - delta - j;
          if (rest < 0 || !even(rest)) continue;
          if (c.shape == Shape::MonomialFF && !even(rest / 2 + delta + j)) continue;
          dim = checked_add(dim, binomial(p, j));
        }
      return dim;
  }
  return 0;
}

// ---------------------------------------------------------------------------

Verdict nonvanishing(const ArithmeticDatum& d) {
  Verdict v;
  v.kind = VerdictKind::Nonvanishing;
  if (!d.trace_in_K) {
    v.outcome = Outcome::fails;
    v.witness = Witness{.degree = std::nullopt, .violated = {"trace_in_K"}};
    v.note = "zeta_ell + zeta_ell^-1 not in K";
    return v;
  }
  if (!contains_in_image(d.nm0, d.steinitz)) {
    v.outcome = Outcome::fails;
    v.witness = Witness{.degree = std::nullopt, .violated = {"steinitz_in_image_nm0"}};
    v.note = "Steinitz class " + element_to_string(d.steinitz) + " not in the image of nm0";
    return v;
  }
  v.outcome = Outcome::holds;
  return v;
}

ConjugacyClasses conjugacy_classes(const ArithmeticDatum& d, std::size_t bound) {
  if (nonvanishing(d).outcome != Outcome::holds)
    throw std::domain_error("conjugacy classes requested for a datum with vanishing cohomology");
  ConjugacyClasses out;
  out.coker_nm1 = d.coker_nm1;
  out.ker_nm0 = kernel(d.nm0).group;
  if (!out.ker_nm0.is_finite()) throw std::domain_error("ker(nm0) is infinite");
  out.order = checked_mul(out.coker_nm1.order(), out.ker_nm0.order());
  if (out.order <= static_cast<Int>(bound)) {
    const auto ks = out.ker_nm0.elements(bound);
    const auto cs = out.coker_nm1.elements(bound);
    out.elements.reserve(static_cast<std::size_t>(out.order));
    for (const auto& k : ks)
      for (const auto& c : cs) out.elements.push_back({c, k});
    out.materialized = true;
  }
  return out;
}

std::vector<SubgroupClass> subgroup_classes(const ArithmeticDatum& d, std::size_t bound) {
  const ConjugacyClasses cc = conjugacy_classes(d, bound);
  if (!cc.materialized) throw EnumerationLimitError("conjugacy class set of order " + std::to_string(cc.order) + " exceeds enumeration bound");
  const std::size_t nc = static_cast<std::size_t>(cc.coker_nm1.order());
  std::vector<bool> seen(cc.elements.size(), false);
  std::vector<SubgroupClass> out;
  for (std::size_t i = 0; i < cc.elements.size(); ++i) {
    if (seen[i]) continue;
    seen[i] = true;
    const ClassElement& x = cc.elements[i];
    ClassElement image{x.coker_part, d.sigma(x.kernel_part)};
    const std::size_t j = cc.ker_nm0.index_of(image.kernel_part) * nc + cc.coker_nm1.index_of(image.coker_part);
    SubgroupClass cls;
    cls.members.push_back(x);
    if (j == i) {
      cls.invariant = true;
    } else {
      seen[j] = true;
      cls.members.push_back(std::move(image));
    }
    out.push_back(std::move(cls));
  }
  return out;
}

ComponentRing component_ring(const SubgroupClass& cls, const ArithmeticDatum& d) {
  ComponentRing c;
  c.shape = cls.invariant ? Shape::Invariant : Shape::NonInvariant;
  c.param = d.ker_nm1_rank;
  const ClassElement& rep = cls.members.front();
  c.origin = "ker=" + element_to_string(rep.kernel_part) + " coker=" + element_to_string(rep.coker_part);
  return c;
}

Decomposition decompose_number_field(const ArithmeticDatum& d) {
  Decomposition dec;
  dec.context = NumberFieldContext{d.ell, d.unit_rank_K};
  dec.nonvanishing = nonvanishing(d).outcome == Outcome::holds;
  if (!dec.nonvanishing) return dec;
  for (const SubgroupClass& cls : subgroup_classes(d)) dec.components.push_back(component_ring(cls, d));
  return dec;
}

Decomposition decompose_function_field(const CurveSpec& c, const FiniteField& f, Int ell) {
  if (ell == 2 || !is_prime(ell)) throw std::invalid_argument("ell must be an odd prime, got " + std::to_string(ell));
  if ((f.q() - 1) % ell != 0)
    throw std::invalid_argument("ell = " + std::to_string(ell) + " does not divide q - 1 = " + std::to_string(f.q() - 1));

  std::size_t unit_rank = 0;
  if (const auto* p1 = std::get_if<P1Minus>(&c)) {
    if (p1->puncture_degrees.empty()) throw std::invalid_argument("P1 minus points needs at least one puncture");
    std::map<Int, Int> by_degree;
    for (Int deg : p1->puncture_degrees) {
      if (deg < 1) throw std::invalid_argument("puncture degrees must be positive");
      ++by_degree[deg];
    }
    for (const auto& [deg, count] : by_degree)
      if (count > closed_points_p1(f.q(), deg))
        throw std::invalid_argument("P1 over F_" + std::to_string(f.q()) + " has only " + std::to_string(closed_points_p1(f.q(), deg)) +
                                    " closed points of degree " + std::to_string(deg));
    unit_rank = p1->puncture_degrees.size() - 1;
  }

  const PicardData pic = picard(c, f);
  Decomposition dec;
  dec.nonvanishing = true;
  dec.context = FunctionFieldContext{c, f.q(), ell, pic.group};
  for (const PicardClass& cls : component_classes(pic)) {
    ComponentRing ring;
    ring.shape = cls.self_inverse ? Shape::MonomialFF : Shape::UnitsFF;
    ring.param = unit_rank;
    ring.origin = "pic=" + element_to_string(cls.members.front());
    dec.components.push_back(std::move(ring));
  }
  if (puncture_count(c) >= 4)
    dec.advisories.push_back("non_detectable_classes_expected punctures=" + std::to_string(puncture_count(c)) +
                             ": P1 minus >= 4 points carries classes not detected on tori or finite subgroups; "
                             "the decomposition describes only the part above the virtual cohomological dimension");
  dec.advisories.push_back(
      "ordinary_cohomology_model: components are ordinary cohomology of k[C]^x and monomial matrices; "
      "agreement with SL2(k[C]) holds for i greater than the virtual p'-cohomological dimension");
  return dec;
}

// ---------------------------------------------------------------------------

Int ComponentBasis::rank() const {
  Int r = 0;
  for (const auto& [deg, mult] : degrees) r = checked_add(r, mult);
  return r;
}

ComponentBasis basis_over_periodic_base(const ComponentRing& c) {
  const auto p = static_cast<Int>(c.param);
  ComponentBasis b;
  b.laurent = c.is_laurent();
  switch (c.shape) {
    case Shape::NonInvariant:
    case Shape::Invariant:
      // a^eps x_T with eps in {0, 1}
      for (Int eps = 0; eps <= 1; ++eps)
        for (Int k = 0; k <= p; ++k) {
          if (c.shape == Shape::Invariant && !even(eps + k)) continue;
          b.degrees[2 * eps + k] += binomial(p, k);
        }
      break;
    case Shape::UnitsFF:
    case Shape::MonomialFF:
      // b^eps a^delta x_T
      for (Int eps = 0; eps <= 1; ++eps)
        for (Int delta = 0; delta <= 1; ++delta)
          for (Int j = 0; j <= p; ++j) {
            if (c.shape == Shape::MonomialFF && !even(eps + delta + j)) continue;
            b.degrees[2 * eps + delta + j] += binomial(p, j);
          }
      break;
  }
  return b;
}

Int certified_dimension(const ComponentBasis& b, Int n) {
  Int dim = 0;
  for (const auto& [deg, mult] : b.degrees) {
    if (mod_floor(n - deg, 4) != 0) continue;
    if (!b.laurent && deg > n) continue;
    dim = checked_add(dim, mult);
  }
  return dim;
}

FreenessCertificate freeness_certificate(const Decomposition& dec, Int up_to) {
  FreenessCertificate cert;
  cert.verified_up_to = up_to;
  cert.valid = true;
  for (std::size_t i = 0; i < dec.components.size(); ++i) {
    const ComponentRing& c = dec.components[i];
    ComponentBasis b = basis_over_periodic_base(c);
    for (Int n = -up_to; n <= up_to && cert.valid; ++n)
      if (graded_dimension(c, n) != certified_dimension(b, n)) {
        cert.valid = false;
        cert.first_failure = std::make_pair(i, n);
      }
    cert.components.push_back(std::move(b));
  }
  const bool laurent = dec.components.empty() || dec.components.front().is_laurent();
  cert.c2_image = std::string("sum_of_") + (laurent ? "a2" : "b") + "^2_over_" + std::to_string(dec.components.size()) + "_components";
  cert.c2_nonzerodivisor = !dec.components.empty();
  return cert;
}

Verdict detection_verdict(const ArithmeticDatum& d, const Decomposition& dec, Int up_to) {
  Verdict v;
  v.kind = VerdictKind::Detection;
  v.outcome = Outcome::inconclusive;
  if (dec.components.empty()) {
    v.note = "empty decomposition, nothing to detect";
    return v;
  }
  const ComponentRing torus{Shape::NonInvariant, d.unit_rank_K, "diagonal torus"};
  auto check = [&](Int n) {
    Int source = 0;
    for (const ComponentRing& c : dec.components) source = checked_add(source, graded_dimension(c, n));
    const Int target = graded_dimension(torus, n);
    if (source > target) {
      v.outcome = Outcome::fails;
      v.witness = Witness{n, source, target, {}};
      v.note = "restriction to the diagonal torus cannot be injective in degree " + std::to_string(n);
      return true;
    }
    return false;
  };
  for (Int n = 0; n <= up_to; ++n)
    if (check(n)) return v;
  for (Int n = -1; n >= -up_to; --n)
    if (check(n)) return v;
  v.note = "dimension count does not obstruct detection up to degree " + std::to_string(up_to);
  return v;
}

Verdict refined_gate(const GateParams& p) {
  Verdict v;
  v.kind = VerdictKind::RefinedGate;
  std::vector<std::string> violated;
  if (!is_prime(p.ell)) violated.emplace_back("ell_prime");
  if (p.n < 1) violated.emplace_back("n_positive");
  if (!(p.n < p.ell)) violated.emplace_back("n_lt_ell");
  if (!p.zeta_in_K) violated.emplace_back("zeta_ell_in_K");
  if (!p.S_contains_infinite) violated.emplace_back("S_contains_infinite");
  if (!p.S_contains_ell) violated.emplace_back("S_contains_ell");
  if (p.detection == Hypothesis::fails) violated.emplace_back("detection");
  if (!violated.empty()) {
    v.outcome = Outcome::fails;
    v.witness = Witness{.degree = std::nullopt, .violated = std::move(violated)};
  } else if (p.detection == Hypothesis::unknown) {
    v.outcome = Outcome::inconclusive;
    v.note = "detection hypothesis not established";
  } else {
    v.outcome = Outcome::holds;
  }
  return v;
}

// ---------------------------------------------------------------------------

std::string Report::render(OutputMode mode, const std::string& title) const {
  std::ostringstream os;
  if (mode == OutputMode::human && !title.empty()) os << "== " << title << " ==\n";
  for (const auto& [key, value] : lines) {
    if (mode == OutputMode::machine)
      os << key << '\t' << value << '\n';
    else
      os << key << ": " << value << '\n';
  }
  return os.str();
}

std::string dims_field(const ComponentRing& c, Int lo, Int hi) {
  std::ostringstream os;
  os << "dims[" << lo << ".." << hi << "]=";
  for (Int n = lo; n <= hi; ++n) os << (n == lo ? "" : ",") << graded_dimension(c, n);
  return os.str();
}

namespace {

void add_components(Report& r, const Decomposition& dec, Int degree_bound) {
  for (std::size_t i = 0; i < dec.components.size(); ++i) {
    const ComponentRing& c = dec.components[i];
    r.add("COMPONENT", std::to_string(i) + " shape=" + shape_name(c.shape) + " " + c.param_name() + "=" + std::to_string(c.param) +
                           " " + dims_field(c, -4, degree_bound) + " origin=" + c.origin);
  }
  const FreenessCertificate cert = freeness_certificate(dec, degree_bound);
  for (std::size_t i = 0; i < cert.components.size(); ++i) {
    std::ostringstream os;
    os << "component=" << i << " basis_degrees=";
    bool first = true;
    for (const auto& [deg, mult] : cert.components[i].degrees) {
      os << (first ? "" : ",") << deg << ':' << mult;
      first = false;
    }
    os << " rank=" << cert.components[i].rank();
    r.add("FREENESS", os.str());
  }
  r.add("FREENESS", std::string("certificate=") + (cert.valid ? "valid" : "invalid") + " verified_up_to=" + std::to_string(cert.verified_up_to) +
                        " c2_image=" + cert.c2_image + " c2_nonzerodivisor=" + (cert.c2_nonzerodivisor ? "true" : "false"));
}

}  // namespace

Report number_field_report(const ArithmeticDatum& d, Int degree_bound, Int gl_rank) {
  Report r;
  const Verdict nv = nonvanishing(d);
  r.add("NONVANISHING", nv.outcome == Outcome::holds ? "holds" : "fails reason=" + join_tokens(nv.witness->violated));

  const Decomposition dec = decompose_number_field(d);
  if (dec.nonvanishing) {
    r.add("CCLASSES", std::to_string(conjugacy_classes(d).order));
    r.add("KCLASSES", std::to_string(dec.components.size()));
  } else {
    r.add("CCLASSES", "0");
    r.add("KCLASSES", "0");
  }
  add_components(r, dec, degree_bound);

  const Verdict det = detection_verdict(d, dec, degree_bound);
  if (det.outcome == Outcome::fails)
    r.add("DETECTION", "fails witness_degree=" + std::to_string(*det.witness->degree) + " source_dim=" + std::to_string(det.witness->source_dimension) +
                           " target_dim=" + std::to_string(det.witness->target_dimension));
  else
    r.add("DETECTION", "inconclusive witness_degree=none");

  GateParams gp;
  gp.ell = d.ell;
  gp.n = gl_rank;
  gp.zeta_in_K = d.split;
  gp.S_contains_infinite = true;
  gp.S_contains_ell = d.s_contains_ell;
  gp.detection = det.outcome == Outcome::fails ? Hypothesis::fails : Hypothesis::unknown;
  const Verdict gate = refined_gate(gp);
  r.add("GATE", to_string(gate.outcome) + " violated=" + (gate.witness ? join_tokens(gate.witness->violated) : "none"));
  return r;
}

Report function_field_report(const CurveSpec& c, const FiniteField& f, Int ell, Int degree_bound) {
  Report r;
  const Decomposition dec = decompose_function_field(c, f, ell);
  const auto& ctx = std::get<FunctionFieldContext>(dec.context);
  r.add("CURVE", describe(c) + " q=" + std::to_string(f.q()) + " ell=" + std::to_string(ell));
  r.add("PIC", ctx.picard.to_string() + " order=" + std::to_string(ctx.picard.order()));
  r.add("KCLASSES", std::to_string(dec.components.size()));
  add_components(r, dec, degree_bound);
  for (const std::string& a : dec.advisories) r.add("ADVISORY", a);
  return r;
}

}  // namespace ftq
