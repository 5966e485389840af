#pragma once

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "ftq/abelian.hpp"
#include "ftq/arithdata.hpp"
#include "ftq/curve.hpp"

namespace ftq {

inline constexpr Int kDefaultDegreeBound = 12;

/// Graded models of the direct summands.
///
///   NonInvariant(d)  F[a, a^-1] (x) Ext(d),            |a| = 2, exterior gens in degree 1
///   Invariant(d)     Z/2-fixed part of NonInvariant(d), Z/2 negating a and every exterior gen
///   UnitsFF(r)       F[b] (x) Ext(1) (x) Ext(r),        |b| = 2
///   MonomialFF(r)    Z/2-fixed part of UnitsFF(r)
enum class Shape { NonInvariant, Invariant, UnitsFF, MonomialFF };

std::string shape_name(Shape s);

struct ComponentRing {
  Shape shape = Shape::NonInvariant;
  std::size_t param = 0;  // d for the number-field shapes, r for the function-field shapes
  std::string origin;

  /// Laurent (Farrell-Tate) shapes are 4-periodic in every degree.
  bool is_laurent() const { return shape == Shape::NonInvariant || shape == Shape::Invariant; }
  char param_name() const { return is_laurent() ? 'd' : 'r'; }
  bool operator==(const ComponentRing& o) const { return shape == o.shape && param == o.param; }
};

/// Dimension over F_ell of the degree-n part.
Int graded_dimension(const ComponentRing& c, Int n);

enum class VerdictKind { Nonvanishing, Detection, QuillenFreeness, RefinedGate };
enum class Outcome { holds, fails, inconclusive };

std::string to_string(Outcome o);

struct Witness {
  std::optional<Int> degree;
  Int source_dimension = 0;
  Int target_dimension = 0;
  std::vector<std::string> violated;
};

struct Verdict {
  VerdictKind kind = VerdictKind::Nonvanishing;
  Outcome outcome = Outcome::inconclusive;
  std::optional<Witness> witness;  // always present when outcome == fails
  std::string note;
};

Verdict nonvanishing(const ArithmeticDatum& d);

/// A conjugacy class of order-ell elements, as a point of coker(Nm1) x ker(Nm0).
struct ClassElement {
  Element coker_part;
  Element kernel_part;
  bool operator==(const ClassElement&) const = default;
};

struct ConjugacyClasses {
  Int order = 0;
  FinGenAbGroup coker_nm1;
  FinGenAbGroup ker_nm0;
  /// Product set, kernel coordinate outermost; empty unless materialized.
  std::vector<ClassElement> elements;
  bool materialized = false;
};

/// Requires nonvanishing; the extension class is recorded only through its two ends.
ConjugacyClasses conjugacy_classes(const ArithmeticDatum& d, std::size_t bound = kDefaultEnumerationBound);

struct SubgroupClass {
  std::vector<ClassElement> members;
  bool invariant = false;
};

/// Orbits of sigma acting diagonally (trivially on the 2-torsion coker(Nm1)).
std::vector<SubgroupClass> subgroup_classes(const ArithmeticDatum& d, std::size_t bound = kDefaultEnumerationBound);

ComponentRing component_ring(const SubgroupClass& cls, const ArithmeticDatum& d);

struct NumberFieldContext {
  Int ell = 0;
  std::size_t unit_rank_K = 0;
};

struct FunctionFieldContext {
  CurveSpec curve;
  Int q = 0;
  Int ell = 0;
  FinGenAbGroup picard;
};

struct Decomposition {
  std::vector<ComponentRing> components;
  std::variant<NumberFieldContext, FunctionFieldContext> context;
  bool nonvanishing = false;
  std::vector<std::string> advisories;
};

Decomposition decompose_number_field(const ArithmeticDatum& d);
Decomposition decompose_function_field(const CurveSpec& c, const FiniteField& f, Int ell);

/// Basis degrees of one component over the degree-4 periodic base ring
/// (F[a^2, a^-2] for the Laurent shapes, F[b^2] for the ordinary ones).
struct ComponentBasis {
  std::map<Int, Int> degrees;  // degree -> multiplicity
  bool laurent = true;

  Int rank() const;
};

struct FreenessCertificate {
  std::vector<ComponentBasis> components;
  Int verified_up_to = kDefaultDegreeBound;
  bool valid = false;
  std::optional<std::pair<std::size_t, Int>> first_failure;  // (component, degree)
  std::string c2_image;
  bool c2_nonzerodivisor = false;
};

ComponentBasis basis_over_periodic_base(const ComponentRing& c);

/// Rank of the free module in degree n: basis degrees congruent to n mod 4
/// (and <= n for the ordinary shapes).
Int certified_dimension(const ComponentBasis& b, Int n);

FreenessCertificate freeness_certificate(const Decomposition& dec, Int up_to = kDefaultDegreeBound);

/// Compares the summed components against one copy of NonInvariant(unit_rank_K).
/// Scans degrees 0..up_to, then -1..-up_to; never returns holds.
Verdict detection_verdict(const ArithmeticDatum& d, const Decomposition& dec, Int up_to = kDefaultDegreeBound);

enum class Hypothesis { holds, fails, unknown };

struct GateParams {
  Int ell = 0;
  Int n = 2;
  bool zeta_in_K = false;
  bool S_contains_infinite = true;
  bool S_contains_ell = false;
  Hypothesis detection = Hypothesis::unknown;
};

Verdict refined_gate(const GateParams& p);

// ---------------------------------------------------------------------------
// Line-oriented reports: "KEY<TAB>value".

enum class OutputMode { machine, human };

struct Report {
  std::vector<std::pair<std::string, std::string>> lines;

  void add(std::string key, std::string value) { lines.emplace_back(std::move(key), std::move(value)); }
  std::string render(OutputMode mode = OutputMode::machine, const std::string& title = {}) const;
};

std::string dims_field(const ComponentRing& c, Int lo = -4, Int hi = 12);

Report number_field_report(const ArithmeticDatum& d, Int degree_bound = kDefaultDegreeBound, Int gl_rank = 2);
Report function_field_report(const CurveSpec& c, const FiniteField& f, Int ell, Int degree_bound = kDefaultDegreeBound);

}  // namespace ftq
