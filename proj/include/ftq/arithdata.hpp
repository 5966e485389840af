#pragma once

#include <cstddef>
#include <filesystem>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ftq/abelian.hpp"

namespace ftq {

// ---------------------------------------------------------------------------
// Binary quadratic forms and class groups of imaginary quadratic orders.

/// a x^2 + b x y + c y^2
struct QuadraticForm {
  Int a = 1, b = 0, c = 0;

  Int discriminant() const { return checked_sub(checked_mul(b, b), checked_mul(4, checked_mul(a, c))); }
  bool is_positive_definite() const { return a > 0 && discriminant() < 0; }
  bool is_reduced() const;
  std::string to_string() const;

  auto operator<=>(const QuadraticForm&) const = default;
};

QuadraticForm reduce(QuadraticForm f);

/// The principal form of discriminant d.
QuadraticForm principal_form(Int d);

/// Gauss composition of two primitive positive definite forms of equal
/// discriminant, returned in reduced form.
QuadraticForm compose(const QuadraticForm& f, const QuadraticForm& g);

QuadraticForm inverse(const QuadraticForm& f);

bool is_fundamental_discriminant(Int d);

/// Reduced forms, their composition table, and the group it presents.
struct FormClassGroup {
  Int discriminant = 0;
  std::vector<QuadraticForm> forms;              // sorted; forms[0] is principal
  std::vector<std::vector<std::size_t>> table;   // table[i][j] = index of forms[i]*forms[j]
  FinGenAbGroup group;
};

/// All reduced primitive forms of a negative discriminant, sorted.
std::vector<QuadraticForm> reduced_forms(Int d);

FormClassGroup form_class_group(Int d);
FinGenAbGroup class_group_imaginary_quadratic(Int d);

// ---------------------------------------------------------------------------
// Place sets and the arithmetic datum.

struct PlaceSpec {
  std::size_t real_places = 0;
  std::size_t complex_places = 0;
  std::vector<std::pair<Int, Int>> finite_places;  // (residue characteristic, residue degree)
  bool contains_places_over_ell = false;

  void validate() const;
};

/// Rank of the S-unit group: #infinite places + #finite places in S - 1.
std::size_t s_unit_rank(const PlaceSpec& p);

enum class Provenance { computed, ingested };

class ConsistencyError : public std::runtime_error {
 public:
  ConsistencyError(std::string invariant, const std::string& detail)
      : std::runtime_error("consistency violation [" + invariant + "]: " + detail), invariant_(std::move(invariant)) {}
  const std::string& invariant() const { return invariant_; }

 private:
  std::string invariant_;
};

class DatumParseError : public std::runtime_error {
 public:
  DatumParseError(std::string file, std::size_t line, std::size_t column, const std::string& msg)
      : std::runtime_error(file + ":" + std::to_string(line) + ":" + std::to_string(column) + ": " + msg),
        file_(std::move(file)),
        line_(line),
        column_(column) {}
  const std::string& file() const { return file_; }
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::string file_;
  std::size_t line_;
  std::size_t column_;
};

/// Number-theoretic package for (K, S, ell) as consumed by the engine.
///
/// nm0 maps cl_A -> cl_K; sigma acts on ker(nm0) in the canonical generators
/// produced by kernel().  coker_nm1 is 2-torsion because Nm(u) = u^2 for base units.
struct ArithmeticDatum {
  Int ell = 3;
  bool trace_in_K = true;
  bool split = true;
  FinGenAbGroup cl_K;
  FinGenAbGroup cl_A;
  GroupHom nm0;
  Element steinitz;
  std::size_t unit_rank_K = 0;
  std::size_t ker_nm1_rank = 0;
  FinGenAbGroup coker_nm1;
  Involution sigma{GroupHom{}};
  /// Optional: whether S contains the places over ell (feeds the refined gate only).
  bool s_contains_ell = false;
  std::map<std::string, Provenance> provenance;

  /// Throws ConsistencyError naming the first violated invariant.
  void validate() const;
};

/// Datum for the case where zeta_ell lies in K and A splits as O x O.
ArithmeticDatum build_split_datum(const FinGenAbGroup& cl_K, std::size_t unit_rank_K, Int ell);

/// Sum map g + g -> g written in the canonical generators of the direct sum.
GroupHom sum_map(const FinGenAbGroup& g);

ArithmeticDatum parse_datum(const std::string& text, const std::string& source_name = "<string>");
ArithmeticDatum load_datum(const std::filesystem::path& path);
std::string save_datum(const ArithmeticDatum& d);

}  // namespace ftq
