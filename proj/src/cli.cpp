#include "ftq/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "ftq/essential.hpp"
#include "ftq/oracles.hpp"

#ifndef FTQ_DEFAULT_FIXTURES_DIR
#define FTQ_DEFAULT_FIXTURES_DIR "data"
#endif

namespace ftq::cli {

namespace {

std::vector<Int> parse_int_list(const std::string& text) {
  std::vector<Int> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    tok.erase(std::remove_if(tok.begin(), tok.end(), [](unsigned char c) { return std::isspace(c); }), tok.end());
    if (tok.empty()) continue;
    std::size_t used = 0;
    const Int v = std::stoll(tok, &used);
    if (used != tok.size()) throw std::invalid_argument("bad integer '" + tok + "'");
    out.push_back(v);
  }
  return out;
}

Report essential_report(const RunConfig& c) {
  const GradedAlgebraSpec spec{c.ell, static_cast<std::size_t>(c.rank)};
  if (c.rank < 1) throw std::invalid_argument("rank must be >= 1");
  const GradedElement e = essential_product(spec);
  const auto subgroups = proper_subgroups(spec.ell, spec.n);
  const bool all_zero = std::all_of(subgroups.begin(), subgroups.end(), [&](const SubgroupMatrix& m) { return restrict(e, m).is_zero(); });

  Report r;
  r.add("ESSENTIAL", "ell=" + std::to_string(spec.ell) + " rank=" + std::to_string(spec.n));
  r.add("PRODUCT", e.to_string());
  r.add("DEGREE", e.degree() ? std::to_string(*e.degree()) : "inhomogeneous");
  r.add("TERMS", std::to_string(e.terms().size()));
  r.add("RESTRICTIONS", std::string("all_proper_zero=") + (all_zero ? "true" : "false") + " subgroups=" + std::to_string(subgroups.size()));
  r.add("WEYL_INVARIANT", weyl_invariance(e) ? "true" : "false");
  r.add("REGULAR", regularity_check(e) ? "true" : "false");
  if (!spec.odd()) r.add("SQUARE_WEYL_INVARIANT", weyl_invariance(e * e) ? "true" : "false");
  return r;
}

ArithmeticDatum datum_from_config(const RunConfig& c) {
  if (c.datum_path) return load_datum(*c.datum_path);
  if (!c.split_class_group) throw std::invalid_argument("analyze-nf needs --datum or --split-class-group");
  std::vector<Int> factors;
  for (Int d : *c.split_class_group)
    if (d != 1) factors.push_back(d);
  if (c.unit_rank < 0) throw std::invalid_argument("unit rank must be nonnegative");
  return build_split_datum(FinGenAbGroup(0, factors), static_cast<std::size_t>(c.unit_rank), c.ell);
}

CurveSpec curve_from_config(const RunConfig& c) {
  if (c.curve == "p1") {
    if (c.punctures.empty()) throw std::invalid_argument("p1 curve needs --punctures");
    return P1Minus{c.punctures};
  }
  if (c.curve == "elliptic") return EllipticMinusPoint{c.a, c.b};
  throw std::invalid_argument("unknown curve kind '" + c.curve + "' (expected p1 or elliptic)");
}

// ---------------------------------------------------------------------------
// verify suites

struct SuiteResult {
  bool pass = true;
  std::string detail;
  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

SuiteResult suite_snf(std::mt19937_64& rng) {
  SuiteResult r;
  std::uniform_int_distribution<std::size_t> dim(1, 6);
  for (int t = 0; t < 200 && r.pass; ++t) {
    const IntMatrix m = oracle::random_matrix(rng, dim(rng), dim(rng), -20, 20);
    const SmithForm s = smith_normal_form(m);
    if (s.diag != oracle::determinantal_invariant_factors(m)) r.fail("diag mismatch for " + m.to_string());
    const BigMatrix d = s.left * BigMatrix(m) * s.right;
    for (std::size_t i = 0; i < d.rows(); ++i)
      for (std::size_t j = 0; j < d.cols(); ++j)
        if (d(i, j) != (i == j ? s.diag[i] : 0)) r.fail("left*m*right not diagonal for " + m.to_string());
    if (s.left * s.left_inv != BigMatrix::identity(m.rows()) || s.right * s.right_inv != BigMatrix::identity(m.cols()))
      r.fail("transform inverses inconsistent for " + m.to_string());
  }
  return r;
}

SuiteResult suite_kernel_cokernel(std::mt19937_64& rng) {
  SuiteResult r;
  for (int t = 0; t < 150 && r.pass; ++t) {
    const FinGenAbGroup dom = oracle::random_finite_group(rng, 200);
    const FinGenAbGroup cod = oracle::random_finite_group(rng, 200);
    const GroupHom f = oracle::random_hom(rng, dom, cod);
    const Int max_k = 12;
    const auto e = oracle::enumerate_map(f, max_k);
    const KernelResult k = kernel(f);
    const CokernelResult c = cokernel(f);
    if (oracle::torsion_profile(k.group, max_k) != e.kernel_profile) r.fail("kernel structure mismatch");
    if (oracle::torsion_profile(c.group, max_k) != e.coker_profile) r.fail("cokernel structure mismatch");
    for (const Element& y : cod.elements())
      if (contains_in_image(f, y) != oracle::enumerated_contains(e, y)) r.fail("image membership mismatch");
  }
  return r;
}

SuiteResult suite_dimensions(bool inject) {
  SuiteResult r;
  for (Shape s : {Shape::NonInvariant, Shape::Invariant, Shape::UnitsFF, Shape::MonomialFF})
    for (std::size_t p = 0; p <= 6; ++p)
      for (Int n = -4; n <= 12; ++n) {
        const ComponentRing c{s, p, {}};
        Int expected = oracle::enumerated_dimension(c, n);
        if (inject && s == Shape::NonInvariant && p == 0 && n == 0) expected += 1;
        if (graded_dimension(c, n) != expected)
          r.fail(shape_name(s) + "(" + std::to_string(p) + ") degree " + std::to_string(n));
      }
  return r;
}

SuiteResult suite_class_numbers() {
  SuiteResult r;
  for (Int d = -3; d >= -600 && r.pass; --d) {
    if (!is_fundamental_discriminant(d)) continue;
    const FormClassGroup g = form_class_group(d);
    const auto h = static_cast<Int>(g.forms.size());
    if (g.group.order() != h) r.fail("composition group order differs from form count at D=" + std::to_string(d));
    if (oracle::analytic_class_number(d) != h) r.fail("analytic class number differs at D=" + std::to_string(d));
    if (!oracle::cayley_table_is_abelian_group(g.table)) r.fail("composition table fails group axioms at D=" + std::to_string(d));
  }
  return r;
}

SuiteResult suite_elliptic() {
  SuiteResult r;
  for (Int q : {5, 7, 9, 11, 13, 25}) {
    const FiniteField f = FiniteField::of_order(q);
    for (Int a = 0; a < q; ++a)
      for (Int b = 0; b < q; ++b) {
        std::optional<EllipticCurve> e;
        try {
          e.emplace(f, static_cast<FiniteField::Elem>(a), static_cast<FiniteField::Elem>(b));
        } catch (const std::invalid_argument&) {
          continue;
        }
        const Int order = count_and_structure_elliptic(*e).order();
        const Int naive = oracle::naive_point_count(f, e->a(), e->b());
        if (order != naive) r.fail("point count mismatch over F_" + std::to_string(q));
        if (!within_hasse_bound(order, q)) r.fail("Hasse bound violated over F_" + std::to_string(q));
      }
  }
  return r;
}

SuiteResult suite_fixtures(const std::string& dir) {
  SuiteResult r;
  std::vector<std::filesystem::path> files;
  if (!std::filesystem::is_directory(dir)) {
    r.fail("fixture directory " + dir + " not found");
    return r;
  }
  for (const auto& entry : std::filesystem::directory_iterator(dir))
    if (entry.path().extension() == ".datum") files.push_back(entry.path());
  std::sort(files.begin(), files.end());
  if (files.empty()) r.fail("no .datum fixtures in " + dir);
  for (const auto& p : files) {
    try {
      const ArithmeticDatum d = load_datum(p);
      if (save_datum(parse_datum(save_datum(d))) != save_datum(d)) r.fail("round trip unstable for " + p.filename().string());
    } catch (const ConsistencyError& e) {
      r.fail("file=" + p.filename().string() + " invariant=" + e.invariant());
    } catch (const std::exception& e) {
      r.fail("file=" + p.filename().string() + " error=" + e.what());
    }
  }
  return r;
}

}  // namespace

void load_curve_preset(const std::string& path, RunConfig& config) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open curve preset " + path);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    line = line.substr(0, line.find('#'));
    const auto eq = line.find('=');
    auto trim = [](std::string s) {
      const auto b = s.find_first_not_of(" \t\r");
      const auto e = s.find_last_not_of(" \t\r");
      return b == std::string::npos ? std::string{} : s.substr(b, e - b + 1);
    };
    if (trim(line).empty()) continue;
    if (eq == std::string::npos) throw std::invalid_argument(path + ":" + std::to_string(lineno) + ": expected 'key = value'");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key == "curve")
      config.curve = value;
    else if (key == "punctures")
      config.punctures = parse_int_list(value);
    else if (key == "a")
      config.a = std::stoll(value);
    else if (key == "b")
      config.b = std::stoll(value);
    else if (key == "q")
      config.q = std::stoll(value);
    else if (key == "ell")
      config.ell = std::stoll(value);
    else
      throw std::invalid_argument(path + ":" + std::to_string(lineno) + ": unknown key '" + key + "'");
  }
}

int verify(const RunConfig& config, std::ostream& out) {
  std::mt19937_64 rng(config.seed);
  const std::string dir = config.fixtures_dir.empty() ? FTQ_DEFAULT_FIXTURES_DIR : config.fixtures_dir;
  const std::vector<std::pair<std::string, std::function<SuiteResult()>>> suites = {
      {"snf_determinantal_divisors", [&] { return suite_snf(rng); }},
      {"kernel_cokernel_enumeration", [&] { return suite_kernel_cokernel(rng); }},
      {"graded_dimension_monomials", [&] { return suite_dimensions(config.inject_disagreement); }},
      {"class_numbers", [] { return suite_class_numbers(); }},
      {"elliptic_recount", [] { return suite_elliptic(); }},
      {"fixtures", [&] { return suite_fixtures(dir); }},
  };
  Report r;
  bool all = true;
  for (const auto& [name, fn] : suites) {
    SuiteResult s;
    try {
      s = fn();
    } catch (const std::exception& e) {
      s.fail(std::string("exception: ") + e.what());
    }
    all = all && s.pass;
    r.add("SUITE", name + (s.pass ? " pass" : " fail " + s.detail));
  }
  r.add("VERIFY", all ? "pass" : "fail");
  out << r.render(config.mode, "verify");
  return all ? kOk : kVerificationFailure;
}

int run(const RunConfig& config, std::ostream& out) {
  try {
    if (config.degree_bound < 0) throw std::invalid_argument("degree bound must be nonnegative");
    switch (config.command) {
      case Command::analyze_nf: {
        const ArithmeticDatum d = datum_from_config(config);
        out << number_field_report(d, config.degree_bound, config.gl_rank).render(config.mode, "analyze-nf");
        return kOk;
      }
      case Command::analyze_ff: {
        RunConfig c = config;
        if (c.preset_path) load_curve_preset(*c.preset_path, c);
        if (config.q != 0) c.q = config.q;
        if (config.ell != 0) c.ell = config.ell;
        const FiniteField f = FiniteField::of_order(c.q);
        out << function_field_report(curve_from_config(c), f, c.ell, c.degree_bound).render(c.mode, "analyze-ff");
        return kOk;
      }
      case Command::essential:
        out << essential_report(config).render(config.mode, "essential");
        return kOk;
      case Command::verify:
        return verify(config, out);
    }
  } catch (const ConsistencyError& e) {
    out << "ERROR\t" << e.what() << '\n';
  } catch (const std::exception& e) {
    out << "ERROR\t" << e.what() << '\n';
  }
  return kInputError;
}

}  // namespace ftq::cli
