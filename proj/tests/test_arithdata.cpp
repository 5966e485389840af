#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <fstream>
#include <random>

#include "ftq/arithdata.hpp"
#include "ftq/cohomengine.hpp"
#include "ftq/oracles.hpp"
#include "support.hpp"

using namespace ftq;

namespace {

const std::string kDataDir = FTQ_DATA_DIR;

// Reduced forms of discriminant d by the defining inequalities alone.
std::vector<QuadraticForm> brute_reduced_forms(Int d) {
  std::vector<QuadraticForm> out;
  for (Int a = 1; 3 * a * a <= -d; ++a)
    for (Int b = -a + 1; b <= a; ++b) {
      if ((b * b - d) % (4 * a) != 0) continue;
      const Int c = (b * b - d) / (4 * a);
      if (c < a || (c == a && b < 0)) continue;
      if (std::gcd(std::gcd(a, b), c) != 1) continue;
      out.push_back({a, b, c});
    }
  std::sort(out.begin(), out.end());
  return out;
}

std::string datum_text(const std::string& ell, const std::string& split, const std::string& steinitz) {
  return "[datum]\nell = " + ell + "\ntrace_in_K = true\nsplit = " + split +
         "\nunit_rank_K = 1\nker_nm1_rank = 1\n\n[cl_K]\nfree_rank = 0\ninvariant_factors = 3\n\n"
         "[cl_A]\nfree_rank = 0\ninvariant_factors = 3,3\n\n[nm0]\nmatrix = 1 1\n\n[steinitz]\ncoords = " +
         steinitz + "\n\n[coker_nm1]\nfree_rank = 0\ninvariant_factors =\n\n[sigma]\nmatrix = 2\n";
}

}  // namespace

TEST_CASE("class group of discriminant -23") {
  const FormClassGroup g = form_class_group(-23);
  const std::vector<QuadraticForm> expected{{1, 1, 6}, {2, -1, 3}, {2, 1, 3}};
  CHECK(g.forms == expected);
  CHECK(g.forms == brute_reduced_forms(-23));
  CHECK(g.group == FinGenAbGroup::cyclic(3));
}

TEST_CASE("class group of discriminant -4 is trivial") {
  const FormClassGroup g = form_class_group(-4);
  CHECK(g.forms == std::vector<QuadraticForm>{{1, 0, 1}});
  CHECK(g.group.is_trivial());
}

TEST_CASE("class group of discriminant -84") {
  const FormClassGroup g = form_class_group(-84);
  const std::vector<QuadraticForm> expected{{1, 0, 21}, {2, 2, 11}, {3, 0, 7}, {5, 4, 5}};
  CHECK(g.forms == expected);
  CHECK(g.group == FinGenAbGroup(0, {2, 2}));
  CHECK(oracle::analytic_class_number(-84) == 4);
}

TEST_CASE("composition basics") {
  const QuadraticForm f{2, 1, 3};
  CHECK(compose(f, principal_form(-23)) == f);
  CHECK(compose(f, inverse(f)) == principal_form(-23));
  CHECK(compose(f, f) == QuadraticForm{2, -1, 3});
  CHECK(reduce({6, 1, 1}) == QuadraticForm{1, 1, 6});
}

TEST_CASE("discriminants are validated") {
  CHECK(is_fundamental_discriminant(-3));
  CHECK(is_fundamental_discriminant(-84));
  CHECK_FALSE(is_fundamental_discriminant(-12));
  CHECK_FALSE(is_fundamental_discriminant(-9));
  CHECK_THROWS_AS(class_group_imaginary_quadratic(-12), std::invalid_argument);
  CHECK_THROWS_AS(class_group_imaginary_quadratic(5), std::invalid_argument);
}

TEST_CASE("class numbers agree with form counts and the analytic formula") {
  for (Int d = -3; d >= -2000; --d) {
    if (!is_fundamental_discriminant(d)) continue;
    const FormClassGroup g = form_class_group(d);
    const auto h = static_cast<Int>(g.forms.size());
    REQUIRE(g.forms == brute_reduced_forms(d));
    REQUIRE(g.group.order() == h);
    REQUIRE(oracle::analytic_class_number(d) == h);
    REQUIRE(oracle::cayley_table_is_abelian_group(g.table));
  }
}

TEST_CASE("S-unit rank") {
  CHECK(s_unit_rank({0, 1, {{3, 1}}, true}) == 1);
  CHECK(s_unit_rank({0, 11, {{23, 1}}, true}) == 11);
  CHECK(s_unit_rank({1, 0, {}, false}) == 0);
  CHECK_THROWS(PlaceSpec{0, 0, {}, false}.validate());
}

TEST_CASE("split datum for cl_K = Z/3, rank 11, ell 23") {
  const ArithmeticDatum d = build_split_datum(FinGenAbGroup::cyclic(3), 11, 23);
  const KernelResult k = kernel(d.nm0);
  CHECK(k.group.order() == 3);
  CHECK(d.coker_nm1.is_trivial());
  CHECK(involution_orbits(k.group, d.sigma).size() == 2);
  CHECK(d.cl_A == FinGenAbGroup(0, {3, 3}));
  CHECK(d.ker_nm1_rank == 11);
  CHECK(d.provenance.at("cl_K") == Provenance::computed);
}

TEST_CASE("split datum with trivial class group") {
  const ArithmeticDatum d = build_split_datum(FinGenAbGroup(), 1, 3);
  const KernelResult k = kernel(d.nm0);
  CHECK(k.group.order() == 1);
  const auto orbits = involution_orbits(k.group, d.sigma);
  REQUIRE(orbits.size() == 1);
  CHECK(orbits[0].fixed);
}

TEST_CASE("split datum with Klein four class group") {
  const ArithmeticDatum d = build_split_datum(FinGenAbGroup(0, {2, 2}), 2, 5);
  const auto orbits = involution_orbits(kernel(d.nm0).group, d.sigma);
  CHECK(orbits.size() == 4);
  CHECK(std::all_of(orbits.begin(), orbits.end(), [](const Orbit& o) { return o.fixed; }));
}

TEST_CASE("split datum rejects even ell") {
  CHECK_THROWS(build_split_datum(FinGenAbGroup(), 1, 2));
  CHECK_THROWS(build_split_datum(FinGenAbGroup(), 1, 9));
}

TEST_CASE("shipped Q(zeta_23) fixture") {
  const ArithmeticDatum d = load_datum(kDataDir + "/q_zeta23.datum");
  const ArithmeticDatum built = build_split_datum(FinGenAbGroup::cyclic(3), 11, 23);
  CHECK(save_datum(d) == save_datum(built));
  CHECK(d.provenance.at("cl_K") == Provenance::ingested);
  CHECK(d.provenance.at("sigma") == Provenance::ingested);
}

TEST_CASE("shipped Q(zeta_3) fixture") {
  const ArithmeticDatum d = load_datum(kDataDir + "/q_zeta3.datum");
  CHECK(save_datum(d) == save_datum(build_split_datum(FinGenAbGroup(), 1, 3)));
}

TEST_CASE("ingestion rejects ell = 2") {
  try {
    parse_datum(datum_text("2", "false", "0"));
    FAIL("accepted ell = 2");
  } catch (const ConsistencyError& e) {
    CHECK(e.invariant() == "ell_odd_prime");
  }
}

TEST_CASE("ingestion rejects a split datum with nonzero Steinitz class") {
  try {
    parse_datum(datum_text("3", "true", "1"));
    FAIL("accepted nonzero Steinitz class");
  } catch (const ConsistencyError& e) {
    CHECK(e.invariant() == "split_steinitz_zero");
  }
}

TEST_CASE("ingestion rejects a Steinitz class outside cl_K") {
  try {
    parse_datum(datum_text("3", "false", "5"));
    FAIL("accepted out-of-range Steinitz class");
  } catch (const ConsistencyError& e) {
    CHECK(e.invariant() == "steinitz_in_cl_K");
  }
}

TEST_CASE("parse errors carry file, line and column") {
  std::string text = datum_text("3", "true", "0");
  text.replace(text.find("unit_rank_K = 1"), 15, "unit_rank_K = x");
  try {
    parse_datum(text, "bad.datum");
    FAIL("accepted malformed integer");
  } catch (const DatumParseError& e) {
    CHECK(e.file() == "bad.datum");
    CHECK(e.line() == 5);
    CHECK(e.column() > 1);
    CHECK(std::string(e.what()).rfind("bad.datum:5:", 0) == 0);
  }
  std::string missing = datum_text("3", "true", "0");
  missing.erase(missing.find("ker_nm1_rank = 1\n"), 17);
  try {
    parse_datum(missing);
    FAIL("accepted missing key");
  } catch (const DatumParseError& e) {
    CHECK(std::string(e.what()).find("ker_nm1_rank") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_datum("[datum]\nell = 3\n[bogus]\n"), DatumParseError);
  CHECK_THROWS_AS(load_datum("/nonexistent/none.datum"), std::exception);
}

TEST_CASE("save then load is the identity") {
  std::mt19937_64 rng(31);
  for (int t = 0; t < 300; ++t) {
    const ArithmeticDatum d = (t % 3 == 0) ? testing::random_split_datum(rng) : testing::random_datum(rng);
    const std::string text = save_datum(d);
    const ArithmeticDatum back = parse_datum(text);
    REQUIRE(save_datum(back) == text);
    REQUIRE(back.cl_K == d.cl_K);
    REQUIRE(back.nm0 == d.nm0);
    REQUIRE(back.steinitz == d.steinitz);
    REQUIRE(back.sigma == d.sigma);
  }
}

TEST_CASE("split data have as many order-ell classes as cl_K has elements") {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 200; ++t) {
    const ArithmeticDatum d = testing::random_split_datum(rng);
    REQUIRE(conjugacy_classes(d).order == d.cl_K.order());
  }
}
