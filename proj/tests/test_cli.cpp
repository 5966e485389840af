#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <regex>
#include <set>
#include <sstream>

#include "ftq/cli.hpp"

using namespace ftq;
using namespace ftq::cli;

namespace {

const std::string kDataDir = FTQ_DATA_DIR;
const std::string kCorruptDir = FTQ_CORRUPT_DIR;

struct RunOutput {
  int code;
  std::string text;
};

RunOutput run_config(const RunConfig& c) {
  std::ostringstream out;
  const int code = run(c, out);
  return {code, out.str()};
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

bool well_formed(const std::string& text) {
  static const std::regex line(R"(^[A-Z_]+\t\S.*$)");
  static const std::set<std::string> keys = {
      "NONVANISHING", "CCLASSES", "KCLASSES", "COMPONENT", "FREENESS", "DETECTION", "GATE", "CURVE", "PIC",
      "ADVISORY", "ESSENTIAL", "PRODUCT", "DEGREE", "TERMS", "RESTRICTIONS", "WEYL_INVARIANT", "REGULAR",
      "SQUARE_WEYL_INVARIANT", "SUITE", "VERIFY", "ERROR"};
  for (const std::string& l : lines_of(text)) {
    if (!std::regex_match(l, line)) return false;
    if (!keys.count(l.substr(0, l.find('\t')))) return false;
  }
  return !text.empty();
}

RunConfig nf_datum(const std::string& file) {
  RunConfig c;
  c.command = Command::analyze_nf;
  c.datum_path = kDataDir + "/" + file;
  return c;
}

}  // namespace

TEST_CASE("analyze-nf on the Q(zeta_23) fixture") {
  const RunOutput o = run_config(nf_datum("q_zeta23.datum"));
  CHECK(o.code == kOk);
  CHECK(well_formed(o.text));
  CHECK(o.text.find("CCLASSES\t3\n") != std::string::npos);
  CHECK(o.text.find("KCLASSES\t2\n") != std::string::npos);
  CHECK(o.text.find("DETECTION\tfails witness_degree=0 source_dim=1520 target_dim=1024\n") != std::string::npos);
}

TEST_CASE("inline split datum matches the fixture") {
  RunConfig c;
  c.command = Command::analyze_nf;
  c.split_class_group = std::vector<Int>{3};
  c.unit_rank = 11;
  c.ell = 23;
  CHECK(run_config(c).text == run_config(nf_datum("q_zeta23.datum")).text);
}

TEST_CASE("analyze-ff presets") {
  RunConfig c;
  c.command = Command::analyze_ff;
  load_curve_preset(kDataDir + "/p1_minus_0_infinity.curve", c);
  CHECK(c.curve == "p1");
  CHECK(c.punctures == std::vector<Int>{1, 1});
  CHECK(c.q == 7);
  CHECK(c.ell == 3);
  const RunOutput o = run_config(c);
  CHECK(o.code == kOk);
  CHECK(well_formed(o.text));
  CHECK(o.text.find("COMPONENT\t0 shape=MonomialFF r=1 dims[-4..12]=0,0,0,0,1,0,1,2,1,0,1,2,1,0,1,2,1") !=
        std::string::npos);
  CHECK(o.text.find("non_detectable_classes_expected") == std::string::npos);

  RunConfig four;
  four.command = Command::analyze_ff;
  load_curve_preset(kDataDir + "/p1_minus_4_points.curve", four);
  CHECK(run_config(four).text.find("ADVISORY\tnon_detectable_classes_expected") != std::string::npos);
}

TEST_CASE("analyze-ff elliptic curve") {
  RunConfig c;
  c.command = Command::analyze_ff;
  c.curve = "elliptic";
  c.a = 0;
  c.b = 1;
  c.q = 7;
  c.ell = 3;
  const RunOutput o = run_config(c);
  CHECK(o.code == kOk);
  CHECK(well_formed(o.text));
  CHECK(o.text.find("KCLASSES\t8\n") != std::string::npos);
}

TEST_CASE("essential command") {
  RunConfig c;
  c.command = Command::essential;
  c.ell = 3;
  c.rank = 2;
  const RunOutput o = run_config(c);
  CHECK(o.code == kOk);
  CHECK(well_formed(o.text));
  CHECK(o.text.find("PRODUCT\ty1^6*y2^2 + y1^4*y2^4 + y1^2*y2^6\n") != std::string::npos);
  CHECK(o.text.find("SQUARE_WEYL_INVARIANT") == std::string::npos);
}

TEST_CASE("reports are deterministic") {
  for (const char* f : {"q_zeta23.datum", "q_zeta3.datum"})
    CHECK(run_config(nf_datum(f)).text == run_config(nf_datum(f)).text);
}

TEST_CASE("input errors produce one ERROR line") {
  std::vector<RunConfig> bad;
  bad.push_back(nf_datum("missing.datum"));
  RunConfig ff;
  ff.command = Command::analyze_ff;
  ff.curve = "elliptic";
  ff.a = 1;
  ff.q = 5;
  ff.ell = 3;
  bad.push_back(ff);
  RunConfig ess;
  ess.command = Command::essential;
  ess.ell = 4;
  ess.rank = 2;
  bad.push_back(ess);
  RunConfig empty;
  empty.command = Command::analyze_nf;
  bad.push_back(empty);
  for (const RunConfig& c : bad) {
    const RunOutput o = run_config(c);
    CHECK(o.code == kInputError);
    const auto ls = lines_of(o.text);
    REQUIRE(ls.size() == 1);
    CHECK(ls[0].rfind("ERROR\t", 0) == 0);
  }
  RunConfig missing;
  CHECK_THROWS(load_curve_preset(kDataDir + "/none.curve", missing));
}

TEST_CASE("verify passes on the shipped fixtures") {
  RunConfig c;
  c.command = Command::verify;
  c.fixtures_dir = kDataDir;
  const RunOutput o = run_config(c);
  CHECK(o.code == kOk);
  CHECK(well_formed(o.text));
  CHECK(o.text.find("VERIFY\tpass") != std::string::npos);
  CHECK(o.text.find(" fail") == std::string::npos);
}

TEST_CASE("verify reports a corrupt fixture") {
  RunConfig c;
  c.command = Command::verify;
  c.fixtures_dir = kCorruptDir;
  const RunOutput o = run_config(c);
  CHECK(o.code == kVerificationFailure);
  CHECK(o.text.find("invariant=steinitz_in_cl_K") != std::string::npos);
  CHECK(o.text.find("VERIFY\tfail") != std::string::npos);
}

TEST_CASE("verify notices an injected disagreement") {
  RunConfig c;
  c.command = Command::verify;
  c.fixtures_dir = kDataDir;
  c.inject_disagreement = true;
  const RunOutput o = run_config(c);
  CHECK(o.code == kVerificationFailure);
  CHECK(o.text.find("SUITE\tgraded_dimension_monomials fail") != std::string::npos);
}
