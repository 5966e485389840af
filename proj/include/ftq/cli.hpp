#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "ftq/cohomengine.hpp"

namespace ftq::cli {

enum class Command { analyze_nf, analyze_ff, essential, verify };

enum ExitCode : int { kOk = 0, kInputError = 1, kVerificationFailure = 2 };

struct RunConfig {
  Command command = Command::analyze_nf;
  Int degree_bound = kDefaultDegreeBound;
  OutputMode mode = OutputMode::machine;

  // analyze-nf: either a datum file or an inline split datum
  std::optional<std::string> datum_path;
  std::optional<std::vector<Int>> split_class_group;  // invariant factors of cl_K
  Int unit_rank = 0;
  Int gl_rank = 2;

  // analyze-ff: either a preset file or inline flags
  std::optional<std::string> preset_path;
  std::string curve = "p1";
  std::vector<Int> punctures;
  Int a = 0, b = 0;
  Int q = 0;

  // analyze-nf (inline), analyze-ff, essential
  Int ell = 0;
  Int rank = 0;  // essential

  // verify
  std::string fixtures_dir;
  bool inject_disagreement = false;
  std::uint64_t seed = 20240917;
};

/// Runs one command; the report (or a single ERROR line) goes to out.
int run(const RunConfig& config, std::ostream& out);

/// Oracle suites behind `verify`; one "SUITE<TAB>name pass|fail ..." line each.
int verify(const RunConfig& config, std::ostream& out);

/// Curve preset files: "key = value" lines with keys curve, punctures, a, b, q, ell.
void load_curve_preset(const std::string& path, RunConfig& config);

}  // namespace ftq::cli
