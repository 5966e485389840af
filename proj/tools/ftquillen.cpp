#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "ftq/cli.hpp"

int main(int argc, char** argv) {
  using namespace ftq::cli;
  RunConfig cfg;
  bool human = false;
  std::string split_group;
  std::string punctures;

  CLI::App app{"Farrell-Tate cohomology engine for SL2 over S-integers and curve rings"};
  app.require_subcommand(1, 1);
  app.fallthrough();
  app.add_option("--degree-bound", cfg.degree_bound, "degree bound for dimension scans")->capture_default_str();
  app.add_flag("--human", human, "human-readable output instead of KEY<TAB>value lines");

  auto* nf = app.add_subcommand("analyze-nf", "decompose the cohomology for a number-field datum");
  nf->add_option("--datum", cfg.datum_path, "datum file");
  nf->add_option("--split-class-group", split_group, "invariant factors of cl_K for an inline split datum, e.g. 3");
  nf->add_option("--unit-rank", cfg.unit_rank, "S-unit rank of K (inline split datum)");
  nf->add_option("--ell", cfg.ell, "odd prime (inline split datum)");
  nf->add_option("--gl-rank", cfg.gl_rank, "rank n used by the refined gate")->capture_default_str();

  auto* ff = app.add_subcommand("analyze-ff", "decompose the cohomology for a punctured curve over F_q");
  ff->add_option("--preset", cfg.preset_path, "curve preset file");
  ff->add_option("--curve", cfg.curve, "p1 or elliptic")->capture_default_str();
  ff->add_option("--punctures", punctures, "degrees of the removed closed points, e.g. 1,1");
  ff->add_option("--a", cfg.a, "Weierstrass coefficient a");
  ff->add_option("--b", cfg.b, "Weierstrass coefficient b");
  ff->add_option("--q", cfg.q, "field order");
  ff->add_option("--ell", cfg.ell, "odd prime dividing q - 1");

  auto* ess = app.add_subcommand("essential", "essential product for (Z/ell)^rank");
  ess->add_option("--ell", cfg.ell, "prime")->required();
  ess->add_option("--rank", cfg.rank, "rank of the elementary abelian group")->required();

  auto* ver = app.add_subcommand("verify", "run the brute-force oracle suites");
  ver->add_option("--fixtures", cfg.fixtures_dir, "directory of .datum fixtures");
  ver->add_option("--seed", cfg.seed, "random seed")->capture_default_str();
  ver->add_flag("--inject-disagreement", cfg.inject_disagreement, "perturb one oracle value (self-test)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cout << "ERROR\t" << e.what() << '\n';
    return kInputError;
  }

  cfg.mode = human ? ftq::OutputMode::human : ftq::OutputMode::machine;
  try {
    if (!split_group.empty()) {
      cfg.split_class_group.emplace();
      std::stringstream ss(split_group);
      std::string tok;
      while (std::getline(ss, tok, ',')) cfg.split_class_group->push_back(std::stoll(tok));
    }
    if (!punctures.empty()) {
      std::stringstream ss(punctures);
      std::string tok;
      while (std::getline(ss, tok, ',')) cfg.punctures.push_back(std::stoll(tok));
    }
  } catch (const std::exception&) {
    std::cout << "ERROR\tmalformed integer list\n";
    return kInputError;
  }

  if (nf->parsed())
    cfg.command = Command::analyze_nf;
  else if (ff->parsed())
    cfg.command = Command::analyze_ff;
  else if (ess->parsed())
    cfg.command = Command::essential;
  else
    cfg.command = Command::verify;
  return run(cfg, std::cout);
}
