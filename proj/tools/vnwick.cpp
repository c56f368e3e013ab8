#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "vnw/commands.hpp"

namespace {

int emit(const vnw::cli::Report& rep, const std::string& format) {
  if (format == "json")
    std::cout << vnw::cli::to_json(rep);
  else
    std::cout << vnw::cli::to_tsv(rep);
  return rep.exit_status();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact pairing expansions over finite-dimensional *-algebras: "
               "map census, identity verification, surface invariants"};
  app.require_subcommand(1);
  std::string format = "tsv";
  app.add_option("--format", format, "output format: tsv or json")
      ->check(CLI::IsMember({"tsv", "json"}));

  // census
  auto* census = app.add_subcommand("census", "isomorphism classes of pairings");
  census->fallthrough();
  vnw::cli::CensusOptions census_opt;
  std::vector<int> degrees;
  std::string mode = "ribbon";
  census->add_option("--degrees", degrees, "degree sequence v_1,v_2,... (comma separated)")
      ->delimiter(',');
  census->add_option("--weighted-degree", census_opt.max_weighted_degree,
                     "census every degree sequence with sum j*v_j up to this");
  census->add_option("--mode", mode, "ribbon or moebius")
      ->check(CLI::IsMember({"ribbon", "moebius"}));
  census->add_option("--max-darts", census_opt.max_darts, "guard on the dart count");
  census->add_option("--threads", census_opt.threads, "worker threads");

  // verify
  auto* verify = app.add_subcommand("verify", "identity verification suites");
  verify->fallthrough();
  vnw::cli::VerifyOptions verify_opt;
  std::string suite;
  verify->add_option("suite", suite, "wick | mednykh | frobenius-schur | contraction | flips")
      ->required()
      ->check(CLI::IsMember({"wick", "mednykh", "frobenius-schur", "contraction", "flips"}));
  verify->add_option("--group", verify_opt.groups, "group name or JSON file (repeatable)");
  verify->add_option("--algebra", verify_opt.algebras, "algebra name or JSON file (repeatable)");
  verify->add_option("--genus", verify_opt.genus_max, "largest genus (mednykh)")
      ->check(CLI::Range(0, 6));
  verify->add_option("--crosscaps", verify_opt.crosscap_max,
                     "largest cross-cap count (frobenius-schur)")
      ->check(CLI::Range(1, 8));
  verify->add_option("--max-degree", verify_opt.max_weighted_degree,
                     "weighted-degree bound for the wick suite (default 8 complex / 6 real)")
      ->check(CLI::Range(1, 10));
  verify->add_option("--checks", verify_opt.checks, "randomized checks (contraction/flips)");
  verify->add_option("--seed", verify_opt.seed, "seed for randomized checks");
  verify->add_option("--threads", verify_opt.threads, "worker threads");

  // contribution
  auto* contribution = app.add_subcommand("contribution", "surface invariant of one type");
  contribution->fallthrough();
  vnw::cli::ContributionOptions contrib_opt;
  int genus = -1, crosscaps = -1;
  contribution->add_option("--algebra", contrib_opt.algebra, "algebra name or JSON file")
      ->required();
  contribution->add_option("--genus", genus, "orientable type (g,f)");
  contribution->add_option("--crosscaps", crosscaps, "non-orientable type (k,f)");
  contribution->add_option("--faces", contrib_opt.nfaces, "face count f >= 1")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*census) {
      census_opt.degree_sequence = degrees;
      census_opt.mode = mode == "moebius" ? vnw::maps::Mode::Moebius : vnw::maps::Mode::Ribbon;
      return emit(vnw::cli::cmd_census(census_opt), format);
    }
    if (*verify) return emit(vnw::cli::cmd_verify(suite, verify_opt), format);
    if (*contribution) {
      if ((genus >= 0) == (crosscaps >= 0))
        throw std::invalid_argument("contribution: give exactly one of --genus, --crosscaps");
      contrib_opt.orientable = genus >= 0;
      contrib_opt.genus_or_crosscaps = contrib_opt.orientable ? genus : crosscaps;
      return emit(vnw::cli::cmd_contribution(contrib_opt), format);
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
