#include <doctest.h>

#include "vnw/commands.hpp"

using namespace vnw;
using namespace vnw::cli;

TEST_CASE("name resolution") {
  CHECK(resolve_group("Z2xZ3").order == 6);
  CHECK(resolve_algebra("M(2,C)").dim == 4);
  CHECK(resolve_algebra("M2C").dim == 4);
  CHECK(resolve_algebra("M(1,H)").dim == 4);
  CHECK(resolve_algebra("C[S3]").dim == 6);
  CHECK(resolve_algebra("R[Q8]").field == algebra::Field::Real);
  CHECK_THROWS_AS(resolve_algebra("X[S3]"), std::invalid_argument);
  CHECK_THROWS_AS(resolve_group("nonexistent.json"), std::invalid_argument);
}

TEST_CASE("census rows and guard") {
  CensusOptions opt;
  opt.degree_sequence = {0, 0, 0, 1};
  opt.mode = maps::Mode::Ribbon;
  auto rep = cmd_census(opt);
  CHECK(rep.rows.size() == 2);
  CHECK(rep.all_pass());
  CHECK(rep.exit_status() == 0);

  opt.degree_sequence = {0, 1};
  opt.mode = maps::Mode::Moebius;
  auto rep2 = cmd_census(opt);
  CHECK(rep2.rows.size() == 2);
  for (auto& row : rep2.rows) CHECK(row.inputs.find("|Aut|=4") != std::string::npos);

  // odd dart totals give an empty census
  opt.degree_sequence = {0, 0, 1};
  CHECK(cmd_census(opt).rows.empty());

  opt.degree_sequence = {14};
  CHECK_THROWS_AS(cmd_census(opt), std::invalid_argument);
}

TEST_CASE("census output is deterministic and thread independent") {
  CensusOptions opt;
  opt.max_weighted_degree = 5;
  opt.mode = maps::Mode::Moebius;
  auto a = to_tsv(cmd_census(opt));
  auto b = to_tsv(cmd_census(opt));
  CHECK(a == b);
  opt.threads = 3;
  CHECK(to_tsv(cmd_census(opt)) == a);
}

TEST_CASE("verify dispatch and exit codes") {
  VerifyOptions opt;
  opt.genus_max = 1;
  opt.groups = {"S3"};
  auto rep = cmd_verify("mednykh", opt);
  CHECK(rep.all_pass());
  CHECK(rep.exit_status() == 0);
  CHECK_THROWS_AS(cmd_verify("nonsense", opt), std::invalid_argument);
  CHECK_THROWS_AS(
      [&] {
        VerifyOptions bad;
        bad.groups = {"E8"};
        return cmd_verify("mednykh", bad);
      }(),
      std::invalid_argument);
}

TEST_CASE("wick suite report is identical across thread counts") {
  VerifyOptions opt;
  opt.algebras = {"C[Z2]", "M(1,R)"};
  opt.max_weighted_degree = 4;
  auto one = to_tsv(cmd_verify("wick", opt));
  opt.threads = 4;
  auto four = to_tsv(cmd_verify("wick", opt));
  CHECK(one == four);
  CHECK(one.find("FAIL") == std::string::npos);
}

TEST_CASE("contraction and flip suites pass on a seeded sample") {
  VerifyOptions opt;
  opt.checks = 40;
  opt.seed = 0;
  CHECK(cmd_verify("contraction", opt).all_pass());
  CHECK(cmd_verify("flips", opt).all_pass());
  // a different seed still passes, different inputs
  VerifyOptions opt2 = opt;
  opt2.seed = 99;
  auto r1 = cmd_verify("contraction", opt);
  auto r2 = cmd_verify("contraction", opt2);
  CHECK(r2.all_pass());
  CHECK(to_tsv(r1) != to_tsv(r2));
}

TEST_CASE("contribution command cross-checks the standard graph") {
  ContributionOptions opt;
  opt.algebra = "M(2,C)";
  opt.orientable = true;
  opt.genus_or_crosscaps = 1;
  opt.nfaces = 2;
  auto rep = cmd_contribution(opt);
  REQUIRE(rep.rows.size() == 1);
  CHECK(rep.rows[0].expected == "16");
  CHECK(rep.rows[0].pass);

  opt.algebra = "M(1,H)";
  opt.orientable = false;
  opt.genus_or_crosscaps = 3;
  opt.nfaces = 1;
  auto rep2 = cmd_contribution(opt);
  CHECK(rep2.rows[0].expected == "-8");
  CHECK(rep2.rows[0].pass);

  opt.algebra = "C[S3]";
  opt.orientable = true;
  opt.genus_or_crosscaps = 1;
  opt.nfaces = 1;
  CHECK(cmd_contribution(opt).rows[0].expected == "18");

  // the sphere type needs no standard graph
  opt.algebra = "M(3,C)";
  opt.genus_or_crosscaps = 0;
  CHECK(cmd_contribution(opt).rows[0].pass);

  opt.algebra = "M(2,C)";
  opt.orientable = false;
  opt.genus_or_crosscaps = 2;
  CHECK_THROWS_AS(cmd_contribution(opt), std::invalid_argument);
}

TEST_CASE("report serialization") {
  Report rep;
  rep.command = "demo";
  rep.rows.push_back({"check-a", "x=1", "2", "2", true});
  rep.rows.push_back({"check-b", "y=3", "5", "6", false});
  auto tsv = to_tsv(rep);
  CHECK(tsv.find("# demo") == 0);
  CHECK(tsv.find("check-a\tx=1\t2\t2\tyes") != std::string::npos);
  CHECK(tsv.find("check-b\ty=3\t5\t6\tno") != std::string::npos);
  CHECK(tsv.find("# result: FAIL (2 checks)") != std::string::npos);
  CHECK(!rep.all_pass());
  CHECK(rep.exit_status() == 1);
  auto json = to_json(rep);
  CHECK(json.find("\"pass\": false") != std::string::npos);
}
