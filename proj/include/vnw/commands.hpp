#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "vnw/algebra.hpp"
#include "vnw/maps.hpp"
#include "vnw/report.hpp"

namespace vnw::cli {

/// Resolves a group by built-in name ("S4", "Q8", "Z2xZ2", ...) or by a JSON
/// file path. Throws std::invalid_argument for unknown names.
groups::FiniteGroup resolve_group(const std::string& name_or_file);

/// Resolves an algebra: "M(2,C)" / "M2C" style matrix algebras, "C[S3]" /
/// "R[Q8]" group algebras, or a JSON file path. File-loaded algebras must
/// pass check_star_trace_axioms (warnings are collected into *notes).
algebra::StarAlgebra resolve_algebra(const std::string& name_or_file,
                                     std::vector<std::string>* notes = nullptr);

struct CensusOptions {
  std::vector<int> degree_sequence;  // either this ...
  int max_weighted_degree = -1;      // ... or every sequence up to this
  maps::Mode mode = maps::Mode::Ribbon;
  int max_darts = 12;
  int threads = 1;
};

/// One row per isomorphism class: canonical form, v_j vector, |Aut|,
/// topological type, labeled count; verifies orbit-stabilizer per row.
Report cmd_census(const CensusOptions& opt);

struct VerifyOptions {
  std::vector<std::string> groups;    // suite-dependent defaults when empty
  std::vector<std::string> algebras;  // idem
  int genus_max = 3;
  int crosscap_max = 4;
  int max_weighted_degree = -1;  // default: 8 complex / 6 real (wick suite)
  int checks = 200;              // contraction suite
  std::uint64_t seed = 0;
  int threads = 1;
};

Report cmd_verify(const std::string& suite, const VerifyOptions& opt);

struct ContributionOptions {
  std::string algebra;
  bool orientable = true;
  int genus_or_crosscaps = 0;
  int nfaces = 1;
};

/// Prints the exact surface invariant plus the standard-graph recomputation
/// as a cross-check.
Report cmd_contribution(const ContributionOptions& opt);

// verify sub-suites, reusable from tests and the acceptance runner
Report verify_wick(const std::vector<std::string>& algebras, int max_weighted_degree,
                   int threads);
Report verify_mednykh(const std::vector<std::string>& group_names, int genus_max);
Report verify_frobenius_schur(const std::vector<std::string>& group_names, int crosscap_max);
Report verify_contraction(const std::vector<std::string>& algebras, int checks,
                          std::uint64_t seed);
Report verify_flips(const std::vector<std::string>& algebras, int checks, std::uint64_t seed);

}  // namespace vnw::cli
