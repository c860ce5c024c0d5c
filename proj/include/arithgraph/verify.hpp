#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "arithgraph/classgraph.hpp"
#include "arithgraph/theorems.hpp"

namespace arithgraph {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool pass = false;
  std::vector<std::string> details;
};

struct VerifyOptions {
  unsigned jobs = 1;
  bool with_psl2_27 = false;
  std::filesystem::path manifest;  // empty: the bundled manifest
};

struct VerifyReport {
  std::vector<CriterionResult> criteria;
  bool all_pass() const;
  /// Deterministic text: one "criterion N title: PASS|FAIL" line per
  /// criterion followed by its indented details. No timings.
  std::string text() const;
};

inline constexpr std::size_t kOracleMaxOrder = 60;
inline constexpr std::size_t kThetaMaxOrder = 600;
inline constexpr std::size_t kMinChainCorpus = 40;

CriterionResult check_fixtures();
CriterionResult check_minimal_simple(bool with_psl2_27);
/// Fails on any violation, or when the corpus has fewer than min_groups members.
CriterionResult check_chain(const Corpus& c, unsigned jobs, std::size_t min_groups = 0);
CriterionResult check_closure_suite(const Corpus& c, unsigned jobs);
CriterionResult check_oracle_equivalence(const Corpus& c, unsigned jobs);
CriterionResult check_theorem_suite(const Corpus& c, unsigned jobs);
CriterionResult check_theta_agreement(const Corpus& c, unsigned jobs);

/// Verdicts of one theorem on g: every proper nonempty pi for hall, the
/// hawkes/schmidt/sylow graphs for decomposition, and every partition of
/// pi(G) into three blocks (with complement Hall subgroups) for coprime.
std::vector<TheoremVerdict> theorem_verdicts_for(const FiniteGroup& g, TheoremId id);
/// The same over a corpus, in corpus order, named by entry.
std::vector<TheoremVerdict> theorem_verdicts(const Corpus& c, TheoremId id, unsigned jobs);
/// Multi-line witness dump.
std::string dump_verdict(const TheoremVerdict& v);

/// Criteria 1-7 over the manifest corpus. Determinism is a property of
/// this report across runs and job counts.
VerifyReport verify_paper(const VerifyOptions& opts);

}  // namespace arithgraph
