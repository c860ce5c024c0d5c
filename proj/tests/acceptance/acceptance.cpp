// One PASS/FAIL line per acceptance criterion. Expected edge sets are
// written out literally here, independent of the library's own tables.
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "arithgraph/catalog.hpp"
#include "arithgraph/graphs.hpp"
#include "arithgraph/manifest.hpp"
#include "arithgraph/spec_text.hpp"
#include "arithgraph/verify.hpp"

using namespace arithgraph;
using Clock = std::chrono::steady_clock;

namespace {

// Runtime limits in seconds.
constexpr double kFixtureLimit = 1.0;
constexpr double kPsl2_4Limit = 1.0;
constexpr double kPsl2_8Limit = 30.0;
constexpr double kPsl3_3Limit = 300.0;
constexpr double kSz8Limit = 1200.0;
constexpr double kOracleLimit = 120.0;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

template <class F>
auto timed(double& secs, F&& f) {
  const auto t0 = Clock::now();
  auto r = f();
  secs = seconds_since(t0);
  return r;
}

std::string fmt_secs(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3fs", s);
  return buf;
}

int failures = 0;

void report(int id, const std::string& title, bool pass, const std::vector<std::string>& details) {
  std::cout << "criterion " << id << " " << title << ": " << (pass ? "PASS" : "FAIL") << "\n";
  for (const auto& d : details) std::cout << "  " << d << "\n";
  std::cout.flush();
  if (!pass) ++failures;
}

struct GraphCase {
  std::string label, spec;
  GraphFn fn;
  PrimeDigraph expected;
  double limit;
};

void graph_cases(int id, const std::string& title, const std::vector<GraphCase>& cases) {
  bool pass = true;
  std::vector<std::string> details;
  for (const auto& c : cases) {
    double secs = 0;
    const PrimeDigraph got = timed(secs, [&] { return compute_graph(build(parse_group_spec(c.spec)), c.fn); });
    const bool exact = got == c.expected;
    const bool fast = secs < c.limit;
    pass = pass && exact && fast;
    details.push_back(c.label + " = " + got.to_string() + (exact ? "" : " expected " + c.expected.to_string()) +
                      " in " + fmt_secs(secs) + " (limit " + fmt_secs(c.limit) + ")" + (fast ? "" : " TOO SLOW"));
  }
  report(id, title, pass, details);
}

}  // namespace

int main() {
  graph_cases(1, "exact fixtures",
              {{"hawkes(S4)", "S:4", GraphFn::Hawkes, PrimeDigraph({2, 3}, {{2, 3}, {3, 2}, {2, 2}}), kFixtureLimit},
               {"sylow(S4)", "S:4", GraphFn::Sylow, PrimeDigraph({2, 3}, {{3, 2}}), kFixtureLimit},
               {"sylow(A4)", "A:4", GraphFn::Sylow, PrimeDigraph({2, 3}, {{2, 3}}), kFixtureLimit}});

  // 2^p family: (2,q) for q | 2^p-1, (q,2) for q | 2^2p-1; Sz: (q,2) for q | (2^p-1)(2^2p+1).
  graph_cases(2, "minimal simple Schmidt graphs",
              {{"schmidt(PSL(2,4))", "PSL2:4", GraphFn::Schmidt,
                PrimeDigraph({2, 3, 5}, {{2, 3}, {3, 2}, {5, 2}}), kPsl2_4Limit},
               {"schmidt(PSL(2,8))", "PSL2:8", GraphFn::Schmidt,
                PrimeDigraph({2, 3, 7}, {{2, 7}, {3, 2}, {7, 2}}), kPsl2_8Limit},
               {"schmidt(PSL(3,3))", "PSL3:3", GraphFn::Schmidt,
                PrimeDigraph({2, 3, 13}, {{2, 3}, {3, 2}, {13, 3}}), kPsl3_3Limit},
               {"schmidt(Sz(8))", "Sz:8", GraphFn::Schmidt,
                PrimeDigraph({2, 5, 7, 13}, {{2, 7}, {5, 2}, {7, 2}, {13, 2}}), kSz8Limit}});

  const Corpus corpus = load_corpus(bundled_manifest());
  VerifyReport first;
  first.criteria.push_back(check_fixtures());
  first.criteria.push_back(check_minimal_simple(false));

  {
    CriterionResult r = check_chain(corpus, 1, kMinChainCorpus);
    first.criteria.push_back(r);
    const bool big = corpus.size() >= kMinChainCorpus;
    report(3, r.title, r.pass && big,
           {r.details.front(), "corpus size " + std::to_string(corpus.size()) + " (minimum " +
                                   std::to_string(kMinChainCorpus) + ")"});
  }
  {
    CriterionResult r = check_closure_suite(corpus, 1);
    first.criteria.push_back(r);
    report(4, r.title, r.pass, r.details);
  }
  {
    double secs = 0;
    CriterionResult r = timed(secs, [&] { return check_oracle_equivalence(corpus, 1); });
    first.criteria.push_back(r);
    const bool fast = secs < kOracleLimit;
    std::vector<std::string> d = r.details;
    d.push_back("runtime " + fmt_secs(secs) + " (limit " + fmt_secs(kOracleLimit) + ")" + (fast ? "" : " TOO SLOW"));
    report(5, r.title, r.pass && fast, d);
  }
  {
    CriterionResult r = check_theorem_suite(corpus, 1);
    first.criteria.push_back(r);
    report(6, r.title, r.pass, r.details);
  }
  {
    CriterionResult r = check_theta_agreement(corpus, 1);
    first.criteria.push_back(r);
    report(7, r.title, r.pass, r.details);
  }
  {
    VerifyOptions opts;
    opts.jobs = 4;
    const std::string a = first.text();
    const std::string b = verify_paper(opts).text();
    std::vector<std::string> d{"jobs=1 report " + std::to_string(a.size()) + " bytes, jobs=4 report " +
                               std::to_string(b.size()) + " bytes"};
    if (a != b) {
      std::size_t i = 0;
      while (i < a.size() && i < b.size() && a[i] == b[i]) ++i;
      d.push_back("first difference at byte " + std::to_string(i));
    }
    report(8, "determinism across runs and job counts", a == b, d);
  }

  std::cout << (failures == 0 ? "acceptance: all criteria PASS" : "acceptance: " + std::to_string(failures) + " FAIL")
            << "\n";
  return failures == 0 ? 0 : 1;
}
