#include "arithgraph/verify.hpp"

#include <algorithm>

#include "arithgraph/catalog.hpp"
#include "arithgraph/errors.hpp"
#include "arithgraph/manifest.hpp"
#include "arithgraph/oracles.hpp"
#include "arithgraph/parallel.hpp"
#include "arithgraph/spec_text.hpp"
#include "arithgraph/structure.hpp"
#include "arithgraph/theorems.hpp"

namespace arithgraph {

namespace {

std::string verdict_line(const TheoremVerdict& v) {
  std::string s = std::string(to_string(v.theorem)) + " " + v.group + " premise=" + (v.premise_holds ? "yes" : "no") +
                  " conclusion=" + (v.conclusion_holds ? "yes" : "no");
  if (!v.witness.note.empty()) s += " (" + v.witness.note + ")";
  return s;
}

std::string primes_text(const PrimeSet& ps) {
  std::string s = "{";
  for (std::size_t i = 0; i < ps.size(); ++i) s += (i ? "," : "") + std::to_string(ps[i]);
  return s + "}";
}

// All partitions of ps into exactly three nonempty blocks, in a fixed order.
std::vector<std::vector<PrimeSet>> three_block_partitions(const PrimeSet& ps) {
  std::vector<std::vector<PrimeSet>> out;
  const std::size_t n = ps.size();
  if (n < 3) return out;
  std::vector<unsigned> label(n, 0);
  // Restricted growth strings with maximum label 2.
  while (true) {
    unsigned mx = 0;
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) {
      if (label[i] > mx + 1) ok = false;
      mx = std::max(mx, label[i]);
    }
    if (ok && label[0] == 0 && mx == 2) {
      std::vector<PrimeSet> blocks(3);
      for (std::size_t i = 0; i < n; ++i) blocks[label[i]].push_back(ps[i]);
      out.push_back(std::move(blocks));
    }
    std::size_t i = n;
    while (i > 0 && label[i - 1] == 2) label[--i] = 0;
    if (i == 0) break;
    ++label[i - 1];
  }
  return out;
}

struct Fixture {
  std::string label;
  GraphFn fn;
  const char* spec;
  PrimeDigraph expected;
};

}  // namespace

bool VerifyReport::all_pass() const {
  return std::all_of(criteria.begin(), criteria.end(), [](const CriterionResult& r) { return r.pass; });
}

std::string VerifyReport::text() const {
  std::string out;
  for (const auto& r : criteria) {
    out += "criterion " + std::to_string(r.id) + " " + r.title + ": " + (r.pass ? "PASS" : "FAIL") + "\n";
    for (const auto& d : r.details) out += "  " + d + "\n";
  }
  out += std::string("overall: ") + (all_pass() ? "PASS" : "FAIL") + "\n";
  return out;
}

CriterionResult check_fixtures() {
  CriterionResult r{1, "exact fixtures", true, {}};
  const std::vector<Fixture> fixtures{
      {"hawkes(S4)", GraphFn::Hawkes, "S:4", PrimeDigraph({2, 3}, {{2, 2}, {2, 3}, {3, 2}})},
      {"sylow(S4)", GraphFn::Sylow, "S:4", PrimeDigraph({2, 3}, {{3, 2}})},
      {"sylow(A4)", GraphFn::Sylow, "A:4", PrimeDigraph({2, 3}, {{2, 3}})},
  };
  for (const auto& f : fixtures) {
    const PrimeDigraph got = compute_graph(build(parse_group_spec(f.spec)), f.fn);
    const bool ok = got == f.expected;
    r.pass = r.pass && ok;
    r.details.push_back(f.label + " = " + got.to_string() + (ok ? "" : " expected " + f.expected.to_string()));
  }
  return r;
}

CriterionResult check_minimal_simple(bool with_psl2_27) {
  CriterionResult r{2, "minimal simple Schmidt graphs", true, {}};
  for (const auto& v : minimal_simple_graph_check(with_psl2_27)) {
    r.pass = r.pass && v.conclusion_holds;
    std::string line = "schmidt(" + v.group + ") = " + v.witness.graph.to_string();
    if (!v.conclusion_holds) line += " expected " + v.witness.expected->to_string();
    r.details.push_back(line);
  }
  return r;
}

CriterionResult check_chain(const Corpus& c, unsigned jobs, std::size_t min_groups) {
  CriterionResult r{3, "containment chain sylow <= schmidt <= hawkes", true, {}};
  std::vector<std::string> lines(c.size());
  std::vector<char> ok(c.size(), 0);
  parallel_for(c.size(), jobs, [&](std::size_t i) {
    const PrimeDigraph s = c.graph(i, GraphFn::Sylow), sch = c.graph(i, GraphFn::Schmidt),
                       h = c.graph(i, GraphFn::Hawkes);
    ok[i] = is_subgraph(s, sch) && is_subgraph(sch, h);
    lines[i] = c[i].name + (ok[i] ? " ok" : " VIOLATION") + " sylow " + s.to_string() + " schmidt " + sch.to_string() +
               " hawkes " + h.to_string();
  });
  std::size_t bad = 0;
  for (std::size_t i = 0; i < c.size(); ++i) {
    bad += ok[i] ? 0 : 1;
    r.details.push_back(lines[i]);
  }
  r.pass = bad == 0 && c.size() >= min_groups;
  r.details.insert(r.details.begin(), std::to_string(c.size()) + " groups, " + std::to_string(bad) + " violations");
  return r;
}

CriterionResult check_closure_suite(const Corpus& c, unsigned jobs) {
  CriterionResult r{4, "closure suite", true, {}};
  SamplingPolicy pol;
  pol.jobs = jobs;
  struct Run {
    GraphFn fn;
    ClosureOp op;
    enum { MustHold, MustFail, Survey } mode;
  };
  const std::vector<Run> runs{
      {GraphFn::Hawkes, ClosureOp::S, Run::MustHold},     {GraphFn::Hawkes, ClosureOp::Q, Run::MustHold},
      {GraphFn::Hawkes, ClosureOp::D0, Run::MustHold},    {GraphFn::Hawkes, ClosureOp::R0, Run::MustHold},
      {GraphFn::Hawkes, ClosureOp::N0, Run::MustHold},    {GraphFn::Hawkes, ClosureOp::EPhi, Run::MustHold},
      {GraphFn::Schmidt, ClosureOp::S, Run::MustHold},    {GraphFn::Schmidt, ClosureOp::Q, Run::MustHold},
      {GraphFn::Schmidt, ClosureOp::D0, Run::MustHold},   {GraphFn::Schmidt, ClosureOp::R0, Run::MustHold},
      {GraphFn::Sylow, ClosureOp::Q, Run::MustHold},      {GraphFn::Sylow, ClosureOp::R0, Run::MustHold},
      {GraphFn::Sylow, ClosureOp::S, Run::MustFail},      {GraphFn::Schmidt, ClosureOp::N0, Run::Survey},
      {GraphFn::Schmidt, ClosureOp::EPhi, Run::Survey},   {GraphFn::Sylow, ClosureOp::N0, Run::Survey},
      {GraphFn::Sylow, ClosureOp::EPhi, Run::Survey},
  };
  for (const auto& run : runs) {
    const ClosureReport rep = closure_check(c, run.fn, run.op, pol);
    std::size_t skipped = 0, failing = 0;
    for (const auto& g : rep.groups) {
      skipped += g.status == GroupStatus::Skipped;
      failing += g.status == GroupStatus::Fails;
    }
    bool ok = true;
    std::string verdict;
    switch (run.mode) {
      case Run::MustHold:
        ok = rep.holds;
        verdict = rep.holds ? "holds" : "FAILS";
        break;
      case Run::MustFail: {
        const auto it = std::find_if(rep.witnesses.begin(), rep.witnesses.end(), [&](const ClosureWitness& w) {
          return w.group == "S4" && w.first_order == 12 && w.lhs == PrimeDigraph({2, 3}, {{2, 3}}) &&
                 w.rhs == PrimeDigraph({2, 3}, {{3, 2}});
        });
        ok = !rep.holds && it != rep.witnesses.end() && revalidate(c, run.fn, run.op, *it);
        verdict = std::string(rep.holds ? "holds" : "fails") + (it != rep.witnesses.end() ? ", A4 <= S4 witness found" : ", A4 <= S4 witness MISSING");
        break;
      }
      case Run::Survey:
        verdict = std::string("survey: ") + (rep.holds ? "holds" : "fails");
        break;
    }
    std::string line = std::string(to_string(run.fn)) + " " + std::string(to_string(run.op)) + ": " + verdict +
                       " (" + std::to_string(rep.checks) + " comparisons, " + std::to_string(failing) +
                       " failing groups, " + std::to_string(skipped) + " skipped)";
    r.details.push_back(line);
    // Witnesses are dumped for every failing run so each can be rerun alone.
    for (std::size_t k = 0; k < rep.witnesses.size() && k < 4; ++k)
      r.details.push_back("  witness " + rep.witnesses[k].describe());
    if (rep.witnesses.size() > 4) r.details.push_back("  ... " + std::to_string(rep.witnesses.size() - 4) + " more");
    r.pass = r.pass && ok;
  }
  return r;
}

CriterionResult check_oracle_equivalence(const Corpus& c, unsigned jobs) {
  CriterionResult r{5, "oracle equivalence for orders <= 60", true, {}};
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < c.size(); ++i)
    if (c[i].group.order() <= kOracleMaxOrder) idx.push_back(i);
  std::vector<std::string> bad(idx.size());
  parallel_for(idx.size(), jobs, [&](std::size_t k) {
    const auto& e = c[idx[k]];
    const PrimeDigraph fast = c.graph(idx[k], GraphFn::Schmidt), slow = oracle::schmidt_graph(e.group);
    if (fast != slow) bad[k] = e.name + " pair-scan " + fast.to_string() + " oracle " + slow.to_string();
  });
  std::size_t n = 0;
  for (const auto& b : bad)
    if (!b.empty()) {
      ++n;
      r.details.push_back(b);
    }
  r.pass = n == 0 && !idx.empty();
  r.details.insert(r.details.begin(), std::to_string(idx.size()) + " groups, " + std::to_string(n) + " discrepancies");
  return r;
}

std::vector<TheoremVerdict> theorem_verdicts_for(const FiniteGroup& g, TheoremId id) {
  std::vector<TheoremVerdict> out;
  const PrimeSet ps = g.primes();
  switch (id) {
    case TheoremId::SylowTower: out.push_back(sylow_tower_check(g)); break;
    case TheoremId::Solubility: out.push_back(solubility_criteria(g)); break;
    case TheoremId::HallNormal:
      for (std::uint32_t mask = 1; mask + 1 < (1u << ps.size()); ++mask) {
        PrimeSet pi;
        for (std::size_t k = 0; k < ps.size(); ++k)
          if (mask >> k & 1u) pi.push_back(ps[k]);
        out.push_back(hall_normal_check(g, pi));
      }
      break;
    case TheoremId::DirectDecomposition:
      for (GraphFn fn : {GraphFn::Hawkes, GraphFn::Schmidt, GraphFn::Sylow})
        out.push_back(direct_decomposition_check(g, fn));
      break;
    case TheoremId::CoprimeTriple:
      if (is_soluble(g))
        for (const auto& blocks : three_block_partitions(ps)) {
          const auto t = complement_hall_triple(g, blocks);
          out.push_back(coprime_triple_check(g, t[0], t[1], t[2]));
        }
      break;
    case TheoremId::MinimalSimple:
      throw Error(ErrorKind::InvalidSpec, "minimal-simple runs on its own fixed groups");
  }
  for (auto& v : out) v.group = g.name();
  return out;
}

std::vector<TheoremVerdict> theorem_verdicts(const Corpus& c, TheoremId id, unsigned jobs) {
  std::vector<std::vector<TheoremVerdict>> per(c.size());
  parallel_for(c.size(), jobs, [&](std::size_t i) {
    per[i] = theorem_verdicts_for(c[i].group, id);
    for (auto& v : per[i]) v.group = c[i].name;
  });
  std::vector<TheoremVerdict> out;
  for (auto& vs : per)
    for (auto& v : vs) out.push_back(std::move(v));
  return out;
}

std::string dump_verdict(const TheoremVerdict& v) {
  const TheoremWitness& w = v.witness;
  std::string out = verdict_line(v) + "\n  graph " + w.graph.to_string() + "\n";
  if (w.expected) out += "  expected " + w.expected->to_string() + "\n";
  if (!w.ordering.empty()) out += "  ordering " + primes_text(w.ordering) + "\n";
  if (w.cycle) out += "  cycle " + primes_text(*w.cycle) + "\n";
  for (const auto& b : w.blocks) out += "  block " + primes_text(b) + "\n";
  for (std::size_t i = 0; i < w.orders.size(); ++i) {
    out += "  subgroup order " + std::to_string(w.orders[i]);
    if (i < w.subgroups.size()) {
      out += " gens <";
      for (std::size_t k = 0; k < w.subgroups[i].size(); ++k) out += (k ? ", " : "") + w.subgroups[i][k].to_cycles();
      out += ">";
    }
    out += "\n";
  }
  if (!w.criteria.empty()) {
    out += "  criteria";
    for (bool b : w.criteria) out += b ? " 1" : " 0";
    out += "\n";
  }
  return out;
}

CriterionResult check_theorem_suite(const Corpus& c, unsigned jobs) {
  CriterionResult r{6, "theorem suite", true, {}};
  for (TheoremId id : {TheoremId::SylowTower, TheoremId::Solubility, TheoremId::HallNormal,
                       TheoremId::DirectDecomposition, TheoremId::CoprimeTriple}) {
    try {
      const auto vs = theorem_verdicts(c, id, jobs);
      std::size_t premise = 0;
      std::vector<std::string> refuted;
      for (const auto& v : vs) {
        premise += v.premise_holds;
        if (v.refutes()) refuted.push_back(verdict_line(v));
      }
      r.details.push_back(std::string(to_string(id)) + ": " + std::to_string(vs.size()) + " verdicts, " +
                          std::to_string(premise) + " with premise, " + std::to_string(refuted.size()) + " refuted");
      for (const auto& line : refuted) r.details.push_back("  " + line);
      r.pass = r.pass && refuted.empty() && premise > 0;
    } catch (const Error& err) {
      r.pass = false;
      r.details.push_back(std::string(to_string(id)) + ": error " + err.what());
    }
  }

  // Criterion (b) on H(3,5) x H(5,3).
  {
    const FiniteGroup g = build(parse_group_spec("Schmidt:3,5xSchmidt:5,3"));
    const TheoremVerdict v = solubility_criteria(g);
    const bool ok = v.witness.criteria.size() == 3 && v.witness.criteria[1] && v.premise_holds && v.conclusion_holds;
    r.pass = r.pass && ok;
    r.details.push_back("criterion (b) on " + g.name() + ": schmidt " + v.witness.graph.to_string() +
                        " criteria a=" + (v.witness.criteria[0] ? "1" : "0") + " b=" + (v.witness.criteria[1] ? "1" : "0") +
                        " c=" + (v.witness.criteria[2] ? "1" : "0") + " soluble=" + (v.conclusion_holds ? "yes" : "no"));
  }
  // Direct Hall decompositions of S3 x Z5 and Z30.
  for (const char* name : {"S:3xC:5", "C:30"}) {
    const FiniteGroup g = build(parse_group_spec(name));
    for (GraphFn fn : {GraphFn::Schmidt, GraphFn::Hawkes}) {
      const TheoremVerdict v = direct_decomposition_check(g, fn);
      const bool ok = v.premise_holds && v.conclusion_holds;
      r.pass = r.pass && ok;
      std::string comps;
      for (const auto& b : v.witness.blocks) comps += primes_text(b);
      r.details.push_back("decomposition " + g.name() + " via " + std::string(to_string(fn)) + ": components " + comps +
                          (ok ? " split verified" : " NOT verified"));
    }
  }
  // The non-coprime S4 example.
  {
    const FiniteGroup g = symmetric_group(4);
    const SubgroupRef p2 = sylow_subgroup(g, 2), a4 = commutator_subgroup(whole_group(g));
    const std::vector<Permutation> s3gens{Permutation::from_cycles(4, "(1 2 3)"), Permutation::from_cycles(4, "(1 2)")};
    const SubgroupRef s3 = subgroup_generated(g, s3gens);
    const TheoremVerdict v = coprime_triple_check(g, p2, a4, s3);
    const PrimeDigraph want({2, 3}, {{2, 3}, {3, 2}});
    const bool ok = !v.premise_holds && v.witness.graph == want && v.witness.graph != *v.witness.expected;
    r.pass = r.pass && ok;
    r.details.push_back("S4 with Sylow 2, A4, S3: premise=" + std::string(v.premise_holds ? "yes" : "no") + " union " +
                        v.witness.graph.to_string() + " hawkes " + v.witness.expected->to_string());
  }
  return r;
}

CriterionResult check_theta_agreement(const Corpus& c, unsigned jobs) {
  CriterionResult r{7, "theta-local agreement for orders <= 600", true, {}};
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < c.size(); ++i)
    if (c[i].group.order() <= kThetaMaxOrder) idx.push_back(i);
  std::vector<std::vector<std::string>> bad(idx.size()), skipped(idx.size());
  parallel_for(idx.size(), jobs, [&](std::size_t k) {
    const std::size_t i = idx[k];
    const FiniteGroup& g = c[i].group;
    const PrimeDigraph h = c.graph(i, GraphFn::Hawkes), s = c.graph(i, GraphFn::Sylow),
                       sch = c.graph(i, GraphFn::Schmidt);
    auto cmp = [&](const char* what, const PrimeDigraph& got, const PrimeDigraph& want) {
      if (got != want) bad[k].push_back(c[i].name + " " + what + " " + got.to_string() + " vs " + want.to_string());
    };
    cmp("chief-factors-with-p", theta_local_graph(g, {SelectorKind::ChiefFactorsWithP, {}, kMaxPSubgroups}, false), h);
    cmp("sylow-p", theta_local_graph(g, {SelectorKind::SylowP, {}, kMaxPSubgroups}, true), s);
    try {
      cmp("all-p-subgroups", theta_local_graph(g, {SelectorKind::AllPSubgroups, {}, kMaxPSubgroups}, true), sch);
    } catch (const Error& err) {
      if (err.kind() != ErrorKind::BudgetExceeded) throw;
      skipped[k].push_back(c[i].name + " all-p-subgroups over budget");
    }
    // O_{p',p} route against the chief-factor route.
    cmp("hawkes-by-chief-factors", hawkes_graph_chief(g), h);
  });
  std::size_t nbad = 0, nskip = 0;
  for (std::size_t k = 0; k < idx.size(); ++k) {
    nbad += bad[k].size();
    nskip += skipped[k].size();
    r.details.insert(r.details.end(), bad[k].begin(), bad[k].end());
    r.details.insert(r.details.end(), skipped[k].begin(), skipped[k].end());
  }
  r.pass = nbad == 0 && !idx.empty();
  r.details.insert(r.details.begin(), std::to_string(idx.size()) + " groups, " + std::to_string(nbad) +
                                          " disagreements, " + std::to_string(nskip) + " budget skips");
  return r;
}

VerifyReport verify_paper(const VerifyOptions& opts) {
  const Corpus c = load_corpus(opts.manifest.empty() ? bundled_manifest() : opts.manifest);
  VerifyReport rep;
  rep.criteria.push_back(check_fixtures());
  rep.criteria.push_back(check_minimal_simple(opts.with_psl2_27));
  rep.criteria.push_back(check_chain(c, opts.jobs, kMinChainCorpus));
  rep.criteria.push_back(check_closure_suite(c, opts.jobs));
  rep.criteria.push_back(check_oracle_equivalence(c, opts.jobs));
  rep.criteria.push_back(check_theorem_suite(c, opts.jobs));
  rep.criteria.push_back(check_theta_agreement(c, opts.jobs));
  return rep;
}

}  // namespace arithgraph
