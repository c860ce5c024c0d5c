#include "arithgraph/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>

#include "arithgraph/catalog.hpp"
#include "arithgraph/classgraph.hpp"
#include "arithgraph/emit.hpp"
#include "arithgraph/errors.hpp"
#include "arithgraph/manifest.hpp"
#include "arithgraph/spec_text.hpp"
#include "arithgraph/theorems.hpp"
#include "arithgraph/verify.hpp"

namespace arithgraph::cli {

namespace {

const std::string kFooter =
    "Environment:\n"
    "  ARITHGRAPH_ELEMENT_CAP  maximum number of elements any enumerated group may have\n"
    "                          (default " + std::to_string(kDefaultElementCap) + "); larger groups fail with exit code 3\n"
    "  ARITHGRAPH_DATA         directory holding bundled generator files and corpus.manifest\n"
    "\n"
    "Exit codes: 0 success, 1 property violation (witness printed), 2 input error,\n"
    "            3 budget or threshold exceeded";

struct CorpusArgs {
  std::vector<std::string> manifests;
  std::vector<std::string> groups;
  unsigned jobs = 1;
};

void add_corpus_options(CLI::App* cmd, CorpusArgs& a) {
  cmd->add_option("--corpus", a.manifests, "corpus manifest files (NAME SPEC per line); default: bundled corpus");
  cmd->add_option("--group", a.groups, "extra group specs, named by their text");
  cmd->add_option("--jobs", a.jobs, "worker threads")->check(CLI::Range(1u, 256u));
}

Corpus make_corpus(const CorpusArgs& a) {
  std::vector<std::string> files = a.manifests;
  if (files.empty() && a.groups.empty()) files.push_back(bundled_manifest().string());
  Corpus c;
  for (const auto& f : files) {
    const Corpus part = load_corpus(f);
    for (const auto& e : part.entries()) c.add(e.name, e.group, e.spec);
  }
  for (const auto& g : a.groups) c.add(g, build(parse_group_spec(g)), g);
  return c;
}

int code_for(ErrorKind k) {
  switch (k) {
    case ErrorKind::BudgetExceeded:
    case ErrorKind::ThresholdExceeded:
    case ErrorKind::NotSolubleAndTooLarge: return kBudget;
    default: return kInputError;
  }
}

TheoremId parse_theorem(const std::string& s) {
  for (TheoremId t : {TheoremId::SylowTower, TheoremId::Solubility, TheoremId::HallNormal,
                      TheoremId::DirectDecomposition, TheoremId::CoprimeTriple, TheoremId::MinimalSimple})
    if (to_string(t) == s) return t;
  throw Error(ErrorKind::InvalidSpec, "unknown theorem '" + s + "'");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Arithmetic prime graphs of finite permutation groups", "arithgraph"};
  app.footer(kFooter);
  app.require_subcommand(1);

  std::string fn_text = "hawkes", spec_text, format_text = "json";
  auto* graph = app.add_subcommand("graph", "compute one graph of one group");
  graph->add_option("--fn", fn_text, "gk, hawkes, sylow or schmidt")->required();
  graph->add_option("--group", spec_text, "group spec, e.g. S:4, S:3xC:5, Schmidt:2,3, file:PATH")->required();
  graph->add_option("--format", format_text, "json or dot");

  CorpusArgs ca;
  auto* cgraph = app.add_subcommand("corpus-graph", "union of the graphs of a corpus");
  cgraph->add_option("--fn", fn_text, "gk, hawkes, sylow or schmidt")->required();
  cgraph->add_option("--format", format_text, "json or dot");
  add_corpus_options(cgraph, ca);

  auto* check = app.add_subcommand("check", "property checks over a corpus");
  check->require_subcommand(1);
  auto* chain = check->add_subcommand("chain", "sylow <= schmidt <= hawkes for every member");
  add_corpus_options(chain, ca);
  std::string op_text;
  SamplingPolicy pol;
  auto* closure = check->add_subcommand("closure", "closure of a graph function under an operator");
  closure->add_option("--fn", fn_text, "gk, hawkes, sylow or schmidt")->required();
  closure->add_option("--op", op_text, "S, Q, D0, R0, N0 or EPhi")->required();
  closure->add_option("--seed", pol.seed, "seed for sampled subgroups");
  closure->add_option("--random-subgroups", pol.random_subgroups, "sampled subgroups per large group");
  add_corpus_options(closure, ca);
  std::string which;
  bool psl2_27 = false;
  auto* theorems = check->add_subcommand("theorems", "premise/conclusion checks of one theorem");
  theorems->add_option("--which", which, "tower, solubility, hall, decomposition, coprime or minimal-simple")
      ->required();
  theorems->add_flag("--with-psl2-27", psl2_27, "minimal-simple: include PSL(2,27)");
  add_corpus_options(theorems, ca);

  VerifyOptions vo;
  std::string manifest;
  auto* verify = app.add_subcommand("verify-paper", "run the full acceptance suite on the bundled corpus");
  verify->add_option("--jobs", vo.jobs, "worker threads")->check(CLI::Range(1u, 256u));
  verify->add_flag("--with-psl2-27", vo.with_psl2_27, "include PSL(2,27) in the minimal simple checks");
  verify->add_option("--manifest", manifest, "corpus manifest (default: bundled)");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return e.get_exit_code() == 0 ? kOk : kInputError;
  }

  try {
    if (graph->parsed()) {
      const GraphFn fn = parse_graph_fn(fn_text);
      const GraphFormat fmt = parse_graph_format(format_text);
      const FiniteGroup g = build(parse_group_spec(spec_text));
      const std::string text = emit_graph(compute_graph(g, fn), fmt);
      out << text << (fmt == GraphFormat::Json ? "\n" : "");
      return kOk;
    }
    if (cgraph->parsed()) {
      const GraphFn fn = parse_graph_fn(fn_text);
      const GraphFormat fmt = parse_graph_format(format_text);
      const std::string text = emit_graph(corpus_graph(make_corpus(ca), fn, ca.jobs), fmt);
      out << text << (fmt == GraphFormat::Json ? "\n" : "");
      return kOk;
    }
    if (chain->parsed()) {
      const CriterionResult r = check_chain(make_corpus(ca), ca.jobs);
      for (const auto& d : r.details) out << d << "\n";
      out << (r.pass ? "chain holds\n" : "chain VIOLATED\n");
      return r.pass ? kOk : kViolation;
    }
    if (closure->parsed()) {
      const GraphFn fn = parse_graph_fn(fn_text);
      const ClosureOp op = parse_closure_op(op_text);
      pol.jobs = ca.jobs;
      const ClosureReport rep = closure_check(make_corpus(ca), fn, op, pol);
      for (const auto& g : rep.groups) {
        out << g.group << " " << to_string(g.status) << " " << g.checks << " comparisons";
        if (!g.note.empty()) out << " (" << g.note << ")";
        out << "\n";
      }
      for (const auto& w : rep.witnesses) out << "witness " << w.describe() << "\n";
      out << to_string(fn) << " " << to_string(op) << (rep.holds ? " holds" : " FAILS") << " after " << rep.checks
          << " comparisons\n";
      return rep.holds ? kOk : kViolation;
    }
    if (theorems->parsed()) {
      const TheoremId id = parse_theorem(which);
      const auto verdicts =
          id == TheoremId::MinimalSimple ? minimal_simple_graph_check(psl2_27) : theorem_verdicts(make_corpus(ca), id, ca.jobs);
      bool bad = false;
      for (const auto& v : verdicts) {
        // Minimal simple cases always hold their premise; the graph must match.
        const bool refuted = v.refutes();
        bad = bad || refuted;
        out << (refuted ? "REFUTED " : "") << dump_verdict(v);
      }
      return bad ? kViolation : kOk;
    }
    if (verify->parsed()) {
      vo.manifest = manifest;
      const VerifyReport rep = verify_paper(vo);
      out << rep.text();
      return rep.all_pass() ? kOk : kViolation;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return code_for(e.kind());
  }
  return kInputError;
}

}  // namespace arithgraph::cli
