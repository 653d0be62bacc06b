#include "nomrw/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <stdexcept>

#include "nomrw/constraint.hpp"
#include "nomrw/equivalence.hpp"
#include "nomrw/errors.hpp"
#include "nomrw/oracle.hpp"
#include "nomrw/ordering.hpp"
#include "nomrw/rewrite.hpp"
#include "nomrw/syntax.hpp"

namespace nomrw {

namespace {

constexpr int kPositive = 0;
constexpr int kNegative = 1;
constexpr int kUsage = 2;

struct Options {
  bool porcelain = false;
  std::string file;
  std::string ctx;

  // check
  std::string atoms = "a,b";
  std::size_t depth = 2;
  bool no_abstractions = false;
  std::size_t max_instances = InstanceConfig{}.max_instances;

  // rewrite
  std::string term;
  std::size_t steps = 1000;
  bool trace = false;

  // equiv / match / fresh / fixpoint / factorize
  std::string lhs;
  std::string rhs;
  std::string modulo = "alpha";
  std::string atom;
  std::string perm;
  std::string fresh_atoms;
  std::string rule_ctx;
  bool oracle = false;
};

/// Error messages for the problem file carry its path.
ProblemFile load(const std::string& path) {
  try {
    return load_problem(path);
  } catch (const ParseError& e) {
    throw Error(path + ":" + e.what());
  }
}

/// A term given on the command line: the name of a `term` declaration, or
/// concrete syntax.
Term term_arg(const ProblemFile& pf, const std::string& text, const char* what) {
  if (const Term* named = pf.find_term(text)) return *named;
  try {
    return parse_term(text, pf.sig);
  } catch (const ParseError& e) {
    throw Error(std::string(what) + ":" + e.what());
  }
}

FreshnessContext ctx_arg(const std::string& text, const char* what) {
  if (text.empty()) return {};
  try {
    return parse_context(text);
  } catch (const ParseError& e) {
    throw Error(std::string(what) + ":" + e.what());
  }
}

const char* yes_no(bool b) { return b ? "true" : "false"; }

int cmd_check(const Options& o, std::ostream& out) {
  ProblemFile pf = load(o.file);
  InstanceConfig inst;
  inst.atoms = parse_atom_list(o.atoms);
  inst.depth = o.depth;
  inst.include_abstractions = !o.no_abstractions;
  inst.max_instances = o.max_instances;
  TerminationReport report = check_termination(pf.system(), pf.crpo(), inst);
  for (const RuleReport& r : report.rules) {
    bool ok = r.verdict == RuleVerdict::Oriented;
    if (o.porcelain) {
      out << "rule: " << r.rule << ' ' << (ok ? "ORIENTED" : "NOT-ORIENTED") << ' ' << r.instances_checked << ' '
          << r.instance_depth << '\n';
      if (!ok) {
        out << "counterexample: " << r.rule << ' ' << print_subst(*r.counterexample) << '\n';
      }
      continue;
    }
    out << "rule " << r.rule << ": " << (ok ? "ORIENTED" : "NOT-ORIENTED") << " (" << r.instances_checked
        << " ground instances, depth <= " << r.instance_depth << ")\n";
    if (!ok) {
      out << "  instance: " << print_subst(*r.counterexample) << '\n'
          << "  lhs: " << print_term(r.counterexample_sides->first) << '\n'
          << "  rhs: " << print_term(r.counterexample_sides->second) << '\n'
          << "  lhs is not greater than rhs\n";
    }
  }
  if (o.porcelain) {
    out << "verdict: " << (report.accepted ? "ACCEPTED" : "REJECTED") << '\n';
  } else if (report.accepted) {
    out << "ACCEPTED: every rule decreases on the tested ground instances\n";
  } else {
    out << "REJECTED: some rule does not decrease\n";
  }
  return report.accepted ? kPositive : kNegative;
}

int cmd_rewrite(const Options& o, std::ostream& out) {
  ProblemFile pf = load(o.file);
  Term t = term_arg(pf, o.term, "--term");
  FreshnessContext ctx = ctx_arg(o.ctx, "--ctx");
  check_well_formed(t, pf.sig);
  NormalizeResult res = normalize(pf.system(), t, o.steps, ctx);
  bool nf = res.status == NormalizeStatus::NormalForm;
  if (o.trace) {
    for (std::size_t i = 0; i < res.trace.size(); ++i) {
      const RewriteStep& s = res.trace[i];
      if (o.porcelain)
        out << "step: " << i + 1 << ' ' << s.rule << ' ' << print_position(s.position) << ' ' << print_term(s.result)
            << '\n';
      else
        out << "  " << i + 1 << ". " << s.rule << " at " << print_position(s.position) << ": "
            << print_term(s.result) << '\n';
    }
  }
  if (o.porcelain) {
    out << "result: " << print_term(res.term) << '\n'
        << "status: " << (nf ? "normal-form" : "step-budget-exhausted") << '\n'
        << "steps: " << res.trace.size() << '\n';
  } else if (nf) {
    out << "normal form after " << res.trace.size() << " step(s): " << print_term(res.term) << '\n';
  } else {
    out << "step budget of " << o.steps << " exhausted; reached " << print_term(res.term) << '\n';
  }
  return nf ? kPositive : kNegative;
}

int cmd_equiv(const Options& o, std::ostream& out) {
  ProblemFile pf = load(o.file);
  Term t = term_arg(pf, o.lhs, "T");
  Term u = term_arg(pf, o.rhs, "U");
  FreshnessContext ctx = ctx_arg(o.ctx, "--ctx");
  check_well_formed(t, pf.sig);
  check_well_formed(u, pf.sig);
  bool modulo_c = o.modulo == "c";
  bool eq = modulo_c ? c_alpha_eq(ctx, t, u, pf.sig) : alpha_eq(ctx, t, u);
  const char* rel = modulo_c ? "alpha-C" : "alpha";
  if (o.porcelain)
    out << "equivalent: " << yes_no(eq) << '\n' << "modulo: " << (modulo_c ? "c" : "alpha") << '\n';
  else
    out << print_term(t) << (eq ? " ~ " : " !~ ") << print_term(u) << " (modulo " << rel << ")\n";
  return eq ? kPositive : kNegative;
}

int cmd_fresh(const Options& o, std::ostream& out) {
  ProblemFile pf = load(o.file);
  Atom a = [&] {
    auto list = parse_atom_list(o.atom);
    if (list.size() != 1) throw Error("ATOM: expected exactly one atom");
    return list.front();
  }();
  Term t = term_arg(pf, o.term, "T");
  FreshnessContext ctx = ctx_arg(o.ctx, "--ctx");
  check_well_formed(t, pf.sig);
  bool fresh = derive_fresh(ctx, a, t);
  auto needs = fresh_requirements(a, t);
  if (o.porcelain) {
    out << "fresh: " << yes_no(fresh) << '\n';
    if (!fresh && needs) out << "needs: " << print_context(*needs) << '\n';
    if (t.is_ground()) out << "fixpoint: " << yes_no(fresh_as_fixpoint(a, t, pf.sig)) << '\n';
  } else {
    out << a << " # " << print_term(t) << (fresh ? " holds" : " does not hold") << '\n';
    if (!fresh && needs) out << "  it would follow from " << print_context(*needs) << '\n';
    if (!fresh && !needs) out << "  " << a << " occurs free\n";
  }
  return fresh ? kPositive : kNegative;
}

int cmd_fixpoint(const Options& o, std::ostream& out) {
  ProblemFile pf = load(o.file);
  Perm p = parse_perm(o.perm);
  std::vector<Atom> quantified = parse_atom_list(o.fresh_atoms);
  Term t = term_arg(pf, o.term, "T");
  check_well_formed(t, pf.sig);
  if (!t.is_ground()) throw OpenTermError("T: fixed-point constraints are decided on ground targets only");
  QuantifiedFixpoint c(quantified, p, t);
  bool holds = check_quantified_fixpoint(c, pf.sig);
  auto [qc, rest] = split_fixpoint(c);
  bool qc_holds = check_quantified_fixpoint(qc, pf.sig);
  bool rest_holds = check_quantified_fixpoint(rest, pf.sig);
  if (o.porcelain) {
    out << "holds: " << yes_no(holds) << '\n'
        << "pc: " << print_perm(qc.perm()) << '\n'
        << "pnc: " << print_perm(rest.perm()) << '\n'
        << "pc-holds: " << yes_no(qc_holds) << '\n'
        << "pnc-holds: " << yes_no(rest_holds) << '\n';
  } else {
    out << print_perm(p) << " fix " << print_term(t) << (holds ? " holds" : " does not hold") << '\n'
        << "  quantified part " << print_perm(qc.perm()) << (qc_holds ? " holds" : " fails") << '\n'
        << "  remaining part " << print_perm(rest.perm()) << (rest_holds ? " holds" : " fails") << '\n';
  }
  return holds ? kPositive : kNegative;
}

int cmd_factorize(const Options& o, std::ostream& out) {
  Perm p = parse_perm(o.perm);
  std::vector<Atom> quantified = parse_atom_list(o.fresh_atoms);
  Factorization f = factorize(p, AtomSet(quantified.begin(), quantified.end()));
  out << "pc: " << print_perm(f.quantified_part) << '\n' << "pnc: " << print_perm(f.rest) << '\n';
  return kPositive;
}

int cmd_match(const Options& o, std::ostream& out) {
  ProblemFile pf = load(o.file);
  Term pattern = term_arg(pf, o.lhs, "PATTERN");
  Term subject = term_arg(pf, o.rhs, "SUBJECT");
  check_well_formed(pattern, pf.sig);
  check_well_formed(subject, pf.sig);
  MatchProblem problem{ctx_arg(o.rule_ctx, "--rule-ctx"), pattern, subject, ctx_arg(o.ctx, "--ctx")};
  std::vector<MatchSolution> sols = c_match(problem, pf.sig);

  bool agree = true;
  std::size_t oracle_count = 0;
  if (o.oracle) {
    if (!subject.is_ground()) throw OpenTermError("SUBJECT: the oracle needs a ground subject");
    AtomSet atoms = all_atoms(pattern);
    AtomSet subject_atoms = all_atoms(subject);
    atoms.insert(subject_atoms.begin(), subject_atoms.end());
    EnumConfig universe{pf.sig, std::vector<Atom>(atoms.begin(), atoms.end()), subject.depth(), true};
    std::vector<MatchSolution> naive = naive_match(problem, pf.sig, universe);
    oracle_count = naive.size();
    agree = canonical_solution_set(sols, pf.sig) == canonical_solution_set(naive, pf.sig);
  }

  if (o.porcelain) {
    out << "solutions: " << sols.size() << '\n';
    for (const MatchSolution& s : sols)
      out << "solution: " << print_subst(s.subst) << ' ' << print_context(s.obligations) << '\n';
    if (o.oracle) out << "oracle: " << (agree ? "agree" : "disagree") << ' ' << oracle_count << '\n';
  } else {
    if (sols.empty()) out << "no match\n";
    for (std::size_t i = 0; i < sols.size(); ++i) {
      out << "solution " << i + 1 << ": " << print_subst(sols[i].subst);
      if (!sols[i].obligations.empty()) out << " under " << print_context(sols[i].obligations);
      out << '\n';
    }
    if (o.oracle)
      out << "oracle: " << (agree ? "agrees" : "DISAGREES") << " (" << oracle_count
          << " brute-force solution(s))\n";
  }
  return !sols.empty() && agree ? kPositive : kNegative;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Nominal rewriting modulo commutativity", "nomrw"};
  app.require_subcommand(1);
  app.add_flag("--porcelain", o.porcelain, "Machine-readable key: value output");

  auto* check = app.add_subcommand("check", "Check that every rule decreases under the path order");
  check->add_option("FILE", o.file, "Problem file")->required();
  check->add_option("--atoms", o.atoms, "Atoms for ground instances (comma separated)");
  check->add_option("--depth", o.depth, "Maximum depth of instance terms");
  check->add_flag("--no-abstractions", o.no_abstractions, "Leave abstractions out of instances");
  check->add_option("--max-instances", o.max_instances, "Instance budget per rule");

  auto* rewrite = app.add_subcommand("rewrite", "Normalize a term");
  rewrite->add_option("FILE", o.file, "Problem file")->required();
  rewrite->add_option("--term", o.term, "Term or name of a term declaration")->required();
  rewrite->add_option("--steps", o.steps, "Step budget");
  rewrite->add_flag("--trace", o.trace, "Print every step");
  rewrite->add_option("--ctx", o.ctx, "Freshness context, e.g. [a#X]");

  auto* equiv = app.add_subcommand("equiv", "Decide alpha or alpha-C equivalence");
  equiv->add_option("FILE", o.file, "Problem file")->required();
  equiv->add_option("T", o.lhs)->required();
  equiv->add_option("U", o.rhs)->required();
  equiv->add_option("--modulo", o.modulo, "alpha or c")->check(CLI::IsMember({"alpha", "c"}));
  equiv->add_option("--ctx", o.ctx, "Freshness context");

  auto* fresh = app.add_subcommand("fresh", "Decide a freshness constraint ATOM # T");
  fresh->add_option("FILE", o.file, "Problem file")->required();
  fresh->add_option("ATOM", o.atom)->required();
  fresh->add_option("T", o.term)->required();
  fresh->add_option("--ctx", o.ctx, "Freshness context");

  auto* fixpoint = app.add_subcommand("fixpoint", "Decide a (quantified) fixed-point constraint PERM fix T");
  fixpoint->add_option("FILE", o.file, "Problem file")->required();
  fixpoint->add_option("PERM", o.perm)->required();
  fixpoint->add_option("T", o.term)->required();
  fixpoint->add_option("--new", o.fresh_atoms, "Quantified atoms (comma separated)");

  auto* factor = app.add_subcommand("factorize", "Split a permutation into quantified and remaining cycles");
  factor->add_option("PERM", o.perm)->required();
  factor->add_option("--new", o.fresh_atoms, "Quantified atoms (comma separated)")->required();

  auto* matching = app.add_subcommand("match", "Solve a nominal C-matching problem");
  matching->add_option("FILE", o.file, "Problem file")->required();
  matching->add_option("PATTERN", o.lhs)->required();
  matching->add_option("SUBJECT", o.rhs)->required();
  matching->add_flag("--oracle", o.oracle, "Cross-check against brute-force matching");
  matching->add_option("--ctx", o.ctx, "Freshness context of the subject");
  matching->add_option("--rule-ctx", o.rule_ctx, "Freshness context of the pattern");

  for (CLI::App* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  try {
    if (app.got_subcommand(check)) return cmd_check(o, out);
    if (app.got_subcommand(rewrite)) return cmd_rewrite(o, out);
    if (app.got_subcommand(equiv)) return cmd_equiv(o, out);
    if (app.got_subcommand(fresh)) return cmd_fresh(o, out);
    if (app.got_subcommand(fixpoint)) return cmd_fixpoint(o, out);
    if (app.got_subcommand(factor)) return cmd_factorize(o, out);
    if (app.got_subcommand(matching)) return cmd_match(o, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace nomrw
