#include "nomrw/rewrite.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "nomrw/oracle.hpp"

namespace nomrw {

void validate_rule(const RewriteRule& rule, const Signature& sig) {
  check_well_formed(rule.lhs, sig);
  check_well_formed(rule.rhs, sig);
  if (rule.lhs.is_suspension()) throw std::invalid_argument("rule " + rule.name + ": left-hand side is a bare unknown");
  VarSet lhs_vars = vars(rule.lhs);
  for (VarName x : vars(rule.rhs))
    if (!lhs_vars.contains(x))
      throw std::invalid_argument("rule " + rule.name + ": unknown " + x.str() + " occurs only on the right");
  for (const FreshConstraint& c : rule.ctx)
    if (!lhs_vars.contains(c.var))
      throw std::invalid_argument("rule " + rule.name + ": context mentions " + c.var.str() +
                                  ", which is not an unknown of the rule");
}

void validate_system(const RewriteSystem& sys) {
  for (const RewriteRule& rule : sys.rules) validate_rule(rule, sys.sig);
}

RewriteRule rename_apart(const RewriteRule& rule, const VarSet& taken) {
  VarSet rule_vars = vars(rule.lhs);
  VarSet avoid = taken;
  avoid.insert(rule_vars.begin(), rule_vars.end());
  Substitution renaming;
  std::map<VarName, VarName> names;
  for (VarName x : rule_vars) {
    if (!taken.contains(x)) continue;
    VarName y = fresh_var(avoid, x.str() + "_");
    avoid.insert(y);
    names.emplace(x, y);
    renaming.emplace(x, Term::var(y));
  }
  if (renaming.empty()) return rule;
  RewriteRule out{rule.name, {}, apply_subst(renaming, rule.lhs), apply_subst(renaming, rule.rhs)};
  for (const FreshConstraint& c : rule.ctx) {
    auto it = names.find(c.var);
    out.ctx.insert(c.atom, it == names.end() ? c.var : it->second);
  }
  return out;
}

std::vector<RewriteStep> step_rc(const RewriteSystem& sys, const FreshnessContext& ctx, const Term& t) {
  std::vector<RewriteStep> steps;
  VarSet taken = vars(t);
  std::vector<RewriteRule> rules;
  rules.reserve(sys.rules.size());
  for (const RewriteRule& rule : sys.rules) rules.push_back(rename_apart(rule, taken));

  for (const Position& pos : positions(t)) {
    Term sub = subterm_at(t, pos);
    for (const RewriteRule& rule : rules) {
      if (rule.lhs.is_app() && (!sub.is_app() || sub.symbol() != rule.lhs.symbol())) continue;
      for (MatchSolution& sol : c_match(MatchProblem{rule.ctx, rule.lhs, sub, ctx}, sys.sig)) {
        Term result = replace_at(t, pos, apply_subst(sol.subst, rule.rhs));
        steps.push_back(RewriteStep{rule.name, pos, std::move(sol), std::move(result)});
      }
    }
  }
  return steps;
}

std::vector<Term> step_r_over_c(const RewriteSystem& sys, const Term& t, std::size_t bound) {
  std::set<Term> seen;  // canonical alpha-C forms
  std::vector<Term> out;
  for (const Term& member : naive_c_class(t, sys.sig, bound)) {
    for (const Position& pos : positions(member)) {
      Term sub = subterm_at(member, pos);
      for (const RewriteRule& rule : sys.rules) {
        auto sol = match(MatchProblem{rule.ctx, rule.lhs, sub, {}}, sys.sig);
        if (!sol) continue;
        Term result = replace_at(member, pos, apply_subst(sol->subst, rule.rhs));
        if (seen.insert(canonical_c_alpha(result, sys.sig)).second) out.push_back(std::move(result));
      }
    }
  }
  return out;
}

NormalizeResult normalize(const RewriteSystem& sys, const Term& t, std::size_t max_steps,
                          const FreshnessContext& ctx) {
  NormalizeResult result{t, {}, NormalizeStatus::NormalForm};
  while (true) {
    auto steps = step_rc(sys, ctx, result.term);
    if (steps.empty()) return result;
    if (result.trace.size() >= max_steps) {
      result.status = NormalizeStatus::StepBudgetExhausted;
      return result;
    }
    result.term = steps.front().result;
    result.trace.push_back(std::move(steps.front()));
  }
}

}  // namespace nomrw
