#ifndef NOMRW_REWRITE_HPP
#define NOMRW_REWRITE_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "nomrw/constraint.hpp"
#include "nomrw/equivalence.hpp"
#include "nomrw/term.hpp"

namespace nomrw {

/// Nominal rewrite rule ctx |- lhs -> rhs.
struct RewriteRule {
  std::string name;
  FreshnessContext ctx;
  Term lhs;
  Term rhs;
};

/// Rules over a signature; commutativity lives in the signature's flags.
struct RewriteSystem {
  Signature sig;
  std::vector<RewriteRule> rules;
};

/// Throws std::invalid_argument when rhs or ctx use unknowns missing from lhs,
/// or lhs is a bare suspension; SignatureError when a side is ill-formed.
void validate_rule(const RewriteRule& rule, const Signature& sig);
void validate_system(const RewriteSystem& sys);

/// Copy of `rule` whose unknowns avoid `taken`.
RewriteRule rename_apart(const RewriteRule& rule, const VarSet& taken);

struct RewriteStep {
  std::string rule;
  Position position;
  MatchSolution solution;
  Term result;
};

/// Every R,C-step from t: positions outermost-leftmost, rules in order, then
/// each C-matching solution whose obligations ctx entails.
std::vector<RewriteStep> step_rc(const RewriteSystem& sys, const FreshnessContext& ctx, const Term& t);

/// R/C-successors of a ground term: plain-matching steps from every member of
/// its bounded alpha-C class, deduplicated modulo alpha-C. Throws
/// ClassTooLarge when the class exceeds `bound`.
std::vector<Term> step_r_over_c(const RewriteSystem& sys, const Term& t, std::size_t bound);

enum class NormalizeStatus { NormalForm, StepBudgetExhausted };

struct NormalizeResult {
  Term term;
  std::vector<RewriteStep> trace;
  NormalizeStatus status;
};

/// Repeatedly takes the first step_rc step.
NormalizeResult normalize(const RewriteSystem& sys, const Term& t, std::size_t max_steps,
                          const FreshnessContext& ctx = {});

}  // namespace nomrw

#endif  // NOMRW_REWRITE_HPP
