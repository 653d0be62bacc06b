#ifndef NOMRW_EQUIVALENCE_HPP
#define NOMRW_EQUIVALENCE_HPP

#include <optional>
#include <vector>

#include "nomrw/constraint.hpp"
#include "nomrw/term.hpp"

namespace nomrw {

/// Atoms on which two permutations disagree.
AtomSet disagreement_set(const Perm& p, const Perm& q);

/// ctx |- t =alpha u.
bool alpha_eq(const FreshnessContext& ctx, const Term& t, const Term& u);

/// ctx |- t =alpha,C u: alpha-equivalence where the two arguments of a
/// commutative symbol may be swapped, at any depth.
bool c_alpha_eq(const FreshnessContext& ctx, const Term& t, const Term& u, const Signature& sig);

/// Like c_alpha_eq, but adds to `used` the hypotheses of ctx the successful
/// derivation relied on. `sig == nullptr` selects plain alpha-equivalence.
bool equivalent_using(const FreshnessContext& ctx, const Term& t, const Term& u, const Signature* sig,
                      FreshnessContext& used);

/// Find sigma with subject_ctx |- sigma(pattern) = subject and
/// subject_ctx |- sigma(rule_ctx). Pattern and subject must not share unknowns.
struct MatchProblem {
  FreshnessContext rule_ctx;
  Term pattern;
  Term subject;
  FreshnessContext subject_ctx;
};

struct MatchSolution {
  Substitution subst;
  /// Primitive constraints on the subject's unknowns the match needs; always
  /// entailed by the problem's subject_ctx.
  FreshnessContext obligations;

  friend bool operator==(const MatchSolution&, const MatchSolution&) = default;
};

/// Plain nominal matching. Throws std::invalid_argument when pattern and
/// subject share unknowns.
std::optional<MatchSolution> match(const MatchProblem& p, const Signature& sig);

/// Nominal C-matching: every solution, branching on both argument orders at
/// commutative symbols (unswapped first), duplicates removed.
std::vector<MatchSolution> c_match(const MatchProblem& p, const Signature& sig);

}  // namespace nomrw

#endif  // NOMRW_EQUIVALENCE_HPP
