#ifndef NOMRW_ORACLE_HPP
#define NOMRW_ORACLE_HPP

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "nomrw/equivalence.hpp"
#include "nomrw/term.hpp"

// Brute-force references for cross-checking the real algorithms. Nothing in
// here is meant to be fast.

namespace nomrw {

struct EnumConfig {
  Signature sig;
  std::vector<Atom> atoms;
  std::size_t max_depth = 0;
  bool include_abstractions = false;
};

/// Every ground term of depth <= max_depth (atoms and constants have depth 0),
/// shallower terms first, without duplicates.
std::vector<Term> enum_ground_terms(const EnumConfig& cfg);

/// Streams the same sequence as enum_ground_terms; only the terms below the
/// top level are kept in memory.
void for_each_ground_term(const EnumConfig& cfg, const std::function<void(const Term&)>& visit);

/// All |atoms|! permutations of `atoms`. Throws SizeLimitExceeded above 7.
std::vector<Perm> enum_perms(std::span<const Atom> atoms);

/// Binders renamed to a fixed sequence of fresh atoms indexed by binding
/// depth. Alpha-equivalent ground terms get identical forms.
Term canonical_alpha(const Term& t);

/// canonical_alpha plus sorted arguments under commutative symbols; a
/// complete invariant for alpha-C-equivalence of ground terms.
Term canonical_c_alpha(const Term& t, const Signature& sig);

/// The alpha-C class of a ground term in canonical alpha form, closed under
/// single argument swaps at commutative positions. Throws ClassTooLarge when
/// it has more than `bound` members.
std::vector<Term> naive_c_class(const Term& t, const Signature& sig, std::size_t bound);

/// Generate-and-test matching over the universe's ground terms. A candidate
/// for an unknown is skipped when its depth plus the depth at which the
/// unknown occurs exceeds the subject's depth (alpha-C-equivalence preserves
/// depth).
/// The subject must be ground.
std::vector<MatchSolution> naive_match(const MatchProblem& p, const Signature& sig, const EnumConfig& universe);

/// Same, over an already enumerated universe.
std::vector<MatchSolution> naive_match(const MatchProblem& p, const Signature& sig,
                                       std::span<const Term> universe_terms);

/// Solutions keyed by canonical alpha-C images, for comparing solution sets.
std::vector<std::vector<std::pair<VarName, Term>>> canonical_solution_set(std::span<const MatchSolution> solutions,
                                                                         const Signature& sig);

}  // namespace nomrw

#endif  // NOMRW_ORACLE_HPP
