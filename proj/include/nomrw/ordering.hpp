#ifndef NOMRW_ORDERING_HPP
#define NOMRW_ORDERING_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "nomrw/names.hpp"
#include "nomrw/rewrite.hpp"
#include "nomrw/term.hpp"

namespace nomrw {

/// Strict partial order on symbols, kept transitively closed.
class Precedence {
 public:
  /// Records f > g and closes transitively. Throws ConfigError when the pair
  /// would make the order reflexive (a cycle).
  void add(Symbol f, Symbol g);
  /// Marks f as covered without relating it to anything (`prec f`).
  void mention(Symbol f) { mentioned_.insert(f); }

  bool greater(Symbol f, Symbol g) const { return pairs_.contains({f, g}); }
  bool covers(Symbol f) const { return mentioned_.contains(f); }
  const std::set<std::pair<Symbol, Symbol>>& pairs() const { return pairs_; }

 private:
  std::set<std::pair<Symbol, Symbol>> pairs_;
  std::set<Symbol> mentioned_;
};

enum class Status { Lex, Mul };

using StatusMap = std::map<Symbol, Status>;

struct CrpoConfig {
  Precedence prec;
  StatusMap status;
  Signature sig;
};

/// Throws ConfigError unless every symbol of cfg.sig has a status and every
/// commutative symbol has status mul.
void validate_config(const CrpoConfig& cfg);

/// t >Crpo u on ground terms: recursive path order with lex or multiset
/// status, commutative symbols compared as multisets. Abstractions sit below
/// every function symbol and above atoms. Atom names never decide a
/// comparison, which keeps the order invariant under alpha-renaming.
/// Throws OpenTermError when either term has unknowns.
bool crpo_gt(const CrpoConfig& cfg, const Term& t, const Term& u);

/// The equivalence part of the order: alpha-C-equivalence coarsened to ignore
/// atom names. Holds whenever c_alpha_eq does.
bool crpo_equiv(const CrpoConfig& cfg, const Term& t, const Term& u);

/// Lexicographic or multiset extension of crpo_gt. Lex needs equal lengths.
bool ext_compare(const CrpoConfig& cfg, Status kind, std::span<const Term> ts, std::span<const Term> us);

/// Ground instances used to test rule orientation.
struct InstanceConfig {
  std::vector<Atom> atoms{Atom("a"), Atom("b")};
  std::size_t depth = 2;
  bool include_abstractions = true;
  /// Instance depth is lowered until one rule has at most this many.
  std::size_t max_instances = 200000;
};

enum class RuleVerdict { Oriented, NotOriented };

struct RuleReport {
  std::string rule;
  RuleVerdict verdict = RuleVerdict::Oriented;
  std::size_t instances_checked = 0;
  std::size_t instance_depth = 0;
  /// First failing instance, when not oriented.
  std::optional<Substitution> counterexample;
  std::optional<std::pair<Term, Term>> counterexample_sides;
};

struct TerminationReport {
  bool accepted = true;
  std::vector<RuleReport> rules;
};

/// Checks l >Crpo r on every ground instance (respecting the rule's freshness
/// context) built from the instance universe. Acceptance means "oriented on
/// the tested instances", not a termination proof. Throws ConfigError when a
/// rule symbol lacks status or precedence coverage.
TerminationReport check_termination(const RewriteSystem& sys, const CrpoConfig& cfg,
                                    const InstanceConfig& instances = {});

}  // namespace nomrw

#endif  // NOMRW_ORDERING_HPP
