#ifndef NOMRW_CONSTRAINT_HPP
#define NOMRW_CONSTRAINT_HPP

#include <algorithm>
#include <compare>
#include <initializer_list>
#include <optional>
#include <set>
#include <span>
#include <utility>
#include <vector>

#include "nomrw/names.hpp"
#include "nomrw/permutation.hpp"
#include "nomrw/term.hpp"

namespace nomrw {

/// Primitive freshness constraint a # X.
struct FreshConstraint {
  Atom atom;
  VarName var;

  friend auto operator<=>(const FreshConstraint&, const FreshConstraint&) = default;
};

/// Finite set of primitive constraints used as hypotheses.
class FreshnessContext {
 public:
  FreshnessContext() = default;
  FreshnessContext(std::initializer_list<FreshConstraint> entries) : entries_(entries) {}

  void insert(FreshConstraint c) { entries_.insert(c); }
  void insert(Atom a, VarName x) { entries_.insert({a, x}); }
  void merge(const FreshnessContext& other) { entries_.insert(other.entries_.begin(), other.entries_.end()); }
  bool contains(Atom a, VarName x) const { return entries_.contains({a, x}); }
  /// Every primitive of `other` is a hypothesis here.
  bool entails(const FreshnessContext& other) const {
    return std::includes(entries_.begin(), entries_.end(), other.entries_.begin(), other.entries_.end());
  }
  bool empty() const { return entries_.empty(); }
  std::size_t size() const { return entries_.size(); }
  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }

  friend bool operator==(const FreshnessContext&, const FreshnessContext&) = default;
  friend auto operator<=>(const FreshnessContext& lhs, const FreshnessContext& rhs) {
    return lhs.entries_ <=> rhs.entries_;
  }

 private:
  std::set<FreshConstraint> entries_;
};

/// The primitive constraints a # t reduces to, or nullopt when a occurs free
/// in t outside any suspension (the constraint can never hold).
std::optional<FreshnessContext> fresh_requirements(Atom a, const Term& t);

/// ctx |- a # t.
bool derive_fresh(const FreshnessContext& ctx, Atom a, const Term& t);

/// N-quantified fixed-point constraint: for all but finitely many choices of
/// the quantified atoms, perm . target is equal to target modulo alpha and C.
class QuantifiedFixpoint {
 public:
  /// Throws std::invalid_argument when a quantified atom repeats.
  QuantifiedFixpoint(std::vector<Atom> quantified, Perm perm, Term target);

  const std::vector<Atom>& quantified() const { return quantified_; }
  const Perm& perm() const { return perm_; }
  const Term& target() const { return target_; }

 private:
  std::vector<Atom> quantified_;
  Perm perm_;
  Term target_;
};

/// p . t is alpha-C-equivalent to t. Throws OpenTermError for open t.
bool check_fixpoint_ground(const Perm& p, const Term& t, const Signature& sig);

/// Default witness tuple: distinct fresh atoms avoiding the target's free
/// atoms and every atom of the permutation.
std::vector<Atom> choose_witnesses(const QuantifiedFixpoint& c);

/// The permutation with each quantified atom renamed to its witness.
Perm instantiate_perm(const QuantifiedFixpoint& c, std::span<const Atom> witnesses);

bool check_quantified_fixpoint(const QuantifiedFixpoint& c, const Signature& sig);

/// Same check with caller-chosen witnesses. Throws std::invalid_argument if
/// the tuple has the wrong length, repeats an atom, or hits an atom of the
/// target's free atoms or of the permutation.
bool check_quantified_fixpoint(const QuantifiedFixpoint& c, const Signature& sig, std::span<const Atom> witnesses);

/// (cycles meeting the quantified atoms, still quantified;
///  remaining cycles, with no quantifier).
std::pair<QuantifiedFixpoint, QuantifiedFixpoint> split_fixpoint(const QuantifiedFixpoint& c);

/// Semantic freshness: a is fresh for t iff, for a fresh c, (a c) . t = t.
bool fresh_as_fixpoint(Atom a, const Term& t, const Signature& sig);

}  // namespace nomrw

#endif  // NOMRW_CONSTRAINT_HPP
