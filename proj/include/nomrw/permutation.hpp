#ifndef NOMRW_PERMUTATION_HPP
#define NOMRW_PERMUTATION_HPP

#include <compare>
#include <cstdint>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "nomrw/names.hpp"

namespace nomrw {

class Term;

/// Finite permutation of atoms.
///
/// Stored as the sorted list of moved atoms with their images; this list is a
/// normal form, so two permutations are equal iff their representations are.
/// The cycle view is canonical as well: every cycle starts at its least atom
/// and cycles are sorted by that atom.
class Perm {
 public:
  using Cycle = std::vector<Atom>;

  Perm() = default;

  static Perm swap(Atom a, Atom b);
  /// Single cycle a1 -> a2 -> ... -> an -> a1. Throws std::invalid_argument
  /// when an atom repeats.
  static Perm cycle(std::span<const Atom> atoms);
  /// Product of cycles read right-to-left: the last cycle acts first.
  static Perm from_cycles(std::span<const Cycle> cycles);
  /// From explicit (atom, image) pairs; fixed points are dropped. Throws
  /// std::invalid_argument unless the pairs describe a bijection.
  static Perm from_images(std::vector<std::pair<Atom, Atom>> images);

  Atom operator()(Atom a) const {
    for (const auto& [from, to] : map_)
      if (from == a) return to;
    return a;
  }

  bool is_identity() const { return map_.empty(); }
  bool moves(Atom a) const { return (*this)(a) != a; }
  const std::vector<std::pair<Atom, Atom>>& mapping() const { return map_; }
  std::vector<Cycle> cycles() const;
  /// Bloom mask of the moved atoms (bit id % 64).
  std::uint64_t atom_mask() const { return mask_; }

  friend bool operator==(const Perm& lhs, const Perm& rhs) { return lhs.map_ == rhs.map_; }
  friend std::strong_ordering operator<=>(const Perm& lhs, const Perm& rhs) { return lhs.map_ <=> rhs.map_; }

 private:
  explicit Perm(std::vector<std::pair<Atom, Atom>> map);

  std::vector<std::pair<Atom, Atom>> map_;
  std::uint64_t mask_ = 0;
};

Atom apply_perm(const Perm& p, Atom a);

/// p after q: apply_perm(compose(p, q), a) == p(q(a)).
Perm compose(const Perm& p, const Perm& q);

Perm invert(const Perm& p);

/// Atoms moved by p.
AtomSet perm_support(const Perm& p);

/// Split of a permutation into the cycles that meet a set of quantified
/// atoms and the cycles that avoid it. Both parts have disjoint supports and
/// compose back to the original permutation.
struct Factorization {
  Perm quantified_part;  // cycles meeting the set
  Perm rest;             // cycles avoiding it
};

Factorization factorize(const Perm& p, const AtomSet& quantified);

/// Homomorphic action on terms. Binders are permuted too; on suspensions the
/// permutation is composed in front: p . (q . X) = (p o q) . X.
Term apply_perm_term(const Perm& p, const Term& t);

/// `(a c1 d)(g c2)`, or `id` for the identity.
std::string to_string(const Perm& p);
std::ostream& operator<<(std::ostream& os, const Perm& p);

}  // namespace nomrw

#endif  // NOMRW_PERMUTATION_HPP
