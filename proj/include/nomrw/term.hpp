#ifndef NOMRW_TERM_HPP
#define NOMRW_TERM_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <span>
#include <vector>

#include "nomrw/names.hpp"
#include "nomrw/permutation.hpp"

namespace nomrw {

struct SymbolInfo {
  std::size_t arity = 0;
  bool commutative = false;
};

/// Function symbols with arities and commutativity flags. Iteration follows
/// declaration order.
class Signature {
 public:
  /// Throws SignatureError for a duplicate name or a commutative symbol
  /// whose arity is not 2.
  void declare(Symbol f, std::size_t arity, bool commutative = false);

  /// Linear scan: signatures are small and name equality is a pointer test.
  const SymbolInfo* find(Symbol f) const {
    for (const auto& [g, info] : symbols_)
      if (g == f) return &info;
    return nullptr;
  }
  bool contains(Symbol f) const { return find(f) != nullptr; }
  bool is_commutative(Symbol f) const {
    const SymbolInfo* info = find(f);
    return info != nullptr && info->commutative;
  }
  std::size_t size() const { return symbols_.size(); }
  auto begin() const { return symbols_.begin(); }
  auto end() const { return symbols_.end(); }

 private:
  std::vector<std::pair<Symbol, SymbolInfo>> symbols_;
};

/// Nominal term: atom, suspension p.X, application f(t1, ..., tn) or
/// abstraction [a]t. Immutable; copies share structure.
class Term {
 public:
  enum class Kind : std::uint8_t { Atom, Suspension, App, Abs };

  static Term atom(Atom a);
  static Term suspension(Perm p, VarName x);
  static Term var(VarName x) { return suspension(Perm{}, x); }
  static Term app(Symbol f, std::vector<Term> args = {});
  static Term abs(Atom a, Term body);

  Kind kind() const { return node_->kind; }
  bool is_atom() const { return kind() == Kind::Atom; }
  bool is_suspension() const { return kind() == Kind::Suspension; }
  bool is_app() const { return kind() == Kind::App; }
  bool is_abs() const { return kind() == Kind::Abs; }

  /// The atom of an atom term, or the binder of an abstraction.
  Atom atom() const { return node_->atom; }
  const Perm& perm() const { return node_->perm; }
  VarName var() const { return node_->var; }
  Symbol symbol() const { return node_->symbol; }
  /// Children: the arguments of an application, the body of an abstraction.
  std::span<const Term> args() const { return node_->children; }
  const Term& body() const { return node_->children.front(); }

  bool is_ground() const { return node_->ground; }
  std::size_t depth() const { return node_->depth; }
  std::size_t size() const { return node_->size; }
  /// Bloom mask over every atom occurrence, bound or free (bit id % 64).
  std::uint64_t atom_mask() const { return node_->mask; }

  bool same_node(const Term& other) const { return node_ == other.node_; }

  friend bool operator==(const Term& lhs, const Term& rhs);
  /// Structural total order, used for sets and deterministic output.
  friend std::strong_ordering operator<=>(const Term& lhs, const Term& rhs);

 private:
  struct Node {
    Kind kind;
    Atom atom;
    Perm perm;
    VarName var;
    Symbol symbol;
    std::vector<Term> children;
    bool ground = true;
    std::size_t depth = 0;
    std::size_t size = 1;
    std::uint64_t mask = 0;
  };

  explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static Term make(Node node);

  std::shared_ptr<const Node> node_;
};

/// Child-index path: index i at an application selects argument i, index 0
/// at an abstraction selects the body.
using Position = std::vector<std::size_t>;

using Substitution = std::map<VarName, Term>;

/// Atoms occurring unbound. A suspension contributes every atom its
/// permutation moves, which over-approximates the support of its instances.
AtomSet free_atoms(const Term& t);

/// Membership in free_atoms(t) without building the set.
bool occurs_free(Atom a, const Term& t);

/// Every atom occurring anywhere: free, bound, or inside a suspension.
AtomSet all_atoms(const Term& t);

VarSet vars(const Term& t);

/// Throws InvalidPosition when the path leaves the term.
Term subterm_at(const Term& t, std::span<const std::size_t> pos);
Term replace_at(const Term& t, std::span<const std::size_t> pos, const Term& u);

/// All positions of t in pre-order (outermost first, then left to right).
std::vector<Position> positions(const Term& t);

/// Capture-permitting instantiation: p.X becomes p.s(X) for mapped X.
Term apply_subst(const Substitution& s, const Term& t);

/// Throws SignatureError if t uses an undeclared symbol or a wrong arity.
void check_well_formed(const Term& t, const Signature& sig);

/// Symbols used in t.
std::set<Symbol> symbols_of(const Term& t);

}  // namespace nomrw

#endif  // NOMRW_TERM_HPP
