#include "nomrw/term.hpp"

#include <algorithm>
#include <string>

#include "nomrw/errors.hpp"

namespace nomrw {

void Signature::declare(Symbol f, std::size_t arity, bool commutative) {
  if (contains(f)) throw SignatureError("symbol " + f.str() + " declared twice");
  if (commutative && arity != 2)
    throw SignatureError("commutative symbol " + f.str() + " must have arity 2, not " + std::to_string(arity));
  symbols_.emplace_back(f, SymbolInfo{arity, commutative});
}

Term Term::make(Node node) {
  for (const Term& child : node.children) {
    node.ground = node.ground && child.is_ground();
    node.depth = std::max(node.depth, child.depth() + 1);
    node.size += child.size();
    node.mask |= child.atom_mask();
  }
  return Term(std::make_shared<const Node>(std::move(node)));
}

Term Term::atom(Atom a) {
  Node n{Kind::Atom, a, {}, {}, {}, {}};
  n.mask = std::uint64_t{1} << (a.id() % 64);
  return make(std::move(n));
}

Term Term::suspension(Perm p, VarName x) {
  Node n{Kind::Suspension, {}, std::move(p), x, {}, {}};
  n.ground = false;
  n.mask = n.perm.atom_mask();
  return make(std::move(n));
}

Term Term::app(Symbol f, std::vector<Term> args) { return make(Node{Kind::App, {}, {}, {}, f, std::move(args)}); }

Term Term::abs(Atom a, Term body) {
  Node n{Kind::Abs, a, {}, {}, {}, {}};
  n.children.push_back(std::move(body));
  n.mask = std::uint64_t{1} << (a.id() % 64);
  return make(std::move(n));
}

bool operator==(const Term& lhs, const Term& rhs) {
  if (lhs.same_node(rhs)) return true;
  if (lhs.kind() != rhs.kind() || lhs.size() != rhs.size()) return false;
  switch (lhs.kind()) {
    case Term::Kind::Atom:
      return lhs.atom() == rhs.atom();
    case Term::Kind::Suspension:
      return lhs.var() == rhs.var() && lhs.perm() == rhs.perm();
    case Term::Kind::Abs:
      return lhs.atom() == rhs.atom() && lhs.body() == rhs.body();
    case Term::Kind::App:
      return lhs.symbol() == rhs.symbol() && std::equal(lhs.args().begin(), lhs.args().end(), rhs.args().begin(),
                                                        rhs.args().end());
  }
  return false;
}

std::strong_ordering operator<=>(const Term& lhs, const Term& rhs) {
  if (lhs.same_node(rhs)) return std::strong_ordering::equal;
  if (auto c = lhs.kind() <=> rhs.kind(); c != 0) return c;
  switch (lhs.kind()) {
    case Term::Kind::Atom:
      return lhs.atom() <=> rhs.atom();
    case Term::Kind::Suspension:
      if (auto c = lhs.var() <=> rhs.var(); c != 0) return c;
      return lhs.perm() <=> rhs.perm();
    case Term::Kind::Abs:
      if (auto c = lhs.atom() <=> rhs.atom(); c != 0) return c;
      return lhs.body() <=> rhs.body();
    case Term::Kind::App:
      if (auto c = lhs.symbol() <=> rhs.symbol(); c != 0) return c;
      return std::lexicographical_compare_three_way(lhs.args().begin(), lhs.args().end(), rhs.args().begin(),
                                                    rhs.args().end());
  }
  return std::strong_ordering::equal;
}

namespace {

void collect_free(const Term& t, AtomSet& out, std::vector<Atom>& binders) {
  switch (t.kind()) {
    case Term::Kind::Atom:
      if (std::find(binders.begin(), binders.end(), t.atom()) == binders.end()) out.insert(t.atom());
      break;
    case Term::Kind::Suspension:
      for (const auto& entry : t.perm().mapping())
        if (std::find(binders.begin(), binders.end(), entry.first) == binders.end()) out.insert(entry.first);
      break;
    case Term::Kind::Abs:
      binders.push_back(t.atom());
      collect_free(t.body(), out, binders);
      binders.pop_back();
      break;
    case Term::Kind::App:
      for (const Term& arg : t.args()) collect_free(arg, out, binders);
      break;
  }
}

void collect_all(const Term& t, AtomSet& out) {
  switch (t.kind()) {
    case Term::Kind::Atom:
      out.insert(t.atom());
      break;
    case Term::Kind::Suspension:
      for (const auto& entry : t.perm().mapping()) out.insert(entry.first);
      break;
    case Term::Kind::Abs:
      out.insert(t.atom());
      collect_all(t.body(), out);
      break;
    case Term::Kind::App:
      for (const Term& arg : t.args()) collect_all(arg, out);
      break;
  }
}

void collect_vars(const Term& t, VarSet& out) {
  if (t.is_ground()) return;
  if (t.is_suspension()) {
    out.insert(t.var());
    return;
  }
  for (const Term& child : t.args()) collect_vars(child, out);
}

void collect_positions(const Term& t, Position& prefix, std::vector<Position>& out) {
  out.push_back(prefix);
  for (std::size_t i = 0; i < t.args().size(); ++i) {
    prefix.push_back(i);
    collect_positions(t.args()[i], prefix, out);
    prefix.pop_back();
  }
}

Term with_child(const Term& t, std::size_t i, Term child) {
  if (t.is_abs()) return Term::abs(t.atom(), std::move(child));
  std::vector<Term> args(t.args().begin(), t.args().end());
  args[i] = std::move(child);
  return Term::app(t.symbol(), std::move(args));
}

std::string describe(std::span<const std::size_t> pos) {
  std::string s = "[";
  for (std::size_t i = 0; i < pos.size(); ++i) s += (i ? ", " : "") + std::to_string(pos[i]);
  return s + "]";
}

void collect_symbols(const Term& t, std::set<Symbol>& out) {
  if (t.is_app()) out.insert(t.symbol());
  for (const Term& child : t.args()) collect_symbols(child, out);
}

}  // namespace

AtomSet free_atoms(const Term& t) {
  AtomSet out;
  std::vector<Atom> binders;
  collect_free(t, out, binders);
  return out;
}

bool occurs_free(Atom a, const Term& t) {
  if (!(t.atom_mask() & (std::uint64_t{1} << (a.id() % 64)))) return false;
  switch (t.kind()) {
    case Term::Kind::Atom:
      return t.atom() == a;
    case Term::Kind::Suspension:
      return t.perm().moves(a);
    case Term::Kind::Abs:
      return t.atom() != a && occurs_free(a, t.body());
    case Term::Kind::App:
      for (const Term& arg : t.args())
        if (occurs_free(a, arg)) return true;
      return false;
  }
  return false;
}

AtomSet all_atoms(const Term& t) {
  AtomSet out;
  collect_all(t, out);
  return out;
}

VarSet vars(const Term& t) {
  VarSet out;
  collect_vars(t, out);
  return out;
}

Term subterm_at(const Term& t, std::span<const std::size_t> pos) {
  Term cur = t;
  for (std::size_t i = 0; i < pos.size(); ++i) {
    if (pos[i] >= cur.args().size()) throw InvalidPosition("position " + describe(pos) + " leaves the term");
    Term next = cur.args()[pos[i]];
    cur = std::move(next);
  }
  return cur;
}

Term replace_at(const Term& t, std::span<const std::size_t> pos, const Term& u) {
  if (pos.empty()) return u;
  if (pos.front() >= t.args().size()) throw InvalidPosition("position leaves the term at index " + std::to_string(pos.front()));
  return with_child(t, pos.front(), replace_at(t.args()[pos.front()], pos.subspan(1), u));
}

std::vector<Position> positions(const Term& t) {
  std::vector<Position> out;
  Position prefix;
  collect_positions(t, prefix, out);
  return out;
}

Term apply_subst(const Substitution& s, const Term& t) {
  if (s.empty() || t.is_ground()) return t;
  switch (t.kind()) {
    case Term::Kind::Suspension: {
      auto it = s.find(t.var());
      if (it == s.end()) return t;
      return apply_perm_term(t.perm(), it->second);
    }
    case Term::Kind::Abs:
      return Term::abs(t.atom(), apply_subst(s, t.body()));
    case Term::Kind::App: {
      std::vector<Term> args;
      args.reserve(t.args().size());
      for (const Term& arg : t.args()) args.push_back(apply_subst(s, arg));
      return Term::app(t.symbol(), std::move(args));
    }
    case Term::Kind::Atom:
      break;
  }
  return t;
}

void check_well_formed(const Term& t, const Signature& sig) {
  if (t.is_app()) {
    const SymbolInfo* info = sig.find(t.symbol());
    if (info == nullptr) throw SignatureError("unknown symbol " + t.symbol().str());
    if (info->arity != t.args().size())
      throw SignatureError("symbol " + t.symbol().str() + " expects " + std::to_string(info->arity) +
                           " argument(s), got " + std::to_string(t.args().size()));
  }
  for (const Term& child : t.args()) check_well_formed(child, sig);
}

std::set<Symbol> symbols_of(const Term& t) {
  std::set<Symbol> out;
  collect_symbols(t, out);
  return out;
}

}  // namespace nomrw
