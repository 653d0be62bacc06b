#include "nomrw/constraint.hpp"

#include <algorithm>
#include <stdexcept>

#include "nomrw/equivalence.hpp"
#include "nomrw/errors.hpp"

namespace nomrw {
namespace {

bool collect_fresh(Atom a, const Term& t, FreshnessContext& out) {
  switch (t.kind()) {
    case Term::Kind::Atom:
      return t.atom() != a;
    case Term::Kind::Suspension:
      out.insert(invert(t.perm())(a), t.var());
      return true;
    case Term::Kind::Abs:
      return t.atom() == a || collect_fresh(a, t.body(), out);
    case Term::Kind::App:
      for (const Term& arg : t.args())
        if (!collect_fresh(a, arg, out)) return false;
      return true;
  }
  return false;
}

void require_ground(const Term& t, const char* what) {
  if (!t.is_ground()) throw OpenTermError(std::string(what) + " needs a ground term");
}

}  // namespace

std::optional<FreshnessContext> fresh_requirements(Atom a, const Term& t) {
  FreshnessContext out;
  if (!collect_fresh(a, t, out)) return std::nullopt;
  return out;
}

bool derive_fresh(const FreshnessContext& ctx, Atom a, const Term& t) {
  auto reqs = fresh_requirements(a, t);
  return reqs && ctx.entails(*reqs);
}

QuantifiedFixpoint::QuantifiedFixpoint(std::vector<Atom> quantified, Perm perm, Term target)
    : quantified_(std::move(quantified)), perm_(std::move(perm)), target_(std::move(target)) {
  AtomSet seen;
  for (Atom c : quantified_)
    if (!seen.insert(c).second) throw std::invalid_argument("quantified atom " + c.str() + " repeats");
}

namespace {

// t =C,alpha p.u on ground terms, without building p.u.
bool permuted_eq(const Term& t, const Perm& p, const Term& u, const Signature& sig) {
  if ((u.atom_mask() & p.atom_mask()) == 0) return t.same_node(u) || c_alpha_eq({}, t, u, sig);
  if (t.kind() != u.kind() || t.size() != u.size()) return false;
  switch (t.kind()) {
    case Term::Kind::Atom:
      return t.atom() == p(u.atom());
    case Term::Kind::Abs: {
      Atom b = p(u.atom());
      if (t.atom() == b) return permuted_eq(t.body(), p, u.body(), sig);
      // [a]t' = [b](p.u') iff a # p.u' and t' = (a b)p.u'.
      if (occurs_free(invert(p)(t.atom()), u.body())) return false;
      return permuted_eq(t.body(), compose(Perm::swap(t.atom(), b), p), u.body(), sig);
    }
    case Term::Kind::App: {
      if (t.symbol() != u.symbol()) return false;
      auto ts = t.args();
      auto us = u.args();
      if (ts.size() == 2 && sig.is_commutative(t.symbol()) && permuted_eq(ts[0], p, us[1], sig) &&
          permuted_eq(ts[1], p, us[0], sig))
        return true;
      for (std::size_t i = 0; i < ts.size(); ++i)
        if (!permuted_eq(ts[i], p, us[i], sig)) return false;
      return true;
    }
    case Term::Kind::Suspension:
      break;
  }
  return false;
}

}  // namespace

bool check_fixpoint_ground(const Perm& p, const Term& t, const Signature& sig) {
  require_ground(t, "fixed-point check");
  return permuted_eq(t, p, t, sig);
}

std::vector<Atom> choose_witnesses(const QuantifiedFixpoint& c) {
  const auto& q = c.quantified();
  std::vector<Atom> out;
  for (std::size_t i = 1; out.size() < q.size(); ++i) {
    Atom w = numbered_atom("w", i);
    if (c.perm().moves(w) || occurs_free(w, c.target())) continue;
    if (std::find(q.begin(), q.end(), w) != q.end()) continue;
    out.push_back(w);
  }
  return out;
}

Perm instantiate_perm(const QuantifiedFixpoint& c, std::span<const Atom> witnesses) {
  auto rename = [&](Atom a) {
    for (std::size_t i = 0; i < c.quantified().size(); ++i)
      if (c.quantified()[i] == a) return witnesses[i];
    return a;
  };
  std::vector<std::pair<Atom, Atom>> images;
  images.reserve(c.perm().mapping().size());
  for (const auto& [from, to] : c.perm().mapping()) images.emplace_back(rename(from), rename(to));
  return Perm::from_images(std::move(images));
}

bool check_quantified_fixpoint(const QuantifiedFixpoint& c, const Signature& sig) {
  require_ground(c.target(), "quantified fixed-point check");
  return check_fixpoint_ground(instantiate_perm(c, choose_witnesses(c)), c.target(), sig);
}

bool check_quantified_fixpoint(const QuantifiedFixpoint& c, const Signature& sig, std::span<const Atom> witnesses) {
  require_ground(c.target(), "quantified fixed-point check");
  if (witnesses.size() != c.quantified().size()) throw std::invalid_argument("one witness per quantified atom");
  AtomSet avoid = free_atoms(c.target());
  AtomSet moved = perm_support(c.perm());
  avoid.insert(moved.begin(), moved.end());
  AtomSet seen;
  for (Atom w : witnesses) {
    if (avoid.contains(w)) throw std::invalid_argument("witness " + w.str() + " is not fresh");
    if (!seen.insert(w).second) throw std::invalid_argument("witness " + w.str() + " repeats");
  }
  return check_fixpoint_ground(instantiate_perm(c, witnesses), c.target(), sig);
}

std::pair<QuantifiedFixpoint, QuantifiedFixpoint> split_fixpoint(const QuantifiedFixpoint& c) {
  AtomSet quantified(c.quantified().begin(), c.quantified().end());
  auto [freshness_like, pure] = factorize(c.perm(), quantified);
  return {QuantifiedFixpoint(c.quantified(), std::move(freshness_like), c.target()),
          QuantifiedFixpoint({}, std::move(pure), c.target())};
}

bool fresh_as_fixpoint(Atom a, const Term& t, const Signature& sig) {
  require_ground(t, "semantic freshness");
  Atom c = numbered_atom("c", a == numbered_atom("c", 1) ? 2 : 1);
  return check_quantified_fixpoint(QuantifiedFixpoint({c}, Perm::swap(a, c), t), sig);
}

}  // namespace nomrw
