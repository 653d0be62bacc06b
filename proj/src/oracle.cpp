#include "nomrw/oracle.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "nomrw/errors.hpp"

namespace nomrw {
namespace {

std::vector<Atom> distinct_atoms(std::span<const Atom> atoms) {
  std::vector<Atom> out;
  for (Atom a : atoms)
    if (std::find(out.begin(), out.end(), a) == out.end()) out.push_back(a);
  return out;
}

// Terms of exactly depth `depth`, given all terms of depth < `depth` in
// `below` and those of depth exactly `depth - 1` starting at `last_level`.
void visit_level(const EnumConfig& cfg, std::span<const Atom> atoms, const std::vector<Term>& below,
                 std::size_t last_level, std::size_t depth, const std::function<void(const Term&)>& visit) {
  if (depth == 0) {
    for (Atom a : atoms) visit(Term::atom(a));
    for (const auto& [f, info] : cfg.sig)
      if (info.arity == 0) visit(Term::app(f));
    return;
  }
  for (const auto& [f, info] : cfg.sig) {
    if (info.arity == 0) continue;
    std::vector<std::size_t> idx(info.arity, 0);
    while (true) {
      bool reaches = std::any_of(idx.begin(), idx.end(), [&](std::size_t i) { return i >= last_level; });
      if (reaches) {
        std::vector<Term> args;
        args.reserve(info.arity);
        for (std::size_t i : idx) args.push_back(below[i]);
        visit(Term::app(f, std::move(args)));
      }
      std::size_t k = info.arity;
      while (k > 0 && ++idx[k - 1] == below.size()) idx[--k] = 0;
      if (k == 0) break;
    }
  }
  if (cfg.include_abstractions) {
    for (Atom a : atoms)
      for (std::size_t i = last_level; i < below.size(); ++i) visit(Term::abs(a, below[i]));
  }
}

void collect_min_depth(const Term& t, std::size_t depth, std::map<VarName, std::size_t>& out) {
  if (t.is_suspension()) {
    auto [it, inserted] = out.emplace(t.var(), depth);
    if (!inserted) it->second = std::min(it->second, depth);
    return;
  }
  for (const Term& child : t.args()) collect_min_depth(child, depth + 1, out);
}

Term rename_binders(const Term& t, std::size_t depth, std::vector<Atom>& names, AtomSet& avoid) {
  switch (t.kind()) {
    case Term::Kind::Atom:
    case Term::Kind::Suspension:
      return t;
    case Term::Kind::Abs: {
      while (names.size() <= depth) {
        Atom w = fresh_atom(avoid, "b");
        avoid.insert(w);
        names.push_back(w);
      }
      Atom w = names[depth];
      Term body = apply_perm_term(Perm::swap(t.atom(), w), t.body());
      return Term::abs(w, rename_binders(body, depth + 1, names, avoid));
    }
    case Term::Kind::App: {
      std::vector<Term> args;
      for (const Term& arg : t.args()) args.push_back(rename_binders(arg, depth, names, avoid));
      return Term::app(t.symbol(), std::move(args));
    }
  }
  return t;
}

Term sort_commutative(const Term& t, const Signature& sig) {
  if (t.is_abs()) return Term::abs(t.atom(), sort_commutative(t.body(), sig));
  if (!t.is_app() || t.args().empty()) return t;
  std::vector<Term> args;
  for (const Term& arg : t.args()) args.push_back(sort_commutative(arg, sig));
  if (args.size() == 2 && sig.is_commutative(t.symbol()) && args[1] < args[0]) std::swap(args[0], args[1]);
  return Term::app(t.symbol(), std::move(args));
}

}  // namespace

void for_each_ground_term(const EnumConfig& cfg, const std::function<void(const Term&)>& visit) {
  std::vector<Atom> atoms = distinct_atoms(cfg.atoms);
  std::vector<Term> below;
  std::size_t last_level = 0;
  for (std::size_t depth = 0; depth < cfg.max_depth; ++depth) {
    std::size_t start = below.size();
    std::vector<Term> level;
    visit_level(cfg, atoms, below, last_level, depth, [&](const Term& t) { level.push_back(t); });
    for (Term& t : level) {
      visit(t);
      below.push_back(std::move(t));
    }
    last_level = start;
  }
  visit_level(cfg, atoms, below, last_level, cfg.max_depth, visit);
}

std::vector<Term> enum_ground_terms(const EnumConfig& cfg) {
  std::vector<Term> out;
  for_each_ground_term(cfg, [&](const Term& t) { out.push_back(t); });
  return out;
}

std::vector<Perm> enum_perms(std::span<const Atom> atoms) {
  std::vector<Atom> domain = distinct_atoms(atoms);
  if (domain.size() > 7) throw SizeLimitExceeded("refusing to enumerate permutations of more than 7 atoms");
  std::sort(domain.begin(), domain.end());
  std::vector<Atom> images = domain;
  std::vector<Perm> out;
  do {
    std::vector<std::pair<Atom, Atom>> map;
    for (std::size_t i = 0; i < domain.size(); ++i) map.emplace_back(domain[i], images[i]);
    out.push_back(Perm::from_images(std::move(map)));
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

Term canonical_alpha(const Term& t) {
  AtomSet avoid = free_atoms(t);
  std::vector<Atom> names;
  return rename_binders(t, 0, names, avoid);
}

Term canonical_c_alpha(const Term& t, const Signature& sig) { return sort_commutative(canonical_alpha(t), sig); }

std::vector<Term> naive_c_class(const Term& t, const Signature& sig, std::size_t bound) {
  if (!t.is_ground()) throw OpenTermError("C-class enumeration needs a ground term");
  std::set<Term> seen{canonical_alpha(t)};
  std::vector<Term> frontier(seen.begin(), seen.end());
  if (seen.size() > bound) throw ClassTooLarge("C-class exceeds bound " + std::to_string(bound));
  while (!frontier.empty()) {
    Term member = frontier.back();
    frontier.pop_back();
    for (const Position& pos : positions(member)) {
      Term sub = subterm_at(member, pos);
      if (!sub.is_app() || sub.args().size() != 2 || !sig.is_commutative(sub.symbol())) continue;
      Term swapped = replace_at(member, pos, Term::app(sub.symbol(), {sub.args()[1], sub.args()[0]}));
      if (seen.insert(swapped).second) {
        if (seen.size() > bound) throw ClassTooLarge("C-class exceeds bound " + std::to_string(bound));
        frontier.push_back(std::move(swapped));
      }
    }
  }
  return {seen.begin(), seen.end()};
}

std::vector<MatchSolution> naive_match(const MatchProblem& p, const Signature& sig, const EnumConfig& universe) {
  auto terms = enum_ground_terms(universe);
  return naive_match(p, sig, terms);
}

std::vector<MatchSolution> naive_match(const MatchProblem& p, const Signature& sig,
                                       std::span<const Term> universe_terms) {
  if (!p.subject.is_ground()) throw OpenTermError("naive matching needs a ground subject");
  std::map<VarName, std::size_t> occurrence;
  collect_min_depth(p.pattern, 0, occurrence);
  std::vector<VarName> unknowns;
  std::vector<std::vector<const Term*>> candidates;
  for (const auto& [x, depth] : occurrence) {
    unknowns.push_back(x);
    auto& list = candidates.emplace_back();
    if (depth > p.subject.depth()) return {};
    for (const Term& u : universe_terms)
      if (u.depth() + depth <= p.subject.depth()) list.push_back(&u);
    if (list.empty()) return {};
  }

  std::vector<MatchSolution> out;
  std::vector<std::size_t> idx(unknowns.size(), 0);
  while (true) {
    Substitution subst;
    for (std::size_t i = 0; i < unknowns.size(); ++i) subst.emplace(unknowns[i], *candidates[i][idx[i]]);
    bool ok = c_alpha_eq(p.subject_ctx, apply_subst(subst, p.pattern), p.subject, sig);
    for (auto it = p.rule_ctx.begin(); ok && it != p.rule_ctx.end(); ++it) {
      auto bound = subst.find(it->var);
      ok = bound == subst.end() || derive_fresh(p.subject_ctx, it->atom, bound->second);
    }
    if (ok) out.push_back(MatchSolution{std::move(subst), {}});

    std::size_t k = unknowns.size();
    while (k > 0 && ++idx[k - 1] == candidates[k - 1].size()) idx[--k] = 0;
    if (k == 0) break;
  }
  return out;
}

std::vector<std::vector<std::pair<VarName, Term>>> canonical_solution_set(std::span<const MatchSolution> solutions,
                                                                         const Signature& sig) {
  std::set<std::vector<std::pair<VarName, Term>>> keys;
  for (const MatchSolution& s : solutions) {
    std::vector<std::pair<VarName, Term>> key;
    for (const auto& [x, image] : s.subst) key.emplace_back(x, canonical_c_alpha(image, sig));
    keys.insert(std::move(key));
  }
  return {keys.begin(), keys.end()};
}

}  // namespace nomrw
