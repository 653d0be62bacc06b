#include "nomrw/equivalence.hpp"

#include <algorithm>
#include <stdexcept>

namespace nomrw {

AtomSet disagreement_set(const Perm& p, const Perm& q) {
  AtomSet out;
  for (const auto& entry : p.mapping())
    if (q(entry.first) != entry.second) out.insert(entry.first);
  for (const auto& entry : q.mapping())
    if (p(entry.first) != entry.second) out.insert(entry.first);
  return out;
}

namespace {

class Checker {
 public:
  Checker(const FreshnessContext& ctx, const Signature* sig) : ctx_(ctx), sig_(sig) {}

  bool fresh(Atom a, const Term& t, FreshnessContext& used) const {
    if (t.is_ground()) return !occurs_free(a, t);
    auto reqs = fresh_requirements(a, t);
    if (!reqs || !ctx_.entails(*reqs)) return false;
    used.merge(*reqs);
    return true;
  }

  bool eq(const Term& t, const Term& u, FreshnessContext& used) const {
    if (t.same_node(u)) return true;
    if (t.kind() != u.kind() || t.size() != u.size()) return false;
    switch (t.kind()) {
      case Term::Kind::Atom:
        return t.atom() == u.atom();
      case Term::Kind::Suspension:
        if (t.var() != u.var()) return false;
        for (Atom a : disagreement_set(t.perm(), u.perm())) {
          if (!ctx_.contains(a, t.var())) return false;
          used.insert(a, t.var());
        }
        return true;
      case Term::Kind::Abs:
        if (t.atom() == u.atom()) return eq(t.body(), u.body(), used);
        return fresh(t.atom(), u.body(), used) &&
               eq(t.body(), apply_perm_term(Perm::swap(t.atom(), u.atom()), u.body()), used);
      case Term::Kind::App: {
        if (t.symbol() != u.symbol() || t.args().size() != u.args().size()) return false;
        auto ts = t.args();
        auto us = u.args();
        if (sig_ != nullptr && ts.size() == 2 && sig_->is_commutative(t.symbol())) {
          FreshnessContext straight;
          if (eq(ts[0], us[0], straight) && eq(ts[1], us[1], straight)) {
            used.merge(straight);
            return true;
          }
          FreshnessContext swapped;
          if (eq(ts[0], us[1], swapped) && eq(ts[1], us[0], swapped)) {
            used.merge(swapped);
            return true;
          }
          return false;
        }
        for (std::size_t i = 0; i < ts.size(); ++i)
          if (!eq(ts[i], us[i], used)) return false;
        return true;
      }
    }
    return false;
  }

 private:
  const FreshnessContext& ctx_;
  const Signature* sig_;
};

struct Equation {
  Term pattern;
  Term subject;
};

class Matcher {
 public:
  Matcher(const MatchProblem& problem, const Signature& sig, bool modulo_c, bool first_only)
      : problem_(problem), sig_(sig), modulo_c_(modulo_c), first_only_(first_only) {}

  std::vector<MatchSolution> run() {
    VarSet pattern_vars = vars(problem_.pattern);
    for (VarName x : vars(problem_.subject))
      if (pattern_vars.contains(x))
        throw std::invalid_argument("pattern and subject share unknown " + x.str() + "; rename apart first");
    solve({{problem_.pattern, problem_.subject}}, {});
    return std::move(out_);
  }

 private:
  bool discharge(const std::optional<FreshnessContext>& reqs, MatchSolution& state) const {
    if (!reqs || !problem_.subject_ctx.entails(*reqs)) return false;
    state.obligations.merge(*reqs);
    return true;
  }

  // Equations are processed from the back of `todo`; children are pushed in
  // reverse so the leftmost one is solved first.
  void solve(std::vector<Equation> todo, MatchSolution state) {
    const Signature* c_sig = modulo_c_ ? &sig_ : nullptr;
    while (!todo.empty()) {
      if (first_only_ && !out_.empty()) return;
      Equation e = std::move(todo.back());
      todo.pop_back();
      const Term& l = e.pattern;
      const Term& s = e.subject;
      switch (l.kind()) {
        case Term::Kind::Suspension: {
          Term image = apply_perm_term(invert(l.perm()), s);
          auto bound = state.subst.find(l.var());
          if (bound == state.subst.end()) {
            state.subst.emplace(l.var(), std::move(image));
          } else {
            FreshnessContext used;
            if (!equivalent_using(problem_.subject_ctx, bound->second, image, c_sig, used)) return;
            state.obligations.merge(used);
          }
          break;
        }
        case Term::Kind::Atom:
          if (!s.is_atom() || s.atom() != l.atom()) return;
          break;
        case Term::Kind::Abs:
          if (!s.is_abs()) return;
          if (l.atom() == s.atom()) {
            todo.push_back({l.body(), s.body()});
          } else {
            if (!discharge(fresh_requirements(l.atom(), s.body()), state)) return;
            todo.push_back({l.body(), apply_perm_term(Perm::swap(l.atom(), s.atom()), s.body())});
          }
          break;
        case Term::Kind::App: {
          if (!s.is_app() || s.symbol() != l.symbol() || s.args().size() != l.args().size()) return;
          auto ls = l.args();
          auto ss = s.args();
          if (modulo_c_ && ls.size() == 2 && sig_.is_commutative(l.symbol())) {
            std::vector<Equation> straight = todo;
            straight.push_back({ls[1], ss[1]});
            straight.push_back({ls[0], ss[0]});
            solve(std::move(straight), state);
            todo.push_back({ls[1], ss[0]});
            todo.push_back({ls[0], ss[1]});
          } else {
            for (std::size_t i = ls.size(); i-- > 0;) todo.push_back({ls[i], ss[i]});
          }
          break;
        }
      }
    }
    if (first_only_ && !out_.empty()) return;
    for (const FreshConstraint& c : problem_.rule_ctx) {
      auto bound = state.subst.find(c.var);
      if (bound == state.subst.end()) continue;
      if (!discharge(fresh_requirements(c.atom, bound->second), state)) return;
    }
    if (std::find(out_.begin(), out_.end(), state) == out_.end()) out_.push_back(std::move(state));
  }

  const MatchProblem& problem_;
  const Signature& sig_;
  bool modulo_c_;
  bool first_only_;
  std::vector<MatchSolution> out_;
};

}  // namespace

bool equivalent_using(const FreshnessContext& ctx, const Term& t, const Term& u, const Signature* sig,
                      FreshnessContext& used) {
  FreshnessContext local;
  if (!Checker(ctx, sig).eq(t, u, local)) return false;
  used.merge(local);
  return true;
}

bool alpha_eq(const FreshnessContext& ctx, const Term& t, const Term& u) {
  FreshnessContext used;
  return Checker(ctx, nullptr).eq(t, u, used);
}

bool c_alpha_eq(const FreshnessContext& ctx, const Term& t, const Term& u, const Signature& sig) {
  FreshnessContext used;
  return Checker(ctx, &sig).eq(t, u, used);
}

std::optional<MatchSolution> match(const MatchProblem& p, const Signature& sig) {
  auto solutions = Matcher(p, sig, false, true).run();
  if (solutions.empty()) return std::nullopt;
  return std::move(solutions.front());
}

std::vector<MatchSolution> c_match(const MatchProblem& p, const Signature& sig) {
  return Matcher(p, sig, true, false).run();
}

}  // namespace nomrw
