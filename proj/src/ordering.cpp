#include "nomrw/ordering.hpp"

#include <algorithm>
#include <stdexcept>

#include "nomrw/constraint.hpp"
#include "nomrw/errors.hpp"
#include "nomrw/oracle.hpp"

namespace nomrw {

void Precedence::add(Symbol f, Symbol g) {
  mentioned_.insert(f);
  mentioned_.insert(g);
  std::vector<Symbol> above{f}, below{g};
  for (const auto& [x, y] : pairs_) {
    if (y == f) above.push_back(x);
    if (x == g) below.push_back(y);
  }
  for (Symbol x : above)
    for (Symbol y : below) {
      if (x == y) throw ConfigError("precedence is cyclic: " + f.str() + " > " + g.str() + " closes a cycle");
      pairs_.insert({x, y});
    }
}

void validate_config(const CrpoConfig& cfg) {
  for (const auto& [f, info] : cfg.sig) {
    auto it = cfg.status.find(f);
    if (it == cfg.status.end()) throw ConfigError("symbol " + f.str() + " has no status");
    if (info.commutative && it->second != Status::Mul)
      throw ConfigError("commutative symbol " + f.str() + " needs status mul");
  }
}

namespace {

class Crpo {
 public:
  explicit Crpo(const CrpoConfig& cfg) : cfg_(cfg) {}

  Status status(Symbol f) const {
    auto it = cfg_.status.find(f);
    if (it == cfg_.status.end()) throw ConfigError("symbol " + f.str() + " has no status");
    return it->second;
  }

  bool equiv(const Term& s, const Term& t) const {
    if (s.same_node(t)) return true;
    if (s.kind() != t.kind() || s.size() != t.size()) return false;
    switch (s.kind()) {
      case Term::Kind::Atom:
        return true;
      case Term::Kind::Abs:
        return equiv(s.body(), t.body());
      case Term::Kind::App:
        if (s.symbol() != t.symbol() || s.args().size() != t.args().size()) return false;
        if (status(s.symbol()) == Status::Mul) return multiset_equiv(s.args(), t.args());
        for (std::size_t i = 0; i < s.args().size(); ++i)
          if (!equiv(s.args()[i], t.args()[i])) return false;
        return true;
      case Term::Kind::Suspension:
        break;
    }
    return false;
  }

  bool ge(const Term& s, const Term& t) const { return equiv(s, t) || gt(s, t); }

  bool gt(const Term& s, const Term& t) const {
    switch (s.kind()) {
      case Term::Kind::Atom:
      case Term::Kind::Suspension:
        return false;
      case Term::Kind::Abs:
        // [a]s' behaves as a unary symbol below every declared one.
        if (ge(s.body(), t)) return true;
        if (t.is_atom()) return true;
        if (t.is_abs()) return gt(s.body(), t.body());
        return false;
      case Term::Kind::App:
        break;
    }
    for (const Term& arg : s.args())
      if (ge(arg, t)) return true;
    if (t.is_atom()) return true;
    if (t.is_abs()) return gt(s, t.body());
    if (!t.is_app()) return false;
    if (s.symbol() == t.symbol()) {
      Status st = status(s.symbol());
      if (!extension(st, s.args(), t.args())) return false;
      // Under mul the multiset decrease already dominates every argument.
      return st == Status::Mul || dominates_all(s, t.args());
    }
    if (cfg_.prec.greater(s.symbol(), t.symbol())) return dominates_all(s, t.args());
    return false;
  }

  bool extension(Status kind, std::span<const Term> ss, std::span<const Term> ts) const {
    if (kind == Status::Lex) {
      if (ss.size() != ts.size()) throw std::invalid_argument("lexicographic comparison of tuples of different length");
      for (std::size_t i = 0; i < ss.size(); ++i)
        if (!equiv(ss[i], ts[i])) return gt(ss[i], ts[i]);
      return false;
    }
    std::vector<bool> t_used(ts.size(), false);
    std::vector<const Term*> s_left;
    for (const Term& s : ss) {
      bool paired = false;
      for (std::size_t j = 0; j < ts.size() && !paired; ++j) {
        if (!t_used[j] && equiv(s, ts[j])) {
          t_used[j] = true;
          paired = true;
        }
      }
      if (!paired) s_left.push_back(&s);
    }
    if (s_left.empty()) return false;
    for (std::size_t j = 0; j < ts.size(); ++j) {
      if (t_used[j]) continue;
      bool covered = std::any_of(s_left.begin(), s_left.end(), [&](const Term* s) { return gt(*s, ts[j]); });
      if (!covered) return false;
    }
    return true;
  }

 private:
  bool multiset_equiv(std::span<const Term> ss, std::span<const Term> ts) const {
    std::vector<bool> t_used(ts.size(), false);
    for (const Term& s : ss) {
      bool paired = false;
      for (std::size_t j = 0; j < ts.size() && !paired; ++j) {
        if (!t_used[j] && equiv(s, ts[j])) {
          t_used[j] = true;
          paired = true;
        }
      }
      if (!paired) return false;
    }
    return true;
  }

  bool dominates_all(const Term& s, std::span<const Term> ts) const {
    return std::all_of(ts.begin(), ts.end(), [&](const Term& t) { return gt(s, t); });
  }

  const CrpoConfig& cfg_;
};

void require_ground(const Term& t) {
  if (!t.is_ground()) throw OpenTermError("the ordering compares ground terms only");
}

}  // namespace

bool crpo_gt(const CrpoConfig& cfg, const Term& t, const Term& u) {
  require_ground(t);
  require_ground(u);
  return Crpo(cfg).gt(t, u);
}

bool crpo_equiv(const CrpoConfig& cfg, const Term& t, const Term& u) {
  require_ground(t);
  require_ground(u);
  return Crpo(cfg).equiv(t, u);
}

bool ext_compare(const CrpoConfig& cfg, Status kind, std::span<const Term> ts, std::span<const Term> us) {
  for (const Term& t : ts) require_ground(t);
  for (const Term& u : us) require_ground(u);
  return Crpo(cfg).extension(kind, ts, us);
}

TerminationReport check_termination(const RewriteSystem& sys, const CrpoConfig& cfg, const InstanceConfig& instances) {
  validate_config(cfg);
  for (const RewriteRule& rule : sys.rules) {
    std::set<Symbol> used = symbols_of(rule.lhs);
    std::set<Symbol> rhs_symbols = symbols_of(rule.rhs);
    used.insert(rhs_symbols.begin(), rhs_symbols.end());
    for (Symbol f : used) {
      if (!cfg.status.contains(f)) throw ConfigError("rule " + rule.name + ": symbol " + f.str() + " has no status");
      if (!cfg.prec.covers(f))
        throw ConfigError("rule " + rule.name + ": symbol " + f.str() + " is not covered by the precedence");
    }
  }

  TerminationReport report;
  Crpo order(cfg);
  for (const RewriteRule& rule : sys.rules) {
    RuleReport rr;
    rr.rule = rule.name;
    VarSet rule_vars = vars(rule.lhs);
    std::vector<VarName> unknowns(rule_vars.begin(), rule_vars.end());

    EnumConfig universe{sys.sig, instances.atoms, instances.depth, instances.include_abstractions};
    for (Atom a : all_atoms(rule.lhs)) universe.atoms.push_back(a);
    for (Atom a : all_atoms(rule.rhs)) universe.atoms.push_back(a);
    for (const FreshConstraint& c : rule.ctx) universe.atoms.push_back(c.atom);

    std::vector<Term> terms;
    while (true) {
      terms = unknowns.empty() ? std::vector<Term>{} : enum_ground_terms(universe);
      double count = 1;
      for (std::size_t i = 0; i < unknowns.size(); ++i) count *= static_cast<double>(terms.size());
      if (count <= static_cast<double>(instances.max_instances) || universe.max_depth == 0) break;
      --universe.max_depth;
    }
    rr.instance_depth = universe.max_depth;

    std::vector<std::size_t> idx(unknowns.size(), 0);
    if (unknowns.empty() || !terms.empty()) {
      while (true) {
        Substitution subst;
        for (std::size_t i = 0; i < unknowns.size(); ++i) subst.emplace(unknowns[i], terms[idx[i]]);
        bool admissible = std::all_of(rule.ctx.begin(), rule.ctx.end(), [&](const FreshConstraint& c) {
          auto it = subst.find(c.var);
          return it == subst.end() || derive_fresh({}, c.atom, it->second);
        });
        if (admissible) {
          ++rr.instances_checked;
          Term l = apply_subst(subst, rule.lhs);
          Term r = apply_subst(subst, rule.rhs);
          if (!order.gt(l, r)) {
            rr.verdict = RuleVerdict::NotOriented;
            rr.counterexample = std::move(subst);
            rr.counterexample_sides = std::make_pair(std::move(l), std::move(r));
            break;
          }
        }
        std::size_t k = unknowns.size();
        while (k > 0 && ++idx[k - 1] == terms.size()) idx[--k] = 0;
        if (k == 0) break;
      }
    }
    if (rr.verdict == RuleVerdict::NotOriented) report.accepted = false;
    report.rules.push_back(std::move(rr));
  }
  return report;
}

}  // namespace nomrw
