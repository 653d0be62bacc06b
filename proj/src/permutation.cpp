#include "nomrw/permutation.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "nomrw/term.hpp"

namespace nomrw {

Perm::Perm(std::vector<std::pair<Atom, Atom>> map) : map_(std::move(map)) {
  std::sort(map_.begin(), map_.end());
  for (const auto& entry : map_) mask_ |= std::uint64_t{1} << (entry.first.id() % 64);
}

Perm Perm::swap(Atom a, Atom b) {
  if (a == b) return {};
  return Perm({{a, b}, {b, a}});
}

Perm Perm::cycle(std::span<const Atom> atoms) {
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j)
      if (atoms[i] == atoms[j]) throw std::invalid_argument("atom " + atoms[i].str() + " repeats in a cycle");
  }
  if (atoms.size() < 2) return {};
  std::vector<std::pair<Atom, Atom>> map;
  for (std::size_t i = 0; i < atoms.size(); ++i) map.emplace_back(atoms[i], atoms[(i + 1) % atoms.size()]);
  return Perm(std::move(map));
}

Perm Perm::from_cycles(std::span<const Cycle> cycles) {
  Perm result;
  for (const auto& c : cycles) result = compose(result, cycle(c));
  return result;
}

Perm Perm::from_images(std::vector<std::pair<Atom, Atom>> images) {
  std::erase_if(images, [](const auto& e) { return e.first == e.second; });
  std::sort(images.begin(), images.end());
  std::vector<Atom> to;
  to.reserve(images.size());
  for (std::size_t i = 0; i < images.size(); ++i) {
    if (i > 0 && images[i - 1].first == images[i].first)
      throw std::invalid_argument("atom " + images[i].first.str() + " mapped twice");
    to.push_back(images[i].second);
  }
  std::sort(to.begin(), to.end());
  for (std::size_t i = 1; i < to.size(); ++i)
    if (to[i - 1] == to[i]) throw std::invalid_argument("atom " + to[i].str() + " is the image of two atoms");
  for (std::size_t i = 0; i < to.size(); ++i)
    if (to[i] != images[i].first) throw std::invalid_argument("images do not describe a finite permutation");
  return Perm(std::move(images));
}

std::vector<Perm::Cycle> Perm::cycles() const {
  std::vector<Cycle> out;
  AtomSet seen;
  for (const auto& entry : map_) {
    if (seen.contains(entry.first)) continue;
    Cycle c;
    for (Atom a = entry.first; !seen.contains(a); a = (*this)(a)) {
      seen.insert(a);
      c.push_back(a);
    }
    out.push_back(std::move(c));
  }
  return out;
}

Atom apply_perm(const Perm& p, Atom a) { return p(a); }

Perm compose(const Perm& p, const Perm& q) {
  if (q.is_identity()) return p;
  if (p.is_identity()) return q;
  AtomSet domain;
  for (const auto& entry : p.mapping()) domain.insert(entry.first);
  for (const auto& entry : q.mapping()) domain.insert(entry.first);
  std::vector<std::pair<Atom, Atom>> map;
  for (Atom a : domain) map.emplace_back(a, p(q(a)));
  return Perm::from_images(std::move(map));
}

Perm invert(const Perm& p) {
  std::vector<std::pair<Atom, Atom>> map;
  map.reserve(p.mapping().size());
  for (const auto& [a, b] : p.mapping()) map.emplace_back(b, a);
  return Perm::from_images(std::move(map));
}

AtomSet perm_support(const Perm& p) {
  AtomSet out;
  for (const auto& entry : p.mapping()) out.insert(entry.first);
  return out;
}

Factorization factorize(const Perm& p, const AtomSet& quantified) {
  std::vector<std::pair<Atom, Atom>> meeting, avoiding;
  for (const auto& cycle : p.cycles()) {
    bool meets = std::any_of(cycle.begin(), cycle.end(), [&](Atom a) { return quantified.contains(a); });
    auto& part = meets ? meeting : avoiding;
    for (Atom a : cycle) part.emplace_back(a, p(a));
  }
  return {Perm::from_images(std::move(meeting)), Perm::from_images(std::move(avoiding))};
}

Term apply_perm_term(const Perm& p, const Term& t) {
  if (p.is_identity()) return t;
  // Ground subterms without any moved atom are left shared.
  if (t.is_ground() && (t.atom_mask() & p.atom_mask()) == 0) return t;
  switch (t.kind()) {
    case Term::Kind::Atom:
      return Term::atom(p(t.atom()));
    case Term::Kind::Suspension:
      return Term::suspension(compose(p, t.perm()), t.var());
    case Term::Kind::Abs:
      return Term::abs(p(t.atom()), apply_perm_term(p, t.body()));
    case Term::Kind::App: {
      std::vector<Term> args;
      args.reserve(t.args().size());
      for (const Term& arg : t.args()) args.push_back(apply_perm_term(p, arg));
      return Term::app(t.symbol(), std::move(args));
    }
  }
  return t;
}

std::string to_string(const Perm& p) {
  if (p.is_identity()) return "id";
  std::ostringstream os;
  for (const auto& cycle : p.cycles()) {
    os << '(';
    for (std::size_t i = 0; i < cycle.size(); ++i) os << (i ? " " : "") << cycle[i];
    os << ')';
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Perm& p) { return os << to_string(p); }

}  // namespace nomrw
