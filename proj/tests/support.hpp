#ifndef NOMRW_TESTS_SUPPORT_HPP
#define NOMRW_TESTS_SUPPORT_HPP

#include <random>
#include <string_view>
#include <vector>

#include "nomrw/oracle.hpp"
#include "nomrw/ordering.hpp"
#include "nomrw/syntax.hpp"

namespace nomrw::test {

inline Atom A(std::string_view s) { return Atom(s); }
inline VarName V(std::string_view s) { return VarName(s); }
inline Symbol S(std::string_view s) { return Symbol(s); }

/// plus:2 comm, s:1, zero:0, g:1, f:2, h:0.
inline Signature test_sig() {
  Signature sig;
  sig.declare(S("plus"), 2, true);
  sig.declare(S("s"), 1);
  sig.declare(S("zero"), 0);
  sig.declare(S("g"), 1);
  sig.declare(S("f"), 2);
  sig.declare(S("h"), 0);
  return sig;
}

inline Term T(std::string_view text, const Signature& sig) { return parse_term(text, sig); }
inline Term T(std::string_view text) { return parse_term(text, test_sig()); }
inline Perm P(std::string_view text) { return parse_perm(text); }

inline std::vector<Atom> atoms(std::initializer_list<std::string_view> names) {
  std::vector<Atom> out;
  for (auto n : names) out.emplace_back(n);
  return out;
}

inline ProblemFile peano() {
  return parse_problem(
      "sig plus 2 comm\n"
      "sig s 1\n"
      "sig zero 0\n"
      "prec plus > s > zero\n"
      "status plus mul\n"
      "status s lex\n"
      "status zero lex\n"
      "rule plus_zero: plus(X, zero) -> X\n"
      "rule plus_s: plus(X, s(Y)) -> s(plus(X, Y))\n");
}

/// Order config over test_sig(): plus > f > g > s > h > zero.
inline CrpoConfig test_order() {
  CrpoConfig cfg;
  cfg.sig = test_sig();
  cfg.prec.add(S("plus"), S("f"));
  cfg.prec.add(S("f"), S("g"));
  cfg.prec.add(S("g"), S("s"));
  cfg.prec.add(S("s"), S("h"));
  cfg.prec.add(S("h"), S("zero"));
  cfg.status[S("plus")] = Status::Mul;
  cfg.status[S("f")] = Status::Lex;
  cfg.status[S("g")] = Status::Lex;
  cfg.status[S("s")] = Status::Lex;
  cfg.status[S("h")] = Status::Lex;
  cfg.status[S("zero")] = Status::Lex;
  return cfg;
}

template <class Rng>
const Term& pick(const std::vector<Term>& v, Rng& rng) {
  return v[std::uniform_int_distribution<std::size_t>(0, v.size() - 1)(rng)];
}

}  // namespace nomrw::test

#endif  // NOMRW_TESTS_SUPPORT_HPP
