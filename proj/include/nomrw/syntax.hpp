#ifndef NOMRW_SYNTAX_HPP
#define NOMRW_SYNTAX_HPP

#include <filesystem>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "nomrw/constraint.hpp"
#include "nomrw/ordering.hpp"
#include "nomrw/rewrite.hpp"
#include "nomrw/term.hpp"

// Concrete syntax.
//
//   atoms      a  c1  x_2        (lowercase head, not a declared symbol)
//   unknowns   X  Y1             (uppercase head)
//   terms      f(t1, t2)  h  h()  [a]t  (a b)(c d).X  X
//   perms      (a c1 d)(e f)     cycles compose right-to-left; `id`
//   contexts   [a#X, b#Y]
//   fixpoints  new c1 c2 in (a c1 d)(e f) fix TERM
//
// Problem files (.nrs) hold one declaration per line; `#` starts a comment
// line:
//
//   sig plus 2 comm
//   prec plus > s > zero
//   status plus mul
//   rule NAME: [a#X] |- LHS -> RHS
//   term NAME = TERM
//
// Symbols must be declared before any line uses them.

namespace nomrw {

/// Throws ParseError (with line/column) on syntax errors, unknown symbols,
/// arity mismatches and atom/unknown namespace violations.
Term parse_term(std::string_view input, const Signature& sig);
Perm parse_perm(std::string_view input);
FreshnessContext parse_context(std::string_view input);
/// Comma- or space-separated atom list, e.g. `c1,c2`.
std::vector<Atom> parse_atom_list(std::string_view input);
QuantifiedFixpoint parse_fixpoint(std::string_view input, const Signature& sig);

std::string print_term(const Term& t);
std::string print_perm(const Perm& p);
std::string print_context(const FreshnessContext& ctx);
std::string print_subst(const Substitution& s);
std::string print_position(const Position& pos);

struct ProblemFile {
  Signature sig;
  Precedence prec;
  StatusMap status;
  std::vector<RewriteRule> rules;
  std::vector<std::pair<std::string, Term>> terms;

  RewriteSystem system() const { return {sig, rules}; }
  CrpoConfig crpo() const { return {prec, status, sig}; }
  /// The term declared under `name`, or nullptr.
  const Term* find_term(std::string_view name) const;
};

ProblemFile parse_problem(std::string_view text);
/// Throws nomrw::Error when the file cannot be read.
ProblemFile load_problem(const std::filesystem::path& path);

}  // namespace nomrw

#endif  // NOMRW_SYNTAX_HPP
