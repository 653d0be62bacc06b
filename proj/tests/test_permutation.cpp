#include <doctest.h>

#include <stdexcept>

#include "support.hpp"

using namespace nomrw;
using namespace nomrw::test;

TEST_SUITE("permutation") {
  TEST_CASE("apply_perm") {
    CHECK(apply_perm(Perm{}, A("a")) == A("a"));
    CHECK(apply_perm(P("(a c1 d)"), A("a")) == A("c1"));
    CHECK(apply_perm(P("(a c1 d)"), A("d")) == A("a"));
    CHECK(apply_perm(P("(a b)(b c)"), A("c")) == A("a"));
  }

  TEST_CASE("compose") {
    CHECK(compose(P("(a b)"), P("(a b)")).is_identity());
    CHECK(compose(P("(a b)"), P("(b c)")) == P("(a b c)"));
    CHECK(compose(Perm{}, P("(a b c)")) == P("(a b c)"));
    CHECK(compose(P("(a b c)"), Perm{}) == P("(a b c)"));
    // Right factor acts first.
    CHECK(compose(P("(b c)"), P("(a b)")) == P("(a c b)"));
  }

  TEST_CASE("invert") {
    CHECK(invert(P("(a b)")) == P("(a b)"));
    CHECK(invert(P("(a b c)")) == P("(a c b)"));
    CHECK(invert(Perm{}).is_identity());
  }

  TEST_CASE("apply_perm_term") {
    CHECK(apply_perm_term(P("(a c)"), T("f(b, d)")) == T("f(b, d)"));
    CHECK(apply_perm_term(P("(a b)"), T("[a]a")) == T("[b]b"));
    CHECK(apply_perm_term(P("(a b)"), T("(b c).X")) == Term::suspension(compose(P("(a b)"), P("(b c)")), V("X")));
    CHECK(apply_perm_term(P("(a b)"), T("(a b).X")) == T("X"));
  }

  TEST_CASE("support") {
    CHECK(perm_support(Perm{}).empty());
    CHECK(perm_support(P("(a c1 d)(e f)(g c2)")) ==
          AtomSet{A("a"), A("c1"), A("d"), A("e"), A("f"), A("g"), A("c2")});
    CHECK(perm_support(P("(a b)")) == AtomSet{A("a"), A("b")});
  }

  TEST_CASE("factorize") {
    Perm p = P("(a c1 d)(e f)(g c2)");
    Factorization f = factorize(p, {A("c1"), A("c2")});
    CHECK(to_string(f.quantified_part) == "(a c1 d)(g c2)");
    CHECK(to_string(f.rest) == "(e f)");
    Factorization none = factorize(p, {});
    CHECK(none.quantified_part.is_identity());
    CHECK(none.rest == p);
    Factorization single = factorize(P("(a b)"), {A("a")});
    CHECK(single.quantified_part == P("(a b)"));
    CHECK(single.rest.is_identity());
  }

  TEST_CASE("canonical cycle form") {
    CHECK(to_string(P("(c1 d a)")) == "(a c1 d)");
    CHECK(to_string(P("(g c2)(e f)(a c1 d)")) == "(a c1 d)(e f)(g c2)");
    CHECK(to_string(Perm{}) == "id");
    CHECK(P("(a b)(a b)").is_identity());
    CHECK_THROWS_AS(Perm::cycle(atoms({"a", "b", "a"})), std::invalid_argument);
    CHECK_THROWS_AS(Perm::from_images({{A("a"), A("b")}, {A("c"), A("b")}}), std::invalid_argument);
  }

  TEST_CASE("group laws over four atoms") {
    auto all = enum_perms(atoms({"a", "b", "c", "d"}));
    REQUIRE(all.size() == 24);
    std::size_t broken = 0;
    for (const Perm& p : all) {
      broken += compose(p, invert(p)).is_identity() ? 0 : 1;
      broken += compose(invert(p), p).is_identity() ? 0 : 1;
      broken += compose(Perm{}, p) == p && compose(p, Perm{}) == p ? 0 : 1;
      for (const Perm& q : all)
        for (const Perm& r : all) broken += compose(p, compose(q, r)) == compose(compose(p, q), r) ? 0 : 1;
    }
    CHECK(broken == 0);
  }

  TEST_CASE("action law at depth two") {
    Signature sig;
    sig.declare(S("plus"), 2, true);
    sig.declare(S("g"), 1);
    sig.declare(S("zero"), 0);
    auto terms = enum_ground_terms({sig, atoms({"a", "b", "c"}), 2, true});
    terms.push_back(T("(a b).X"));
    terms.push_back(T("g([c](b c).Y)"));
    auto perms = enum_perms(atoms({"a", "b", "c"}));
    std::size_t broken = 0;
    for (const Perm& p : perms)
      for (const Perm& q : perms)
        for (const Term& t : terms)
          broken += apply_perm_term(p, apply_perm_term(q, t)) == apply_perm_term(compose(p, q), t) ? 0 : 1;
    CHECK(broken == 0);
  }

  TEST_CASE("factorization laws over six atoms") {
    auto universe = atoms({"a", "b", "c", "d", "e", "f"});
    auto perms = enum_perms(universe);
    REQUIRE(perms.size() == 720);
    std::size_t broken = 0;
    for (const Perm& p : perms) {
      for (unsigned mask = 0; mask < 64; ++mask) {
        AtomSet quantified;
        for (std::size_t i = 0; i < 6; ++i)
          if ((mask >> i) & 1U) quantified.insert(universe[i]);
        auto [pc, pnc] = factorize(p, quantified);
        broken += compose(pc, pnc) == p ? 0 : 1;
        AtomSet sc = perm_support(pc);
        for (Atom a : perm_support(pnc)) broken += sc.contains(a) ? 1 : 0;
        for (const auto& cycle : pc.cycles()) {
          bool meets = false;
          for (Atom a : cycle) meets = meets || quantified.contains(a);
          broken += meets ? 0 : 1;
        }
        for (const auto& cycle : pnc.cycles())
          for (Atom a : cycle) broken += quantified.contains(a) ? 1 : 0;
      }
    }
    CHECK(broken == 0);
  }
}
