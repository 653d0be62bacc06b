#include <doctest.h>

#include <random>
#include <stdexcept>

#include "nomrw/errors.hpp"
#include "support.hpp"

using namespace nomrw;
using namespace nomrw::test;

namespace {

QuantifiedFixpoint Q(std::initializer_list<std::string_view> fresh, std::string_view perm, std::string_view target) {
  return QuantifiedFixpoint(atoms(fresh), P(perm), T(target));
}

}  // namespace

TEST_SUITE("constraint") {
  TEST_CASE("derive_fresh") {
    CHECK(derive_fresh({}, A("a"), T("f(b, d)")));
    CHECK_FALSE(derive_fresh({}, A("a"), T("a")));
    CHECK(derive_fresh({{A("b"), V("X")}}, A("a"), T("(a b).X")));
    CHECK_FALSE(derive_fresh({{A("a"), V("X")}}, A("a"), T("(a b).X")));
    CHECK(derive_fresh({}, A("a"), T("[a]X")));
    CHECK_FALSE(derive_fresh({}, A("a"), T("[b]X")));
    CHECK(derive_fresh({{A("a"), V("X")}}, A("a"), T("[b]X")));
  }

  TEST_CASE("fresh_requirements") {
    auto needs = fresh_requirements(A("a"), T("f((a b).X, [c]Y)"));
    REQUIRE(needs);
    CHECK(*needs == FreshnessContext{{A("b"), V("X")}, {A("a"), V("Y")}});
    CHECK_FALSE(fresh_requirements(A("a"), T("f(a, X)")));
  }

  TEST_CASE("ground fixed points") {
    Signature sig = test_sig();
    CHECK(check_fixpoint_ground(P("(a b)"), T("plus(a, b)"), sig));
    CHECK(check_fixpoint_ground(Perm{}, T("f(a, g(b))"), sig));
    CHECK_FALSE(check_fixpoint_ground(P("(a b)"), T("g(a)"), sig));
    CHECK_FALSE(check_fixpoint_ground(P("(a b)"), T("f(a, b)"), sig));
    CHECK(check_fixpoint_ground(P("(a b)"), T("[a]g(a)"), sig));
    CHECK(check_fixpoint_ground(P("(a b)"), T("[a][b]f(a, b)"), sig));
    CHECK_THROWS_AS(check_fixpoint_ground(P("(a b)"), T("X"), sig), OpenTermError);
  }

  TEST_CASE("fixed-point check agrees with applying the permutation") {
    Signature sig;
    sig.declare(S("plus"), 2, true);
    sig.declare(S("g"), 1);
    auto universe = atoms({"a", "b", "c"});
    auto terms = enum_ground_terms({sig, universe, 2, true});
    std::size_t broken = 0;
    for (const Perm& p : enum_perms(universe))
      for (const Term& t : terms)
        broken += check_fixpoint_ground(p, t, sig) == c_alpha_eq({}, apply_perm_term(p, t), t, sig) ? 0 : 1;
    CHECK(broken == 0);
  }

  TEST_CASE("quantified fixed points") {
    Signature sig = test_sig();
    CHECK(check_quantified_fixpoint(Q({"c"}, "(a c)", "f(b, d)"), sig));
    CHECK_FALSE(check_quantified_fixpoint(Q({"c"}, "(a c)", "a"), sig));
    // The quantified atom is bound by the quantifier, not the target's c.
    CHECK_FALSE(check_quantified_fixpoint(Q({"c"}, "(a c)", "f(a, c)"), sig));
    CHECK(check_quantified_fixpoint(Q({"c"}, "(a c)", "[a]f(a, c)"), sig));
    CHECK_THROWS_AS(Q({"c", "c"}, "(a c)", "a"), std::invalid_argument);
  }

  TEST_CASE("worked example splits into its factors") {
    Signature sig = test_sig();
    auto c = QuantifiedFixpoint(atoms({"c1", "c2"}), P("(a c1 d)(e f)(g c2)"), T("X"));
    auto [pc, pnc] = split_fixpoint(c);
    CHECK(to_string(pc.perm()) == "(a c1 d)(g c2)");
    CHECK(pc.quantified() == atoms({"c1", "c2"}));
    CHECK(to_string(pnc.perm()) == "(e f)");
    CHECK(pnc.quantified().empty());
    CHECK(pnc.target() == T("X"));

    Signature wide;
    wide.declare(S("plus"), 2, true);
    wide.declare(S("k"), 3);
    auto ground = [&](std::string_view t) {
      return QuantifiedFixpoint(atoms({"c1", "c2"}), P("(a c1 d)(e f)(g c2)"), parse_term(t, wide));
    };
    for (std::string_view t : {"k(b, plus(e, f), h1)", "k(b, e, f)", "k(a, plus(e, f), b)", "plus(e, f)", "b"}) {
      auto q = ground(t);
      auto [qc, rest] = split_fixpoint(q);
      CHECK_MESSAGE(check_quantified_fixpoint(q, wide) ==
                        (check_quantified_fixpoint(qc, wide) && check_quantified_fixpoint(rest, wide)),
                    t);
    }
    CHECK(check_quantified_fixpoint(ground("k(b, plus(e, f), h1)"), wide));
    CHECK_FALSE(check_quantified_fixpoint(ground("k(b, e, f)"), wide));
    CHECK_FALSE(check_quantified_fixpoint(ground("k(a, plus(e, f), b)"), wide));
  }

  TEST_CASE("split corner cases") {
    auto [qc, rest] = split_fixpoint(Q({}, "(a b)", "X"));
    CHECK(qc.perm().is_identity());
    CHECK(rest.perm() == P("(a b)"));
    auto [qc2, rest2] = split_fixpoint(Q({"c"}, "(a c)", "X"));
    CHECK(qc2.perm() == P("(a c)"));
    CHECK(qc2.quantified() == atoms({"c"}));
    CHECK(rest2.perm().is_identity());
  }

  TEST_CASE("semantic freshness") {
    Signature sig = test_sig();
    CHECK(fresh_as_fixpoint(A("a"), T("f(b, d)"), sig));
    CHECK_FALSE(fresh_as_fixpoint(A("a"), T("a"), sig));
    CHECK(fresh_as_fixpoint(A("a"), T("[a]a"), sig));
    CHECK_FALSE(fresh_as_fixpoint(A("a"), T("plus(a, b)"), sig));
    CHECK_FALSE(fresh_as_fixpoint(A("b"), T("plus(a, b)"), sig));
    // Target mentions the default quantified name.
    CHECK_FALSE(fresh_as_fixpoint(A("a"), T("f(a, c1)"), sig));
    CHECK(fresh_as_fixpoint(A("a"), T("f(c1, c2)"), sig));
  }

  TEST_CASE("freshness agreement at depth two over four atoms") {
    Signature sig;
    sig.declare(S("plus"), 2, true);
    sig.declare(S("s"), 1);
    sig.declare(S("zero"), 0);
    sig.declare(S("g"), 1);
    auto universe = atoms({"a", "b", "c", "d"});
    auto terms = enum_ground_terms({sig, universe, 2, true});
    std::size_t broken = 0;
    for (const Term& t : terms) {
      AtomSet fa = free_atoms(t);
      for (Atom a : universe) {
        bool syn = derive_fresh({}, a, t);
        broken += syn == !fa.contains(a) ? 0 : 1;
        broken += syn == fresh_as_fixpoint(a, t, sig) ? 0 : 1;
      }
    }
    CHECK(broken == 0);
  }

  TEST_CASE("equivariance of freshness") {
    Signature sig;
    sig.declare(S("plus"), 2, true);
    sig.declare(S("g"), 1);
    auto universe = atoms({"a", "b", "c"});
    auto terms = enum_ground_terms({sig, universe, 2, true});
    std::size_t broken = 0;
    for (const Perm& p : enum_perms(universe))
      for (const Term& t : terms)
        for (Atom a : universe) broken += derive_fresh({}, a, t) == derive_fresh({}, p(a), apply_perm_term(p, t)) ? 0 : 1;
    CHECK(broken == 0);
  }

  TEST_CASE("split soundness over four atoms") {
    Signature sig;
    sig.declare(S("plus"), 2, true);
    sig.declare(S("g"), 1);
    sig.declare(S("zero"), 0);
    auto universe = atoms({"a", "b", "c", "d"});
    auto terms = enum_ground_terms({sig, universe, 1, true});
    auto perms = enum_perms(universe);
    std::size_t broken = 0, cases = 0;
    for (const Perm& p : perms)
      for (unsigned mask = 0; mask < 16; ++mask) {
        std::vector<Atom> quantified;
        for (std::size_t i = 0; i < 4; ++i)
          if ((mask >> i) & 1U) quantified.push_back(universe[i]);
        for (const Term& t : terms) {
          QuantifiedFixpoint c(quantified, p, t);
          auto [qc, rest] = split_fixpoint(c);
          bool whole = check_quantified_fixpoint(c, sig);
          broken += whole == (check_quantified_fixpoint(qc, sig) && check_quantified_fixpoint(rest, sig)) ? 0 : 1;
          ++cases;
        }
      }
    CHECK(cases == 24 * 16 * terms.size());
    CHECK(broken == 0);
  }

  TEST_CASE("witness independence") {
    Signature sig;
    sig.declare(S("plus"), 2, true);
    sig.declare(S("g"), 1);
    auto universe = atoms({"a", "b", "c", "d", "e"});
    auto terms = enum_ground_terms({sig, universe, 2, true});
    auto perms = enum_perms(universe);
    std::mt19937 rng(20261018);
    std::size_t broken = 0;
    for (int i = 0; i < 1000; ++i) {
      const Perm& p = perms[std::uniform_int_distribution<std::size_t>(0, perms.size() - 1)(rng)];
      std::vector<Atom> quantified;
      for (Atom a : universe)
        if (std::uniform_int_distribution<int>(0, 2)(rng) == 0) quantified.push_back(a);
      QuantifiedFixpoint c(quantified, p, pick(terms, rng));
      std::vector<Atom> w1 = choose_witnesses(c), w2;
      AtomSet avoid = free_atoms(c.target());
      AtomSet moved = perm_support(p);
      avoid.insert(moved.begin(), moved.end());
      avoid.insert(w1.begin(), w1.end());
      for (std::size_t k = 0; k < quantified.size(); ++k) {
        Atom w = fresh_atom(avoid, "z");
        avoid.insert(w);
        w2.push_back(w);
      }
      broken += check_quantified_fixpoint(c, sig, w1) == check_quantified_fixpoint(c, sig, w2) ? 0 : 1;
    }
    CHECK(broken == 0);
  }

  TEST_CASE("bad witnesses are rejected") {
    Signature sig = test_sig();
    auto c = Q({"c"}, "(a c)", "f(b, d)");
    CHECK_THROWS_AS(check_quantified_fixpoint(c, sig, atoms({"b"})), std::invalid_argument);
    CHECK_THROWS_AS(check_quantified_fixpoint(c, sig, atoms({"a"})), std::invalid_argument);
    CHECK_THROWS_AS(check_quantified_fixpoint(c, sig, atoms({})), std::invalid_argument);
    CHECK(check_quantified_fixpoint(c, sig, atoms({"z9"})));
  }
}
