#include <doctest.h>

#include <random>
#include <stdexcept>

#include "nomrw/errors.hpp"
#include "support.hpp"

using namespace nomrw;
using namespace nomrw::test;

namespace {

std::vector<Term> terms_of(std::initializer_list<std::string_view> texts) {
  std::vector<Term> out;
  for (auto t : texts) out.push_back(T(t));
  return out;
}

}  // namespace

TEST_SUITE("ordering") {
  TEST_CASE("precedence") {
    Precedence prec;
    prec.add(S("plus"), S("s"));
    prec.add(S("s"), S("zero"));
    CHECK(prec.greater(S("plus"), S("zero")));
    CHECK_FALSE(prec.greater(S("zero"), S("plus")));
    CHECK(prec.covers(S("s")));
    CHECK_FALSE(prec.covers(S("g")));
    CHECK_THROWS_AS(prec.add(S("zero"), S("plus")), ConfigError);
    CHECK_THROWS_AS(prec.add(S("s"), S("s")), ConfigError);
  }

  TEST_CASE("configuration checks") {
    CrpoConfig cfg = test_order();
    CHECK_NOTHROW(validate_config(cfg));
    cfg.status[S("plus")] = Status::Lex;
    CHECK_THROWS_AS(validate_config(cfg), ConfigError);
    cfg.status.erase(S("plus"));
    CHECK_THROWS_AS(validate_config(cfg), ConfigError);
  }

  TEST_CASE("basic comparisons") {
    CrpoConfig cfg = test_order();
    CHECK(crpo_gt(cfg, T("f(a, b)"), T("a")));
    CHECK(crpo_gt(cfg, T("f(a, b)"), T("g(a)")));
    CHECK(crpo_gt(cfg, T("g(a)"), T("s(a)")));
    Term t = T("plus(g(a), [b]s(b))");
    CHECK_FALSE(crpo_gt(cfg, t, t));
    CHECK_FALSE(crpo_gt(cfg, T("a"), T("b")));
    CHECK_FALSE(crpo_gt(cfg, T("s(a)"), T("g(a)")));
    CHECK(crpo_gt(cfg, T("s(zero)"), T("zero")));
    CHECK(crpo_gt(cfg, T("zero"), T("a")));
    CHECK(crpo_gt(cfg, T("[a]a"), T("b")));
    CHECK(crpo_gt(cfg, T("zero"), T("[a]a")));
    CHECK(crpo_gt(cfg, T("[a]g(a)"), T("[b]b")));
    CHECK_THROWS_AS(crpo_gt(cfg, T("X"), T("a")), OpenTermError);
  }

  TEST_CASE("alpha and C invariance") {
    CrpoConfig cfg = test_order();
    CHECK(crpo_equiv(cfg, T("[a]g(a)"), T("[b]g(b)")));
    CHECK(crpo_equiv(cfg, T("plus(a, zero)"), T("plus(zero, a)")));
    CHECK_FALSE(crpo_equiv(cfg, T("f(a, zero)"), T("f(zero, a)")));
    CHECK(crpo_gt(cfg, T("plus(s(a), zero)"), T("plus(zero, a)")));
    CHECK(crpo_gt(cfg, T("plus(zero, s(a))"), T("plus(a, zero)")));
  }

  TEST_CASE("status extensions") {
    CrpoConfig cfg = test_order();
    auto ss = terms_of({"s(zero)", "zero"});
    auto zz = terms_of({"zero", "zero"});
    CHECK(ext_compare(cfg, Status::Mul, ss, zz));
    CHECK_FALSE(ext_compare(cfg, Status::Mul, zz, ss));
    auto ab = terms_of({"a", "b"});
    auto ba = terms_of({"b", "a"});
    CHECK_FALSE(ext_compare(cfg, Status::Mul, ab, ba));
    auto lhs = terms_of({"a", "s(zero)"});
    auto rhs = terms_of({"a", "zero"});
    CHECK(ext_compare(cfg, Status::Lex, lhs, rhs));
    CHECK_FALSE(ext_compare(cfg, Status::Lex, rhs, lhs));
    auto one = terms_of({"a"});
    CHECK_THROWS_AS(ext_compare(cfg, Status::Lex, one, ab), std::invalid_argument);
  }

  TEST_CASE("termination checks") {
    ProblemFile pf = peano();
    TerminationReport report = check_termination(pf.system(), pf.crpo());
    CHECK(report.accepted);
    REQUIRE(report.rules.size() == 2);
    for (const RuleReport& r : report.rules) {
      CHECK(r.verdict == RuleVerdict::Oriented);
      CHECK(r.instances_checked > 0);
    }

    RewriteSystem empty{pf.sig, {}};
    CHECK(check_termination(empty, pf.crpo()).accepted);

    ProblemFile grow = parse_problem(
        "sig f 1\nsig g 1\nprec g > f\nstatus f lex\nstatus g lex\nrule grow: f(X) -> g(f(X))\n");
    TerminationReport bad = check_termination(grow.system(), grow.crpo());
    CHECK_FALSE(bad.accepted);
    REQUIRE(bad.rules.size() == 1);
    CHECK(bad.rules[0].verdict == RuleVerdict::NotOriented);
    REQUIRE(bad.rules[0].counterexample);
    REQUIRE(bad.rules[0].counterexample_sides);
    CHECK_FALSE(crpo_gt(grow.crpo(), bad.rules[0].counterexample_sides->first,
                        bad.rules[0].counterexample_sides->second));
  }

  TEST_CASE("termination configuration errors") {
    ProblemFile no_status = parse_problem("sig f 1\nprec f\nrule r: f(f(X)) -> f(X)\n");
    CHECK_THROWS_AS(check_termination(no_status.system(), no_status.crpo()), ConfigError);
    ProblemFile no_prec = parse_problem("sig f 1\nstatus f lex\nrule r: f(f(X)) -> f(X)\n");
    CHECK_THROWS_AS(check_termination(no_prec.system(), no_prec.crpo()), ConfigError);
    ProblemFile lex_comm = parse_problem("sig p 2 comm\nprec p\nstatus p lex\nrule r: p(X, X) -> X\n");
    CHECK_THROWS_AS(check_termination(lex_comm.system(), lex_comm.crpo()), ConfigError);
  }

  TEST_CASE("freshness contexts restrict instances") {
    ProblemFile pf = parse_problem(
        "sig k 1\nsig e 0\nprec k > e\nstatus k lex\nstatus e lex\nrule drop: [a#X] |- k([a]X) -> X\n");
    TerminationReport report = check_termination(pf.system(), pf.crpo());
    CHECK(report.accepted);
  }

  TEST_CASE("order properties at depth two") {
    CrpoConfig cfg = test_order();
    Signature sig;
    sig.declare(S("plus"), 2, true);
    sig.declare(S("g"), 1);
    sig.declare(S("zero"), 0);
    cfg.sig = sig;
    auto terms = enum_ground_terms({sig, atoms({"a", "b"}), 2, true});
    std::size_t broken = 0;
    for (const Term& t : terms) {
      broken += crpo_gt(cfg, t, t) ? 1 : 0;
      for (const Position& p : positions(t))
        if (!p.empty()) broken += crpo_gt(cfg, t, subterm_at(t, p)) ? 0 : 1;
    }
    std::mt19937 rng(3);
    for (int i = 0; i < 5000; ++i) {
      const Term& t = pick(terms, rng);
      const Term& u = pick(terms, rng);
      const Term& v = pick(terms, rng);
      if (crpo_gt(cfg, t, u) && crpo_gt(cfg, u, v)) broken += crpo_gt(cfg, t, v) ? 0 : 1;
      if (crpo_gt(cfg, t, u)) broken += crpo_gt(cfg, u, t) ? 1 : 0;
    }
    CHECK(broken == 0);
  }
}
