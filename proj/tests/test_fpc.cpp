#include <gtest/gtest.h>

#include "fpc/parser.hpp"
#include "fpc/reduction.hpp"
#include "fpc/typecheck.hpp"
#include "support/generators.hpp"

namespace {

using namespace fpc;

FType X() { return FType::var("X"); }
FType Y() { return FType::var("Y"); }

// 1 + X with the unit stand-in 0 -> 0.
FType nat_body() { return FType::sum(FType::unit(), X()); }

TEST(WfType, Examples) {
  EXPECT_TRUE(wf_type({"X"}, X()));
  EXPECT_TRUE(wf_type({}, FType::mu("X", nat_body())));
  EXPECT_FALSE(wf_type({}, X()));
  EXPECT_TRUE(wf_type({}, FType::zero()));
  EXPECT_FALSE(wf_type({"Y"}, FType::mu("X", FType::prod(X(), FType::var("Z")))));
  EXPECT_TRUE(wf_type({"Z"}, FType::mu("X", FType::prod(X(), FType::var("Z")))));
}

TEST(TypeSubst, Examples) {
  FType u = FType::arrow(Y(), Y());
  EXPECT_TRUE(type_equal(type_subst(X(), "X", u), u));
  EXPECT_TRUE(type_equal(type_subst(FType::mu("X", X()), "X", u), FType::mu("X", X())));
  FType nat = FType::nat();
  EXPECT_TRUE(type_equal(type_subst(nat_body(), "X", nat), FType::sum(FType::unit(), nat)));
  EXPECT_TRUE(type_equal(unfold(nat), FType::sum(FType::unit(), nat)));
}

TEST(TypeSubst, AvoidsCapture) {
  // (mu Y. X * Y)[X := Y] must not capture the free Y.
  FType t = FType::mu("Y", FType::prod(X(), Y()));
  FType r = type_subst(t, "X", Y());
  EXPECT_EQ(r.free_vars(), std::vector<std::string>{"Y"});
  EXPECT_TRUE(type_equal(r, FType::mu("W", FType::prod(Y(), FType::var("W")))));
  EXPECT_FALSE(type_equal(r, FType::mu("W", FType::prod(FType::var("W"), FType::var("W")))));
}

TEST(TypePrinting, RoundTrip) {
  EXPECT_EQ(to_string(FType::nat()), "mu X. (0 -> 0) + X");
  EXPECT_EQ(to_string(FType::arrow(FType::arrow(X(), X()), X())), "(X -> X) -> X");
  EXPECT_EQ(to_string(FType::prod(FType::sum(X(), X()), X())), "(X + X) * X");
  EXPECT_EQ(to_string(parse_fpc_type("(mu X. X) + Y")), "0 + Y");
  for (const char* src : {"mu X. (0 -> 0) + X", "(X + Y) * (X -> Y)", "X -> Y -> X", "mu X. X -> X", "X * Y * X",
                          "0 + Y", "X + (Y + X)"}) {
    FType t = parse_fpc_type(src);
    EXPECT_EQ(to_string(t), src);
    EXPECT_TRUE(type_equal(parse_fpc_type(to_string(t)), t));
  }
}

TEST(Typecheck, NatEncoding) {
  FTerm zero = nat_zero();
  EXPECT_TRUE(type_equal(typecheck_fpc({}, {}, zero), FType::nat()));
  FTerm one = nat_succ(zero);
  EXPECT_TRUE(type_equal(typecheck_fpc({}, {}, one), FType::nat()));
  EXPECT_TRUE(type_equal(typecheck_fpc({}, {}, FTerm::elim(one)), unfold(FType::nat())));
}

TEST(Typecheck, Rules) {
  FTerm u = unit_value();
  FType unit = FType::unit();
  EXPECT_TRUE(type_equal(typecheck_fpc({}, {}, FTerm::fst(FTerm::pair(u, nat_zero()))), unit));
  EXPECT_TRUE(type_equal(typecheck_fpc({}, {}, FTerm::snd(FTerm::pair(u, nat_zero()))), FType::nat()));
  // inr_{t,u}(M) : u + t for M : t.
  EXPECT_TRUE(type_equal(typecheck_fpc({}, {}, FTerm::inr(unit, FType::nat(), u)), FType::sum(FType::nat(), unit)));
  FTerm c = parse_fpc("case inl[0 -> 0, 0 -> 0](\\x:0. x) of inl a => (a, a) | inr b => (b, b)");
  EXPECT_EQ(to_string(typecheck_fpc({}, {}, c)), "(0 -> 0) * (0 -> 0)");
  EXPECT_TRUE(type_equal(typecheck_fpc({"X"}, {{"v", X()}}, FTerm::var("v")), X()));
}

TEST(Typecheck, Errors) {
  auto rule_of = [](const char* src) {
    try {
      typecheck_fpc({}, {}, parse_fpc(src));
    } catch (const TypeError& e) {
      return e.rule() + "@" + e.path();
    }
    return std::string("ok");
  };
  EXPECT_EQ(rule_of("fst(\\x:0. x)"), "fst@fst.arg");
  EXPECT_EQ(rule_of("\\x:0. y"), "var@lam.body");
  EXPECT_EQ(rule_of("\\x:X. x"), "lam@");
  EXPECT_EQ(rule_of("intro[0 -> 0](\\x:0. x)"), "intro@");
  EXPECT_EQ(rule_of("elim(\\x:0. x)"), "elim@elim.arg");
  EXPECT_EQ(rule_of("(\\x:0 -> 0. x) (\\y:0. y, \\y:0. y)"), "app@app.arg");
  EXPECT_EQ(rule_of("case \\x:0. x of inl a => a | inr b => b"), "case@case.scrutinee");
  EXPECT_EQ(rule_of("intro[mu X. (0 -> 0) + X](inl[0, mu X. (0 -> 0) + X](\\x:0. x))"), "inl@intro.body/inl.body");
}

TEST(Step, Examples) {
  FTerm v = unit_value();
  FTerm beta = FTerm::app(FTerm::lam("x", FType::unit(), FTerm::var("x")), v);
  auto s1 = step_fpc(beta);
  ASSERT_EQ(s1.size(), 1u);
  EXPECT_TRUE(alpha_equal(s1[0], v));

  FTerm cancel = FTerm::elim(FTerm::intro(FType::nat(), FTerm::inl(FType::unit(), FType::nat(), v)));
  auto s2 = step_fpc(cancel);
  ASSERT_FALSE(s2.empty());
  EXPECT_TRUE(alpha_equal(s2[0], FTerm::inl(FType::unit(), FType::nat(), v)));

  FTerm c = FTerm::case_(FTerm::inl(FType::unit(), FType::unit(), v), "x", FTerm::var("x"), "y", FTerm::var("y"));
  auto s3 = step_fpc(c);
  ASSERT_FALSE(s3.empty());
  EXPECT_TRUE(alpha_equal(s3[0], v));

  EXPECT_TRUE(step_fpc(v).empty());
  EXPECT_TRUE(step_fpc(nat_succ(nat_zero())).empty());
}

TEST(Step, EverySuccessorIsListed) {
  // A pair of two redexes, one under a lambda.
  FTerm m = parse_fpc("(fst((\\a:0. a, \\b:0. b)), \\u:0 -> 0. snd((u, u)))");
  auto s = step_fpc(m);
  ASSERT_EQ(s.size(), 2u);
  EXPECT_EQ(pretty(s[0]), "(\\a:0. a, \\u:0 -> 0. snd((u, u)))");
  EXPECT_EQ(pretty(s[1]), "(fst((\\a:0. a, \\b:0. b)), \\u:0 -> 0. u)");
  // No reduction inside the argument of an application.
  FTerm app = parse_fpc("(\\f:0 -> 0. f) fst((\\a:0. a, \\b:0. b))");
  EXPECT_EQ(step_fpc(app).size(), 1u);
}

TEST(Normalize, Examples) {
  FTerm v = nat_succ(nat_zero());
  for (std::size_t fuel : {0u, 3u}) {
    auto r = normalize(v, fuel);
    ASSERT_TRUE(std::holds_alternative<Normal>(r));
    EXPECT_TRUE(alpha_equal(std::get<Normal>(r).term, v));
  }
  FTerm cancel = FTerm::elim(FTerm::intro(FType::nat(), FTerm::inr(FType::nat(), FType::unit(), nat_zero())));
  auto r = normalize(cancel, 2);
  ASSERT_TRUE(std::holds_alternative<Normal>(r));
  EXPECT_TRUE(alpha_equal(std::get<Normal>(r).term, FTerm::inr(FType::nat(), FType::unit(), nat_zero())));
}

TEST(Normalize, SelfApplicationLoops) {
  FType t = gen::loop_type();
  FTerm omega = FTerm::lam("x", t, FTerm::app(FTerm::elim(FTerm::var("x")), FTerm::var("x")));
  FTerm big = FTerm::app(omega, FTerm::intro(t, omega));
  EXPECT_TRUE(type_equal(typecheck_fpc({}, {}, big), t));
  // Two steps return to the starting term.
  FTerm cur = big;
  for (int i = 0; i < 2; ++i) {
    auto s = step_fpc(cur);
    ASSERT_EQ(s.size(), 1u);
    cur = s[0];
  }
  EXPECT_TRUE(alpha_equal(cur, big));
  for (std::size_t fuel : {1u, 10u, 101u}) EXPECT_TRUE(std::holds_alternative<OutOfFuel>(normalize(big, fuel)));
}

TEST(Parse, FilesWithAliases) {
  FpcProgram p = parse_fpc_program(
      "type unit = 0 -> 0;\n"
      "type nat = mu X. unit + X;\n"
      "intro[nat](inl[unit, nat](\\x:0. x))");
  EXPECT_TRUE(alpha_equal(p.term, nat_zero()));
  EXPECT_EQ(p.aliases.size(), 2u);
  // A mu binder shadows an alias of the same name.
  FType shadow = parse_fpc_program("type X = 0; \\v:mu X. X -> X. v").term.get_if<Lam>()->annotation;
  EXPECT_TRUE(type_equal(shadow, gen::loop_type()));
  EXPECT_THROW(parse_fpc("inl[0](\\x:0. x)"), ParseError);
  EXPECT_THROW(parse_fpc("case x of inl a => a"), ParseError);
  EXPECT_THROW(parse_fpc_type("mu . X"), ParseError);
}

// Property tests.

class FpcProperty : public ::testing::Test {
 protected:
  gen::Rng rng{1729};
};

TEST_F(FpcProperty, PrettyParseRoundTrip) {
  gen::FpcGen g(rng);
  for (int trial = 0; trial < 200; ++trial) {
    FType t = gen::fpc_type(rng, 2);
    FTerm m = g.closed(t, gen::below(rng, 7));
    FTerm back = parse_fpc(pretty(m));
    ASSERT_TRUE(alpha_equal(m, back)) << pretty(m) << "\n" << pretty(back);
  }
}

TEST_F(FpcProperty, ProgressAndPreservation) {
  gen::FpcGen g(rng);
  int stepped = 0;
  for (int trial = 0; trial < 200; ++trial) {
    FType t = gen::fpc_type(rng, 2);
    FTerm m = g.closed(t, gen::below(rng, 7));
    ASSERT_TRUE(type_equal(typecheck_fpc({}, {}, m), t)) << pretty(m);
    auto next = step_fpc(m);
    ASSERT_TRUE(is_value(m) || !next.empty()) << pretty(m);
    for (const FTerm& n : next) {
      ASSERT_TRUE(type_equal(typecheck_fpc({}, {}, n), t)) << pretty(m) << " -> " << pretty(n);
    }
    if (!next.empty()) ++stepped;
  }
  EXPECT_GT(stepped, 100);
}

TEST_F(FpcProperty, ElimIntroCancels) {
  gen::FpcGen g(rng);
  for (int trial = 0; trial < 200; ++trial) {
    FType mu = gen::mu_pool()[gen::below(rng, 3)];
    FTerm body = g.closed(unfold(mu), gen::below(rng, 6));
    auto next = step_fpc(FTerm::elim(FTerm::intro(mu, body)));
    ASSERT_FALSE(next.empty());
    ASSERT_TRUE(alpha_equal(next.front(), body));
  }
}

TEST_F(FpcProperty, NormalizeIsDeterministicAndReachesNormalForms) {
  gen::FpcGen g(rng);
  for (int trial = 0; trial < 100; ++trial) {
    FType t = gen::fpc_type(rng, 2);
    FTerm m = g.closed(t, gen::below(rng, 6));
    auto a = normalize(m, 200), b = normalize(m, 200);
    ASSERT_EQ(a.index(), b.index());
    if (auto n = std::get_if<Normal>(&a)) {
      ASSERT_TRUE(step_fpc(n->term).empty());
      ASSERT_TRUE(alpha_equal(n->term, std::get<Normal>(b).term));
      ASSERT_TRUE(type_equal(typecheck_fpc({}, {}, n->term), t));
    }
  }
}

}  // namespace
