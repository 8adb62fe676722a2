#include <gtest/gtest.h>

#include <random>

#include "mtlwb/corpus.hpp"
#include "mtlwb/reductions.hpp"
#include "mtlwb/search.hpp"
#include "helpers.hpp"
#include "reference.hpp"

using namespace mtlwb;
using namespace testing_helpers;

namespace {

Formula P(const std::string& v) { return Formula::atom("P", {v}); }
Formula Q(const std::string& v) { return Formula::atom("Q", {v}); }
Formula sq(const Formula& f) { return Formula::strong_conj(f, f); }

Rational value_at_1(const Model& m) { return m.at("P", std::vector<std::size_t>{1}); }

}  // namespace

TEST(WnmStar, Examples) {
  EXPECT_EQ(wnm_star(P("x")), sq(P("x")));
  EXPECT_EQ(wnm_star(parse("P(x) -> Q(x)")), sq(Formula::implies(sq(P("x")), sq(Q("x")))));
  EXPECT_EQ(wnm_star(parse("forall x. P(x)")), Formula::forall("x", sq(P("x"))));
  EXPECT_EQ(wnm_star(Formula::bottom()), Formula::bottom());
  // ~P is desugared to P -> bot first.
  EXPECT_EQ(wnm_star(parse("~P(x)")), sq(Formula::implies(sq(P("x")), Formula::bottom())));
  EXPECT_EQ(error_code([] { wnm_star(parse("!P(x)")); }), Errc::delta_present);
}

TEST(ModelPlus, Examples) {
  Chain nm5 = make_chain(Family::nm, 5);
  EXPECT_EQ(value_at_1(model_plus(nm5, unary_model("P", {q(3, 4)}))), q(3, 4));
  EXPECT_EQ(value_at_1(model_plus(nm5, unary_model("P", {q(1, 2)}))), q(0));
  EXPECT_EQ(value_at_1(model_plus(nm5, unary_model("P", {q(1, 4)}))), q(0));
  Model boolean_valued = unary_model("P", {q(0), q(1)});
  EXPECT_EQ(model_plus(nm5, boolean_valued), boolean_valued);
  EXPECT_EQ(error_code([] { model_plus(make_chain(Family::lukasiewicz, 3), unary_model("P", {q(1)})); }),
            Errc::not_wnm);
}

TEST(GodelFragment, Examples) {
  GodelFragment g = godel_fragment(make_chain(Family::nm, 5));
  EXPECT_EQ(g.chain.size(), 3u);
  EXPECT_EQ(g.embedding, (std::vector<Index>{0, 3, 4}));
  EXPECT_TRUE(satisfies_identity(g.chain, identity("id")));

  GodelFragment b = godel_fragment(make_chain(Family::boolean, 1));
  EXPECT_EQ(b.chain.size(), 2u);
  EXPECT_EQ(b.embedding, (std::vector<Index>{0, 1}));

  Chain g4 = make_chain(Family::godel, 4);
  GodelFragment self = godel_fragment(g4);
  EXPECT_EQ(self.chain.size(), 4u);
  EXPECT_EQ(self.embedding, (std::vector<Index>{0, 1, 2, 3}));
  EXPECT_EQ(chain_hash(self.chain), chain_hash(g4));
}

TEST(GodelFragment, EmbeddingPreservesOrderAndOperations) {
  for (const char* id : {"nm:4", "nm:5", "wnm:4,3,1,1,0", "wnm:5,3,3,2,0,0"}) {
    Chain c = chain_from_id(id);
    GodelFragment g = godel_fragment(c);
    for (std::size_t i = 1; i < g.embedding.size(); ++i) EXPECT_LT(g.embedding[i - 1], g.embedding[i]);
    for (Index x = 0; x < g.chain.size(); ++x) {
      for (Index y = 0; y < g.chain.size(); ++y) {
        EXPECT_EQ(g.embedding[g.chain.star(x, y)], std::min(g.embedding[x], g.embedding[y]));
      }
    }
  }
}

// Value chain of the squaring translation on wnm chains, computed with the
// reference evaluator on each side.
TEST(WnmStar, ValueChainOnReference) {
  std::mt19937_64 rng(41);
  Chain c = make_chain(Family::nm, 5);
  ref::Ops ops = ref::nm(5);
  GodelFragment g = godel_fragment(c);
  ref::Ops gops = ref::godel(static_cast<unsigned>(g.chain.size()));
  NegationProfile prof = negation_profile(c);
  for (int i = 0; i < 200; ++i) {
    Formula f = universal_closure(random_formula(rng, {3, false}));
    Formula s = wnm_star(f);
    Model m = random_model(rng, c, signature(f), 1 + i % 2);
    Model plus = model_plus(c, m);
    Model frag = fragment_model(c, g, m);
    Rational v1 = ref::Evaluator{ops, &m, nullptr}.fo(s);
    Rational v2 = ref::Evaluator{ops, &plus, nullptr}.fo(s);
    Rational v3 = ref::Evaluator{gops, &frag, nullptr}.fo(s);
    Rational v4 = ref::Evaluator{gops, &frag, nullptr}.fo(f);
    EXPECT_EQ(v1, v2) << f;
    EXPECT_EQ(v3, v4) << f;
    // v1 lives in A+ or is 0; its fragment counterpart is v3.
    Index i1 = *c.index_of(v1);
    EXPECT_TRUE(v1 == 0 || std::count(prof.a_plus.begin(), prof.a_plus.end(), i1)) << f;
    auto pos = std::find(g.embedding.begin(), g.embedding.end(), i1);
    ASSERT_NE(pos, g.embedding.end());
    EXPECT_EQ(g.chain.label(static_cast<Index>(pos - g.embedding.begin())), v3) << f;
  }
}

TEST(Predef, Examples) {
  Formula one = predef(parse("forall x. P(x)"));
  EXPECT_EQ(one, parse("forall x1. ~(P(x1) <-> ~P(x1))"));
  Formula two = predef(parse("forall x. P(x) \\/ ~R(x,x)"));
  EXPECT_EQ(two, parse("(forall x1. ~(P(x1) <-> ~P(x1))) /\\ (forall x1. forall x2. ~(R(x1,x2) <-> ~R(x1,x2)))"));
  Chain l2 = make_chain(Family::lukasiewicz, 2);
  EXPECT_EQ(eval_fo(l2, unary_model("P", {q(1, 2)}), {}, one), q(0));
  EXPECT_EQ(error_code([] { predef(parse("forall x. P(x) & P(x)")); }), Errc::not_classical);
}

TEST(LukStar, Examples) {
  Formula phi = parse("forall x. P(x) \\/ ~P(x)");
  Formula star = luk_star(phi);
  EXPECT_EQ(star, Formula::disj(Formula::neg(predef(phi)), Formula::implies(Formula::neg(phi), phi)));
  EXPECT_EQ(eval_fo(make_chain(Family::lukasiewicz, 2), unary_model("P", {q(1, 2)}), {}, star), q(1));
  Chain b = make_chain(Family::boolean, 1);
  Formula plain = Formula::implies(Formula::neg(phi), phi);
  std::mt19937_64 rng(2);
  for (const auto& f : parse_corpus(classical_corpus())) {
    Formula closed = universal_closure(f);
    Model m = random_model(rng, b, signature(closed), 2);
    EXPECT_EQ(eval_fo(b, m, {}, luk_star(closed)),
              eval_fo(b, m, {}, Formula::implies(Formula::neg(closed), closed)))
        << f;
  }
  EXPECT_EQ(eval_fo(b, unary_model("P", {q(1)}), {}, star), eval_fo(b, unary_model("P", {q(1)}), {}, plain));
  EXPECT_EQ(error_code([] { luk_star(parse("exists x. P(x)")); }), Errc::not_classical);
}

TEST(BooleanCollapse, Examples) {
  EXPECT_EQ(value_at_1(boolean_collapse(make_chain(Family::lukasiewicz, 3), unary_model("P", {q(2, 3)}))), q(1));
  EXPECT_EQ(value_at_1(boolean_collapse(make_chain(Family::lukasiewicz, 3), unary_model("P", {q(1, 3)}))), q(0));
  EXPECT_EQ(value_at_1(boolean_collapse(make_chain(Family::lukasiewicz, 2), unary_model("P", {q(1, 2)}))), q(0));
  Model bv = unary_model("P", {q(1), q(0)});
  EXPECT_EQ(boolean_collapse(make_chain(Family::lukasiewicz, 4), bv), bv);
  EXPECT_EQ(error_code([] { boolean_collapse(make_chain(Family::godel, 3), unary_model("P", {q(1)})); }),
            Errc::not_an_mv_chain);
}

// With PREDEF positive, membership of the value in A+ matches truth in the collapse.
TEST(BooleanCollapse, TracksPositiveValues) {
  std::mt19937_64 rng(6);
  Chain b = make_chain(Family::boolean, 1);
  for (unsigned n : {3u, 4u}) {
    Chain c = make_chain(Family::lukasiewicz, n);
    NegationProfile prof = negation_profile(c);
    for (const auto& f : parse_corpus(classical_corpus())) {
      Formula closed = universal_closure(f);
      for (int i = 0; i < 10; ++i) {
        Model m = random_model(rng, c, signature(closed), 2);
        if (eval_fo(c, m, {}, predef(closed)) == 0) continue;
        Index v = *c.index_of(eval_fo(c, m, {}, closed));
        bool in_plus = std::count(prof.a_plus.begin(), prof.a_plus.end(), v) > 0;
        EXPECT_EQ(in_plus, eval_fo(b, boolean_collapse(c, m), {}, closed) == 1) << c.id() << " " << f;
      }
    }
  }
}

TEST(DoubleNeg, Examples) {
  EXPECT_EQ(double_neg(P("x")), Formula::neg(Formula::neg(P("x"))));
  EXPECT_EQ(double_neg(parse("forall x. P(x) -> bot")), parse("forall x. ~~P(x) -> bot"));
  EXPECT_EQ(eval_fo(make_chain(Family::godel, 4), unary_model("P", {q(1, 3)}), {}, parse("forall x. ~~P(x)")), q(1));
  Chain sum = chain_from_id("sum(L2,G2)");
  for (const Rational& l : {q(0), q(1, 3)}) {
    EXPECT_EQ(eval_fo(sum, unary_model("P", {l}), {}, double_neg(parse("forall x. P(x)"))), l);
  }
  EXPECT_EQ(error_code([] { double_neg(parse("!P(x)")); }), Errc::delta_present);
}

TEST(DeltaGuard, Examples) {
  EXPECT_EQ(delta_guard(P("x")), Formula::delta(P("x")));
  Chain l2d = delta_expand(make_chain(Family::lukasiewicz, 2));
  EXPECT_EQ(eval_fo(l2d, unary_model("P", {q(1, 2)}), {}, delta_guard(parse("forall x. P(x)"))), q(0));
  Chain bd = delta_expand(make_chain(Family::boolean, 1));
  std::mt19937_64 rng(1);
  for (int i = 0; i < 100; ++i) {
    Formula f = universal_closure(random_formula(rng, {4, true}));
    Model m = random_model(rng, bd, signature(f), 1 + i % 3);
    EXPECT_EQ(eval_fo(bd, m, {}, delta_guard(f)), eval_fo(bd, m, {}, f)) << f;
  }
  // Without delta on the chain the guard fails at evaluation time.
  EXPECT_EQ(error_code([] {
              eval_fo(make_chain(Family::lukasiewicz, 2), unary_model("P", {q(1)}), {},
                      delta_guard(parse("forall x. P(x)")));
            }),
            Errc::no_delta);
}

TEST(FormulaF, HoldsExactlyWithoutFixpoint) {
  Formula f = formula_f(Formula::atom("p"));
  EXPECT_EQ(f, parse("!(p <-> ~p) -> p", Syntax::prop));
  struct Row {
    const char* id;
    bool holds;
  };
  for (const Row& r : {Row{"lukasiewicz:2", false}, Row{"lukasiewicz:3", true}, Row{"nm:5", false},
                       Row{"godel:4", true}}) {
    Chain c = chain_from_id(r.id);
    EXPECT_EQ(satisfies_identity(delta_expand(c), f), r.holds) << r.id;
    EXPECT_EQ(negation_profile(c).fixpoint.has_value(), !r.holds) << r.id;
  }
}

TEST(Reductions, BoundedEquivalencesOnSmallFormulas) {
  Chain b = make_chain(Family::boolean, 1);
  Chain g4 = make_chain(Family::godel, 4);
  Chain l2 = make_chain(Family::lukasiewicz, 2);
  Chain sum = chain_from_id("sum(L2,G2)");
  std::vector<std::string> texts = {"forall x. P(x) \\/ ~P(x)", "forall x. ~~P(x) -> P(x)",
                                    "(exists x. P(x)) -> ~forall x. ~P(x)", "forall x. P(x) -> P(x) & P(x)",
                                    "exists x. P(x) -> forall y. P(y)"};
  for (const auto& t : texts) {
    Formula f = parse(t);
    EXPECT_EQ(taut_upto_direct(g4, double_neg(f), 2).taut, taut_upto_direct(b, f, 2).taut) << t;
    EXPECT_EQ(taut_upto_direct(sum, double_neg(f), 2).taut, taut_upto_direct(l2, f, 2).taut) << t;
    EXPECT_EQ(taut_upto_direct(delta_expand(l2), delta_guard(f), 2).taut,
              taut_upto_direct(delta_expand(b), f, 2).taut)
        << t;
    if (is_classical(universal_closure(f))) {
      EXPECT_EQ(taut_upto_direct(chain_from_id("L3"), luk_star(universal_closure(f)), 2).taut,
                taut_upto_direct(b, f, 2).taut)
          << t;
    }
  }
}

TEST(Chains, WnmAndMvRecognition) {
  EXPECT_TRUE(is_wnm_chain(make_chain(Family::nm, 5)));
  EXPECT_TRUE(is_wnm_chain(make_chain(Family::godel, 3)));
  EXPECT_TRUE(is_wnm_chain(make_chain(Family::lukasiewicz, 2)));
  EXPECT_FALSE(is_wnm_chain(make_chain(Family::lukasiewicz, 3)));
  EXPECT_TRUE(is_mv_chain(make_chain(Family::lukasiewicz, 5)));
  // Involutive but not divisible.
  EXPECT_TRUE(satisfies_identity(make_chain(Family::nm, 4), identity("inv")));
  EXPECT_FALSE(is_mv_chain(make_chain(Family::nm, 4)));
  EXPECT_EQ(error_code([] { boolean_collapse(make_chain(Family::nm, 4), unary_model("P", {q(1)})); }),
            Errc::not_an_mv_chain);
}
