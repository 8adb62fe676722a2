#include <gtest/gtest.h>

#include <cstdlib>
#include <numeric>
#include <random>
#include <sstream>

#include "mtlwb/corpus.hpp"
#include "mtlwb/error.hpp"
#include "mtlwb/semantics.hpp"
#include "helpers.hpp"
#include "reference.hpp"

using namespace mtlwb;
using namespace testing_helpers;

namespace {

struct Case {
  Chain chain;
  ref::Ops ops;
};

std::vector<Case> reference_chains() {
  return {
      {make_chain(Family::boolean, 1), ref::godel(2)},
      {make_chain(Family::lukasiewicz, 2), ref::lukasiewicz(2)},
      {make_chain(Family::lukasiewicz, 4), ref::lukasiewicz(4)},
      {make_chain(Family::godel, 3), ref::godel(3)},
      {make_chain(Family::nm, 5), ref::nm(5)},
      {make_chain(Family::nm, 4), ref::nm(4)},
      {make_chain(Family::dp, 4), ref::dp(4)},
  };
}

Model full_signature_model(std::mt19937_64& rng, const Chain& c, std::size_t n) {
  Signature sig;
  sig.add("P", 1);
  sig.add("Q", 1);
  sig.add("R", 2);
  return random_model(rng, c, sig, n);
}

// Renames every bound variable to a fresh name.
Formula rename_bound(const Formula& f, int& counter) {
  switch (f.op()) {
    case Op::atom:
    case Op::bottom:
      return f;
    case Op::delta:
    case Op::neg:
      return Formula::unary(f.op(), rename_bound(f.left(), counter));
    case Op::forall:
    case Op::exists: {
      std::string fresh = "v" + std::to_string(counter++);
      Formula body = substitute(f.body(), f.name(), fresh);
      return Formula::quantifier(f.op(), fresh, rename_bound(body, counter));
    }
    default:
      return Formula::binary(f.op(), rename_bound(f.left(), counter), rename_bound(f.right(), counter));
  }
}

Model permute(const Model& m, const std::vector<std::size_t>& pi) {
  Model out(m.domain_size());
  for (const auto& [name, t] : m.tables()) {
    out.add_predicate(name, t.arity);
    std::size_t n = m.domain_size();
    std::size_t cells = t.values.size();
    for (std::size_t cell = 0; cell < cells; ++cell) {
      std::vector<std::size_t> tuple(t.arity), image(t.arity);
      std::size_t rest = cell;
      for (std::size_t i = t.arity; i-- > 0;) {
        tuple[i] = rest % n + 1;
        rest /= n;
      }
      for (std::size_t i = 0; i < t.arity; ++i) image[i] = pi[tuple[i] - 1] + 1;
      out.set(name, image, t.values[cell]);
    }
  }
  return out;
}

}  // namespace

TEST(EvalProp, Examples) {
  Chain l2 = make_chain(Family::lukasiewicz, 2);
  EXPECT_EQ(eval_prop(l2, {{"p", q(1, 2)}}, parse("p -> (p & p)", Syntax::prop)), q(1, 2));
  Chain l2d = delta_expand(l2);
  EXPECT_EQ(eval_prop(l2d, {{"p", q(1, 2)}}, parse("!p", Syntax::prop)), q(0));
  Formula prelin = parse("(p -> q) \\/ (q -> p)", Syntax::prop);
  for (const auto& c : reference_chains()) {
    for (const auto& a : c.chain.labels()) {
      for (const auto& b : c.chain.labels()) EXPECT_EQ(eval_prop(c.chain, {{"p", a}, {"q", b}}, prelin), q(1));
    }
  }
}

TEST(EvalProp, Errors) {
  Chain l2 = make_chain(Family::lukasiewicz, 2);
  EXPECT_EQ(error_code([&] { eval_prop(l2, {{"p", q(1)}}, parse("p & q", Syntax::prop)); }), Errc::missing_variable);
  EXPECT_EQ(error_code([&] { eval_prop(l2, {{"p", q(1)}}, parse("!p", Syntax::prop)); }), Errc::no_delta);
  EXPECT_EQ(error_code([&] { eval_prop(l2, {{"p", q(1, 3)}}, parse("p", Syntax::prop)); }), Errc::invalid_parameter);
}

TEST(EvalProp, RationalFamilies) {
  Chain prod = Chain::rational_family(Family::product);
  EXPECT_EQ(eval_prop(prod, {{"p", q(1, 3)}, {"q", q(1, 4)}}, parse("p & q -> q", Syntax::prop)), q(1));
  EXPECT_EQ(eval_prop(prod, {{"p", q(1, 2)}, {"q", q(1, 4)}}, parse("p -> q", Syntax::prop)), q(1, 2));
  Chain luk = Chain::rational_family(Family::lukasiewicz);
  EXPECT_EQ(eval_prop(luk, {{"p", q(2, 7)}}, parse("p \\/ ~p", Syntax::prop)), q(5, 7));
}

TEST(EvalProp, MatchesReferenceAndDesugaring) {
  std::mt19937_64 rng(21);
  for (const auto& c : reference_chains()) {
    std::uniform_int_distribution<std::size_t> pick(0, c.chain.size() - 1);
    for (int i = 0; i < 200; ++i) {
      Formula f = random_prop_formula(rng, 4);
      Assignment a;
      for (const auto* name : {"p", "q", "r"}) a[name] = c.chain.label(static_cast<Index>(pick(rng)));
      ref::Evaluator ev{c.ops, nullptr, &a};
      Rational got = eval_prop(c.chain, a, f);
      EXPECT_EQ(got, ev.prop(f)) << c.chain.id() << " " << f;
      EXPECT_EQ(eval_prop(c.chain, a, desugar(f)), got) << c.chain.id() << " " << f;
    }
  }
}

TEST(EvalFo, LukasiewiczExample) {
  Chain l2 = make_chain(Family::lukasiewicz, 2);
  Model m(2);
  m.add_predicate("R", 2);
  m.table("R").values = {q(1), q(0), q(1, 2), q(1, 2)};
  EXPECT_EQ(eval_fo(l2, m, {}, parse("forall x. exists y. R(x,y)")), q(1, 2));
}

TEST(EvalFo, SingletonUniversal) {
  for (const auto& c : reference_chains()) {
    for (const auto& t : c.chain.labels()) {
      Model m(1);
      m.add_predicate("P", 1, t);
      EXPECT_EQ(eval_fo(c.chain, m, {}, parse("forall x. P(x)")), t);
    }
  }
}

TEST(EvalFo, MatchesReference) {
  std::mt19937_64 rng(33);
  for (const auto& c : reference_chains()) {
    for (int i = 0; i < 150; ++i) {
      Formula f = random_formula(rng, {4, false});
      std::size_t n = 1 + i % 3;
      Model m = full_signature_model(rng, c.chain, n);
      Valuation v;
      std::map<std::string, std::size_t> env;
      for (const auto& x : free_variables(f)) {
        v[x] = 1 + rng() % n;
        env[x] = v[x];
      }
      ref::Evaluator ev{c.ops, &m, nullptr};
      EXPECT_EQ(eval_fo(c.chain, m, v, f), ev.fo(f, env)) << c.chain.id() << " " << f;
    }
  }
}

TEST(EvalFo, DeltaMatchesReference) {
  std::mt19937_64 rng(34);
  Chain c = delta_expand(make_chain(Family::lukasiewicz, 3));
  ref::Ops ops = ref::lukasiewicz(3);
  for (int i = 0; i < 200; ++i) {
    Formula f = universal_closure(random_formula(rng, {4, true}));
    Model m = full_signature_model(rng, c, 2);
    ref::Evaluator ev{ops, &m, nullptr};
    EXPECT_EQ(eval_fo(c, m, {}, f), ev.fo(f)) << f;
  }
}

TEST(EvalFo, BoundRenamingAndDomainPermutation) {
  std::mt19937_64 rng(8);
  for (const auto& c : reference_chains()) {
    for (int i = 0; i < 60; ++i) {
      Formula f = random_formula(rng, {4, false});
      Model m = full_signature_model(rng, c.chain, 3);
      Valuation v;
      for (const auto& x : free_variables(f)) v[x] = 1 + rng() % 3;
      Rational base = eval_fo(c.chain, m, v, f);
      int counter = 0;
      EXPECT_EQ(eval_fo(c.chain, m, v, rename_bound(f, counter)), base) << f;
      std::vector<std::size_t> pi(3);
      std::iota(pi.begin(), pi.end(), 0);
      std::shuffle(pi.begin(), pi.end(), rng);
      Valuation pv;
      for (const auto& [x, d] : v) pv[x] = pi[d - 1] + 1;
      EXPECT_EQ(eval_fo(c.chain, permute(m, pi), pv, f), base) << f;
    }
  }
}

TEST(EvalFo, ClosureIsLeastInstance) {
  std::mt19937_64 rng(9);
  for (const auto& c : reference_chains()) {
    for (int i = 0; i < 60; ++i) {
      Formula f = random_formula(rng, {3, false});
      auto fv = free_variables(f);
      if (fv.empty()) continue;
      std::size_t n = 2;
      Model m = full_signature_model(rng, c.chain, n);
      Rational least(1);
      std::vector<std::size_t> digits(fv.size(), 1);
      for (;;) {
        Valuation v;
        for (std::size_t j = 0; j < fv.size(); ++j) v[fv[j]] = digits[j];
        Rational x = eval_fo(c.chain, m, v, f);
        if (x < least) least = x;
        std::size_t j = fv.size();
        while (j > 0 && digits[j - 1] == n) digits[--j] = 1;
        if (j == 0) break;
        ++digits[j - 1];
      }
      EXPECT_EQ(eval_fo(c.chain, m, {}, universal_closure(f)), least) << f;
    }
  }
}

TEST(EvalFo, QuantifierShiftAxiomOnBoolean) {
  Chain b = make_chain(Family::boolean, 1);
  Formula ax = parse("(forall x. P(x) \\/ Q(y)) -> ((forall x. P(x)) \\/ Q(y))");
  Signature sig = signature(ax);
  for (std::size_t n = 1; n <= 3; ++n) {
    auto models = enumerate_models(sig, n, carrier_values(b));
    while (auto m = models.next()) {
      for (std::size_t y = 1; y <= n; ++y) EXPECT_EQ(eval_fo(b, *m, {{"y", y}}, ax), q(1));
    }
  }
}

TEST(EvalFo, Errors) {
  Chain l2 = make_chain(Family::lukasiewicz, 2);
  Model m(1);
  m.add_predicate("P", 1);
  EXPECT_EQ(error_code([&] { eval_fo(l2, m, {}, parse("forall x. Q(x)")); }), Errc::signature_mismatch);
  EXPECT_EQ(error_code([&] { eval_fo(l2, m, {}, parse("forall x. P(x,x)")); }), Errc::signature_mismatch);
  EXPECT_EQ(error_code([&] { eval_fo(l2, m, {}, parse("P(y)")); }), Errc::unbound_variable);
  EXPECT_EQ(error_code([&] { eval_fo(l2, m, {{"y", 2}}, parse("P(y)")); }), Errc::invalid_parameter);
  EXPECT_EQ(error_code([&] { eval_fo(l2, m, {}, parse("forall x. !P(x)")); }), Errc::no_delta);
}

TEST(TautProp, Examples) {
  EXPECT_TRUE(is_taut_prop(make_chain(Family::nm, 5), identity("wnm")).tautology);
  auto r = is_taut_prop(make_chain(Family::lukasiewicz, 2), parse("x \\/ ~x", Syntax::prop));
  EXPECT_FALSE(r.tautology);
  ASSERT_TRUE(r.witness.has_value());
  EXPECT_EQ(r.witness->at("x"), q(1, 2));
  EXPECT_EQ(*r.value, q(1, 2));
  EXPECT_TRUE(is_taut_prop(make_chain(Family::boolean, 1), parse("x \\/ ~x", Syntax::prop)).tautology);
  EXPECT_EQ(error_code([] { is_taut_prop(Chain::rational_family(Family::godel), parse("p", Syntax::prop)); }),
            Errc::unsupported);
}

TEST(TautProp, FirstFailingAssignmentIsLexicographic) {
  // Over nm(5), p \/ ~p fails first at p = 1/4 (value 3/4).
  auto r = is_taut_prop(make_chain(Family::nm, 5), parse("p \\/ ~p", Syntax::prop));
  ASSERT_FALSE(r.tautology);
  EXPECT_EQ(r.witness->at("p"), q(1, 4));
  EXPECT_EQ(*r.value, q(3, 4));
  // q comes after p in name order, so p moves slowest.
  auto s = is_taut_prop(make_chain(Family::lukasiewicz, 2), parse("q -> p", Syntax::prop));
  EXPECT_EQ(s.witness->at("p"), q(0));
  EXPECT_EQ(s.witness->at("q"), q(1, 2));
}

TEST(TautProp, MatchesBruteForceReference) {
  std::mt19937_64 rng(4);
  for (const auto& c : reference_chains()) {
    for (int i = 0; i < 100; ++i) {
      Formula f = random_prop_formula(rng, 3);
      bool taut = true;
      for (const auto& a : c.chain.labels()) {
        for (const auto& b : c.chain.labels()) {
          for (const auto& d : c.chain.labels()) {
            Assignment asg{{"p", a}, {"q", b}, {"r", d}};
            ref::Evaluator ev{c.ops, nullptr, &asg};
            if (ev.prop(f) != 1) taut = false;
          }
        }
      }
      EXPECT_EQ(is_taut_prop(c.chain, f).tautology, taut) << c.chain.id() << " " << f;
    }
  }
}

TEST(TautProp, EnumerationCap) {
  setenv("MTLWB_ENUM_CAP", "10", 1);
  EXPECT_EQ(enumeration_cap(), 10u);
  EXPECT_EQ(error_code([] { is_taut_prop(make_chain(Family::nm, 5), identity("wnm")); }), Errc::enumeration_cap);
  unsetenv("MTLWB_ENUM_CAP");
  EXPECT_TRUE(is_taut_prop(make_chain(Family::nm, 5), identity("wnm")).tautology);
}

TEST(Enumerate, Counts) {
  Signature p, r;
  p.add("P", 1);
  r.add("R", 2);
  std::vector<Rational> two = {q(0), q(1)};
  EXPECT_EQ(enumerate_models(p, 1, two).count(), 2u);
  EXPECT_EQ(enumerate_models(p, 2, carrier_values(make_chain(Family::lukasiewicz, 2))).count(), 9u);
  EXPECT_EQ(enumerate_models(r, 2, two).count(), 16u);
  auto e = enumerate_models(r, 2, two);
  std::size_t seen = 0;
  while (e.next()) ++seen;
  EXPECT_EQ(seen, 16u);
}

TEST(Enumerate, CanonicalOrder) {
  Signature sig;
  sig.add("Q", 1);
  sig.add("P", 1);
  auto e = enumerate_models(sig, 2, {q(0), q(1, 2), q(1)});
  auto first = e.next();
  auto second = e.next();
  ASSERT_TRUE(first && second);
  EXPECT_EQ(first->table("P").values, (std::vector<Rational>{q(0), q(0)}));
  EXPECT_EQ(first->table("Q").values, (std::vector<Rational>{q(0), q(0)}));
  // The last cell (Q at 2, since P sorts first) moves fastest.
  EXPECT_EQ(second->table("P").values, (std::vector<Rational>{q(0), q(0)}));
  EXPECT_EQ(second->table("Q").values, (std::vector<Rational>{q(0), q(1, 2)}));
  std::optional<Model> last;
  while (auto m = e.next()) last = m;
  EXPECT_EQ(last->table("P").values, (std::vector<Rational>{q(1), q(1)}));
}

TEST(Enumerate, CapGuard) {
  Signature sig;
  sig.add("R", 2);
  EXPECT_EQ(error_code([&] { enumerate_models(sig, 4, {q(0), q(1)}, 1000); }), Errc::enumeration_cap);
}

TEST(ModelFile, RoundTrip) {
  std::mt19937_64 rng(2);
  Chain c = make_chain(Family::nm, 5);
  Model m = full_signature_model(rng, c, 3);
  m.add_predicate("S", 0, q(3, 4));
  std::string text = model_to_text(m);
  std::istringstream in(text);
  EXPECT_EQ(read_model(in), m);
}

TEST(ModelFile, Layout) {
  Model m(2);
  m.add_predicate("P", 1);
  m.table("P").values = {q(1, 2), q(1)};
  m.add_predicate("S", 0, q(1, 3));
  EXPECT_EQ(model_to_text(m), "mtlmodel 1\ndomain 2\npred P 1\n1 1/2\n2 1\npred S 0\n1/3\n");
}

TEST(ModelFile, Errors) {
  auto read = [](const std::string& s) {
    std::istringstream in(s);
    return read_model(in);
  };
  EXPECT_EQ(error_code([&] { read("mtlmodel 2\n"); }), Errc::format_error);
  EXPECT_EQ(error_code([&] { read("mtlmodel 1\ndomain 2\npred P 1\n1 1\n"); }), Errc::format_error);
  EXPECT_EQ(error_code([&] { read("mtlmodel 1\ndomain 2\npred P 1\n1 1\n1 0\n"); }), Errc::format_error);
  EXPECT_EQ(error_code([&] { read("mtlmodel 1\ndomain 2\npred P 1\n1 1\n3 0\n"); }), Errc::format_error);
  // Tuples may come in any order.
  Model m = read("mtlmodel 1\ndomain 2\npred P 1\n2 1/2\n1 1\n");
  EXPECT_EQ(m.table("P").values, (std::vector<Rational>{q(1), q(1, 2)}));
}

TEST(SubformulaValues, Occurrences) {
  Chain l2 = make_chain(Family::lukasiewicz, 2);
  Model m(2);
  m.add_predicate("P", 1);
  m.table("P").values = {q(1, 2), q(1)};
  auto vals = subformula_values(l2, m, parse("forall x. ~P(x)"));
  ASSERT_EQ(vals.size(), 3u);
  EXPECT_EQ(vals[0].values, (std::vector<Rational>{q(0)}));
  EXPECT_EQ(vals[1].subformula, parse("~P(x)"));
  EXPECT_EQ(vals[1].values, (std::vector<Rational>{q(0), q(1, 2)}));
  EXPECT_EQ(vals[2].values, (std::vector<Rational>{q(1, 2), q(1)}));
}
