#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "mtlwb/corpus.hpp"
#include "mtlwb/search.hpp"
#include "helpers.hpp"
#include "reference.hpp"

using namespace mtlwb;
using namespace testing_helpers;

namespace {

const Formula& excluded_middle() {
  static const Formula f = parse("forall x. P(x) \\/ ~P(x)");
  return f;
}

SearchResult search(const Chain& c, const Formula& f, std::size_t n, unsigned workers = 1) {
  SearchOptions o;
  o.max_size = n;
  o.workers = workers;
  return find_countermodel(c, f, o);
}

Certificate round_trip(const Certificate& cert) {
  std::istringstream in(certificate_to_text(cert));
  return read_certificate(in);
}

}  // namespace

TEST(FindCountermodel, LukasiewiczExcludedMiddle) {
  SearchResult r = search(make_chain(Family::lukasiewicz, 2), excluded_middle(), 3);
  ASSERT_EQ(r.status, SearchStatus::refuted);
  const Certificate& cert = *r.certificate;
  EXPECT_EQ(cert.model.domain_size(), 1u);
  EXPECT_EQ(cert.model.at("P", std::vector<std::size_t>{1}), q(1, 2));
  EXPECT_EQ(cert.value, q(1, 2));
  EXPECT_TRUE(verify_certificate(cert));
}

TEST(FindCountermodel, BooleanFindsNothing) {
  SearchResult r = search(make_chain(Family::boolean, 1), excluded_middle(), 3);
  EXPECT_EQ(r.status, SearchStatus::taut_up_to);
  EXPECT_FALSE(r.certificate.has_value());
  EXPECT_EQ(r.max_size, 3u);
}

TEST(FindCountermodel, LiftedPowersOnL3) {
  Formula psi = lift_prop(parse("(x & x) <-> (x & x & x)", Syntax::prop));
  SearchResult r = search(make_chain(Family::lukasiewicz, 3), psi, 2);
  ASSERT_EQ(r.status, SearchStatus::refuted);
  EXPECT_EQ(r.certificate->model.domain_size(), 1u);
  EXPECT_EQ(r.certificate->model.at("P1", std::vector<std::size_t>{1}), q(2, 3));
  // (2/3)^2 = 1/3 and (2/3)^3 = 0, so the biconditional is 1 - 1/3.
  EXPECT_EQ(r.certificate->value, q(2, 3));
  EXPECT_TRUE(verify_certificate(r.certificate.value()));
}

TEST(FindCountermodel, OpenFormulaIsClosedFirst) {
  SearchResult r = search(make_chain(Family::lukasiewicz, 2), parse("P(x) \\/ ~P(x)"), 2);
  EXPECT_TRUE(r.closed_automatically);
  ASSERT_EQ(r.status, SearchStatus::refuted);
  EXPECT_EQ(r.certificate->formula, excluded_middle());
}

TEST(FindCountermodel, WorkerCountDoesNotChangeResult) {
  std::mt19937_64 rng(13);
  for (const char* id : {"lukasiewicz:3", "nm:5", "dp:4"}) {
    Chain c = chain_from_id(id);
    for (int i = 0; i < 25; ++i) {
      Formula f = random_formula(rng, {3, false});
      if (signature(f).entries().size() > 2) continue;
      SearchResult one = search(c, f, 2, 1);
      SearchResult three = search(c, f, 2, 3);
      EXPECT_EQ(one.status, three.status) << f;
      if (one.certificate && three.certificate) {
        EXPECT_EQ(certificate_to_text(*one.certificate), certificate_to_text(*three.certificate)) << f;
      }
    }
  }
}

// First countermodel in canonical order, found by a naive scan with the reference evaluator.
TEST(FindCountermodel, MatchesNaiveFirstModel) {
  std::mt19937_64 rng(19);
  Chain c = make_chain(Family::lukasiewicz, 2);
  ref::Ops ops = ref::lukasiewicz(2);
  for (int i = 0; i < 60; ++i) {
    Formula f = universal_closure(random_formula(rng, {3, false}));
    Signature sig = signature(f);
    if (sig.entries().size() > 2) continue;
    std::optional<Model> first;
    for (std::size_t n = 1; n <= 2 && !first; ++n) {
      auto models = enumerate_models(sig, n, carrier_values(c));
      while (auto m = models.next()) {
        if (ref::Evaluator{ops, &*m, nullptr}.fo(f) < 1) {
          first = m;
          break;
        }
      }
    }
    SearchResult r = search(c, f, 2);
    ASSERT_EQ(r.certificate.has_value(), first.has_value()) << f;
    if (first) EXPECT_EQ(r.certificate->model, *first) << f;
  }
}

TEST(FindCountermodel, GridOverRationalChainsIsNeverTaut) {
  SearchOptions o;
  o.max_size = 2;
  o.values = rational_grid(4);
  SearchResult g = find_countermodel(Chain::rational_family(Family::godel), parse("forall x. P(x) -> P(x)"), o);
  EXPECT_EQ(g.status, SearchStatus::inconclusive);
  SearchResult l = find_countermodel(Chain::rational_family(Family::lukasiewicz), excluded_middle(), o);
  ASSERT_EQ(l.status, SearchStatus::refuted);
  EXPECT_TRUE(verify_certificate(*l.certificate));
  // A strict subset of a finite carrier is also inconclusive.
  o.values = std::vector<Rational>{q(0), q(1)};
  EXPECT_EQ(find_countermodel(make_chain(Family::lukasiewicz, 2), excluded_middle(), o).status,
            SearchStatus::inconclusive);
  SearchOptions none;
  EXPECT_EQ(error_code([&] { find_countermodel(Chain::rational_family(Family::product), excluded_middle(), none); }),
            Errc::invalid_parameter);
}

TEST(FindCountermodel, CapIsEnforced) {
  SearchOptions o;
  o.max_size = 3;
  o.cap = 100;
  EXPECT_EQ(error_code([&] {
              find_countermodel(make_chain(Family::boolean, 1), parse("forall x. forall y. R(x,y) -> R(x,y)"), o);
            }),
            Errc::enumeration_cap);
}

TEST(Certificate, RoundTripAndVerify) {
  SearchResult r = search(make_chain(Family::lukasiewicz, 2), excluded_middle(), 2);
  Certificate back = round_trip(*r.certificate);
  EXPECT_EQ(certificate_to_text(back), certificate_to_text(*r.certificate));
  EXPECT_TRUE(verify_certificate(back));
  EXPECT_EQ(certificate_to_text(*r.certificate).rfind("mtlcert 1\n", 0), 0u);
}

TEST(Certificate, TamperedValueFails) {
  Certificate cert = *search(make_chain(Family::lukasiewicz, 2), excluded_middle(), 2).certificate;
  cert.value = q(1, 3);
  EXPECT_FALSE(verify_certificate(cert));
  cert.value = q(1);
  EXPECT_FALSE(verify_certificate(cert));
}

TEST(Certificate, DifferentChainIsHashMismatch) {
  Certificate cert = *search(make_chain(Family::lukasiewicz, 2), excluded_middle(), 2).certificate;
  EXPECT_EQ(error_code([&] { verify_certificate(cert, make_chain(Family::godel, 3)); }), Errc::hash_mismatch);
  EXPECT_EQ(error_code([&] { verify_certificate(cert, make_chain(Family::lukasiewicz, 3)); }), Errc::hash_mismatch);
}

// The hash covers the table, not the name: nm(3) is the same algebra as Ł₂.
TEST(Certificate, HashIgnoresChainName) {
  Certificate cert = *search(make_chain(Family::lukasiewicz, 2), excluded_middle(), 2).certificate;
  EXPECT_TRUE(verify_certificate(cert, make_chain(Family::nm, 3)));
}

TEST(Certificate, InlineChainTravelsWithCertificate) {
  std::vector<Index> neg = {4, 3, 1, 1, 0};
  Chain custom = make_wnm_chain(neg);
  SearchOptions o;
  o.max_size = 1;
  o.inline_chain = true;
  SearchResult r = find_countermodel(custom, excluded_middle(), o);
  ASSERT_EQ(r.status, SearchStatus::refuted);
  Certificate back = round_trip(*r.certificate);
  ASSERT_TRUE(back.inline_chain.has_value());
  EXPECT_EQ(chain_hash(*back.inline_chain), chain_hash(custom));
  EXPECT_TRUE(verify_certificate(back));
}

TEST(Certificate, FormatErrors) {
  auto read = [](const std::string& s) {
    std::istringstream in(s);
    return read_certificate(in);
  };
  EXPECT_EQ(error_code([&] { read("mtlcert 2\n"); }), Errc::format_error);
  Certificate cert = *search(make_chain(Family::lukasiewicz, 2), excluded_middle(), 2).certificate;
  std::string text = certificate_to_text(cert);
  std::string no_value = text.substr(0, text.rfind("value"));
  EXPECT_EQ(error_code([&] { read(no_value); }), Errc::format_error);
}

TEST(TautUptoDirect, Examples) {
  for (const auto& f : parse_corpus(classical_corpus())) {
    Formula closed = universal_closure(f);
    if (signature(closed).entries().size() > 1) continue;
    BoundedVerdict v = taut_upto_direct(make_chain(Family::boolean, 1), Formula::implies(closed, closed), 3);
    EXPECT_TRUE(v.taut) << f;
  }
  BoundedVerdict nm = taut_upto_direct(make_chain(Family::nm, 5), excluded_middle(), 2);
  ASSERT_FALSE(nm.taut);
  EXPECT_EQ(*nm.refuted_at, 1u);
  // Canonical order meets 1/4 first; the fixpoint 1/2 refutes as well.
  EXPECT_EQ(nm.model->at("P", std::vector<std::size_t>{1}), q(1, 4));
  EXPECT_EQ(*nm.value, q(3, 4));
  EXPECT_EQ(eval_fo(make_chain(Family::nm, 5), unary_model("P", {q(1, 2)}), {}, excluded_middle()), q(1, 2));
}

TEST(TautUptoDirect, CompletenessMatchesSearch) {
  std::mt19937_64 rng(23);
  for (const char* id : {"godel:3", "nm:4", "lukasiewicz:2"}) {
    Chain c = chain_from_id(id);
    for (int i = 0; i < 30; ++i) {
      Formula f = random_formula(rng, {3, false});
      if (signature(f).entries().size() > 2) continue;
      bool none = search(c, f, 2).status == SearchStatus::taut_up_to;
      EXPECT_EQ(none, taut_upto_direct(c, f, 2).taut) << id << " " << f;
    }
  }
}

TEST(LiftProp, Examples) {
  EXPECT_EQ(lift_prop(parse("x \\/ ~x", Syntax::prop)), parse("forall x1. P1(x1) \\/ ~P1(x1)"));
  EXPECT_EQ(lift_prop(parse("(x & x) <-> (x & x & x)", Syntax::prop)),
            parse("forall x1. (P1(x1) & P1(x1)) <-> (P1(x1) & P1(x1) & P1(x1))"));
  Formula vac = lift_prop(parse("bot -> y", Syntax::prop));
  EXPECT_EQ(vac, parse("forall x1. bot -> P1(x1)"));
  for (const char* id : {"boolean", "lukasiewicz:3", "nm:5", "dp:4"}) {
    EXPECT_TRUE(taut_upto_direct(chain_from_id(id), vac, 2).taut) << id;
  }
  EXPECT_EQ(lift_prop(parse("q -> p", Syntax::prop)), parse("forall x1. forall x2. P1(x1) -> P2(x2)"));
  EXPECT_EQ(error_code([] { lift_prop(parse("P(x)")); }), Errc::invalid_parameter);
}

TEST(LiftProp, PreservesPropositionalTautologyStatus) {
  std::mt19937_64 rng(29);
  for (const char* id : {"lukasiewicz:2", "godel:3", "nm:4"}) {
    Chain c = chain_from_id(id);
    for (int i = 0; i < 40; ++i) {
      Formula f = random_prop_formula(rng, 3);
      if (predicates(f).size() > 2) continue;
      bool prop = is_taut_prop(c, f).tautology;
      EXPECT_EQ(taut_upto_direct(c, lift_prop(f), 1).taut, prop) << id << " " << f;
      if (!prop) EXPECT_EQ(search(c, lift_prop(f), 1).status, SearchStatus::refuted);
    }
  }
}
