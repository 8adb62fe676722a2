#include "mtlwb/suites.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <map>
#include <ostream>
#include <random>
#include <set>
#include <sstream>
#include <thread>

#include "engine.hpp"
#include "mtlwb/corpus.hpp"
#include "mtlwb/error.hpp"
#include "mtlwb/grounding.hpp"
#include "mtlwb/reductions.hpp"
#include "mtlwb/search.hpp"

namespace mtlwb {

namespace {

using detail::CellLayout;
using detail::Evaluator;
using detail::FiniteAlgebra;
using detail::Program;

// Failures recorded per case; later ones are counted but not kept.
constexpr std::size_t kFailuresPerCase = 3;
// Exhaustive model loops above this many models fall back to sampling.
constexpr std::uint64_t kExhaustiveModels = 20000;
constexpr std::size_t kSampledModels = 200;

struct CaseResult {
  std::uint64_t cases = 1;
  std::vector<SuiteFailure> failures;
  std::uint64_t dropped = 0;

  void fail(SuiteFailure f) {
    if (failures.size() < kFailuresPerCase) {
      failures.push_back(std::move(f));
    } else {
      ++dropped;
    }
  }
};

using Case = std::function<CaseResult()>;

std::vector<CaseResult> run_cases(const std::vector<Case>& cases, unsigned workers) {
  std::vector<CaseResult> out(cases.size());
  auto run_one = [&](std::size_t i) {
    try {
      out[i] = cases[i]();
    } catch (const std::exception& e) {
      out[i] = CaseResult{};
      out[i].fail({"", "", "", "no error", std::string("error: ") + e.what()});
    }
  };
  workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(cases.size())));
  if (workers <= 1) {
    for (std::size_t i = 0; i < cases.size(); ++i) run_one(i);
    return out;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < cases.size(); i = next++) run_one(i);
    });
  }
  for (auto& t : pool) t.join();
  return out;
}

std::vector<Chain> chains_of(const std::vector<std::string>& ids) {
  std::vector<Chain> out;
  for (const auto& id : ids) out.push_back(chain_from_id(id));
  return out;
}

const std::vector<std::string> kTrChains = {"boolean", "lukasiewicz:2", "lukasiewicz:3", "godel:3",
                                            "godel:4", "nm:4", "nm:5", "dp:4"};
const std::vector<std::string> kWnmChains = {"nm:4", "nm:5", "wnm:4,3,1,1,0", "wnm:5,3,3,2,0,0"};
const std::vector<std::string> kLukChains = {"lukasiewicz:2", "lukasiewicz:3"};

std::string text(const Formula& f) { return to_string(f); }

std::string verdict_text(const BoundedVerdict& v) {
  if (v.taut) return "taut-up-to " + std::to_string(v.bound);
  return "refuted at " + std::to_string(v.refuted_at.value_or(0));
}

std::string model_text(const Chain& c, const CellLayout& layout, const std::vector<Index>& cells) {
  return model_to_text(detail::unbind_index_model(c, layout, cells));
}

std::string label_of(const Chain& c, Index i) { return to_string(c.label(i)); }

// Index map induced by a model transformation, read off a one-predicate model
// that lists every carrier element once.
template <class Transform>
std::vector<Index> value_map(const Chain& from, const Chain& to, Transform&& transform) {
  Model m(from.size());
  m.add_predicate("V", 1);
  for (std::size_t i = 0; i < from.size(); ++i) {
    std::size_t t = i + 1;
    m.set("V", std::span<const std::size_t>(&t, 1), from.label(static_cast<Index>(i)));
  }
  Model image = transform(m);
  std::vector<Index> out(from.size());
  for (std::size_t i = 0; i < from.size(); ++i) {
    std::size_t t = i + 1;
    auto idx = to.index_of(image.at("V", std::span<const std::size_t>(&t, 1)));
    if (!idx) throw Error(Errc::invalid_parameter, "transformed value outside the target chain");
    out[i] = *idx;
  }
  return out;
}

// Calls fn on every model of `cells` cells over k values, or on a random sample
// when there are too many.
template <class Fn>
void for_models(std::size_t cells, std::size_t k, std::uint64_t seed, Fn&& fn) {
  std::vector<Index> v(cells, 0);
  if (detail::checked_pow(k, cells) > kExhaustiveModels) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, k - 1);
    for (std::size_t s = 0; s < kSampledModels; ++s) {
      for (auto& x : v) x = static_cast<Index>(pick(rng));
      fn(v);
    }
    return;
  }
  for (;;) {
    fn(v);
    std::size_t i = cells;
    for (;;) {
      if (i == 0) return;
      --i;
      if (++v[i] < k) break;
      v[i] = 0;
    }
  }
}

// Calls fn on every valuation (0-based) of `vars` variables over a domain of n.
template <class Fn>
void for_valuations(std::size_t vars, std::size_t n, Fn&& fn) {
  std::vector<std::size_t> v(vars, 0);
  for (;;) {
    fn(std::span<const std::size_t>(v));
    std::size_t i = vars;
    for (;;) {
      if (i == 0) return;
      --i;
      if (++v[i] < n) break;
      v[i] = 0;
    }
  }
}

std::uint64_t case_seed(std::uint64_t seed, std::size_t i) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(i)};
  std::uint32_t words[2];
  seq.generate(words, words + 2);
  return (static_cast<std::uint64_t>(words[0]) << 32) | words[1];
}

// ---------------------------------------------------------------------------
// residuation

std::vector<Chain> shipped_finite_chains(std::size_t max_size) {
  std::vector<Chain> out;
  out.push_back(make_chain(Family::boolean, 1));
  for (unsigned n = 1; n + 1 <= max_size; ++n) out.push_back(make_chain(Family::lukasiewicz, n));
  for (Family f : {Family::godel, Family::nm, Family::dp}) {
    for (unsigned n = 1; n <= max_size; ++n) out.push_back(make_chain(f, n));
  }
  for (const auto& id : {"wnm:4,3,1,1,0", "wnm:5,3,3,2,0,0", "sum(lukasiewicz:2,godel:2)",
                         "sum(lukasiewicz:1,godel:3)", "sum(lukasiewicz:3,nm:4)"}) {
    Chain c = chain_from_id(id);
    if (c.size() <= max_size) out.push_back(c);
  }
  return out;
}

std::vector<Case> residuation_cases(const SuiteOptions&) {
  std::vector<Case> cases;
  for (const Chain& c : shipped_finite_chains(12)) {
    cases.push_back([c] {
      CaseResult r;
      for (const auto& v : check_chain(c).violations) {
        r.fail({c.id(), "", "", "all laws hold", v.law + " fails: " + v.detail});
      }
      // Adjointness stated directly on indices.
      std::size_t k = c.size();
      for (Index x = 0; x < k; ++x) {
        for (Index y = 0; y < k; ++y) {
          for (Index z = 0; z < k; ++z) {
            bool lhs = c.star(x, y) <= z;
            bool rhs = x <= c.residuum(y, z);
            if (lhs != rhs) {
              r.fail({c.id(), "x*y <= z iff x <= y->z", "",
                       "adjoint at (" + label_of(c, x) + "," + label_of(c, y) + "," + label_of(c, z) + ")",
                       "not adjoint"});
            }
          }
        }
      }
      return r;
    });
  }
  for (Family f : {Family::lukasiewicz, Family::godel, Family::product, Family::nm, Family::dp}) {
    cases.push_back([f] {
      Chain c = Chain::rational_family(f);
      CaseResult r;
      for (const auto& v : check_chain(c).violations) {
        r.fail({c.id(), "", "", "all laws hold", v.law + " fails: " + v.detail});
      }
      std::vector<Rational> grid;
      for (const auto& q : rational_grid(5)) {
        if (c.contains(q)) grid.push_back(q);
      }
      for (const auto& x : grid) {
        for (const auto& y : grid) {
          for (const auto& z : grid) {
            if ((c.star(x, y) <= z) != (x <= c.residuum(y, z))) {
              r.fail({c.id(), "x*y <= z iff x <= y->z", "",
                      "adjoint at (" + to_string(x) + "," + to_string(y) + "," + to_string(z) + ")",
                      "not adjoint"});
            }
          }
        }
      }
      return r;
    });
  }
  return cases;
}

// ---------------------------------------------------------------------------
// lemma-tr: direct first-order value equals the value of the grounding under e_M

CaseResult check_translation(const Chain& c, const Formula& f, std::size_t n, std::uint64_t seed) {
  CaseResult r;
  Formula closed = universal_closure(f);
  CellLayout layout(signature(closed), n);
  Program fo = detail::compile(closed, layout, {});
  GroundedFormula g = ground(closed, n);
  CellLayout glayout(signature(g.formula), 1);
  Program prop = detail::compile(g.formula, glayout, {});
  std::vector<std::size_t> source(glayout.preds.size());
  for (std::size_t i = 0; i < glayout.preds.size(); ++i) {
    const GroundCell& gc = g.legend.at(glayout.preds[i]);
    std::vector<std::size_t> tuple;
    for (std::size_t j : gc.tuple) tuple.push_back(j - 1);
    source[i] = layout.cell(layout.index_of(gc.predicate), tuple);
  }
  FiniteAlgebra alg(c);
  Evaluator<FiniteAlgebra> direct(fo, alg, layout);
  Evaluator<FiniteAlgebra> grounded(prop, alg, glayout);
  std::vector<Index> gcells(glayout.cells);
  for_models(layout.cells, c.size(), seed, [&](const std::vector<Index>& cells) {
    for (std::size_t i = 0; i < source.size(); ++i) gcells[glayout.offset[i]] = cells[source[i]];
    Index a = direct.run(cells.data());
    Index b = grounded.run(gcells.data());
    if (a != b) {
      r.fail({c.id(), text(closed), model_text(c, layout, cells), label_of(c, a), label_of(c, b)});
    }
  });
  return r;
}

struct RandomCase {
  Formula formula;
  std::size_t chain;
  std::size_t n;
  std::uint64_t seed;
};

std::vector<RandomCase> random_cases(const SuiteOptions& o, std::size_t chains, std::size_t max_n) {
  std::mt19937_64 rng(o.seed);
  std::vector<RandomCase> out;
  RandomFormulaOptions fo;
  fo.depth = o.depth;
  for (unsigned t = 0; t < *o.trials; ++t) {
    RandomCase rc;
    rc.formula = random_formula(rng, fo);
    rc.chain = std::uniform_int_distribution<std::size_t>(0, chains - 1)(rng);
    rc.n = std::uniform_int_distribution<std::size_t>(1, max_n)(rng);
    rc.seed = case_seed(o.seed, t);
    out.push_back(rc);
  }
  return out;
}

std::vector<Case> lemma_tr_cases(const SuiteOptions& o) {
  std::vector<Case> cases;
  auto chains = chains_of(kTrChains);
  if (o.trials) {
    for (const auto& rc : random_cases(o, chains.size(), 3)) {
      Chain c = chains[rc.chain];
      cases.push_back([c, rc] { return check_translation(c, rc.formula, rc.n, rc.seed); });
    }
    return cases;
  }
  auto corpus = parse_corpus(fixed_corpus());
  for (const auto& c : chains) {
    for (std::size_t i = 0; i < corpus.size(); ++i) {
      Formula f = corpus[i];
      std::size_t max_n = o.model_size;
      std::uint64_t seed = case_seed(o.seed, i);
      cases.push_back([c, f, max_n, seed] {
        CaseResult total;
        for (std::size_t n = 1; n <= max_n; ++n) {
          CaseResult r = check_translation(c, f, n, seed);
          for (auto& fl : r.failures) total.fail(std::move(fl));
          total.dropped += r.dropped;
        }
        return total;
      });
    }
  }
  return cases;
}

// ---------------------------------------------------------------------------
// lemma-clos: an open formula holds in every model under every valuation
// exactly when its closure does

CaseResult check_closure(const Chain& c, const Formula& f, std::size_t max_n, std::uint64_t seed) {
  CaseResult r;
  Formula closed = universal_closure(f);
  std::vector<std::string> fv = free_variables(f);
  FiniteAlgebra alg(c);
  std::optional<std::size_t> refuted_at;
  for (std::size_t n = 1; n <= max_n; ++n) {
    CellLayout layout(signature(closed), n);
    Program open = detail::compile(f, layout, fv);
    Program shut = detail::compile(closed, layout, {});
    Evaluator<FiniteAlgebra> eo(open, alg, layout);
    Evaluator<FiniteAlgebra> ec(shut, alg, layout);
    bool exhaustive = detail::checked_pow(c.size(), layout.cells) <= kExhaustiveModels;
    for_models(layout.cells, c.size(), seed + n, [&](const std::vector<Index>& cells) {
      Index least = c.top();
      for_valuations(fv.size(), n, [&](std::span<const std::size_t> v) {
        least = std::min(least, eo.run(cells.data(), v));
      });
      Index whole = ec.run(cells.data());
      if (least != whole) {
        r.fail({c.id(), text(f), model_text(c, layout, cells), "closure value " + label_of(c, whole),
                "least instance " + label_of(c, least)});
      }
      if (least != c.top() && !refuted_at) refuted_at = n;
    });
    if (!exhaustive) return r;  // verdicts need the full model space
  }
  BoundedVerdict v = taut_upto_grounded(c, f, max_n);
  bool expect_taut = !refuted_at.has_value();
  if (v.taut != expect_taut || (!v.taut && v.refuted_at != refuted_at)) {
    std::string expected = expect_taut ? "taut-up-to " + std::to_string(max_n)
                                       : "refuted at " + std::to_string(*refuted_at);
    r.fail({c.id(), text(f), "", expected, verdict_text(v)});
  }
  return r;
}

std::vector<Case> lemma_clos_cases(const SuiteOptions& o) {
  std::vector<Case> cases;
  auto chains = chains_of(kTrChains);
  std::size_t max_n = o.model_size;
  if (o.trials) {
    for (const auto& rc : random_cases(o, chains.size(), max_n)) {
      Chain c = chains[rc.chain];
      cases.push_back([c, rc] { return check_closure(c, rc.formula, rc.n, rc.seed); });
    }
    return cases;
  }
  std::vector<Formula> open;
  for (const auto* corpus : {&fixed_corpus(), &classical_corpus()}) {
    for (const auto& f : parse_corpus(*corpus)) {
      if (!is_closed(f)) open.push_back(f);
    }
  }
  for (const auto& c : chains) {
    for (std::size_t i = 0; i < open.size(); ++i) {
      Formula f = open[i];
      std::uint64_t seed = case_seed(o.seed, i);
      cases.push_back([c, f, max_n, seed] { return check_closure(c, f, max_n, seed); });
    }
  }
  return cases;
}

// ---------------------------------------------------------------------------
// lemma-gc / lemma-gc1: the squaring translation on weak-nilpotent-minimum chains

CaseResult check_wnm(const Chain& c, const Formula& f, std::size_t n, std::uint64_t seed, bool part_one) {
  CaseResult r;
  Formula closed = universal_closure(f);
  Formula star = wnm_star(closed);
  GodelFragment frag = godel_fragment(c);
  auto plus = value_map(c, c, [&](const Model& m) { return model_plus(c, m); });
  auto down = value_map(c, frag.chain, [&](const Model& m) { return fragment_model(c, frag, m); });
  NegationProfile prof = negation_profile(c);
  std::vector<bool> positive(c.size(), false);
  for (Index i : prof.a_plus) positive[i] = true;
  positive[0] = true;

  CellLayout layout(signature(closed), n);
  Program p_star = detail::compile(star, layout, {});
  Program p_phi = detail::compile(closed, layout, {});
  FiniteAlgebra alg(c);
  FiniteAlgebra galg(frag.chain);
  Evaluator<FiniteAlgebra> star_a(p_star, alg, layout);
  Evaluator<FiniteAlgebra> star_g(p_star, galg, layout);
  Evaluator<FiniteAlgebra> phi_g(p_phi, galg, layout);
  std::vector<Index> pcells(layout.cells), gcells(layout.cells);
  for_models(layout.cells, c.size(), seed, [&](const std::vector<Index>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      pcells[i] = plus[cells[i]];
      gcells[i] = down[cells[i]];
    }
    Index v1 = star_a.run(cells.data());
    Index v2 = star_a.run(pcells.data());
    if (part_one) {
      if (v1 != v2) {
        r.fail({c.id(), text(star), model_text(c, layout, cells), "value on M+ " + label_of(c, v2),
                "value on M " + label_of(c, v1)});
      }
      if (!positive[v2]) {
        r.fail({c.id(), text(star), model_text(c, layout, cells), "value in A+ or 0",
                label_of(c, v2)});
      }
      return;
    }
    Index v3 = star_g.run(gcells.data());
    Index v4 = phi_g.run(gcells.data());
    if (frag.embedding[v3] != v2) {
      r.fail({c.id(), text(star), model_text(c, layout, cells), "value on M+ " + label_of(c, v2),
              "embedded fragment value " + label_of(c, frag.embedding[v3])});
    }
    if (v3 != v4) {
      r.fail({c.id(), text(closed), model_text(frag.chain, layout, gcells),
              "translated value " + label_of(frag.chain, v3), label_of(frag.chain, v4)});
    }
  });
  return r;
}

std::vector<Case> lemma_gc_cases(const SuiteOptions& o, bool part_one) {
  std::vector<Case> cases;
  auto chains = chains_of(kWnmChains);
  if (o.trials) {
    for (const auto& rc : random_cases(o, chains.size(), 3)) {
      Chain c = chains[rc.chain];
      cases.push_back([c, rc, part_one] { return check_wnm(c, rc.formula, rc.n, rc.seed, part_one); });
    }
    return cases;
  }
  auto corpus = parse_corpus(fixed_corpus());
  for (const auto& c : chains) {
    for (std::size_t i = 0; i < corpus.size(); ++i) {
      Formula f = corpus[i];
      std::size_t max_n = o.model_size;
      std::uint64_t seed = case_seed(o.seed, i);
      cases.push_back([c, f, max_n, seed, part_one] {
        CaseResult total;
        for (std::size_t n = 1; n <= max_n; ++n) {
          CaseResult r = check_wnm(c, f, n, seed, part_one);
          for (auto& fl : r.failures) total.fail(std::move(fl));
          total.dropped += r.dropped;
        }
        return total;
      });
    }
  }
  return cases;
}

// ---------------------------------------------------------------------------
// lemma-pred / lemma-luk1: classical formulas on Lukasiewicz chains

void preorder(const Formula& f, std::vector<Formula>& out) {
  out.push_back(f);
  if (f.is_binary()) {
    preorder(f.left(), out);
    preorder(f.right(), out);
  } else if (f.is_unary() || f.is_quantifier()) {
    preorder(f.left(), out);
  }
}

CaseResult check_predef(const Chain& c, const Formula& f, std::size_t n, std::uint64_t seed, bool collapse) {
  CaseResult r;
  Formula pre = predef(f);
  std::vector<std::string> fv = free_variables(f);
  CellLayout layout(signature(f), n);
  FiniteAlgebra alg(c);
  Program p_pre = detail::compile(pre, layout, fv);
  Program p_phi = detail::compile(f, layout, fv);
  Evaluator<FiniteAlgebra> e_pre(p_pre, alg, layout);
  Evaluator<FiniteAlgebra> e_phi(p_phi, alg, layout);

  NegationProfile prof = negation_profile(c);
  std::vector<bool> positive(c.size(), false);
  for (Index i : prof.a_plus) positive[i] = true;

  std::vector<Formula> subs;
  std::vector<Program> sub_programs;
  std::vector<std::vector<std::string>> sub_vars;
  if (!collapse && prof.fixpoint) {
    preorder(f, subs);
    for (const auto& s : subs) {
      sub_vars.push_back(free_variables(s));
      sub_programs.push_back(detail::compile(s, layout, sub_vars.back()));
    }
  }

  Chain boolean = make_chain(Family::boolean, 1);
  FiniteAlgebra balg(boolean);
  std::vector<Index> to_bool;
  if (collapse) to_bool = value_map(c, boolean, [&](const Model& m) { return boolean_collapse(c, m); });
  Program p_bool = detail::compile(f, layout, fv);
  Evaluator<FiniteAlgebra> e_bool(p_bool, balg, layout);
  std::vector<Index> bcells(layout.cells);

  for_models(layout.cells, c.size(), seed, [&](const std::vector<Index>& cells) {
    // PREDEF is closed, so positivity may not depend on the valuation.
    std::optional<bool> pos;
    bool uniform = true;
    for_valuations(fv.size(), n, [&](std::span<const std::size_t> v) {
      bool p = e_pre.run(cells.data(), v) > 0;
      if (pos && *pos != p) uniform = false;
      pos = p;
    });
    if (!uniform) {
      r.fail({c.id(), text(pre), model_text(c, layout, cells), "same sign under every valuation",
              "sign depends on the valuation"});
      return;
    }
    if (!*pos) return;
    if (collapse) {
      for (std::size_t i = 0; i < cells.size(); ++i) bcells[i] = to_bool[cells[i]];
      for_valuations(fv.size(), n, [&](std::span<const std::size_t> v) {
        Index a = e_phi.run(cells.data(), v);
        bool b = e_bool.run(bcells.data(), v) == boolean.top();
        if (positive[a] != b) {
          r.fail({c.id(), text(f), model_text(c, layout, cells),
                  std::string("value ") + label_of(c, a) + (positive[a] ? " in A+" : " outside A+"),
                  b ? "collapse value 1" : "collapse value 0"});
        }
      });
      return;
    }
    for (std::size_t s = 0; s < subs.size(); ++s) {
      Evaluator<FiniteAlgebra> e(sub_programs[s], alg, layout);
      for_valuations(sub_vars[s].size(), n, [&](std::span<const std::size_t> v) {
        Index x = e.run(cells.data(), v);
        if (x == *prof.fixpoint) {
          r.fail({c.id(), text(subs[s]), model_text(c, layout, cells), "never the negation fixpoint",
                  label_of(c, x)});
        }
      });
    }
  });
  return r;
}

std::vector<Case> lemma_predef_cases(const SuiteOptions& o, bool collapse) {
  std::vector<Case> cases;
  auto chains = chains_of({"lukasiewicz:2", "lukasiewicz:3", "lukasiewicz:4"});
  auto corpus = parse_corpus(classical_corpus());
  for (const auto& c : chains) {
    for (std::size_t i = 0; i < corpus.size(); ++i) {
      Formula f = corpus[i];
      std::size_t max_n = o.model_size;
      std::uint64_t seed = case_seed(o.seed, i);
      cases.push_back([c, f, max_n, seed, collapse] {
        CaseResult total;
        for (std::size_t n = 1; n <= max_n; ++n) {
          CaseResult r = check_predef(c, f, n, seed, collapse);
          for (auto& fl : r.failures) total.fail(std::move(fl));
          total.dropped += r.dropped;
        }
        return total;
      });
    }
  }
  return cases;
}

// ---------------------------------------------------------------------------
// Bounded-verdict comparisons: translated formula on a chain against the
// original formula on a reference chain, size by size.

CaseResult compare_verdicts(const Chain& c, const Formula& translated, const Chain& ref,
                            const Formula& original, std::size_t bound) {
  CaseResult r;
  BoundedVerdict got = taut_upto_direct(c, translated, bound);
  BoundedVerdict want = taut_upto_direct(ref, original, bound);
  if (got.taut != want.taut || got.refuted_at != want.refuted_at) {
    r.fail({c.id(), text(translated), got.model ? model_to_text(*got.model) : "",
            verdict_text(want) + " (as " + text(original) + " on " + ref.id() + ")", verdict_text(got)});
  }
  return r;
}

template <class Translate>
std::vector<Case> reduction_cases(const std::vector<Chain>& chains, const Chain& ref,
                                  const std::vector<Formula>& corpus, std::size_t bound,
                                  Translate translate) {
  std::vector<Case> cases;
  for (const auto& c : chains) {
    for (const auto& f : corpus) {
      cases.push_back([c, ref, f, bound, translate] {
        return compare_verdicts(c, translate(f), ref, f, bound);
      });
    }
  }
  return cases;
}

std::vector<Case> lemma_luk_cases(const SuiteOptions& o) {
  return reduction_cases(chains_of(kLukChains), make_chain(Family::boolean, 1),
                         parse_corpus(classical_corpus()), o.bound,
                         [](const Formula& f) { return luk_star(f); });
}

std::vector<Case> smtl_cases(const SuiteOptions& o) {
  Chain g4 = make_chain(Family::godel, 4);
  std::vector<Case> cases;
  cases.push_back([g4] {
    // The double-negation reduction needs ~x = 0 for every x > 0.
    CaseResult r;
    for (Index x = 1; x < g4.size(); ++x) {
      if (g4.neg(x) != 0) r.fail({g4.id(), "~x", "", "0 for x = " + label_of(g4, x), label_of(g4, g4.neg(x))});
    }
    return r;
  });
  auto more = reduction_cases({g4}, make_chain(Family::boolean, 1), parse_corpus(fixed_corpus()), o.bound,
                              [](const Formula& f) { return double_neg(f); });
  cases.insert(cases.end(), more.begin(), more.end());
  return cases;
}

std::vector<Case> bl_cases(const SuiteOptions& o) {
  Chain l2 = make_chain(Family::lukasiewicz, 2);
  Chain sum = ordinal_sum(l2, make_chain(Family::godel, 2));
  return reduction_cases({sum}, l2, parse_corpus(fixed_corpus()), o.bound,
                         [](const Formula& f) { return double_neg(f); });
}

std::vector<Case> delta_cases(const SuiteOptions& o) {
  std::vector<Chain> chains;
  for (const auto& c : chains_of({"lukasiewicz:2", "lukasiewicz:3", "godel:4"})) chains.push_back(delta_expand(c));
  return reduction_cases(chains, delta_expand(make_chain(Family::boolean, 1)), parse_corpus(fixed_corpus()),
                         o.bound, [](const Formula& f) { return delta_guard(f); });
}

// ---------------------------------------------------------------------------

std::vector<Case> formula_f_cases(const SuiteOptions&) {
  std::vector<Case> cases;
  Formula f = formula_f(Formula::atom("p"));
  for (const Chain& c : shipped_finite_chains(8)) {
    // On the one-element chain 0 = 1 is its own negation yet f holds trivially.
    if (c.size() < 2) continue;
    cases.push_back([c, f] {
      CaseResult r;
      bool expected = !negation_profile(c).fixpoint.has_value();
      bool got = satisfies_identity(delta_expand(c), f);
      if (expected != got) {
        r.fail({c.id(), text(f), "", expected ? "valid (no fixpoint)" : "not valid (fixpoint)",
                got ? "valid" : "not valid"});
      }
      return r;
    });
  }
  return cases;
}

std::vector<Formula> fo_axiom_instances() {
  const std::vector<std::string> phis = {"P(x)", "R(x,z)", "P(x) & P(x)", "P(x) -> P(z)", "~R(x,x)",
                                         "R(x,x) /\\ R(z,x)"};
  const std::vector<std::string> nus = {"Q(z)", "Q(z) & Q(z)", "~Q(z)", "R(z,z)", "P(z) -> P(z)"};
  std::vector<Formula> out;
  for (const auto& ps : phis) {
    Formula phi = parse(ps);
    Formula at_y = substitute(phi, "x", "y");
    out.push_back(Formula::implies(Formula::forall("x", phi), at_y));
    out.push_back(Formula::implies(at_y, Formula::exists("x", phi)));
    for (const auto& ns : nus) {
      Formula nu = parse(ns);
      std::set<std::string> preds;
      for (const auto& p : predicates(phi)) preds.insert(p);
      for (const auto& p : predicates(nu)) preds.insert(p);
      if (preds.size() > 2) continue;
      out.push_back(Formula::implies(Formula::forall("x", Formula::implies(nu, phi)),
                                     Formula::implies(nu, Formula::forall("x", phi))));
      out.push_back(Formula::implies(Formula::forall("x", Formula::implies(phi, nu)),
                                     Formula::implies(Formula::exists("x", phi), nu)));
      out.push_back(Formula::implies(Formula::forall("x", Formula::disj(phi, nu)),
                                     Formula::disj(Formula::forall("x", phi), nu)));
    }
  }
  return out;
}

std::vector<Case> fo_axiom_cases(const SuiteOptions& o) {
  std::vector<Case> cases;
  auto instances = fo_axiom_instances();
  std::size_t bound = o.model_size;
  for (const Chain& c : shipped_finite_chains(5)) {
    for (const auto& f : instances) {
      cases.push_back([c, f, bound] {
        CaseResult r;
        BoundedVerdict v = taut_upto_direct(c, f, bound);
        if (!v.taut) {
          r.fail({c.id(), text(f), v.model ? model_to_text(*v.model) : "", "value 1 in every model",
                  v.value ? to_string(*v.value) : verdict_text(v)});
        }
        return r;
      });
    }
  }
  return cases;
}

std::vector<Case> divisibility_cases(const SuiteOptions&) {
  std::vector<Case> cases;
  for (unsigned n = 1; n <= 12; ++n) {
    cases.push_back([n] {
      CaseResult r;
      Chain c = make_chain(Family::lukasiewicz, n);
      std::vector<std::size_t> want;
      for (unsigned d = 1; d <= n; ++d) {
        if (n % d == 0) want.push_back(d + 1);
      }
      std::vector<std::size_t> got;
      for (const auto& s : subchains(c)) {
        got.push_back(s.size());
        Chain sub = restrict_chain(c, s);
        Chain ref = make_chain(Family::lukasiewicz, static_cast<unsigned>(s.size() - 1));
        if (!isomorphic(sub, ref)) {
          r.fail({c.id(), "", "", "subchain of size " + std::to_string(s.size()) + " is " + ref.id(),
                  "not isomorphic"});
        }
      }
      std::sort(got.begin(), got.end());
      auto join = [](const std::vector<std::size_t>& v) {
        std::string s = "{";
        for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
        return s + "}";
      };
      if (got != want) r.fail({c.id(), "", "", join(want), join(got)});
      return r;
    });
  }
  return cases;
}

std::vector<Case> oracle_cases(const SuiteOptions& o) {
  std::vector<Case> cases;
  auto chains = chains_of(kTrChains);
  auto one = [](const Chain& c, const Formula& f, std::size_t bound) {
    CaseResult r;
    BoundedVerdict g = taut_upto_grounded(c, f, bound);
    BoundedVerdict d = taut_upto_direct(c, f, bound);
    if (g.taut != d.taut || g.refuted_at != d.refuted_at) {
      r.fail({c.id(), text(f), d.model ? model_to_text(*d.model) : "", "grounded: " + verdict_text(g),
              "direct: " + verdict_text(d)});
    }
    return r;
  };
  if (o.trials) {
    for (const auto& rc : random_cases(o, chains.size(), std::min<std::size_t>(o.bound, 2))) {
      Chain c = chains[rc.chain];
      cases.push_back([one, c, rc] { return one(c, rc.formula, rc.n); });
    }
    return cases;
  }
  auto corpus = parse_corpus(fixed_corpus());
  for (const auto& c : chains) {
    for (const auto& f : corpus) {
      std::size_t bound = o.bound;
      cases.push_back([one, c, f, bound] { return one(c, f, bound); });
    }
  }
  return cases;
}

std::vector<Case> thm413_cases(const SuiteOptions& o) {
  Formula psi = parse("(x & x) <-> (x & x & x)", Syntax::prop);
  Chain l2 = make_chain(Family::lukasiewicz, 2);
  Chain l3 = make_chain(Family::lukasiewicz, 3);
  Formula lifted = lift_prop(psi);
  std::size_t bound = o.bound;
  std::vector<Case> cases;
  cases.push_back([=] {
    CaseResult r;
    if (!is_taut_prop(l2, psi).tautology) r.fail({l2.id(), text(psi), "", "tautology", "refuted"});
    return r;
  });
  cases.push_back([=] {
    CaseResult r;
    auto res = is_taut_prop(l3, psi);
    if (res.tautology) r.fail({l3.id(), text(psi), "", "refuted", "tautology"});
    return r;
  });
  cases.push_back([=] {
    CaseResult r;
    BoundedVerdict v = taut_upto_direct(l2, lifted, bound);
    if (!v.taut) r.fail({l2.id(), text(lifted), "", "taut-up-to " + std::to_string(bound), verdict_text(v)});
    return r;
  });
  cases.push_back([=] {
    CaseResult r;
    SearchOptions so;
    so.max_size = bound;
    SearchResult s = find_countermodel(l3, lifted, so);
    if (s.status != SearchStatus::refuted || !s.certificate) {
      r.fail({l3.id(), text(lifted), "", "refuted", std::string(status_name(s.status))});
      return r;
    }
    const Certificate& cert = *s.certificate;
    if (cert.model.domain_size() != 1) {
      r.fail({l3.id(), text(lifted), model_to_text(cert.model), "singleton countermodel",
              "domain size " + std::to_string(cert.model.domain_size())});
    }
    if (!verify_certificate(cert)) {
      r.fail({l3.id(), text(lifted), model_to_text(cert.model), "certificate verifies", "rejected"});
    }
    return r;
  });
  return cases;
}

std::vector<Case> build_cases(std::string_view name, const SuiteOptions& o) {
  if (name == "residuation") return residuation_cases(o);
  if (name == "lemma-tr") return lemma_tr_cases(o);
  if (name == "lemma-clos") return lemma_clos_cases(o);
  if (name == "lemma-gc") return lemma_gc_cases(o, true);
  if (name == "lemma-gc1") return lemma_gc_cases(o, false);
  if (name == "lemma-pred") return lemma_predef_cases(o, false);
  if (name == "lemma-luk1") return lemma_predef_cases(o, true);
  if (name == "lemma-luk") return lemma_luk_cases(o);
  if (name == "thm41-smtl") return smtl_cases(o);
  if (name == "thm41-bl") return bl_cases(o);
  if (name == "thm415-delta") return delta_cases(o);
  if (name == "formula-f") return formula_f_cases(o);
  if (name == "fo-axioms") return fo_axiom_cases(o);
  if (name == "divisibility") return divisibility_cases(o);
  if (name == "oracle-agreement") return oracle_cases(o);
  if (name == "thm413-demo") return thm413_cases(o);
  throw Error(Errc::invalid_parameter, "unknown suite '" + std::string(name) + "'");
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "residuation", "lemma-tr",     "lemma-clos", "lemma-gc",         "lemma-gc1",  "lemma-pred",
      "lemma-luk1",  "lemma-luk",    "thm41-smtl", "thm41-bl",         "thm415-delta", "formula-f",
      "fo-axioms",   "divisibility", "oracle-agreement", "thm413-demo"};
  return names;
}

SuiteReport run_suite(std::string_view name, const SuiteOptions& options) {
  if (options.trials && *options.trials == 0) {
    throw Error(Errc::invalid_parameter, "trials must be positive");
  }
  if (options.bound == 0 || options.model_size == 0) {
    throw Error(Errc::invalid_parameter, "sizes must be positive");
  }
  auto start = std::chrono::steady_clock::now();
  SuiteReport report;
  report.name = std::string(name);
  auto cases = build_cases(name, options);
  for (auto& r : run_cases(cases, options.workers)) {
    report.cases += r.cases;
    for (auto& f : r.failures) report.failures.push_back(std::move(f));
    if (r.dropped > 0) {
      report.failures.push_back({"", "", "", "", std::to_string(r.dropped) + " further failures in this case"});
    }
  }
  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

void write_report(std::ostream& out, const SuiteReport& report, bool machine) {
  std::ostringstream secs;
  secs.setf(std::ios::fixed);
  secs.precision(3);
  secs << report.seconds;
  if (machine) {
    out << "mtlsuite 1\n";
    out << "name " << report.name << "\n";
    out << "cases " << report.cases << "\n";
    out << "failures " << report.failures.size() << "\n";
    out << "seconds " << secs.str() << "\n";
    for (const auto& f : report.failures) {
      out << "failure\n";
      out << "chain " << f.chain << "\n";
      out << "formula " << f.formula << "\n";
      out << "expected " << f.expected << "\n";
      out << "got " << f.got << "\n";
      if (!f.model.empty()) out << "begin-model\n" << f.model << "end-model\n";
    }
    out << "result " << (report.ok() ? "pass" : "fail") << "\n";
    return;
  }
  out << report.name << ": " << report.cases << " cases, " << report.failures.size() << " failures, "
      << secs.str() << " s\n";
  for (const auto& f : report.failures) {
    out << "  failure";
    if (!f.chain.empty()) out << " on " << f.chain;
    out << "\n";
    if (!f.formula.empty()) out << "    formula  " << f.formula << "\n";
    out << "    expected " << f.expected << "\n";
    out << "    got      " << f.got << "\n";
    if (!f.model.empty()) {
      std::istringstream lines(f.model);
      for (std::string line; std::getline(lines, line);) out << "    | " << line << "\n";
    }
  }
  out << (report.ok() ? "PASS" : "FAIL") << "\n";
}

}  // namespace mtlwb
