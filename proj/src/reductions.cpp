#include "mtlwb/reductions.hpp"

#include <algorithm>

#include "mtlwb/error.hpp"

namespace mtlwb {

bool is_wnm_chain(const Chain& c) { return satisfies_identity(c, identity("wnm")); }

bool is_mv_chain(const Chain& c) {
  return satisfies_identity(c, identity("inv")) && satisfies_identity(c, identity("div"));
}

namespace {

Formula square(const Formula& f) { return Formula::strong_conj(f, f); }

Formula star_translate(const Formula& f) {
  switch (f.op()) {
    case Op::atom:
      return square(f);
    case Op::bottom:
      return f;
    case Op::implies:
      return square(Formula::implies(star_translate(f.left()), star_translate(f.right())));
    case Op::forall:
    case Op::exists:
      return Formula::quantifier(f.op(), f.name(), star_translate(f.body()));
    case Op::and_:
    case Op::strong_and:
      return Formula::binary(f.op(), star_translate(f.left()), star_translate(f.right()));
    default:
      // desugar() leaves no other connective behind.
      throw Error(Errc::invalid_parameter, "unexpected connective in " + to_string(f));
  }
}

void require_delta_free(const Formula& f, const char* pass) {
  if (contains_delta(f)) {
    throw Error(Errc::delta_present, std::string(pass) + " is undefined on formulas with delta");
  }
}

void require_classical(const Formula& f) {
  if (!is_classical(f)) {
    throw Error(Errc::not_classical, "formula is not classical (only /\\, \\/, ~, forall allowed): " +
                                         to_string(f));
  }
}

void require_wnm(const Chain& c) {
  if (!is_wnm_chain(c)) throw Error(Errc::not_wnm, c.id() + " does not satisfy the wnm schema");
}

// Applies fn to every cell value (as a carrier index) of m.
template <class Fn>
Model map_cells(const Chain& c, const Model& m, Fn&& fn) {
  Model out(m.domain_size());
  for (const auto& [name, t] : m.tables()) {
    out.add_predicate(name, t.arity);
    auto& vals = out.table(name).values;
    for (std::size_t i = 0; i < t.values.size(); ++i) {
      auto idx = c.index_of(t.values[i]);
      if (!idx) {
        throw Error(Errc::invalid_parameter, to_string(t.values[i]) + " is not an element of " + c.id());
      }
      vals[i] = fn(*idx);
    }
  }
  return out;
}

}  // namespace

Formula wnm_star(const Formula& f) {
  require_delta_free(f, "the wnm star translation");
  return star_translate(desugar(f));
}

Model model_plus(const Chain& c, const Model& m) {
  require_wnm(c);
  auto profile = negation_profile(c);
  return map_cells(c, m, [&](Index i) {
    bool plus = std::binary_search(profile.a_plus.begin(), profile.a_plus.end(), i);
    return plus ? c.label(i) : Rational(0);
  });
}

GodelFragment godel_fragment(const Chain& c) {
  require_wnm(c);
  auto profile = negation_profile(c);
  std::vector<Index> embedding{0};
  embedding.insert(embedding.end(), profile.a_plus.begin(), profile.a_plus.end());
  Chain g = embedding.size() == 2 ? make_chain(Family::boolean, 1)
                                  : make_chain(Family::godel, static_cast<unsigned>(embedding.size()));
  if (c.has_delta()) g = delta_expand(g);
  return GodelFragment{std::move(g), std::move(embedding)};
}

Model fragment_model(const Chain& c, const GodelFragment& fragment, const Model& m) {
  Model plus = model_plus(c, m);
  return map_cells(c, plus, [&](Index i) {
    auto it = std::find(fragment.embedding.begin(), fragment.embedding.end(), i);
    // model_plus only leaves values in A+ or 0, all of which are in the image.
    return fragment.chain.label(static_cast<Index>(it - fragment.embedding.begin()));
  });
}

Formula predef(const Formula& f) {
  require_classical(f);
  const Signature sig = signature(f);
  std::vector<Formula> parts;
  for (const auto& pred : predicates(f)) {
    std::vector<std::string> vars;
    for (std::size_t i = 1; i <= sig.arity(pred); ++i) vars.push_back("x" + std::to_string(i));
    Formula a = Formula::atom(pred, vars);
    Formula body = Formula::neg(Formula::iff(a, Formula::neg(a)));
    for (auto it = vars.rbegin(); it != vars.rend(); ++it) body = Formula::forall(*it, body);
    parts.push_back(body);
  }
  return big_conj(parts);
}

Formula luk_star(const Formula& f) {
  Formula pre = predef(f);
  return Formula::disj(Formula::neg(pre), Formula::implies(Formula::neg(f), f));
}

Model boolean_collapse(const Chain& c, const Model& m) {
  if (!is_mv_chain(c)) throw Error(Errc::not_an_mv_chain, c.id() + " is not an MV-chain (fails inv or div)");
  auto profile = negation_profile(c);
  return map_cells(c, m, [&](Index i) {
    return std::binary_search(profile.a_plus.begin(), profile.a_plus.end(), i) ? Rational(1)
                                                                               : Rational(0);
  });
}

Formula double_neg(const Formula& f) {
  require_delta_free(f, "the double negation translation");
  return map_atoms(f, [](const Formula& a) { return Formula::neg(Formula::neg(a)); });
}

Formula delta_guard(const Formula& f) {
  return map_atoms(f, [](const Formula& a) { return Formula::delta(a); });
}

Formula formula_f(const Formula& phi) {
  return Formula::implies(Formula::delta(Formula::iff(phi, Formula::neg(phi))), phi);
}

}  // namespace mtlwb
