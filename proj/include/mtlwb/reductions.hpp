#ifndef MTLWB_REDUCTIONS_HPP
#define MTLWB_REDUCTIONS_HPP

#include <vector>

#include "mtlwb/chain.hpp"
#include "mtlwb/formula.hpp"
#include "mtlwb/semantics.hpp"

namespace mtlwb {

/// True iff c satisfies the wnm schema (so its operations follow the weak negation).
bool is_wnm_chain(const Chain& c);
/// True iff c satisfies inv and div. Involution alone admits chains such as nm(4).
bool is_mv_chain(const Chain& c);

/// Squaring translation: derived connectives are desugared first, then atoms
/// become a&a and implications (l->r)&(l->r); /\, &, bot and quantifiers are
/// kept. Errors: delta_present.
Formula wnm_star(const Formula& f);

/// Zeroes every cell whose value lies outside A+. Errors: not_wnm.
Model model_plus(const Chain& c, const Model& m);

/// The Gödel chain on A+ together with bottom, relabeled to godel(k).
struct GodelFragment {
  Chain chain;
  /// embedding[i] is the index in the original chain of fragment element i.
  std::vector<Index> embedding;
};

/// Errors: not_wnm.
GodelFragment godel_fragment(const Chain& c);

/// M': model_plus(c, m) read through the inverse of the embedding, so that its
/// values are labels of fragment.chain.
Model fragment_model(const Chain& c, const GodelFragment& fragment, const Model& m);

/// Conjunction (right associated, /\) of forall x1..xs. ~(P(x1..xs) <-> ~P(x1..xs))
/// over the predicates of f in first-occurrence order. Errors: not_classical.
Formula predef(const Formula& f);

/// ~PREDEF(f) \/ (~f -> f). Errors: not_classical.
Formula luk_star(const Formula& f);

/// Boolean model with value 1 exactly where the cell lies in A+.
/// Errors: not_an_mv_chain.
Model boolean_collapse(const Chain& c, const Model& m);

/// Atoms a become ~~a. Errors: delta_present.
Formula double_neg(const Formula& f);

/// Atoms a become !a.
Formula delta_guard(const Formula& f);

/// !(phi <-> ~phi) -> phi; valid on a delta chain iff it has no negation fixpoint.
Formula formula_f(const Formula& phi);

}  // namespace mtlwb

#endif  // MTLWB_REDUCTIONS_HPP
