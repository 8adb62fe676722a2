#ifndef MTLWB_CORPUS_HPP
#define MTLWB_CORPUS_HPP

#include <random>
#include <string>
#include <vector>

#include "mtlwb/formula.hpp"

namespace mtlwb {

/// Fixed delta-free first-order corpus over {P:1, Q:1, R:2}. No formula uses
/// all three predicates, and formulas mixing R with a unary predicate fail
/// already on one-element models, which keeps bounded checks at size 3 small.
const std::vector<std::string>& fixed_corpus();

/// Classical formulas (only /\, \/, ~, forall) over {P, Q} or over {R} alone.
const std::vector<std::string>& classical_corpus();

std::vector<Formula> parse_corpus(const std::vector<std::string>& texts);

struct RandomFormulaOptions {
  unsigned depth = 3;
  bool allow_delta = false;
};

/// Random formula over {P:1, Q:1, R:2} with variables x, y, z. Connectives and
/// quantifiers are drawn uniformly; leaves are atoms or bot.
Formula random_formula(std::mt19937_64& rng, const RandomFormulaOptions& options = {});

/// Random propositional formula over variables p, q, r.
Formula random_prop_formula(std::mt19937_64& rng, unsigned depth, bool allow_delta = false);

}  // namespace mtlwb

#endif  // MTLWB_CORPUS_HPP
