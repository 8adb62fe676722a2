#ifndef MTLWB_GROUNDING_HPP
#define MTLWB_GROUNDING_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mtlwb/chain.hpp"
#include "mtlwb/formula.hpp"
#include "mtlwb/semantics.hpp"

namespace mtlwb {

/// The model cell a propositional variable stands for. Tuple is 1-based.
struct GroundCell {
  std::string predicate;
  std::vector<std::size_t> tuple;
  friend bool operator==(const GroundCell&, const GroundCell&) = default;
};

/// Propositional coding of a closed first-order formula over a size-n domain.
struct GroundedFormula {
  Formula formula;
  std::size_t domain_size = 0;
  /// Every variable occurring in `formula`, keyed by name.
  std::map<std::string, GroundCell> legend;
};

/// `p_<pred>_<j1>_..._<js>`, or `p_<pred>` for arity 0.
std::string ground_variable_name(const std::string& predicate, const std::vector<std::size_t>& tuple);

/// Quantifiers become right-associated meets/joins over i = 1..n.
/// Errors: non_closed, invalid_parameter (n < 1 or two cells sharing a name).
GroundedFormula ground(const Formula& closed, std::size_t n);

/// e_M: one variable per model cell, valued as the cell.
Assignment induced_assignment(const Model& m);

/// Rebuilds a model over `sig` from an assignment to grounded variables;
/// cells the formula never mentions are set to 0.
Model model_from_assignment(const GroundedFormula& g, const Signature& sig, const Assignment& a);

/// Outcome of a bounded tautology check over domain sizes 1..bound.
struct BoundedVerdict {
  bool taut = false;
  std::size_t bound = 0;
  Formula checked;           // the closed formula actually tested
  bool closed_automatically = false;
  std::optional<std::size_t> refuted_at;
  std::optional<Model> model;            // countermodel at size refuted_at
  std::optional<Assignment> assignment;  // grounded witness (grounded checker only)
  std::optional<Rational> value;
};

/// For n = 1..N: is the grounding of the closure a tautology of c?
BoundedVerdict taut_upto_grounded(const Chain& c, const Formula& f, std::size_t bound);

}  // namespace mtlwb

#endif  // MTLWB_GROUNDING_HPP
