#ifndef MTLWB_SEMANTICS_HPP
#define MTLWB_SEMANTICS_HPP

#include <cstdint>
#include <iosfwd>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mtlwb/chain.hpp"
#include "mtlwb/formula.hpp"
#include "mtlwb/rational.hpp"

namespace mtlwb {

/// Propositional variable -> truth value.
using Assignment = std::map<std::string, Rational>;
/// Individual variable -> domain element (1-based).
using Valuation = std::map<std::string, std::size_t>;

struct PredicateTable {
  std::size_t arity = 0;
  /// n^arity cells; tuple (j1..js) (1-based) sits at sum (j_i - 1) * n^(s-i).
  std::vector<Rational> values;

  friend bool operator==(const PredicateTable&, const PredicateTable&) = default;
};

/// A finite structure: domain {1..n} and one table of truth values per predicate.
class Model {
 public:
  explicit Model(std::size_t domain_size);

  std::size_t domain_size() const noexcept { return n_; }
  const std::map<std::string, PredicateTable>& tables() const noexcept { return tables_; }
  Signature signature() const;

  /// Adds a table filled with `fill`; replaces any previous table of that name.
  void add_predicate(const std::string& name, std::size_t arity, const Rational& fill = Rational(0));
  /// tuple is 1-based.
  const Rational& at(const std::string& pred, std::span<const std::size_t> tuple) const;
  void set(const std::string& pred, std::span<const std::size_t> tuple, Rational value);
  /// Direct access by flat position.
  PredicateTable& table(const std::string& pred);
  const PredicateTable& table(const std::string& pred) const;

  friend bool operator==(const Model&, const Model&) = default;

 private:
  std::size_t offset(const PredicateTable& t, std::span<const std::size_t> tuple) const;

  std::size_t n_;
  std::map<std::string, PredicateTable> tables_;
};

/// Homomorphic evaluation. Derived connectives are evaluated through the
/// lattice and residuum, which agrees with their desugaring on chains.
/// Errors: missing_variable, no_delta, invalid_parameter (value not in carrier).
Rational eval_prop(const Chain& c, const Assignment& a, const Formula& f);

/// Truth value of f in m under v; quantifiers are min/max over the domain.
/// Errors: signature_mismatch, unbound_variable, no_delta.
Rational eval_fo(const Chain& c, const Model& m, const Valuation& v, const Formula& f);

struct PropTautologyResult {
  bool tautology = false;
  /// Lexicographically first failing assignment (variables in name order).
  std::optional<Assignment> witness;
  std::optional<Rational> value;
};

/// Exhaustive check over all k^|vars| assignments of a finite chain.
/// Errors: unsupported for rational families, enumeration_cap.
PropTautologyResult is_taut_prop(const Chain& c, const Formula& f);

/// Upper bound on enumeration sizes; reads MTLWB_ENUM_CAP when set.
std::uint64_t enumeration_cap();

/// Every model over `sig` with domain size n and cells drawn from `values`.
/// Order: cells listed by predicate name, then tuple in lexicographic order;
/// models are ordered lexicographically by the positions (in `values`) of
/// their cell values, the last cell changing fastest.
class ModelEnumerator {
 public:
  ModelEnumerator(const Signature& sig, std::size_t n, std::vector<Rational> values,
                  std::uint64_t cap = enumeration_cap());
  ~ModelEnumerator();
  ModelEnumerator(ModelEnumerator&&) noexcept;
  ModelEnumerator& operator=(ModelEnumerator&&) noexcept;

  std::uint64_t count() const noexcept;
  /// Produces the next model or nothing when exhausted.
  std::optional<Model> next();

 private:
  struct State;
  std::unique_ptr<State> state_;
};

ModelEnumerator enumerate_models(const Signature& sig, std::size_t n, std::vector<Rational> values,
                                 std::uint64_t cap = enumeration_cap());

/// Carrier labels of a finite chain as a value set.
std::vector<Rational> carrier_values(const Chain& c);

/// Values taken by one subformula occurrence over all valuations of its free variables.
struct SubformulaValues {
  Formula subformula;
  std::vector<Rational> values;
};

/// Instrumented evaluation: every subformula occurrence of f (pre-order) with
/// the set of values it takes in m.
std::vector<SubformulaValues> subformula_values(const Chain& c, const Model& m, const Formula& f);

// File format `mtlmodel 1`.
void write_model(std::ostream& out, const Model& m);
std::string model_to_text(const Model& m);
Model read_model(std::istream& in);

}  // namespace mtlwb

#endif  // MTLWB_SEMANTICS_HPP
