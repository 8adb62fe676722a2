#ifndef MTLWB_FORMULA_HPP
#define MTLWB_FORMULA_HPP

#include <cstddef>
#include <iosfwd>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace mtlwb {

/// Connectives. `neg`, `or_` and `iff` are derived but kept as nodes; see desugar().
enum class Op {
  atom,
  bottom,
  and_,        // lattice meet
  strong_and,  // monoidal conjunction &
  implies,
  delta,
  neg,
  or_,
  iff,
  forall,
  exists,
};

/// Immutable formula tree shared by the propositional and first-order layers.
/// A propositional variable is an atom of arity zero; a propositional formula
/// is one without quantifiers and without arguments on its atoms.
class Formula {
 public:
  /// A default-constructed formula is bot.
  Formula();

  static Formula atom(std::string predicate, std::vector<std::string> args = {});
  static Formula bottom();
  static Formula conj(Formula l, Formula r);
  static Formula strong_conj(Formula l, Formula r);
  static Formula implies(Formula l, Formula r);
  static Formula delta(Formula sub);
  static Formula neg(Formula sub);
  static Formula disj(Formula l, Formula r);
  static Formula iff(Formula l, Formula r);
  static Formula forall(std::string var, Formula body);
  static Formula exists(std::string var, Formula body);
  static Formula binary(Op op, Formula l, Formula r);
  static Formula unary(Op op, Formula sub);
  static Formula quantifier(Op op, std::string var, Formula body);

  Op op() const;
  /// Predicate name of an atom, bound variable of a quantifier, empty otherwise.
  const std::string& name() const;
  const std::vector<std::string>& args() const;
  /// Left operand, the operand of a unary node, or the body of a quantifier.
  const Formula& left() const;
  const Formula& right() const;
  const Formula& body() const { return left(); }

  bool is_binary() const;
  bool is_unary() const;
  bool is_quantifier() const;

  friend bool operator==(const Formula& a, const Formula& b);

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

/// Predicate name -> arity.
class Signature {
 public:
  /// Throws arity_mismatch when `name` is already present with another arity.
  void add(const std::string& name, std::size_t arity);
  bool contains(const std::string& name) const { return arities_.count(name) != 0; }
  std::size_t arity(const std::string& name) const;
  const std::map<std::string, std::size_t>& entries() const { return arities_; }
  std::size_t size() const { return arities_.size(); }
  bool empty() const { return arities_.empty(); }
  friend bool operator==(const Signature&, const Signature&) = default;

 private:
  std::map<std::string, std::size_t> arities_;
};

enum class Syntax { prop, fo };

/// Grammar, loosest to tightest binding:
///   forall v. / exists v.   (scope extends as far right as possible)
///   <->  (right associative)
///   ->   (right associative)
///   \/   /\   &   (left associative)
///   ~ !  (prefix), atoms, bot, parentheses
/// In prop mode atoms take no arguments and quantifiers are rejected.
/// Errors: syntax_error with line:column, arity_mismatch.
Formula parse(std::string_view text, Syntax syntax = Syntax::fo);

/// Fully parenthesised canonical text; parse(to_string(f)) == f.
std::string to_string(const Formula& f);
std::ostream& operator<<(std::ostream& out, const Formula& f);

/// Arities of all atoms. Throws arity_mismatch on inconsistent use.
Signature signature(const Formula& f);

/// Rewrites ~a, a\/b, a<->b into the primitive connectives; idempotent.
Formula desugar(const Formula& f);

/// Free individual variables in order of first occurrence.
std::vector<std::string> free_variables(const Formula& f);
bool is_closed(const Formula& f);

/// Prefixes forall over the free variables (first occurrence outermost).
Formula universal_closure(const Formula& f);

/// Only atoms, /\, \/, ~ and forall.
bool is_classical(const Formula& f);
/// No quantifiers and no atom arguments.
bool is_propositional(const Formula& f);
bool contains_delta(const Formula& f);

/// Predicate names in order of first occurrence.
std::vector<std::string> predicates(const Formula& f);

/// Replaces free occurrences of `var` by `term`. Throws invalid_parameter when
/// `term` would be captured by a quantifier.
Formula substitute(const Formula& f, const std::string& var, const std::string& term);

/// Replaces every atom by fn(atom).
template <class Fn>
Formula map_atoms(const Formula& f, Fn&& fn) {
  switch (f.op()) {
    case Op::atom:
      return fn(f);
    case Op::bottom:
      return f;
    case Op::delta:
    case Op::neg:
      return Formula::unary(f.op(), map_atoms(f.left(), fn));
    case Op::forall:
    case Op::exists:
      return Formula::quantifier(f.op(), f.name(), map_atoms(f.body(), fn));
    default:
      return Formula::binary(f.op(), map_atoms(f.left(), fn), map_atoms(f.right(), fn));
  }
}

std::size_t node_count(const Formula& f);

/// Conjunction / disjunction of a non-empty list, associated to the right.
Formula big_conj(const std::vector<Formula>& parts);
Formula big_disj(const std::vector<Formula>& parts);

/// f & f & ... & f (n >= 1 copies, left associated as the parser reads `f & f & f`).
Formula power(const Formula& f, unsigned n);

}  // namespace mtlwb

#endif  // MTLWB_FORMULA_HPP
