// Internal evaluation machinery. Formulas are compiled once into a flat node
// array with variable slots; models are flat cell arrays laid out predicate by
// predicate (sorted by name), each predicate's tuples in row-major order.
#ifndef MTLWB_SRC_ENGINE_HPP
#define MTLWB_SRC_ENGINE_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "mtlwb/chain.hpp"
#include "mtlwb/error.hpp"
#include "mtlwb/formula.hpp"
#include "mtlwb/semantics.hpp"

namespace mtlwb::detail {

struct FiniteAlgebra {
  using Value = Index;

  explicit FiniteAlgebra(const Chain& c)
      : star_(c.star_table().data()),
        res_(c.residuum_table().data()),
        k_(c.size()),
        top_(c.top()),
        has_delta_(c.has_delta()) {}

  Value bottom() const { return 0; }
  Value top() const { return top_; }
  Value mul(Value a, Value b) const { return star_[a * k_ + b]; }
  Value imp(Value a, Value b) const { return res_[a * k_ + b]; }
  Value delta(Value a) const { return a == top_ ? top_ : Value{0}; }
  bool has_delta() const { return has_delta_; }

 private:
  const Index* star_;
  const Index* res_;
  std::size_t k_;
  Index top_;
  bool has_delta_;
};

struct RationalAlgebra {
  using Value = Rational;

  explicit RationalAlgebra(const Chain& c) : chain_(&c) {}

  Value bottom() const { return Rational(0); }
  Value top() const { return Rational(1); }
  Value mul(const Value& a, const Value& b) const { return chain_->star(a, b); }
  Value imp(const Value& a, const Value& b) const { return chain_->residuum(a, b); }
  Value delta(const Value& a) const { return chain_->delta(a); }
  bool has_delta() const { return chain_->has_delta(); }

 private:
  const Chain* chain_;
};

/// Where each predicate lives in a flat cell array for a fixed domain size.
struct CellLayout {
  std::size_t domain = 1;
  std::vector<std::string> preds;  // sorted
  std::vector<std::size_t> arity;
  std::vector<std::size_t> offset;
  std::size_t cells = 0;

  CellLayout() = default;
  CellLayout(const Signature& sig, std::size_t n);

  std::size_t index_of(const std::string& pred) const;
  /// Flat cell position of pred(tuple), tuple 0-based.
  std::size_t cell(std::size_t pred, std::span<const std::size_t> tuple) const;
  /// Inverse of cell(): predicate index and 0-based tuple.
  std::pair<std::size_t, std::vector<std::size_t>> decode(std::size_t cell) const;
};

std::size_t ipow(std::size_t base, std::size_t exp);

/// base^exp, saturating at UINT64_MAX.
std::uint64_t checked_pow(std::uint64_t base, std::uint64_t exp);

struct Program {
  struct Node {
    Op op;
    int a = -1;
    int b = -1;
    int slot = -1;  // bound variable of a quantifier
    int pred = -1;  // atom: index into layout predicates
    int args_begin = 0;
    int args_count = 0;
  };
  std::vector<Node> nodes;
  std::vector<int> arg_slots;
  int root = -1;
  int slot_count = 0;
  std::vector<std::string> free_vars;  // occupy slots 0..free_vars.size()-1
  bool uses_delta = false;
};

/// Compiles `f` against `layout`. Every predicate of f must appear in the
/// layout with a matching arity (signature_mismatch otherwise). Free variables
/// get the leading slots in `free_order`; unknown free variables raise
/// unbound_variable.
Program compile(const Formula& f, const CellLayout& layout,
                const std::vector<std::string>& free_order);

template <class Alg>
class Evaluator {
 public:
  using Value = typename Alg::Value;

  Evaluator(const Program& program, const Alg& alg, const CellLayout& layout)
      : p_(program), alg_(alg), layout_(layout), env_(program.slot_count, 0) {
    if (p_.uses_delta && !alg_.has_delta()) {
      throw Error(Errc::no_delta, "formula uses delta but the chain has no delta");
    }
  }

  /// free_values are 0-based domain elements for the program's free variables.
  Value run(const Value* cells, std::span<const std::size_t> free_values = {}) {
    cells_ = cells;
    for (std::size_t i = 0; i < free_values.size(); ++i) env_[i] = free_values[i];
    return eval(p_.root);
  }

 private:
  Value eval(int id) {
    const auto& nd = p_.nodes[id];
    switch (nd.op) {
      case Op::atom: {
        std::size_t off = 0;
        for (int i = 0; i < nd.args_count; ++i) {
          off = off * layout_.domain + env_[p_.arg_slots[nd.args_begin + i]];
        }
        return cells_[layout_.offset[nd.pred] + off];
      }
      case Op::bottom:
        return alg_.bottom();
      case Op::and_: {
        Value l = eval(nd.a);
        if (l == alg_.bottom()) return l;
        Value r = eval(nd.b);
        return r < l ? r : l;
      }
      case Op::or_: {
        Value l = eval(nd.a);
        if (l == alg_.top()) return l;
        Value r = eval(nd.b);
        return r < l ? l : r;
      }
      case Op::strong_and: {
        Value l = eval(nd.a);
        return alg_.mul(l, eval(nd.b));
      }
      case Op::implies: {
        Value l = eval(nd.a);
        return alg_.imp(l, eval(nd.b));
      }
      case Op::iff: {
        Value l = eval(nd.a);
        Value r = eval(nd.b);
        Value lr = alg_.imp(l, r);
        Value rl = alg_.imp(r, l);
        return rl < lr ? rl : lr;
      }
      case Op::neg:
        return alg_.imp(eval(nd.a), alg_.bottom());
      case Op::delta:
        return alg_.delta(eval(nd.a));
      case Op::forall: {
        Value acc = alg_.top();
        for (std::size_t d = 0; d < layout_.domain; ++d) {
          env_[nd.slot] = d;
          Value v = eval(nd.a);
          if (v < acc) acc = v;
          if (acc == alg_.bottom()) break;
        }
        return acc;
      }
      case Op::exists: {
        Value acc = alg_.bottom();
        for (std::size_t d = 0; d < layout_.domain; ++d) {
          env_[nd.slot] = d;
          Value v = eval(nd.a);
          if (acc < v) acc = v;
          if (acc == alg_.top()) break;
        }
        return acc;
      }
    }
    return alg_.bottom();
  }

  const Program& p_;
  const Alg& alg_;
  const CellLayout& layout_;
  std::vector<std::size_t> env_;
  const Value* cells_ = nullptr;
};

/// Lexicographic odometer over value positions; the last cell moves fastest.
class Odometer {
 public:
  Odometer(std::size_t cells, std::size_t radix) : digits_(cells, 0), radix_(radix) {}

  /// Positions the odometer at the given rank.
  void seek(std::uint64_t rank);
  /// Advances; returns false after the last state.
  bool next();
  const std::vector<std::uint32_t>& digits() const { return digits_; }

 private:
  std::vector<std::uint32_t> digits_;
  std::size_t radix_;
};

/// Converts a public model onto the layout; throws signature_mismatch when a
/// predicate is missing or has the wrong arity, and invalid_parameter when a
/// cell value is not a carrier element.
std::vector<Index> bind_model(const Chain& c, const Model& m, const CellLayout& layout);
std::vector<Rational> bind_model_rational(const Chain& c, const Model& m, const CellLayout& layout);

Model unbind_index_model(const Chain& c, const CellLayout& layout, std::span<const Index> cells);

Model unbind_model_labels(const CellLayout& layout, const std::vector<Rational>& cells);

}  // namespace mtlwb::detail

#endif  // MTLWB_SRC_ENGINE_HPP
