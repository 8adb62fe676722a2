#include "mtlwb/formula.hpp"

#include <algorithm>
#include <ostream>
#include <set>
#include <sstream>

#include "mtlwb/error.hpp"

namespace mtlwb {

struct Formula::Node {
  Op op;
  std::string name;
  std::vector<std::string> args;
  std::vector<Formula> children;
};

namespace {

bool binary_op(Op op) {
  return op == Op::and_ || op == Op::strong_and || op == Op::implies || op == Op::or_ ||
         op == Op::iff;
}

bool unary_op(Op op) { return op == Op::neg || op == Op::delta; }

bool quantifier_op(Op op) { return op == Op::forall || op == Op::exists; }

}  // namespace

Formula Formula::atom(std::string predicate, std::vector<std::string> args) {
  return Formula(std::make_shared<const Node>(
      Node{Op::atom, std::move(predicate), std::move(args), {}}));
}

Formula Formula::bottom() {
  static const Formula bot(std::make_shared<const Node>(Node{Op::bottom, {}, {}, {}}));
  return bot;
}

Formula::Formula() : node_(bottom().node_) {}

Formula Formula::binary(Op op, Formula l, Formula r) {
  if (!binary_op(op)) throw Error(Errc::invalid_parameter, "not a binary connective");
  return Formula(std::make_shared<const Node>(Node{op, {}, {}, {std::move(l), std::move(r)}}));
}

Formula Formula::unary(Op op, Formula sub) {
  if (!unary_op(op)) throw Error(Errc::invalid_parameter, "not a unary connective");
  return Formula(std::make_shared<const Node>(Node{op, {}, {}, {std::move(sub)}}));
}

Formula Formula::quantifier(Op op, std::string var, Formula body) {
  if (!quantifier_op(op)) throw Error(Errc::invalid_parameter, "not a quantifier");
  return Formula(
      std::make_shared<const Node>(Node{op, std::move(var), {}, {std::move(body)}}));
}

Formula Formula::conj(Formula l, Formula r) { return binary(Op::and_, std::move(l), std::move(r)); }
Formula Formula::strong_conj(Formula l, Formula r) {
  return binary(Op::strong_and, std::move(l), std::move(r));
}
Formula Formula::implies(Formula l, Formula r) {
  return binary(Op::implies, std::move(l), std::move(r));
}
Formula Formula::disj(Formula l, Formula r) { return binary(Op::or_, std::move(l), std::move(r)); }
Formula Formula::iff(Formula l, Formula r) { return binary(Op::iff, std::move(l), std::move(r)); }
Formula Formula::delta(Formula sub) { return unary(Op::delta, std::move(sub)); }
Formula Formula::neg(Formula sub) { return unary(Op::neg, std::move(sub)); }
Formula Formula::forall(std::string var, Formula body) {
  return quantifier(Op::forall, std::move(var), std::move(body));
}
Formula Formula::exists(std::string var, Formula body) {
  return quantifier(Op::exists, std::move(var), std::move(body));
}

Op Formula::op() const { return node_->op; }
const std::string& Formula::name() const { return node_->name; }
const std::vector<std::string>& Formula::args() const { return node_->args; }

const Formula& Formula::left() const {
  if (node_->children.empty()) throw Error(Errc::invalid_parameter, "formula has no operand");
  return node_->children[0];
}

const Formula& Formula::right() const {
  if (node_->children.size() < 2) throw Error(Errc::invalid_parameter, "formula has no right operand");
  return node_->children[1];
}

bool Formula::is_binary() const { return binary_op(op()); }
bool Formula::is_unary() const { return unary_op(op()); }
bool Formula::is_quantifier() const { return quantifier_op(op()); }

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  const auto& x = *a.node_;
  const auto& y = *b.node_;
  return x.op == y.op && x.name == y.name && x.args == y.args && x.children == y.children;
}

// ---------------------------------------------------------------------------

void Signature::add(const std::string& name, std::size_t arity) {
  auto [it, inserted] = arities_.emplace(name, arity);
  if (!inserted && it->second != arity) {
    throw Error(Errc::arity_mismatch, "predicate " + name + " used with arity " +
                                          std::to_string(it->second) + " and " +
                                          std::to_string(arity));
  }
}

std::size_t Signature::arity(const std::string& name) const {
  auto it = arities_.find(name);
  if (it == arities_.end()) throw Error(Errc::signature_mismatch, "unknown predicate " + name);
  return it->second;
}

// ---------------------------------------------------------------------------
// Printing

namespace {

const char* op_text(Op op) {
  switch (op) {
    case Op::and_: return "/\\";
    case Op::strong_and: return "&";
    case Op::implies: return "->";
    case Op::or_: return "\\/";
    case Op::iff: return "<->";
    case Op::neg: return "~";
    case Op::delta: return "!";
    case Op::forall: return "forall";
    case Op::exists: return "exists";
    default: return "";
  }
}

void print(std::ostream& out, const Formula& f) {
  switch (f.op()) {
    case Op::atom:
      out << f.name();
      if (!f.args().empty()) {
        out << '(';
        for (std::size_t i = 0; i < f.args().size(); ++i) {
          if (i) out << ',';
          out << f.args()[i];
        }
        out << ')';
      }
      return;
    case Op::bottom:
      out << "bot";
      return;
    case Op::neg:
    case Op::delta:
      out << op_text(f.op());
      print(out, f.left());
      return;
    case Op::forall:
    case Op::exists:
      out << '(' << op_text(f.op()) << ' ' << f.name() << ". ";
      print(out, f.body());
      out << ')';
      return;
    default:
      out << '(';
      print(out, f.left());
      out << ' ' << op_text(f.op()) << ' ';
      print(out, f.right());
      out << ')';
  }
}

}  // namespace

std::string to_string(const Formula& f) {
  std::ostringstream out;
  print(out, f);
  return out.str();
}

std::ostream& operator<<(std::ostream& out, const Formula& f) {
  print(out, f);
  return out;
}

// ---------------------------------------------------------------------------
// Structural utilities

namespace {

void collect_signature(const Formula& f, Signature& sig) {
  if (f.op() == Op::atom) {
    sig.add(f.name(), f.args().size());
    return;
  }
  if (f.op() == Op::bottom) return;
  collect_signature(f.left(), sig);
  if (f.is_binary()) collect_signature(f.right(), sig);
}

void collect_free(const Formula& f, std::vector<std::string>& bound,
                  std::vector<std::string>& out) {
  switch (f.op()) {
    case Op::atom:
      for (const auto& a : f.args()) {
        if (std::find(bound.begin(), bound.end(), a) == bound.end() &&
            std::find(out.begin(), out.end(), a) == out.end()) {
          out.push_back(a);
        }
      }
      return;
    case Op::bottom:
      return;
    case Op::forall:
    case Op::exists:
      bound.push_back(f.name());
      collect_free(f.body(), bound, out);
      bound.pop_back();
      return;
    default:
      collect_free(f.left(), bound, out);
      if (f.is_binary()) collect_free(f.right(), bound, out);
  }
}

template <class Pred>
bool all_nodes(const Formula& f, Pred&& pred) {
  if (!pred(f)) return false;
  if (f.op() == Op::atom || f.op() == Op::bottom) return true;
  if (!all_nodes(f.left(), pred)) return false;
  return !f.is_binary() || all_nodes(f.right(), pred);
}

}  // namespace

Signature signature(const Formula& f) {
  Signature sig;
  collect_signature(f, sig);
  return sig;
}

Formula desugar(const Formula& f) {
  switch (f.op()) {
    case Op::atom:
    case Op::bottom:
      return f;
    case Op::neg:
      return Formula::implies(desugar(f.left()), Formula::bottom());
    case Op::delta:
      return Formula::delta(desugar(f.left()));
    case Op::forall:
    case Op::exists:
      return Formula::quantifier(f.op(), f.name(), desugar(f.body()));
    case Op::or_: {
      auto a = desugar(f.left());
      auto b = desugar(f.right());
      return Formula::conj(Formula::implies(Formula::implies(a, b), b),
                           Formula::implies(Formula::implies(b, a), a));
    }
    case Op::iff: {
      auto a = desugar(f.left());
      auto b = desugar(f.right());
      return Formula::conj(Formula::implies(a, b), Formula::implies(b, a));
    }
    default:
      return Formula::binary(f.op(), desugar(f.left()), desugar(f.right()));
  }
}

std::vector<std::string> free_variables(const Formula& f) {
  std::vector<std::string> bound, out;
  collect_free(f, bound, out);
  return out;
}

bool is_closed(const Formula& f) { return free_variables(f).empty(); }

Formula universal_closure(const Formula& f) {
  auto vars = free_variables(f);
  Formula out = f;
  for (auto it = vars.rbegin(); it != vars.rend(); ++it) out = Formula::forall(*it, out);
  return out;
}

bool is_classical(const Formula& f) {
  return all_nodes(f, [](const Formula& g) {
    switch (g.op()) {
      case Op::atom:
      case Op::and_:
      case Op::or_:
      case Op::neg:
      case Op::forall:
        return true;
      default:
        return false;
    }
  });
}

bool is_propositional(const Formula& f) {
  return all_nodes(f, [](const Formula& g) {
    if (g.is_quantifier()) return false;
    return g.op() != Op::atom || g.args().empty();
  });
}

bool contains_delta(const Formula& f) {
  return !all_nodes(f, [](const Formula& g) { return g.op() != Op::delta; });
}

std::vector<std::string> predicates(const Formula& f) {
  std::vector<std::string> out;
  all_nodes(f, [&](const Formula& g) {
    if (g.op() == Op::atom && std::find(out.begin(), out.end(), g.name()) == out.end()) {
      out.push_back(g.name());
    }
    return true;
  });
  return out;
}

namespace {

Formula substitute_impl(const Formula& f, const std::string& var, const std::string& term,
                        std::vector<std::string>& bound) {
  switch (f.op()) {
    case Op::atom: {
      auto args = f.args();
      bool changed = false;
      for (auto& a : args) {
        if (a != var) continue;
        if (std::find(bound.begin(), bound.end(), term) != bound.end()) {
          throw Error(Errc::invalid_parameter,
                      term + " is not substitutable for " + var + " in " + to_string(f));
        }
        a = term;
        changed = true;
      }
      return changed ? Formula::atom(f.name(), std::move(args)) : f;
    }
    case Op::bottom:
      return f;
    case Op::forall:
    case Op::exists: {
      if (f.name() == var) return f;
      bound.push_back(f.name());
      auto body = substitute_impl(f.body(), var, term, bound);
      bound.pop_back();
      return Formula::quantifier(f.op(), f.name(), std::move(body));
    }
    case Op::neg:
    case Op::delta:
      return Formula::unary(f.op(), substitute_impl(f.left(), var, term, bound));
    default:
      return Formula::binary(f.op(), substitute_impl(f.left(), var, term, bound),
                             substitute_impl(f.right(), var, term, bound));
  }
}

}  // namespace

Formula substitute(const Formula& f, const std::string& var, const std::string& term) {
  std::vector<std::string> bound;
  return substitute_impl(f, var, term, bound);
}

std::size_t node_count(const Formula& f) {
  std::size_t n = 0;
  all_nodes(f, [&](const Formula&) {
    ++n;
    return true;
  });
  return n;
}

Formula big_conj(const std::vector<Formula>& parts) {
  if (parts.empty()) throw Error(Errc::invalid_parameter, "empty conjunction");
  Formula out = parts.back();
  for (auto it = parts.rbegin() + 1; it != parts.rend(); ++it) out = Formula::conj(*it, out);
  return out;
}

Formula big_disj(const std::vector<Formula>& parts) {
  if (parts.empty()) throw Error(Errc::invalid_parameter, "empty disjunction");
  Formula out = parts.back();
  for (auto it = parts.rbegin() + 1; it != parts.rend(); ++it) out = Formula::disj(*it, out);
  return out;
}

Formula power(const Formula& f, unsigned n) {
  if (n == 0) throw Error(Errc::invalid_parameter, "power needs at least one factor");
  Formula out = f;
  for (unsigned i = 1; i < n; ++i) out = Formula::strong_conj(out, f);
  return out;
}

}  // namespace mtlwb
