#include "mtlwb/corpus.hpp"

#include <array>

namespace mtlwb {

const std::vector<std::string>& fixed_corpus() {
  static const std::vector<std::string> corpus = {
      // unary predicates
      "forall x. P(x) \\/ ~P(x)",
      "forall x. P(x) -> P(x)",
      "(forall x. P(x)) -> exists x. P(x)",
      "(exists x. P(x)) -> forall x. P(x)",
      "forall x. P(x) -> P(x) & P(x)",
      "forall x. ~(P(x) & Q(x)) \\/ ((P(x) /\\ Q(x)) -> (P(x) & Q(x)))",
      "forall x. P(x) \\/ ~(P(x) & P(x))",
      "forall x. ~(~P(x) /\\ P(x))",
      "forall x. (P(x) -> Q(x)) \\/ (Q(x) -> P(x))",
      "(forall x. P(x) -> Q(x)) \\/ (forall x. Q(x) -> P(x))",
      "forall x. (P(x) -> ~P(x)) \\/ ~~P(x)",
      "forall x. (~~P(x) -> P(x)) \\/ ~~P(x)",
      "forall x. ~~P(x) -> P(x)",
      "forall x. (P(x) /\\ Q(x)) -> (P(x) & (P(x) -> Q(x)))",
      "(forall x. P(x) /\\ Q(x)) <-> ((forall x. P(x)) /\\ forall x. Q(x))",
      "(exists x. P(x) \\/ Q(x)) <-> ((exists x. P(x)) \\/ exists x. Q(x))",
      "(forall x. P(x)) \\/ (forall x. ~P(x))",
      "(exists x. P(x) & Q(x)) -> (exists x. P(x)) & (exists x. Q(x))",
      "(forall x. P(x)) & (forall x. Q(x)) -> forall x. P(x) & Q(x)",
      "forall x. forall y. P(x) -> P(y)",
      "exists x. P(x) -> forall y. P(y)",
      "P(x) -> Q(x)",
      "P(x) \\/ ~P(x)",
      "(forall x. P(x)) -> P(y)",
      "P(y) -> exists x. P(x)",
      "exists x. P(x) & ~Q(x)",
      "(exists x. P(x)) /\\ (exists x. ~P(x)) -> exists x. P(x) \\/ Q(x)",
      "~(exists x. P(x)) <-> forall x. ~P(x)",
      "~(forall x. P(x)) <-> exists x. ~P(x)",
      "forall x. P(x) & ~P(x) -> Q(x)",
      "forall x. (P(x) -> Q(x)) -> (~Q(x) -> ~P(x))",
      "forall x. (~Q(x) -> ~P(x)) -> (P(x) -> Q(x))",
      "(forall x. P(x) -> Q(x)) -> ((forall x. P(x)) -> forall x. Q(x))",
      "forall x. P(x) & Q(x) -> P(x) /\\ Q(x)",
      "forall x. (P(x) & P(x)) <-> P(x)",
      "forall x. ((P(x) -> Q(x)) -> Q(x)) -> ((Q(x) -> P(x)) -> P(x))",
      // a binary predicate alone
      "forall x. exists y. R(x,y)",
      "(exists x. forall y. R(x,y)) -> forall y. exists x. R(x,y)",
      "(forall y. exists x. R(x,y)) -> exists x. forall y. R(x,y)",
      "forall x. forall y. R(x,y) \\/ ~R(x,y)",
      "forall x. forall y. R(x,y) -> R(y,x)",
      "(forall x. forall y. R(x,y)) -> forall x. R(x,x)",
      "R(x,y) -> R(x,y) & R(x,y)",
      "(forall x. forall y. R(x,y)) <-> (forall y. forall x. R(x,y))",
      "(exists x. exists y. R(x,y)) <-> (exists y. exists x. R(x,y))",
      "forall x. R(x,x) -> exists y. R(x,y)",
      "(forall x. forall y. forall z. R(x,y) & R(y,z) -> R(x,z)) -> forall x. R(x,x)",
      // mixed, all refuted on one-element models
      "forall x. P(x) -> exists y. R(x,y)",
      "(forall x. forall y. R(x,y)) /\\ exists x. Q(x)",
      "forall x. (exists y. R(x,y)) -> P(x)",
  };
  return corpus;
}

const std::vector<std::string>& classical_corpus() {
  static const std::vector<std::string> corpus = {
      "forall x. P(x) \\/ ~P(x)",
      "forall x. ~(P(x) /\\ ~P(x))",
      "(forall x. P(x)) \\/ ~(forall x. P(x))",
      "forall x. P(x) \\/ ~Q(x)",
      "~(forall x. P(x)) \\/ P(y)",
      "(forall x. P(x) /\\ Q(x)) \\/ ~(forall x. P(x))",
      "~(forall x. P(x) /\\ Q(x)) \\/ forall x. P(x)",
      "forall x. ~~P(x) \\/ ~P(x)",
      "(forall x. P(x)) \\/ (forall x. ~P(x))",
      "~P(x) \\/ P(x)",
      "forall x. forall y. R(x,y) \\/ ~R(x,y)",
      "~(forall x. forall y. R(x,y)) \\/ forall x. R(x,x)",
      "forall x. R(x,x) \\/ ~R(x,x)",
      "~(forall x. forall y. R(x,y)) \\/ forall y. forall x. R(x,y)",
      "forall x. forall y. R(x,y) \\/ ~R(y,x)",
      "(forall x. ~R(x,x)) \\/ ~(forall x. forall y. R(x,y))",
      "forall x. P(x) /\\ ~P(x)",
      "~(forall x. P(x) /\\ ~P(x))",
      "forall x. (P(x) \\/ Q(x)) \\/ (~P(x) /\\ ~Q(x))",
      "~(forall x. P(x)) \\/ ~(forall x. ~P(x))",
      "(forall x. P(x) \\/ Q(x)) \\/ ~(forall x. Q(x) \\/ P(x))",
      "~(forall x. P(x) \\/ Q(x)) \\/ (forall x. P(x)) \\/ ~(forall x. ~Q(x))",
      "forall x. P(x) \\/ Q(x)",
      "forall x. ~P(x) \\/ ~Q(x) \\/ (P(x) /\\ Q(x))",
      "~(forall x. ~R(x,x)) \\/ ~(forall x. forall y. R(x,y))",
      "forall x. forall y. ~R(x,y) \\/ R(x,y) \\/ R(y,x)",
      "forall x. forall y. R(x,y) \\/ R(y,x)",
      "~(forall x. forall y. R(x,y) \\/ R(y,x)) \\/ forall x. R(x,x)",
      "forall x. forall y. ~R(x,y) \\/ ~R(y,x)",
      "forall x. ~P(x) \\/ ~~P(x)",
  };
  return corpus;
}

std::vector<Formula> parse_corpus(const std::vector<std::string>& texts) {
  std::vector<Formula> out;
  out.reserve(texts.size());
  for (const auto& t : texts) out.push_back(parse(t));
  return out;
}

namespace {

constexpr std::array<const char*, 3> kVars = {"x", "y", "z"};

template <class T>
const T& pick(std::mt19937_64& rng, const std::vector<T>& items) {
  return items[std::uniform_int_distribution<std::size_t>(0, items.size() - 1)(rng)];
}

const char* pick_var(std::mt19937_64& rng) {
  return kVars[std::uniform_int_distribution<std::size_t>(0, kVars.size() - 1)(rng)];
}

Formula random_leaf(std::mt19937_64& rng) {
  switch (std::uniform_int_distribution<int>(0, 6)(rng)) {
    case 0: return Formula::bottom();
    case 1:
    case 2: return Formula::atom("P", {pick_var(rng)});
    case 3:
    case 4: return Formula::atom("Q", {pick_var(rng)});
    default: return Formula::atom("R", {pick_var(rng), pick_var(rng)});
  }
}

Formula random_prop_leaf(std::mt19937_64& rng) {
  static const std::vector<std::string> names = {"p", "q", "r"};
  if (std::uniform_int_distribution<int>(0, 6)(rng) == 0) return Formula::bottom();
  return Formula::atom(pick(rng, names));
}

template <class Leaf>
Formula grow(std::mt19937_64& rng, unsigned depth, bool allow_delta, bool quantifiers, Leaf&& leaf) {
  if (depth == 0) return leaf(rng);
  std::vector<Op> ops = {Op::and_, Op::strong_and, Op::implies, Op::or_, Op::iff, Op::neg};
  if (allow_delta) ops.push_back(Op::delta);
  if (quantifiers) {
    ops.push_back(Op::forall);
    ops.push_back(Op::exists);
  }
  // One slot in eight stops early so trees vary in shape.
  if (std::uniform_int_distribution<int>(0, 7)(rng) == 0) return leaf(rng);
  Op op = pick(rng, ops);
  switch (op) {
    case Op::neg:
    case Op::delta:
      return Formula::unary(op, grow(rng, depth - 1, allow_delta, quantifiers, leaf));
    case Op::forall:
    case Op::exists: {
      std::string var = pick_var(rng);
      return Formula::quantifier(op, var, grow(rng, depth - 1, allow_delta, quantifiers, leaf));
    }
    default: {
      Formula l = grow(rng, depth - 1, allow_delta, quantifiers, leaf);
      return Formula::binary(op, l, grow(rng, depth - 1, allow_delta, quantifiers, leaf));
    }
  }
}

}  // namespace

Formula random_formula(std::mt19937_64& rng, const RandomFormulaOptions& options) {
  return grow(rng, options.depth, options.allow_delta, true, random_leaf);
}

Formula random_prop_formula(std::mt19937_64& rng, unsigned depth, bool allow_delta) {
  return grow(rng, depth, allow_delta, false, random_prop_leaf);
}

}  // namespace mtlwb
