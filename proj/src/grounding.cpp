#include "mtlwb/grounding.hpp"

#include <algorithm>

#include "mtlwb/error.hpp"

namespace mtlwb {

std::string ground_variable_name(const std::string& predicate, const std::vector<std::size_t>& tuple) {
  std::string out = "p_" + predicate;
  for (std::size_t j : tuple) out += "_" + std::to_string(j);
  return out;
}

namespace {

struct Grounder {
  std::size_t n;
  std::map<std::string, GroundCell>& legend;
  std::vector<std::pair<std::string, std::size_t>> env;  // innermost last

  std::size_t value_of(const std::string& var) const {
    for (auto it = env.rbegin(); it != env.rend(); ++it) {
      if (it->first == var) return it->second;
    }
    throw Error(Errc::non_closed, "variable " + var + " is free");
  }

  Formula run(const Formula& f) {
    switch (f.op()) {
      case Op::atom: {
        GroundCell cell{f.name(), {}};
        for (const auto& a : f.args()) cell.tuple.push_back(value_of(a));
        std::string name = ground_variable_name(cell.predicate, cell.tuple);
        auto [it, inserted] = legend.emplace(name, cell);
        if (!inserted && it->second != cell) {
          throw Error(Errc::invalid_parameter, "grounded name " + name + " is ambiguous");
        }
        return Formula::atom(name);
      }
      case Op::bottom:
        return f;
      case Op::forall:
      case Op::exists: {
        std::vector<Formula> parts;
        for (std::size_t i = 1; i <= n; ++i) {
          env.emplace_back(f.name(), i);
          parts.push_back(run(f.body()));
          env.pop_back();
        }
        return f.op() == Op::forall ? big_conj(parts) : big_disj(parts);
      }
      case Op::neg:
      case Op::delta:
        return Formula::unary(f.op(), run(f.left()));
      default: {
        Formula l = run(f.left());
        return Formula::binary(f.op(), l, run(f.right()));
      }
    }
  }
};

}  // namespace

GroundedFormula ground(const Formula& closed, std::size_t n) {
  if (n < 1) throw Error(Errc::invalid_parameter, "domain size must be at least 1");
  if (!is_closed(closed)) {
    throw Error(Errc::non_closed, "cannot ground a formula with free variables: " + to_string(closed));
  }
  GroundedFormula g{closed, n, {}};
  Grounder gr{n, g.legend, {}};
  g.formula = gr.run(closed);
  return g;
}

Assignment induced_assignment(const Model& m) {
  Assignment a;
  const std::size_t n = m.domain_size();
  for (const auto& [name, t] : m.tables()) {
    std::vector<std::size_t> tuple(t.arity, 1);
    for (std::size_t i = 0; i < t.values.size(); ++i) {
      std::size_t rel = i;
      for (std::size_t j = t.arity; j-- > 0;) {
        tuple[j] = rel % n + 1;
        rel /= n;
      }
      a[ground_variable_name(name, tuple)] = t.values[i];
    }
  }
  return a;
}

Model model_from_assignment(const GroundedFormula& g, const Signature& sig, const Assignment& a) {
  Model m(g.domain_size);
  for (const auto& [name, arity] : sig.entries()) m.add_predicate(name, arity);
  for (const auto& [var, cell] : g.legend) {
    auto it = a.find(var);
    if (it == a.end()) throw Error(Errc::missing_variable, "no value for variable " + var);
    m.set(cell.predicate, cell.tuple, it->second);
  }
  return m;
}

BoundedVerdict taut_upto_grounded(const Chain& c, const Formula& f, std::size_t bound) {
  if (bound < 1) throw Error(Errc::invalid_parameter, "bound must be at least 1");
  BoundedVerdict v;
  v.bound = bound;
  v.checked = universal_closure(f);
  v.closed_automatically = !is_closed(f);
  const Signature sig = signature(v.checked);
  for (std::size_t n = 1; n <= bound; ++n) {
    GroundedFormula g = ground(v.checked, n);
    PropTautologyResult r = is_taut_prop(c, g.formula);
    if (!r.tautology) {
      v.refuted_at = n;
      v.model = model_from_assignment(g, sig, *r.witness);
      v.assignment = std::move(r.witness);
      v.value = r.value;
      return v;
    }
  }
  v.taut = true;
  return v;
}

}  // namespace mtlwb
