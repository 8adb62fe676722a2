// Test-only oracle: closed-form operations of the standard families and a
// naive recursive evaluator written directly against the formula tree. Shares
// no code with the library's table construction or compiled evaluator.
#ifndef MTLWB_TESTS_REFERENCE_HPP
#define MTLWB_TESTS_REFERENCE_HPP

#include <algorithm>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "mtlwb/chain.hpp"
#include "mtlwb/formula.hpp"
#include "mtlwb/semantics.hpp"

namespace ref {

using mtlwb::Formula;
using mtlwb::Op;
using mtlwb::Rational;

struct Ops {
  std::function<Rational(const Rational&, const Rational&)> star;
  std::function<Rational(const Rational&, const Rational&)> res;
  std::vector<Rational> carrier;  // empty for rational families
};

inline std::vector<Rational> spaced(unsigned k) {
  std::vector<Rational> out;
  if (k == 1) return {Rational(1)};
  for (unsigned i = 0; i < k; ++i) out.emplace_back(i, k - 1);
  return out;
}

inline Rational rmin(const Rational& a, const Rational& b) { return a < b ? a : b; }
inline Rational rmax(const Rational& a, const Rational& b) { return a < b ? b : a; }

inline Ops lukasiewicz(unsigned n) {
  Ops o;
  o.star = [](const Rational& x, const Rational& y) { return rmax(Rational(0), x + y - 1); };
  o.res = [](const Rational& x, const Rational& y) { return rmin(Rational(1), 1 - x + y); };
  o.carrier = spaced(n + 1);
  return o;
}

inline Ops godel(unsigned k) {
  Ops o;
  o.star = rmin;
  o.res = [](const Rational& x, const Rational& y) { return x <= y ? Rational(1) : y; };
  o.carrier = spaced(k);
  return o;
}

inline Ops product() {
  Ops o;
  o.star = [](const Rational& x, const Rational& y) { return Rational(x * y); };
  o.res = [](const Rational& x, const Rational& y) { return x <= y ? Rational(1) : Rational(y / x); };
  return o;
}

// Nilpotent minimum with negation 1 - x.
inline Ops nm(unsigned k) {
  Ops o;
  o.star = [](const Rational& x, const Rational& y) { return x + y <= 1 ? Rational(0) : rmin(x, y); };
  o.res = [](const Rational& x, const Rational& y) { return x <= y ? Rational(1) : rmax(1 - x, y); };
  o.carrier = spaced(k);
  return o;
}

// Drastic product on k equally spaced points; the residuum of y < x < 1 is the coatom.
inline Ops dp(unsigned k) {
  Ops o;
  Rational coatom = k >= 2 ? Rational(k - 2, k - 1) : Rational(1);
  o.star = [](const Rational& x, const Rational& y) {
    return (x == 1 || y == 1) ? rmin(x, y) : Rational(0);
  };
  o.res = [coatom](const Rational& x, const Rational& y) {
    if (x <= y) return Rational(1);
    return x == 1 ? y : coatom;
  };
  o.carrier = spaced(k);
  return o;
}

inline Rational delta(const Rational& x) { return x == 1 ? Rational(1) : Rational(0); }

struct Evaluator {
  const Ops& ops;
  const mtlwb::Model* model = nullptr;
  const mtlwb::Assignment* assignment = nullptr;

  Rational prop(const Formula& f) const {
    std::map<std::string, std::size_t> env;
    return eval(f, env);
  }

  Rational fo(const Formula& f, std::map<std::string, std::size_t> env = {}) const { return eval(f, env); }

  Rational eval(const Formula& f, std::map<std::string, std::size_t>& env) const {
    switch (f.op()) {
      case Op::atom: {
        if (assignment) return assignment->at(f.name());
        std::vector<std::size_t> tuple;
        for (const auto& a : f.args()) tuple.push_back(env.at(a));
        return model->at(f.name(), tuple);
      }
      case Op::bottom: return Rational(0);
      case Op::and_: return rmin(eval(f.left(), env), eval(f.right(), env));
      case Op::or_: return rmax(eval(f.left(), env), eval(f.right(), env));
      case Op::strong_and: return ops.star(eval(f.left(), env), eval(f.right(), env));
      case Op::implies: return ops.res(eval(f.left(), env), eval(f.right(), env));
      case Op::iff: {
        Rational a = eval(f.left(), env), b = eval(f.right(), env);
        return rmin(ops.res(a, b), ops.res(b, a));
      }
      case Op::neg: return ops.res(eval(f.left(), env), Rational(0));
      case Op::delta: return delta(eval(f.left(), env));
      case Op::forall:
      case Op::exists: {
        bool all = f.op() == Op::forall;
        Rational acc = all ? Rational(1) : Rational(0);
        auto saved = env.find(f.name()) == env.end() ? std::optional<std::size_t>()
                                                     : std::optional<std::size_t>(env[f.name()]);
        for (std::size_t d = 1; d <= model->domain_size(); ++d) {
          env[f.name()] = d;
          Rational v = eval(f.body(), env);
          acc = all ? rmin(acc, v) : rmax(acc, v);
        }
        if (saved) {
          env[f.name()] = *saved;
        } else {
          env.erase(f.name());
        }
        return acc;
      }
    }
    return Rational(0);
  }
};

}  // namespace ref

#endif  // MTLWB_TESTS_REFERENCE_HPP
