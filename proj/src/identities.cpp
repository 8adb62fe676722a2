// Named axiom schemata, written with propositional variables p, q, r (and
// x0, x1, ... for the indexed Gödel family).
#include <map>

#include "mtlwb/chain.hpp"
#include "mtlwb/error.hpp"
#include "mtlwb/formula.hpp"
#include "mtlwb/semantics.hpp"

namespace mtlwb {
namespace {

const std::map<std::string, std::string, std::less<>>& library() {
  static const std::map<std::string, std::string, std::less<>> lib = {
      {"wnm", "~(p & q) \\/ ((p /\\ q) -> (p & q))"},
      {"id", "p -> (p & p)"},
      {"dp", "p \\/ ~(p & p)"},
      {"s", "~(~p /\\ p)"},
      {"rdp", "(p -> ~p) \\/ ~~p"},
      {"nmg", "(~~p -> p) \\/ ~~p"},
      {"inv", "~~p -> p"},
      {"div", "(p /\\ q) -> (p & (p -> q))"},
      {"c", "~p \\/ ((p -> (p & q)) -> q)"},
      {"prelinearity", "(p -> q) \\/ (q -> p)"},
      {"a1", "(p -> q) -> ((q -> r) -> (p -> r))"},
      {"a2", "(p & q) -> p"},
      {"a3", "(p & q) -> (q & p)"},
      {"a4", "(p /\\ q) -> p"},
      {"a5", "(p /\\ q) -> (q /\\ p)"},
      {"a6", "(p & (p -> q)) -> (q /\\ p)"},
      {"a7a", "(p -> (q -> r)) -> ((p & q) -> r)"},
      {"a7b", "((p & q) -> r) -> (p -> (q -> r))"},
      {"a8", "((p -> q) -> r) -> (((q -> p) -> r) -> r)"},
      {"a9", "bot -> p"},
      {"f", "!(p <-> ~p) -> p"},
      {"delta1", "!p \\/ ~!p"},
      {"delta2", "!(p \\/ q) -> (!p \\/ !q)"},
      {"delta3", "!p -> p"},
      {"delta4", "!p -> !!p"},
      {"delta5", "!(p -> q) -> (!p -> !q)"},
  };
  return lib;
}

unsigned parse_index(std::string_view text, std::string_view name) {
  if (text.empty() || text.size() > 3 ||
      text.find_first_not_of("0123456789") != std::string_view::npos) {
    throw Error(Errc::invalid_parameter, "unknown identity '" + std::string(name) + "'");
  }
  return static_cast<unsigned>(std::stoul(std::string(text)));
}

}  // namespace

Formula identity(std::string_view name) {
  const auto& lib = library();
  if (auto it = lib.find(name); it != lib.end()) return parse(it->second, Syntax::prop);

  const Formula p = Formula::atom("p");
  if (name.size() > 1 && name[0] == 'g') {
    // g<n>: (x0 -> x1) \/ ... \/ (x(n-1) -> xn); holds exactly on chains of at most n elements.
    unsigned n = parse_index(name.substr(1), name);
    if (n < 2) throw Error(Errc::invalid_parameter, "g<n> needs n >= 2");
    std::vector<Formula> parts;
    for (unsigned i = 0; i < n; ++i) {
      parts.push_back(Formula::implies(Formula::atom("x" + std::to_string(i)),
                                       Formula::atom("x" + std::to_string(i + 1))));
    }
    return big_disj(parts);
  }
  if (name.size() > 1 && name[0] == 'c') {
    unsigned n = parse_index(name.substr(1), name);
    if (n < 1) throw Error(Errc::invalid_parameter, "c<n> needs n >= 1");
    return Formula::implies(power(p, n), power(p, n + 1));
  }
  if (name.size() > 1 && name[0] == 'd') {
    auto sep = name.find('_');
    if (sep == std::string_view::npos) {
      throw Error(Errc::invalid_parameter, "unknown identity '" + std::string(name) + "'");
    }
    unsigned n = parse_index(name.substr(1, sep - 1), name);
    unsigned m = parse_index(name.substr(sep + 1), name);
    if (m < 2 || m >= n) throw Error(Errc::invalid_parameter, "d<n>_<m> needs 2 <= m < n");
    Formula inner = Formula::iff(power(p, m - 1), Formula::implies(p, power(p, n)));
    return Formula::implies(power(inner, n), power(p, n));
  }
  throw Error(Errc::invalid_parameter, "unknown identity '" + std::string(name) + "'");
}

std::vector<std::string> identity_names() {
  std::vector<std::string> out;
  for (const auto& [name, text] : library()) out.push_back(name);
  out.push_back("g<n>");
  out.push_back("c<n>");
  out.push_back("d<n>_<m>");
  return out;
}

bool satisfies_identity(const Chain& c, const Formula& id) {
  if (!c.is_finite()) {
    throw Error(Errc::unsupported, "identities are only decided on finite chains");
  }
  if (!is_propositional(id)) {
    throw Error(Errc::invalid_parameter, "identities must be propositional formulas");
  }
  return is_taut_prop(c, id).tautology;
}

}  // namespace mtlwb
