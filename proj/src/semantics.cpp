#include "mtlwb/semantics.hpp"

#include <algorithm>
#include <cstdlib>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>

#include "engine.hpp"
#include "mtlwb/error.hpp"

namespace mtlwb {

using detail::CellLayout;

Model::Model(std::size_t domain_size) : n_(domain_size) {
  if (n_ == 0) throw Error(Errc::invalid_parameter, "domain size must be at least 1");
}

Signature Model::signature() const {
  Signature sig;
  for (const auto& [name, t] : tables_) sig.add(name, t.arity);
  return sig;
}

void Model::add_predicate(const std::string& name, std::size_t arity, const Rational& fill) {
  std::uint64_t cells = detail::checked_pow(n_, arity);
  if (cells > (std::uint64_t{1} << 24)) {
    throw Error(Errc::enumeration_cap, "predicate table for " + name + " is too large");
  }
  tables_[name] = PredicateTable{arity, std::vector<Rational>(static_cast<std::size_t>(cells), fill)};
}

std::size_t Model::offset(const PredicateTable& t, std::span<const std::size_t> tuple) const {
  if (tuple.size() != t.arity) throw Error(Errc::arity_mismatch, "tuple length differs from arity");
  std::size_t off = 0;
  for (std::size_t j : tuple) {
    if (j < 1 || j > n_) {
      throw Error(Errc::invalid_parameter, "domain element " + std::to_string(j) + " out of range");
    }
    off = off * n_ + (j - 1);
  }
  return off;
}

const Rational& Model::at(const std::string& pred, std::span<const std::size_t> tuple) const {
  const auto& t = table(pred);
  return t.values[offset(t, tuple)];
}

void Model::set(const std::string& pred, std::span<const std::size_t> tuple, Rational value) {
  auto& t = table(pred);
  t.values[offset(t, tuple)] = std::move(value);
}

PredicateTable& Model::table(const std::string& pred) {
  auto it = tables_.find(pred);
  if (it == tables_.end()) throw Error(Errc::signature_mismatch, "model has no predicate " + pred);
  return it->second;
}

const PredicateTable& Model::table(const std::string& pred) const {
  auto it = tables_.find(pred);
  if (it == tables_.end()) throw Error(Errc::signature_mismatch, "model has no predicate " + pred);
  return it->second;
}

// ---------------------------------------------------------------------------

namespace {

void require_propositional(const Formula& f) {
  if (!is_propositional(f)) {
    throw Error(Errc::invalid_parameter, "expected a propositional formula: " + to_string(f));
  }
}

template <class Alg, class Cells>
typename Alg::Value run_once(const Alg& alg, const Formula& f, const CellLayout& layout,
                             const Cells& cells, const std::vector<std::string>& free_order,
                             std::span<const std::size_t> free_values) {
  auto prog = detail::compile(f, layout, free_order);
  detail::Evaluator<Alg> ev(prog, alg, layout);
  return ev.run(cells.data(), free_values);
}

}  // namespace

Rational eval_prop(const Chain& c, const Assignment& a, const Formula& f) {
  require_propositional(f);
  Signature sig = signature(f);
  CellLayout layout(sig, 1);
  if (c.is_finite()) {
    std::vector<Index> cells(layout.cells);
    for (std::size_t i = 0; i < layout.preds.size(); ++i) {
      auto it = a.find(layout.preds[i]);
      if (it == a.end()) throw Error(Errc::missing_variable, "no value for variable " + layout.preds[i]);
      auto idx = c.index_of(it->second);
      if (!idx) throw Error(Errc::invalid_parameter, to_string(it->second) + " is not an element of " + c.id());
      cells[i] = *idx;
    }
    detail::FiniteAlgebra alg(c);
    return c.label(run_once(alg, f, layout, cells, {}, {}));
  }
  std::vector<Rational> cells(layout.cells);
  for (std::size_t i = 0; i < layout.preds.size(); ++i) {
    auto it = a.find(layout.preds[i]);
    if (it == a.end()) throw Error(Errc::missing_variable, "no value for variable " + layout.preds[i]);
    if (!c.contains(it->second)) {
      throw Error(Errc::invalid_parameter, to_string(it->second) + " is not an element of " + c.id());
    }
    cells[i] = it->second;
  }
  detail::RationalAlgebra alg(c);
  return run_once(alg, f, layout, cells, {}, {});
}

namespace {

std::vector<std::size_t> free_values_of(const std::vector<std::string>& free, const Valuation& v,
                                        std::size_t n) {
  std::vector<std::size_t> out;
  for (const auto& x : free) {
    auto it = v.find(x);
    if (it == v.end()) throw Error(Errc::unbound_variable, "free variable " + x + " has no value");
    if (it->second < 1 || it->second > n) {
      throw Error(Errc::invalid_parameter, "variable " + x + " is mapped outside the domain");
    }
    out.push_back(it->second - 1);
  }
  return out;
}

}  // namespace

Rational eval_fo(const Chain& c, const Model& m, const Valuation& v, const Formula& f) {
  CellLayout layout(signature(f), m.domain_size());
  auto free = free_variables(f);
  auto fv = free_values_of(free, v, m.domain_size());
  if (c.is_finite()) {
    auto cells = detail::bind_model(c, m, layout);
    detail::FiniteAlgebra alg(c);
    return c.label(run_once(alg, f, layout, cells, free, fv));
  }
  auto cells = detail::bind_model_rational(c, m, layout);
  detail::RationalAlgebra alg(c);
  return run_once(alg, f, layout, cells, free, fv);
}

std::uint64_t enumeration_cap() {
  if (const char* env = std::getenv("MTLWB_ENUM_CAP")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return 1'000'000'000ULL;
}

PropTautologyResult is_taut_prop(const Chain& c, const Formula& f) {
  if (!c.is_finite()) {
    throw Error(Errc::unsupported, "tautology checking needs a finite chain, not " + c.id());
  }
  require_propositional(f);
  CellLayout layout(signature(f), 1);
  const std::size_t k = c.size();
  std::uint64_t total = detail::checked_pow(k, layout.cells);
  if (total > enumeration_cap()) {
    throw Error(Errc::enumeration_cap, std::to_string(k) + "^" + std::to_string(layout.cells) +
                                           " assignments exceed the enumeration cap");
  }
  auto prog = detail::compile(f, layout, {});
  detail::FiniteAlgebra alg(c);
  detail::Evaluator<detail::FiniteAlgebra> ev(prog, alg, layout);
  detail::Odometer odo(layout.cells, k);
  std::vector<Index> cells(layout.cells, 0);
  do {
    const auto& d = odo.digits();
    std::copy(d.begin(), d.end(), cells.begin());
    Index v = ev.run(cells.data());
    if (v != c.top()) {
      PropTautologyResult r;
      Assignment w;
      for (std::size_t i = 0; i < layout.preds.size(); ++i) w[layout.preds[i]] = c.label(cells[i]);
      r.witness = std::move(w);
      r.value = c.label(v);
      return r;
    }
  } while (odo.next());
  return PropTautologyResult{true, std::nullopt, std::nullopt};
}

// ---------------------------------------------------------------------------

struct ModelEnumerator::State {
  CellLayout layout;
  std::vector<Rational> values;
  detail::Odometer odo;
  std::uint64_t count = 0;
  bool started = false;
  bool done = false;

  State(CellLayout l, std::vector<Rational> v)
      : layout(std::move(l)), values(std::move(v)), odo(layout.cells, values.size()) {}
};

ModelEnumerator::ModelEnumerator(const Signature& sig, std::size_t n, std::vector<Rational> values,
                                 std::uint64_t cap) {
  if (values.empty()) throw Error(Errc::invalid_parameter, "value set is empty");
  CellLayout layout(sig, n);
  std::uint64_t count = detail::checked_pow(values.size(), layout.cells);
  if (count > cap) {
    throw Error(Errc::enumeration_cap, std::to_string(values.size()) + "^" +
                                           std::to_string(layout.cells) +
                                           " models exceed the enumeration cap of " + std::to_string(cap));
  }
  state_ = std::make_unique<State>(std::move(layout), std::move(values));
  state_->count = count;
}

ModelEnumerator::~ModelEnumerator() = default;
ModelEnumerator::ModelEnumerator(ModelEnumerator&&) noexcept = default;
ModelEnumerator& ModelEnumerator::operator=(ModelEnumerator&&) noexcept = default;

std::uint64_t ModelEnumerator::count() const noexcept { return state_->count; }

std::optional<Model> ModelEnumerator::next() {
  auto& s = *state_;
  if (s.done) return std::nullopt;
  if (s.started && !s.odo.next()) {
    s.done = true;
    return std::nullopt;
  }
  s.started = true;
  std::vector<Rational> cells;
  cells.reserve(s.layout.cells);
  for (auto d : s.odo.digits()) cells.push_back(s.values[d]);
  return detail::unbind_model_labels(s.layout, cells);
}

ModelEnumerator enumerate_models(const Signature& sig, std::size_t n, std::vector<Rational> values,
                                 std::uint64_t cap) {
  return ModelEnumerator(sig, n, std::move(values), cap);
}

std::vector<Rational> carrier_values(const Chain& c) { return c.labels(); }

// ---------------------------------------------------------------------------

namespace {

void collect_occurrences(const Formula& f, std::vector<Formula>& out) {
  out.push_back(f);
  if (f.op() == Op::atom || f.op() == Op::bottom) return;
  collect_occurrences(f.left(), out);
  if (f.is_binary()) collect_occurrences(f.right(), out);
}

template <class Alg, class Cells>
std::vector<typename Alg::Value> values_over_valuations(const Alg& alg, const Formula& sub,
                                                        const CellLayout& layout, const Cells& cells) {
  auto free = free_variables(sub);
  auto prog = detail::compile(sub, layout, free);
  detail::Evaluator<Alg> ev(prog, alg, layout);
  std::vector<typename Alg::Value> out;
  detail::Odometer odo(free.size(), layout.domain);
  std::vector<std::size_t> fv(free.size());
  do {
    std::copy(odo.digits().begin(), odo.digits().end(), fv.begin());
    out.push_back(ev.run(cells.data(), fv));
  } while (odo.next());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

std::vector<SubformulaValues> subformula_values(const Chain& c, const Model& m, const Formula& f) {
  CellLayout layout(signature(f), m.domain_size());
  std::vector<Formula> subs;
  collect_occurrences(f, subs);
  std::vector<SubformulaValues> out;
  if (c.is_finite()) {
    auto cells = detail::bind_model(c, m, layout);
    detail::FiniteAlgebra alg(c);
    for (const auto& s : subs) {
      SubformulaValues sv{s, {}};
      for (Index i : values_over_valuations(alg, s, layout, cells)) sv.values.push_back(c.label(i));
      out.push_back(std::move(sv));
    }
  } else {
    auto cells = detail::bind_model_rational(c, m, layout);
    detail::RationalAlgebra alg(c);
    for (const auto& s : subs) out.push_back({s, values_over_valuations(alg, s, layout, cells)});
  }
  return out;
}

// ---------------------------------------------------------------------------

void write_model(std::ostream& out, const Model& m) {
  const std::size_t n = m.domain_size();
  out << "mtlmodel 1\n";
  out << "domain " << n << '\n';
  for (const auto& [name, t] : m.tables()) {
    out << "pred " << name << ' ' << t.arity << '\n';
    for (std::size_t i = 0; i < t.values.size(); ++i) {
      std::size_t rel = i;
      std::vector<std::size_t> tuple(t.arity);
      for (std::size_t j = t.arity; j-- > 0;) {
        tuple[j] = rel % n + 1;
        rel /= n;
      }
      for (std::size_t j : tuple) out << j << ' ';
      out << to_string(t.values[i]) << '\n';
    }
  }
}

std::string model_to_text(const Model& m) {
  std::ostringstream out;
  write_model(out, m);
  return out.str();
}

namespace {

[[noreturn]] void bad_model(const std::string& what) {
  throw Error(Errc::format_error, "model file: " + what);
}

std::size_t read_count(std::istream& in, const char* what) {
  std::string w;
  if (!(in >> w)) bad_model(std::string("unexpected end of input, expected ") + what);
  if (w.empty() || w.size() > 9 || w.find_first_not_of("0123456789") != std::string::npos) {
    bad_model(std::string("expected ") + what + ", found '" + w + "'");
  }
  return std::stoul(w);
}

void read_keyword(std::istream& in, const char* key) {
  std::string w;
  if (!(in >> w) || w != key) bad_model(std::string("expected '") + key + "'");
}

}  // namespace

Model read_model(std::istream& in) {
  read_keyword(in, "mtlmodel");
  if (read_count(in, "version") != 1) bad_model("unsupported version");
  read_keyword(in, "domain");
  std::size_t n = read_count(in, "domain size");
  if (n == 0) bad_model("domain size must be at least 1");
  Model m(n);
  std::string word;
  while (in >> word) {
    if (word != "pred") bad_model("expected 'pred', found '" + word + "'");
    std::string name;
    if (!(in >> name)) bad_model("missing predicate name");
    if (m.tables().count(name)) bad_model("predicate " + name + " defined twice");
    std::size_t arity = read_count(in, "arity");
    m.add_predicate(name, arity);
    auto& t = m.table(name);
    std::vector<bool> seen(t.values.size(), false);
    std::vector<std::size_t> tuple(arity);
    for (std::size_t i = 0; i < t.values.size(); ++i) {
      for (auto& j : tuple) {
        j = read_count(in, "domain element");
        if (j < 1 || j > n) bad_model("domain element " + std::to_string(j) + " out of range");
      }
      std::size_t off = 0;
      for (std::size_t j : tuple) off = off * n + (j - 1);
      if (seen[off]) bad_model("tuple listed twice in predicate " + name);
      seen[off] = true;
      std::string value;
      if (!(in >> value)) bad_model("missing value in predicate " + name);
      try {
        t.values[off] = parse_rational(value);
      } catch (const Error& e) {
        bad_model(e.what());
      }
    }
  }
  return m;
}

}  // namespace mtlwb
