#include "engine.hpp"

#include <algorithm>
#include <limits>

namespace mtlwb::detail {

std::size_t ipow(std::size_t base, std::size_t exp) {
  std::size_t r = 1;
  while (exp--) r *= base;
  return r;
}

std::uint64_t checked_pow(std::uint64_t base, std::uint64_t exp) {
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    if (base != 0 && r > kMax / base) return kMax;
    r *= base;
  }
  return r;
}

CellLayout::CellLayout(const Signature& sig, std::size_t n) : domain(n) {
  if (n == 0) throw Error(Errc::invalid_parameter, "domain size must be at least 1");
  for (const auto& [name, ar] : sig.entries()) {
    preds.push_back(name);
    arity.push_back(ar);
    offset.push_back(cells);
    std::uint64_t size = checked_pow(n, ar);
    if (size > (std::uint64_t{1} << 32)) {
      throw Error(Errc::enumeration_cap, "predicate " + name + " has too many cells");
    }
    cells += static_cast<std::size_t>(size);
  }
}

std::size_t CellLayout::index_of(const std::string& pred) const {
  auto it = std::lower_bound(preds.begin(), preds.end(), pred);
  if (it == preds.end() || *it != pred) {
    throw Error(Errc::signature_mismatch, "model has no predicate " + pred);
  }
  return static_cast<std::size_t>(it - preds.begin());
}

std::size_t CellLayout::cell(std::size_t pred, std::span<const std::size_t> tuple) const {
  std::size_t off = 0;
  for (std::size_t t : tuple) off = off * domain + t;
  return offset[pred] + off;
}

std::pair<std::size_t, std::vector<std::size_t>> CellLayout::decode(std::size_t c) const {
  auto it = std::upper_bound(offset.begin(), offset.end(), c);
  // Zero-size predicates cannot occur (n >= 1), so the predecessor owns the cell.
  std::size_t p = static_cast<std::size_t>(it - offset.begin()) - 1;
  std::size_t rel = c - offset[p];
  std::vector<std::size_t> tuple(arity[p]);
  for (std::size_t i = arity[p]; i-- > 0;) {
    tuple[i] = rel % domain;
    rel /= domain;
  }
  return {p, tuple};
}

namespace {

struct Compiler {
  const CellLayout& layout;
  Program& prog;
  std::vector<std::pair<std::string, int>> scope;  // innermost last

  int lookup(const std::string& var) const {
    for (auto it = scope.rbegin(); it != scope.rend(); ++it) {
      if (it->first == var) return it->second;
    }
    throw Error(Errc::unbound_variable, "variable " + var + " is not bound");
  }

  int emit(Program::Node nd) {
    prog.nodes.push_back(nd);
    return static_cast<int>(prog.nodes.size()) - 1;
  }

  int run(const Formula& f) {
    Program::Node nd{f.op()};
    switch (f.op()) {
      case Op::atom: {
        std::size_t p = layout.index_of(f.name());
        if (layout.arity[p] != f.args().size()) {
          throw Error(Errc::signature_mismatch,
                      "predicate " + f.name() + " has arity " + std::to_string(layout.arity[p]) +
                          " in the model but " + std::to_string(f.args().size()) + " in the formula");
        }
        nd.pred = static_cast<int>(p);
        nd.args_begin = static_cast<int>(prog.arg_slots.size());
        nd.args_count = static_cast<int>(f.args().size());
        for (const auto& a : f.args()) prog.arg_slots.push_back(lookup(a));
        return emit(nd);
      }
      case Op::bottom:
        return emit(nd);
      case Op::forall:
      case Op::exists: {
        int slot = prog.slot_count++;
        scope.emplace_back(f.name(), slot);
        nd.a = run(f.body());
        scope.pop_back();
        nd.slot = slot;
        return emit(nd);
      }
      case Op::neg:
      case Op::delta:
        if (f.op() == Op::delta) prog.uses_delta = true;
        nd.a = run(f.left());
        return emit(nd);
      default:
        nd.a = run(f.left());
        nd.b = run(f.right());
        return emit(nd);
    }
  }
};

}  // namespace

Program compile(const Formula& f, const CellLayout& layout,
                const std::vector<std::string>& free_order) {
  Program prog;
  prog.free_vars = free_order;
  Compiler comp{layout, prog, {}};
  for (const auto& v : free_order) comp.scope.emplace_back(v, prog.slot_count++);
  prog.root = comp.run(f);
  return prog;
}

void Odometer::seek(std::uint64_t rank) {
  for (std::size_t i = digits_.size(); i-- > 0;) {
    digits_[i] = static_cast<std::uint32_t>(rank % radix_);
    rank /= radix_;
  }
}

bool Odometer::next() {
  for (std::size_t i = digits_.size(); i-- > 0;) {
    if (++digits_[i] < radix_) return true;
    digits_[i] = 0;
  }
  return false;
}

namespace {

template <class F>
void for_each_cell(const Model& m, const CellLayout& layout, F&& fn) {
  if (m.domain_size() != layout.domain) {
    throw Error(Errc::signature_mismatch, "model domain size differs from the layout");
  }
  for (std::size_t p = 0; p < layout.preds.size(); ++p) {
    auto it = m.tables().find(layout.preds[p]);
    if (it == m.tables().end()) {
      throw Error(Errc::signature_mismatch, "model has no predicate " + layout.preds[p]);
    }
    if (it->second.arity != layout.arity[p]) {
      throw Error(Errc::signature_mismatch, "predicate " + layout.preds[p] + " has the wrong arity in the model");
    }
    const auto& vals = it->second.values;
    for (std::size_t i = 0; i < vals.size(); ++i) fn(layout.offset[p] + i, vals[i]);
  }
}

}  // namespace

std::vector<Index> bind_model(const Chain& c, const Model& m, const CellLayout& layout) {
  std::vector<Index> cells(layout.cells);
  for_each_cell(m, layout, [&](std::size_t pos, const Rational& v) {
    auto i = c.index_of(v);
    if (!i) throw Error(Errc::invalid_parameter, to_string(v) + " is not an element of " + c.id());
    cells[pos] = *i;
  });
  return cells;
}

std::vector<Rational> bind_model_rational(const Chain& c, const Model& m, const CellLayout& layout) {
  std::vector<Rational> cells(layout.cells);
  for_each_cell(m, layout, [&](std::size_t pos, const Rational& v) {
    if (!c.contains(v)) throw Error(Errc::invalid_parameter, to_string(v) + " is not an element of " + c.id());
    cells[pos] = v;
  });
  return cells;
}

Model unbind_model_labels(const CellLayout& layout, const std::vector<Rational>& cells) {
  Model m(layout.domain);
  for (std::size_t p = 0; p < layout.preds.size(); ++p) {
    m.add_predicate(layout.preds[p], layout.arity[p]);
    auto& vals = m.table(layout.preds[p]).values;
    std::copy_n(cells.begin() + static_cast<std::ptrdiff_t>(layout.offset[p]), vals.size(), vals.begin());
  }
  return m;
}

Model unbind_index_model(const Chain& c, const CellLayout& layout, std::span<const Index> cells) {
  std::vector<Rational> labels;
  labels.reserve(cells.size());
  for (Index i : cells) labels.push_back(c.label(i));
  return unbind_model_labels(layout, labels);
}

}  // namespace mtlwb::detail
