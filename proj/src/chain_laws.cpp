// Law checking and structural inspection of chains.
#include <algorithm>
#include <functional>

#include "mtlwb/chain.hpp"
#include "mtlwb/error.hpp"

namespace mtlwb {
namespace {

// Generic law checker over an abstract carrier, shared by finite tables
// (indices) and rational families (a sampled grid).
template <class V>
struct LawContext {
  std::vector<V> carrier;  // ascending
  std::function<V(const V&, const V&)> star;
  std::function<V(const V&, const V&)> res;
  std::function<Index(const V&)> index;  // for witness reporting
};

template <class V>
void check_laws(const LawContext<V>& ctx, const V& top, ChainReport& report) {
  const auto& xs = ctx.carrier;
  auto add = [&](const char* law, std::vector<V> w, std::string detail = {}) {
    std::vector<Index> idx;
    for (const auto& v : w) idx.push_back(ctx.index(v));
    report.violations.push_back({law, std::move(idx), std::move(detail)});
  };
  auto first = [&](auto&& pred) -> std::optional<std::vector<V>> {
    for (const auto& x : xs) {
      for (const auto& y : xs) {
        for (const auto& z : xs) {
          if (!pred(x, y, z)) return std::vector<V>{x, y, z};
        }
      }
    }
    return std::nullopt;
  };

  for (const auto& x : xs) {
    if (ctx.star(top, x) != x || ctx.star(x, top) != x) {
      add("unit", {x});
      break;
    }
  }
  [&] {
    for (const auto& x : xs) {
      for (const auto& y : xs) {
        if (ctx.star(x, y) != ctx.star(y, x)) return add("commutativity", {x, y});
      }
    }
  }();
  if (auto w = first([&](const V& x, const V& y, const V& z) {
        return ctx.star(ctx.star(x, y), z) == ctx.star(x, ctx.star(y, z));
      })) {
    add("associativity", *w);
  }
  if (auto w = first([&](const V& x, const V& y, const V& z) {
        return !(x <= y) || ctx.star(x, z) <= ctx.star(y, z);
      })) {
    add("monotonicity", *w, "x <= y but x*z > y*z");
  }
  if (auto w = first([&](const V& z, const V& x, const V& y) {
        return (ctx.star(z, x) <= y) == (z <= ctx.res(x, y));
      })) {
    add("residuation", *w, "z*x <= y and z <= x=>y disagree");
  }
}

}  // namespace

ChainReport check_chain(const Chain& c) {
  ChainReport report;
  if (!c.is_finite()) {
    LawContext<Rational> ctx;
    for (const auto& v : rational_grid(6)) {
      if (c.contains(v)) ctx.carrier.push_back(v);
    }
    ctx.star = [&c](const Rational& a, const Rational& b) { return c.star(a, b); };
    ctx.res = [&c](const Rational& a, const Rational& b) { return c.residuum(a, b); };
    // Witnesses of sampled laws are reported as grid positions.
    const auto grid = ctx.carrier;
    ctx.index = [grid](const Rational& v) {
      return static_cast<Index>(std::lower_bound(grid.begin(), grid.end(), v) - grid.begin());
    };
    check_laws(ctx, Rational(1), report);
    return report;
  }

  const std::size_t k = c.size();
  const auto& labels = c.labels();
  // The one-element (trivial) chain has 0 = 1 and is labeled 1.
  if ((k > 1 && labels.front() != 0) || labels.back() != 1) {
    report.violations.push_back({"bounds", {}, "labels must run from 0 to 1"});
  }
  for (std::size_t i = 0; i + 1 < k; ++i) {
    if (!(labels[i] < labels[i + 1])) {
      report.violations.push_back(
          {"bounds", {static_cast<Index>(i), static_cast<Index>(i + 1)}, "labels not strictly increasing"});
      break;
    }
  }
  auto table = c.star_table();
  for (std::size_t i = 0; i < table.size(); ++i) {
    if (table[i] >= k) {
      report.violations.push_back({"bounds",
                                   {static_cast<Index>(i / k), static_cast<Index>(i % k)},
                                   "table entry out of range"});
      return report;
    }
  }
  LawContext<Index> ctx;
  for (std::size_t i = 0; i < k; ++i) ctx.carrier.push_back(static_cast<Index>(i));
  ctx.star = [&c](Index a, Index b) { return c.star(a, b); };
  ctx.res = [&c](Index a, Index b) { return c.residuum(a, b); };
  ctx.index = [](Index v) { return v; };
  check_laws(ctx, c.top(), report);
  return report;
}

NegationProfile negation_profile(const Chain& c) {
  NegationProfile p;
  for (Index x = 0; x < c.size(); ++x) {
    Index n = c.neg(x);
    if (x > n) p.a_plus.push_back(x);
    if (x == n) p.fixpoint = x;
  }
  return p;
}

namespace {

bool closed_under_ops(const Chain& c, const std::vector<bool>& in) {
  const std::size_t k = c.size();
  for (Index x = 0; x < k; ++x) {
    if (!in[x]) continue;
    for (Index y = 0; y < k; ++y) {
      if (!in[y]) continue;
      if (!in[c.star(x, y)] || !in[c.residuum(x, y)]) return false;
    }
  }
  return true;
}

}  // namespace

std::vector<std::vector<Index>> subchains(const Chain& c) {
  const std::size_t k = c.size();
  if (k == 1) return {{0}};
  if (k > 22) throw Error(Errc::enumeration_cap, "subchain enumeration limited to 22 elements");
  // Bottom and top are always present; the middle elements range over all subsets.
  const std::size_t middle = k - 2;
  std::vector<std::vector<Index>> out;
  std::vector<bool> in(k);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << middle); ++mask) {
    in[0] = in[k - 1] = true;
    for (std::size_t i = 0; i < middle; ++i) in[i + 1] = (mask >> i) & 1;
    if (!closed_under_ops(c, in)) continue;
    std::vector<Index> carrier;
    for (Index i = 0; i < k; ++i) {
      if (in[i]) carrier.push_back(i);
    }
    out.push_back(std::move(carrier));
  }
  return out;
}

Chain restrict_chain(const Chain& c, std::span<const Index> carrier) {
  const std::size_t k = c.size();
  std::vector<bool> in(k, false);
  for (Index i : carrier) {
    if (i >= k) throw Error(Errc::invalid_parameter, "index out of range in carrier");
    in[i] = true;
  }
  if (!in[0] || !in[k - 1]) throw Error(Errc::invalid_parameter, "carrier must contain bottom and top");
  if (!std::is_sorted(carrier.begin(), carrier.end()) ||
      std::adjacent_find(carrier.begin(), carrier.end()) != carrier.end()) {
    throw Error(Errc::invalid_parameter, "carrier must be strictly ascending");
  }
  if (!closed_under_ops(c, in)) {
    throw Error(Errc::invalid_parameter, "carrier is not closed under the chain operations");
  }
  std::vector<Index> pos(k, 0);
  for (std::size_t i = 0; i < carrier.size(); ++i) pos[carrier[i]] = static_cast<Index>(i);
  const std::size_t m = carrier.size();
  std::vector<Index> star(m * m);
  std::vector<Rational> labels;
  std::string id = "sub(" + c.id() + ";";
  for (std::size_t i = 0; i < m; ++i) {
    labels.push_back(c.label(carrier[i]));
    id += (i ? "," : "") + std::to_string(carrier[i]);
    for (std::size_t j = 0; j < m; ++j) star[i * m + j] = pos[c.star(carrier[i], carrier[j])];
  }
  return Chain::from_table(id + ")", std::move(labels), std::move(star), c.has_delta());
}

bool isomorphic(const Chain& a, const Chain& b) {
  if (!a.is_finite() || !b.is_finite()) {
    throw Error(Errc::unsupported, "isomorphism is only decided for finite chains");
  }
  if (a.size() != b.size() || a.has_delta() != b.has_delta()) return false;
  auto sa = a.star_table();
  auto sb = b.star_table();
  return std::equal(sa.begin(), sa.end(), sb.begin(), sb.end());
}

}  // namespace mtlwb
