#include "mtlwb/chain.hpp"

#include <algorithm>
#include <sstream>

#include "mtlwb/error.hpp"
#include "mtlwb/formula.hpp"

namespace mtlwb {

std::string_view family_name(Family f) {
  switch (f) {
    case Family::boolean: return "boolean";
    case Family::lukasiewicz: return "lukasiewicz";
    case Family::godel: return "godel";
    case Family::product: return "product";
    case Family::nm: return "nm";
    case Family::dp: return "dp";
    case Family::wnm: return "wnm";
    case Family::ordinal_sum: return "sum";
    case Family::custom: return "custom";
  }
  return "custom";
}

std::optional<Family> parse_family(std::string_view name) {
  for (Family f : {Family::boolean, Family::lukasiewicz, Family::godel, Family::product, Family::nm,
                   Family::dp}) {
    if (family_name(f) == name) return f;
  }
  return std::nullopt;
}

namespace {

std::vector<Rational> equally_spaced(std::size_t k) {
  if (k == 1) return {Rational(1)};
  std::vector<Rational> out;
  out.reserve(k);
  for (std::size_t i = 0; i < k; ++i) out.emplace_back(i, k - 1);
  return out;
}

// Max-scan residuum; 0 where no z qualifies (only possible for broken tables).
std::vector<Index> scan_residuum(std::span<const Index> star, std::size_t k) {
  std::vector<Index> res(k * k, 0);
  for (std::size_t x = 0; x < k; ++x) {
    for (std::size_t y = 0; y < k; ++y) {
      for (std::size_t z = k; z-- > 0;) {
        if (star[z * k + x] <= y) {
          res[x * k + y] = static_cast<Index>(z);
          break;
        }
      }
    }
  }
  return res;
}

std::string witness_text(const std::vector<Rational>& labels, const std::vector<Index>& w) {
  std::string out = "(";
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ", ";
    out += w[i] < labels.size() ? to_string(labels[w[i]]) : std::to_string(w[i]);
  }
  return out + ")";
}

std::vector<Index> wnm_table(std::span<const Index> neg) {
  const std::size_t k = neg.size();
  std::vector<Index> star(k * k);
  for (std::size_t x = 0; x < k; ++x) {
    for (std::size_t y = 0; y < k; ++y) {
      star[x * k + y] = x <= neg[y] ? Index{0} : static_cast<Index>(std::min(x, y));
    }
  }
  return star;
}

Chain build_family(Family family, unsigned n) {
  if (family == Family::boolean) {
    return Chain::from_table("boolean", equally_spaced(2), {0, 0, 0, 1});
  }
  if (n == 0) {
    throw Error(Errc::invalid_parameter,
                std::string(family_name(family)) + " chain needs a positive parameter");
  }
  const std::string id = std::string(family_name(family)) + ":" + std::to_string(n);
  std::size_t k = family == Family::lukasiewicz ? n + 1 : n;
  if (k > kMaxChainSize) throw Error(Errc::invalid_parameter, "chain too large: " + id);
  std::vector<Index> star(k * k);
  for (std::size_t x = 0; x < k; ++x) {
    for (std::size_t y = 0; y < k; ++y) {
      Index v = 0;
      switch (family) {
        case Family::lukasiewicz:
          v = static_cast<Index>(x + y >= n ? x + y - n : 0);
          break;
        case Family::godel:
          v = static_cast<Index>(std::min(x, y));
          break;
        case Family::nm:
          v = x + y <= k - 1 ? Index{0} : static_cast<Index>(std::min(x, y));
          break;
        case Family::dp:
          v = std::max(x, y) == k - 1 ? static_cast<Index>(std::min(x, y)) : Index{0};
          break;
        default:
          throw Error(Errc::invalid_parameter,
                      std::string(family_name(family)) + " has no finite constructor");
      }
      star[x * k + y] = v;
    }
  }
  Chain c = Chain::from_table(id, equally_spaced(k), std::move(star));
  return c;
}

}  // namespace

// ---------------------------------------------------------------------------

Chain Chain::from_table_unchecked(std::string id, std::vector<Rational> labels,
                                  std::vector<Index> star, bool has_delta) {
  const std::size_t k = labels.size();
  if (k == 0 || k > kMaxChainSize) {
    throw Error(Errc::invalid_parameter, "chain size must be between 1 and " +
                                             std::to_string(kMaxChainSize));
  }
  if (star.size() != k * k) throw Error(Errc::invalid_parameter, "star table is not k x k");
  Chain c;
  c.kind_ = ChainKind::finite_table;
  c.family_ = Family::custom;
  c.id_ = std::move(id);
  c.has_delta_ = has_delta;
  c.size_ = k;
  c.labels_ = std::move(labels);
  bool in_range = std::all_of(star.begin(), star.end(), [k](Index v) { return v < k; });
  c.star_ = std::move(star);
  c.residuum_ = in_range ? scan_residuum(c.star_, k) : std::vector<Index>(k * k, 0);
  return c;
}

Chain Chain::from_table(std::string id, std::vector<Rational> labels, std::vector<Index> star,
                        bool has_delta) {
  Chain c = from_table_unchecked(std::move(id), std::move(labels), std::move(star), has_delta);
  ChainReport report = check_chain(c);
  if (!report.ok()) {
    const auto& v = report.violations.front();
    throw Error(Errc::law_violation, "law " + v.law + " fails at " +
                                         witness_text(c.labels_, v.witness) +
                                         (v.detail.empty() ? "" : ": " + v.detail));
  }
  std::string head = c.id_.substr(0, c.id_.find_first_of(":(+"));
  if (head == "wnm") {
    c.family_ = Family::wnm;
  } else if (head == "sum") {
    c.family_ = Family::ordinal_sum;
  } else if (auto fam = parse_family(head)) {
    c.family_ = *fam;
  }
  return c;
}

Chain Chain::rational_family(Family family, bool has_delta) {
  switch (family) {
    case Family::lukasiewicz:
    case Family::godel:
    case Family::product:
    case Family::nm:
    case Family::dp:
      break;
    default:
      throw Error(Errc::invalid_parameter,
                  std::string(family_name(family)) + " has no rational-valued form");
  }
  Chain c;
  c.kind_ = ChainKind::rational_family;
  c.family_ = family;
  c.has_delta_ = has_delta;
  c.id_ = std::string(family_name(family)) + ":rational" + (has_delta ? "+delta" : "");
  return c;
}

std::size_t Chain::size() const {
  if (!is_finite()) throw Error(Errc::unsupported, id_ + " has an infinite carrier");
  return size_;
}

const std::vector<Rational>& Chain::labels() const {
  if (!is_finite()) throw Error(Errc::unsupported, id_ + " has an infinite carrier");
  return labels_;
}

std::optional<Index> Chain::index_of(const Rational& value) const {
  const auto& l = labels();
  auto it = std::lower_bound(l.begin(), l.end(), value);
  if (it == l.end() || *it != value) return std::nullopt;
  return static_cast<Index>(it - l.begin());
}

std::span<const Index> Chain::star_table() const {
  if (!is_finite()) throw Error(Errc::unsupported, id_ + " has no finite table");
  return star_;
}

std::span<const Index> Chain::residuum_table() const {
  if (!is_finite()) throw Error(Errc::unsupported, id_ + " has no finite table");
  return residuum_;
}

bool Chain::contains(const Rational& value) const {
  if (is_finite()) return index_of(value).has_value();
  if (value < 0 || value > 1) return false;
  // The rational drastic-product chain lives on [0,1/2] plus the top.
  if (family_ == Family::dp) return value <= Rational(1, 2) || value == 1;
  return true;
}

namespace {

Index require_index(const Chain& c, const Rational& v) {
  auto i = c.index_of(v);
  if (!i) throw Error(Errc::invalid_parameter, to_string(v) + " is not an element of " + c.id());
  return *i;
}

}  // namespace

Rational Chain::star(const Rational& x, const Rational& y) const {
  if (is_finite()) return label(star(require_index(*this, x), require_index(*this, y)));
  switch (family_) {
    case Family::lukasiewicz: {
      Rational s = x + y - 1;
      return s > 0 ? s : Rational(0);
    }
    case Family::godel:
      return std::min(x, y);
    case Family::product:
      return x * y;
    case Family::nm:
      return x <= 1 - y ? Rational(0) : std::min(x, y);
    case Family::dp:
      if (x == 1) return y;
      if (y == 1) return x;
      return Rational(0);
    default:
      throw Error(Errc::unsupported, "no operations for " + id_);
  }
}

Rational Chain::residuum(const Rational& x, const Rational& y) const {
  if (is_finite()) return label(residuum(require_index(*this, x), require_index(*this, y)));
  if (x <= y) return Rational(1);
  switch (family_) {
    case Family::lukasiewicz:
      return 1 - x + y;
    case Family::godel:
      return y;
    case Family::product:
      return y / x;
    case Family::nm:
      return std::max(Rational(1 - x), y);
    case Family::dp:
      return x == 1 ? y : Rational(1, 2);
    default:
      throw Error(Errc::unsupported, "no operations for " + id_);
  }
}

Rational Chain::delta(const Rational& x) const { return x == 1 ? Rational(1) : Rational(0); }

Chain Chain::with_id(std::string id) const {
  Chain c = *this;
  c.id_ = std::move(id);
  return c;
}

Chain Chain::with_delta(bool on) const {
  Chain c = *this;
  c.has_delta_ = on;
  return c;
}

bool operator==(const Chain& a, const Chain& b) {
  return a.kind_ == b.kind_ && a.family_ == b.family_ && a.has_delta_ == b.has_delta_ &&
         a.labels_ == b.labels_ && a.star_ == b.star_;
}

// ---------------------------------------------------------------------------

Chain make_chain(Family family, unsigned n) { return build_family(family, n); }

Chain make_wnm_chain(std::span<const Index> neg) {
  const std::size_t k = neg.size();
  if (k < 2 || k > kMaxChainSize) {
    throw Error(Errc::invalid_negation, "a weak negation needs between 2 and " +
                                            std::to_string(kMaxChainSize) + " points");
  }
  const Index top = static_cast<Index>(k - 1);
  auto fail = [](const std::string& why) { throw Error(Errc::invalid_negation, why); };
  for (Index v : neg) {
    if (v > top) fail("negation value " + std::to_string(v) + " out of range");
  }
  if (neg[0] != top) fail("negation must send bottom to top");
  if (neg[top] != 0) fail("negation must send top to bottom");
  for (std::size_t x = 0; x + 1 < k; ++x) {
    if (neg[x] < neg[x + 1]) {
      fail("negation is not order-reversing at " + std::to_string(x) + "," + std::to_string(x + 1));
    }
  }
  for (std::size_t x = 0; x < k; ++x) {
    if (x > neg[neg[x]]) fail("x <= neg(neg(x)) fails at " + std::to_string(x));
  }
  std::string id = "wnm:";
  for (std::size_t i = 0; i < k; ++i) id += (i ? "," : "") + std::to_string(neg[i]);
  Chain c = [&] {
    try {
      return Chain::from_table(id, equally_spaced(k), wnm_table(neg));
    } catch (const Error& e) {
      throw Error(Errc::invalid_negation, std::string("negation yields no MTL-chain: ") + e.what());
    }
  }();
  for (Index x = 0; x < k; ++x) {
    if (c.neg(x) != neg[x]) fail("chain negation differs from the given one at " + std::to_string(x));
  }
  return c;
}

std::vector<Index> residuum_from_star(std::span<const Index> star, std::size_t k) {
  if (star.size() != k * k) throw Error(Errc::invalid_parameter, "star table is not k x k");
  std::vector<Index> res(k * k);
  for (std::size_t x = 0; x < k; ++x) {
    for (std::size_t y = 0; y < k; ++y) {
      // {z : z*x <= y} must be a non-empty down-set; its maximum is the residuum.
      std::size_t z = 0;
      while (z < k && star[z * k + x] <= y) ++z;
      if (z == 0) {
        throw Error(Errc::no_residuum, "no z with z*" + std::to_string(x) + " <= " + std::to_string(y));
      }
      for (std::size_t w = z; w < k; ++w) {
        if (star[w * k + x] <= y) {
          throw Error(Errc::no_residuum, "star is not monotone: {z : z*" + std::to_string(x) +
                                             " <= " + std::to_string(y) + "} is not a down-set");
        }
      }
      res[x * k + y] = static_cast<Index>(z - 1);
    }
  }
  return res;
}

Chain ordinal_sum(const Chain& first, const Chain& second) {
  if (!first.is_finite() || !second.is_finite()) {
    throw Error(Errc::unsupported, "ordinal sums need finite chains");
  }
  if (!satisfies_identity(first, identity("inv")) || !satisfies_identity(first, identity("div"))) {
    throw Error(Errc::not_an_mv_chain, first.id() + " is not an MV-chain (fails inv or div)");
  }
  const std::size_t k1 = first.size() - 1;  // first block without its top
  const std::size_t k2 = second.size();
  const std::size_t k = k1 + k2;
  if (k > kMaxChainSize) throw Error(Errc::invalid_parameter, "ordinal sum too large");
  std::vector<Index> star(k * k);
  for (std::size_t x = 0; x < k; ++x) {
    for (std::size_t y = 0; y < k; ++y) {
      Index v;
      if (x < k1 && y < k1) {
        v = first.star(static_cast<Index>(x), static_cast<Index>(y));
      } else if (x >= k1 && y >= k1) {
        v = static_cast<Index>(k1 + second.star(static_cast<Index>(x - k1), static_cast<Index>(y - k1)));
      } else {
        v = static_cast<Index>(std::min(x, y));
      }
      star[x * k + y] = v;
    }
  }
  return Chain::from_table("sum(" + first.id() + "," + second.id() + ")", equally_spaced(k),
                           std::move(star), first.has_delta() && second.has_delta());
}

Chain delta_expand(const Chain& c) {
  if (c.has_delta()) return c;
  return c.with_delta(true).with_id(c.id() + "+delta");
}

namespace {

unsigned parse_count(std::string_view text, std::string_view whole) {
  if (text.empty() || text.size() > 6 ||
      !std::all_of(text.begin(), text.end(), [](char ch) { return ch >= '0' && ch <= '9'; })) {
    throw Error(Errc::invalid_parameter, "bad chain identifier '" + std::string(whole) + "'");
  }
  return static_cast<unsigned>(std::stoul(std::string(text)));
}

// Subscript digits (U+2080..U+2089) become ASCII so that Ł₂ reads as Ł2.
std::string ascii_digits(std::string_view s) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    auto third = i + 2 < s.size() ? static_cast<unsigned char>(s[i + 2]) : 0u;
    if (i + 2 < s.size() && s[i] == '\xE2' && s[i + 1] == '\x82' && third >= 0x80 && third <= 0x89) {
      out += static_cast<char>('0' + (third - 0x80));
      i += 2;
    } else {
      out += s[i];
    }
  }
  return out;
}

}  // namespace

Chain chain_from_id(std::string_view id) {
  constexpr std::string_view kDelta = "+delta";
  if (id.size() > kDelta.size() && id.substr(id.size() - kDelta.size()) == kDelta) {
    return delta_expand(chain_from_id(id.substr(0, id.size() - kDelta.size())));
  }
  if (id == "boolean" || id == "B") return make_chain(Family::boolean, 1);
  if (id.substr(0, 4) == "sum(" && id.back() == ')') {
    std::string_view inner = id.substr(4, id.size() - 5);
    int depth = 0;
    for (std::size_t i = 0; i < inner.size(); ++i) {
      if (inner[i] == '(') ++depth;
      if (inner[i] == ')') --depth;
      if (inner[i] == ',' && depth == 0) {
        return ordinal_sum(chain_from_id(inner.substr(0, i)), chain_from_id(inner.substr(i + 1)));
      }
    }
    throw Error(Errc::invalid_parameter, "bad ordinal sum identifier '" + std::string(id) + "'");
  }
  auto colon = id.find(':');
  if (colon != std::string_view::npos) {
    std::string_view head = id.substr(0, colon);
    std::string_view tail = id.substr(colon + 1);
    if (head == "wnm") {
      std::vector<Index> neg;
      std::size_t start = 0;
      while (start <= tail.size()) {
        auto comma = tail.find(',', start);
        if (comma == std::string_view::npos) comma = tail.size();
        neg.push_back(static_cast<Index>(parse_count(tail.substr(start, comma - start), id)));
        start = comma + 1;
      }
      return make_wnm_chain(neg);
    }
    auto fam = parse_family(head);
    if (!fam) throw Error(Errc::invalid_parameter, "unknown chain family '" + std::string(head) + "'");
    if (tail == "rational") return Chain::rational_family(*fam);
    return make_chain(*fam, parse_count(tail, id));
  }
  // Short aliases: L2, Ł2, G4, NM5, DP4.
  struct Alias {
    std::string_view prefix;
    Family family;
  };
  static constexpr Alias kAliases[] = {{"NM", Family::nm}, {"DP", Family::dp}, {"Ł", Family::lukasiewicz},
                                       {"L", Family::lukasiewicz}, {"G", Family::godel}};
  for (const auto& a : kAliases) {
    if (id.substr(0, a.prefix.size()) == a.prefix && id.size() > a.prefix.size()) {
      return make_chain(a.family, parse_count(ascii_digits(id.substr(a.prefix.size())), id));
    }
  }
  throw Error(Errc::invalid_parameter, "unknown chain identifier '" + std::string(id) + "'");
}

}  // namespace mtlwb
