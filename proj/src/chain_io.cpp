#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>

#include "mtlwb/chain.hpp"
#include "mtlwb/error.hpp"

namespace mtlwb {

void write_chain(std::ostream& out, const Chain& c) {
  const std::size_t k = c.size();
  out << "mtlchain 1\n";
  out << "size " << k << '\n';
  out << "labels";
  for (const auto& l : c.labels()) out << ' ' << to_string(l);
  out << '\n';
  out << "delta " << (c.has_delta() ? 1 : 0) << '\n';
  for (Index x = 0; x < k; ++x) {
    for (Index y = 0; y < k; ++y) out << (y ? " " : "") << c.star(x, y);
    out << '\n';
  }
}

std::string chain_to_text(const Chain& c) {
  std::ostringstream out;
  write_chain(out, c);
  return out.str();
}

namespace {

[[noreturn]] void bad(const std::string& what) {
  throw Error(Errc::format_error, "chain file: " + what);
}

std::string expect_word(std::istream& in, const char* what) {
  std::string w;
  if (!(in >> w)) bad(std::string("unexpected end of input, expected ") + what);
  return w;
}

void expect_keyword(std::istream& in, const char* key) {
  std::string w = expect_word(in, key);
  if (w != key) bad(std::string("expected '") + key + "', found '" + w + "'");
}

std::size_t expect_count(std::istream& in, const char* what) {
  std::string w = expect_word(in, what);
  if (w.empty() || w.size() > 9 || w.find_first_not_of("0123456789") != std::string::npos) {
    bad(std::string("expected ") + what + ", found '" + w + "'");
  }
  return std::stoul(w);
}

}  // namespace

Chain read_chain(std::istream& in, std::string id) {
  expect_keyword(in, "mtlchain");
  if (expect_count(in, "version") != 1) bad("unsupported version");
  expect_keyword(in, "size");
  std::size_t k = expect_count(in, "size");
  if (k == 0 || k > kMaxChainSize) bad("size out of range");
  expect_keyword(in, "labels");
  std::vector<Rational> labels;
  for (std::size_t i = 0; i < k; ++i) {
    try {
      labels.push_back(parse_rational(expect_word(in, "label")));
    } catch (const Error& e) {
      bad(e.what());
    }
  }
  expect_keyword(in, "delta");
  std::size_t delta = expect_count(in, "delta flag");
  if (delta > 1) bad("delta flag must be 0 or 1");
  std::vector<Index> star;
  star.reserve(k * k);
  for (std::size_t i = 0; i < k * k; ++i) {
    std::size_t v = expect_count(in, "table entry");
    if (v >= k) {
      throw Error(Errc::law_violation, "law bounds fails at (" + std::to_string(i / k) + ", " +
                                           std::to_string(i % k) + "): table entry " +
                                           std::to_string(v) + " out of range");
    }
    star.push_back(static_cast<Index>(v));
  }
  std::string extra;
  if (in >> extra) bad("trailing content '" + extra + "'");
  return Chain::from_table(std::move(id), std::move(labels), std::move(star), delta == 1);
}

std::string chain_hash(const Chain& c) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  // Rational families have no table; their identifier determines them.
  const std::string text = c.is_finite() ? chain_to_text(c) : "mtlchain-family " + c.id() + "\n";
  for (unsigned char ch : text) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace mtlwb
