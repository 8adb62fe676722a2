#include "mtlwb/search.hpp"

#include <algorithm>
#include <atomic>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <thread>

#include "engine.hpp"
#include "mtlwb/error.hpp"

namespace mtlwb {

std::string_view status_name(SearchStatus s) {
  switch (s) {
    case SearchStatus::refuted: return "refuted";
    case SearchStatus::taut_up_to: return "taut-up-to";
    case SearchStatus::inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

// ---------------------------------------------------------------------------
// Certificate text

void write_certificate(std::ostream& out, const Certificate& cert) {
  out << "mtlcert 1\n";
  out << "chain " << cert.chain_id << '\n';
  out << "hash " << cert.chain_hash << '\n';
  out << "formula " << to_string(cert.formula) << '\n';
  if (cert.inline_chain) {
    out << "begin-chain\n";
    write_chain(out, *cert.inline_chain);
    out << "end-chain\n";
  }
  write_model(out, cert.model);
  for (const auto& [var, elem] : cert.valuation) out << "assign " << var << ' ' << elem << '\n';
  out << "value " << to_string(cert.value) << '\n';
}

std::string certificate_to_text(const Certificate& cert) {
  std::ostringstream out;
  write_certificate(out, cert);
  return out.str();
}

namespace {

[[noreturn]] void bad_cert(const std::string& what) {
  throw Error(Errc::format_error, "certificate: " + what);
}

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

// Splits "key rest" on the first blank.
std::pair<std::string, std::string> split_key(const std::string& line) {
  auto sp = line.find_first_of(" \t");
  if (sp == std::string::npos) return {line, ""};
  return {line.substr(0, sp), trim(line.substr(sp + 1))};
}

}  // namespace

Certificate read_certificate(std::istream& in) {
  std::vector<std::string> lines;
  for (std::string line; std::getline(in, line);) {
    line = trim(line);
    if (!line.empty()) lines.push_back(line);
  }
  std::size_t i = 0;
  auto next = [&](const char* what) -> const std::string& {
    if (i >= lines.size()) bad_cert(std::string("unexpected end of input, expected ") + what);
    return lines[i++];
  };
  if (next("header") != "mtlcert 1") bad_cert("expected 'mtlcert 1'");
  Certificate cert;
  auto expect = [&](const char* key) {
    auto [k, rest] = split_key(next(key));
    if (k != key || rest.empty()) bad_cert(std::string("expected '") + key + " ...'");
    return rest;
  };
  cert.chain_id = expect("chain");
  cert.chain_hash = expect("hash");
  try {
    cert.formula = parse(expect("formula"));
  } catch (const Error& e) {
    bad_cert(std::string("formula: ") + e.what());
  }
  if (i < lines.size() && lines[i] == "begin-chain") {
    ++i;
    std::string block;
    while (i < lines.size() && lines[i] != "end-chain") block += lines[i++] + '\n';
    if (i == lines.size()) bad_cert("missing end-chain");
    ++i;
    std::istringstream cs(block);
    cert.inline_chain = read_chain(cs, cert.chain_id);
  }
  std::string model_block;
  while (i < lines.size()) {
    auto key = split_key(lines[i]).first;
    if (key == "assign" || key == "value") break;
    model_block += lines[i++] + '\n';
  }
  std::istringstream ms(model_block);
  cert.model = read_model(ms);
  bool have_value = false;
  while (i < lines.size()) {
    auto [key, rest] = split_key(lines[i++]);
    if (key == "assign") {
      std::istringstream as(rest);
      std::string var;
      std::size_t elem = 0;
      if (!(as >> var >> elem)) bad_cert("malformed assign line");
      cert.valuation[var] = elem;
    } else if (key == "value" && !have_value) {
      try {
        cert.value = parse_rational(rest);
      } catch (const Error& e) {
        bad_cert(e.what());
      }
      have_value = true;
    } else {
      bad_cert("unexpected line '" + lines[i - 1] + "'");
    }
  }
  if (!have_value) bad_cert("missing value line");
  return cert;
}

bool verify_certificate(const Certificate& cert, const Chain& chain) {
  if (chain_hash(chain) != cert.chain_hash) {
    throw Error(Errc::hash_mismatch, "chain " + chain.id() + " has hash " + chain_hash(chain) +
                                         ", certificate expects " + cert.chain_hash);
  }
  if (!(cert.value < 1)) return false;
  try {
    return eval_fo(chain, cert.model, cert.valuation, cert.formula) == cert.value;
  } catch (const Error& e) {
    if (e.code() == Errc::no_delta) throw;
    // A model that does not fit the formula or chain cannot witness anything.
    return false;
  }
}

bool verify_certificate(const Certificate& cert) {
  Chain chain = cert.inline_chain ? *cert.inline_chain : chain_from_id(cert.chain_id);
  return verify_certificate(cert, chain);
}

// ---------------------------------------------------------------------------
// Search

namespace {

constexpr std::uint64_t kNone = std::numeric_limits<std::uint64_t>::max();

// Scans ranks [begin, end) and returns the first one whose model falls below
// top, or kNone. Gives up early once `best` drops below the current rank.
template <class Alg, class Cell>
std::uint64_t scan_block(const Alg& alg, const detail::Program& prog, const detail::CellLayout& layout,
                         const std::vector<Cell>& palette, const Cell& top, std::uint64_t begin,
                         std::uint64_t end, const std::atomic<std::uint64_t>& best,
                         std::atomic<std::uint64_t>& checked) {
  detail::Evaluator<Alg> ev(prog, alg, layout);
  detail::Odometer odo(layout.cells, palette.size());
  odo.seek(begin);
  std::vector<Cell> cells(layout.cells);
  std::uint64_t local = 0;
  for (std::uint64_t rank = begin; rank < end; ++rank) {
    if ((local & 1023) == 0 && best.load(std::memory_order_relaxed) < rank) break;
    const auto& d = odo.digits();
    for (std::size_t i = 0; i < cells.size(); ++i) cells[i] = palette[d[i]];
    ++local;
    if (!(ev.run(cells.data()) == top)) {
      checked += local;
      return rank;
    }
    odo.next();
  }
  checked += local;
  return kNone;
}

template <class Alg, class Cell>
std::uint64_t first_failure(const Alg& alg, const detail::Program& prog, const detail::CellLayout& layout,
                            const std::vector<Cell>& palette, const Cell& top, std::uint64_t count,
                            unsigned workers, std::atomic<std::uint64_t>& checked) {
  std::atomic<std::uint64_t> best{kNone};
  if (workers <= 1 || count < 4096) {
    return scan_block(alg, prog, layout, palette, top, 0, count, best, checked);
  }
  workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, count));
  std::vector<std::thread> pool;
  std::vector<std::uint64_t> found(workers, kNone);
  std::vector<std::exception_ptr> errors(workers);
  const std::uint64_t chunk = count / workers + (count % workers != 0);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        std::uint64_t b = w * chunk;
        std::uint64_t e = std::min(count, b + chunk);
        if (b >= e) return;
        found[w] = scan_block(alg, prog, layout, palette, top, b, e, best, checked);
        // Publish the smallest rank so later blocks can stop.
        std::uint64_t cur = best.load();
        while (found[w] < cur && !best.compare_exchange_weak(cur, found[w])) {
        }
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return *std::min_element(found.begin(), found.end());
}

}  // namespace

SearchResult find_countermodel(const Chain& c, const Formula& f, const SearchOptions& options) {
  if (options.max_size < 1) throw Error(Errc::invalid_parameter, "max size must be at least 1");
  SearchResult result;
  result.max_size = options.max_size;
  result.closed_automatically = !is_closed(f);
  const Formula closed = universal_closure(f);
  const Signature sig = signature(closed);

  std::vector<Rational> values;
  bool full_carrier = false;
  if (options.values) {
    values = *options.values;
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    if (values.empty()) throw Error(Errc::invalid_parameter, "value set is empty");
    for (const auto& v : values) {
      if (!c.contains(v)) throw Error(Errc::invalid_parameter, to_string(v) + " is not an element of " + c.id());
    }
    full_carrier = c.is_finite() && values.size() == c.size();
  } else {
    if (!c.is_finite()) {
      throw Error(Errc::invalid_parameter, "searching " + c.id() + " needs an explicit value grid");
    }
    values = c.labels();
    full_carrier = true;
  }

  std::atomic<std::uint64_t> checked{0};
  for (std::size_t n = 1; n <= options.max_size; ++n) {
    detail::CellLayout layout(sig, n);
    std::uint64_t count = detail::checked_pow(values.size(), layout.cells);
    if (count > options.cap) {
      throw Error(Errc::enumeration_cap, "size " + std::to_string(n) + " needs " +
                                             std::to_string(values.size()) + "^" +
                                             std::to_string(layout.cells) +
                                             " models, over the enumeration cap of " +
                                             std::to_string(options.cap));
    }
    auto prog = detail::compile(closed, layout, {});
    std::uint64_t rank = kNone;
    std::vector<Rational> labels;
    if (c.is_finite()) {
      std::vector<Index> palette;
      for (const auto& v : values) palette.push_back(*c.index_of(v));
      detail::FiniteAlgebra alg(c);
      rank = first_failure(alg, prog, layout, palette, c.top(), count, options.workers, checked);
      if (rank != kNone) {
        detail::Odometer odo(layout.cells, values.size());
        odo.seek(rank);
        for (auto d : odo.digits()) labels.push_back(values[d]);
      }
    } else {
      detail::RationalAlgebra alg(c);
      rank = first_failure(alg, prog, layout, values, Rational(1), count, options.workers, checked);
      if (rank != kNone) {
        detail::Odometer odo(layout.cells, values.size());
        odo.seek(rank);
        for (auto d : odo.digits()) labels.push_back(values[d]);
      }
    }
    if (rank != kNone) {
      Certificate cert;
      cert.chain_id = c.id();
      cert.chain_hash = chain_hash(c);
      if (options.inline_chain && c.is_finite()) cert.inline_chain = c;
      cert.formula = closed;
      cert.model = detail::unbind_model_labels(layout, labels);
      cert.value = eval_fo(c, cert.model, {}, closed);
      result.status = SearchStatus::refuted;
      result.certificate = std::move(cert);
      result.models_checked = checked.load();
      return result;
    }
  }
  result.models_checked = checked.load();
  result.status = full_carrier ? SearchStatus::taut_up_to : SearchStatus::inconclusive;
  return result;
}

BoundedVerdict taut_upto_direct(const Chain& c, const Formula& f, std::size_t bound, unsigned workers) {
  if (!c.is_finite()) {
    throw Error(Errc::unsupported, "bounded tautology checking needs a finite chain, not " + c.id());
  }
  SearchOptions opt;
  opt.max_size = bound;
  opt.workers = workers;
  SearchResult r = find_countermodel(c, f, opt);
  BoundedVerdict v;
  v.bound = bound;
  v.checked = universal_closure(f);
  v.closed_automatically = r.closed_automatically;
  v.taut = r.status == SearchStatus::taut_up_to;
  if (r.certificate) {
    v.refuted_at = r.certificate->model.domain_size();
    v.model = r.certificate->model;
    v.value = r.certificate->value;
  }
  return v;
}

Formula lift_prop(const Formula& f) {
  if (!is_propositional(f)) throw Error(Errc::invalid_parameter, "lift expects a propositional formula");
  auto vars = predicates(f);
  Formula lifted = map_atoms(f, [&](const Formula& a) {
    auto i = std::find(vars.begin(), vars.end(), a.name()) - vars.begin() + 1;
    return Formula::atom("P" + std::to_string(i), {"x" + std::to_string(i)});
  });
  return universal_closure(lifted);
}

}  // namespace mtlwb
