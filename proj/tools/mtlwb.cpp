// mtlwb: command-line front end for the chain, formula and model-checking library.
//
// Exit codes: 0 success (or "holds"), 1 a refutation / failed check, 2 usage or
// input errors.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "mtlwb/chain.hpp"
#include "mtlwb/corpus.hpp"
#include "mtlwb/error.hpp"
#include "mtlwb/formula.hpp"
#include "mtlwb/grounding.hpp"
#include "mtlwb/reductions.hpp"
#include "mtlwb/search.hpp"
#include "mtlwb/semantics.hpp"
#include "mtlwb/suites.hpp"

namespace {

using namespace mtlwb;

constexpr const char* kVersion = "mtlwb 1.0.0";

struct ExitCode {
  int code;
};

std::string slurp(std::istream& in) {
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

std::string read_file(const std::string& path) {
  if (path == "-") return slurp(std::cin);
  std::ifstream in(path);
  if (!in) throw Error(Errc::invalid_parameter, "cannot open '" + path + "'");
  return slurp(in);
}

struct LoadedChain {
  Chain chain;
  bool from_file;
};

// A chain argument is a file (or - for stdin) when one exists by that name,
// otherwise a chain identifier such as lukasiewicz:2, G4 or sum(L2,G2).
LoadedChain load_chain(const std::string& spec) {
  if (spec == "-" || std::filesystem::is_regular_file(spec)) {
    std::istringstream in(read_file(spec));
    return {read_chain(in, spec == "-" ? "stdin" : spec), true};
  }
  return {chain_from_id(spec), false};
}

Formula load_formula(const std::string& text, const std::string& file, Syntax syntax) {
  if (!text.empty() && !file.empty()) {
    throw Error(Errc::invalid_parameter, "give either --formula or --formula-file, not both");
  }
  if (!file.empty()) return parse(read_file(file), syntax);
  if (text.empty()) throw Error(Errc::invalid_parameter, "a formula is required");
  return parse(text, syntax);
}

Model load_model(const std::string& path) {
  std::istringstream in(read_file(path));
  return read_model(in);
}

void add_formula_options(CLI::App* cmd, std::string& text, std::string& file) {
  cmd->add_option("-f,--formula", text, "Formula text");
  cmd->add_option("--formula-file", file, "File holding the formula text (- for stdin)");
}

std::vector<std::pair<std::string, std::string>> split_assignments(const std::vector<std::string>& items) {
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& item : items) {
    auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0) {
      throw Error(Errc::invalid_parameter, "expected NAME=VALUE, got '" + item + "'");
    }
    out.emplace_back(item.substr(0, eq), item.substr(eq + 1));
  }
  return out;
}

void print_chain_summary(const Chain& c) {
  std::cout << "id " << c.id() << "\n";
  if (!c.is_finite()) {
    std::cout << "kind rational\n";
    return;
  }
  std::size_t k = c.size();
  std::cout << "size " << k << "\n" << "labels";
  for (const auto& l : c.labels()) std::cout << " " << to_string(l);
  std::cout << "\ndelta " << (c.has_delta() ? 1 : 0) << "\n";
  auto table = [&](const char* name, auto&& op) {
    std::cout << name << "\n";
    for (Index x = 0; x < k; ++x) {
      for (Index y = 0; y < k; ++y) std::cout << (y ? " " : "") << op(x, y);
      std::cout << "\n";
    }
  };
  table("star", [&](Index x, Index y) { return c.star(x, y); });
  table("residuum", [&](Index x, Index y) { return c.residuum(x, y); });
  std::cout << "negation";
  for (Index x = 0; x < k; ++x) std::cout << " " << c.neg(x);
  std::cout << "\n";
  NegationProfile p = negation_profile(c);
  std::cout << "a-plus";
  for (Index x : p.a_plus) std::cout << " " << to_string(c.label(x));
  std::cout << "\nfixpoint " << (p.fixpoint ? to_string(c.label(*p.fixpoint)) : "none") << "\n";
}

int run(int argc, char** argv) {
  CLI::App app{"Finite MTL-chains, first-order many-valued formulas and bounded model checking.\n"
               "Chains are given as files or identifiers: boolean, lukasiewicz:n (n+1 elements),\n"
               "godel:n, nm:n, dp:n (n elements), wnm:a,b,..., sum(A,B), suffix +delta,\n"
               "aliases L<n> G<n> NM<n> DP<n> B, and <family>:rational.",
               "mtlwb"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  // chain ---------------------------------------------------------------
  auto* chain = app.add_subcommand("chain", "Build and inspect chains");
  chain->require_subcommand(1);

  std::string make_family;
  unsigned make_n = 0;
  std::vector<unsigned> make_neg;
  bool make_delta = false;
  auto* make = chain->add_subcommand("make", "Write a named chain as a chain file");
  make->add_option("family", make_family, "boolean, lukasiewicz, godel, nm, dp or wnm")->required();
  make->add_option("n", make_n, "lukasiewicz: n+1 elements; godel, nm, dp: n elements");
  make->add_option("--neg", make_neg, "wnm: the weak negation as carrier indices")->delimiter(',');
  make->add_flag("--delta", make_delta, "Add the delta connective");
  make->callback([&] {
    Chain c = make_chain(Family::boolean, 1);
    if (make_family == "wnm") {
      std::vector<Index> neg(make_neg.begin(), make_neg.end());
      c = make_wnm_chain(neg);
    } else {
      auto fam = parse_family(make_family);
      if (!fam) throw Error(Errc::invalid_parameter, "unknown family '" + make_family + "'");
      if (*fam != Family::boolean && make_n == 0) throw Error(Errc::invalid_parameter, "n is required");
      c = make_chain(*fam, *fam == Family::boolean ? 1 : make_n);
    }
    if (make_delta) c = delta_expand(c);
    write_chain(std::cout, c);
  });

  std::string check_src = "-";
  auto* check = chain->add_subcommand("check", "Validate a chain file (default: stdin)");
  check->add_option("chain", check_src, "Chain file or identifier");
  check->callback([&] {
    LoadedChain lc{make_chain(Family::boolean, 1), false};
    try {
      lc = load_chain(check_src);
    } catch (const Error& e) {
      if (e.code() != Errc::law_violation && e.code() != Errc::no_residuum) throw;
      std::cout << "fail " << e.what() << "\n";
      throw ExitCode{1};
    }
    ChainReport report = check_chain(lc.chain);
    for (const auto& v : report.violations) std::cout << "fail " << v.law << ": " << v.detail << "\n";
    if (!report.ok()) throw ExitCode{1};
    if (lc.chain.is_finite()) std::cout << "size " << lc.chain.size() << "\n";
    std::cout << "all-pass\n";
  });

  std::string show_src = "-";
  auto* show = chain->add_subcommand("show", "Print tables, negation and A+ of a chain");
  show->add_option("chain", show_src, "Chain file or identifier");
  show->callback([&] { print_chain_summary(load_chain(show_src).chain); });

  std::string sub_src = "-";
  auto* subs = chain->add_subcommand("subchains", "List the subalgebras of a chain");
  subs->add_option("chain", sub_src, "Chain file or identifier");
  subs->callback([&] {
    Chain c = load_chain(sub_src).chain;
    for (const auto& s : subchains(c)) {
      std::cout << "size " << s.size() << ":";
      for (Index i : s) std::cout << " " << to_string(c.label(i));
      std::cout << "\n";
    }
  });

  std::string sum_a, sum_b;
  auto* sum = chain->add_subcommand("sum", "Ordinal sum of an MV-chain and a chain");
  sum->add_option("first", sum_a, "MV-chain")->required();
  sum->add_option("second", sum_b, "Any finite chain")->required();
  sum->callback([&] { write_chain(std::cout, ordinal_sum(load_chain(sum_a).chain, load_chain(sum_b).chain)); });

  std::string delta_src = "-";
  auto* delta = chain->add_subcommand("delta", "Add the delta connective to a chain");
  delta->add_option("chain", delta_src, "Chain file or identifier");
  delta->callback([&] { write_chain(std::cout, delta_expand(load_chain(delta_src).chain)); });

  // parse ---------------------------------------------------------------
  std::string f_text, f_file;
  bool prop = false, show_desugar = false, show_closure = false;
  auto* parse_cmd = app.add_subcommand("parse", "Parse a formula and print its canonical form");
  add_formula_options(parse_cmd, f_text, f_file);
  parse_cmd->add_flag("--prop", prop, "Propositional syntax");
  parse_cmd->add_flag("--desugar", show_desugar, "Rewrite ~, \\/ and <-> into primitives");
  parse_cmd->add_flag("--closure", show_closure, "Universally close the formula");
  parse_cmd->callback([&] {
    Formula f = load_formula(f_text, f_file, prop ? Syntax::prop : Syntax::fo);
    if (show_desugar) f = desugar(f);
    if (show_closure) f = universal_closure(f);
    std::cout << f << "\n";
  });

  // eval ----------------------------------------------------------------
  std::string chain_src, model_src;
  std::vector<std::string> assigns;
  auto* eval = app.add_subcommand("eval", "Truth value of a formula in a model (or under an assignment)");
  eval->add_option("-c,--chain", chain_src, "Chain file or identifier")->required();
  eval->add_option("-m,--model", model_src, "Model file (first-order formulas)");
  add_formula_options(eval, f_text, f_file);
  eval->add_option("-a,--assign", assigns,
                   "NAME=VALUE: propositional values, or individual variables (1-based) with --model");
  eval->callback([&] {
    Chain c = load_chain(chain_src).chain;
    auto pairs = split_assignments(assigns);
    if (model_src.empty()) {
      Formula f = load_formula(f_text, f_file, Syntax::prop);
      Assignment a;
      for (const auto& [k, v] : pairs) a[k] = parse_rational(v);
      std::cout << to_string(eval_prop(c, a, f)) << "\n";
      return;
    }
    Formula f = load_formula(f_text, f_file, Syntax::fo);
    Valuation v;
    for (const auto& [k, val] : pairs) v[k] = std::stoul(val);
    std::cout << to_string(eval_fo(c, load_model(model_src), v, f)) << "\n";
  });

  // ground --------------------------------------------------------------
  std::size_t ground_size = 1;
  auto* ground_cmd = app.add_subcommand("ground", "Propositional coding of a closed formula");
  add_formula_options(ground_cmd, f_text, f_file);
  ground_cmd->add_option("-n,--size", ground_size, "Domain size")->required();
  ground_cmd->callback([&] {
    GroundedFormula g = ground(load_formula(f_text, f_file, Syntax::fo), ground_size);
    std::cout << g.formula << "\n";
    for (const auto& [name, cell] : g.legend) {
      std::cout << name << " = " << cell.predicate;
      if (!cell.tuple.empty()) {
        std::cout << "(";
        for (std::size_t i = 0; i < cell.tuple.size(); ++i) std::cout << (i ? "," : "") << cell.tuple[i];
        std::cout << ")";
      }
      std::cout << "\n";
    }
  });

  // taut ----------------------------------------------------------------
  std::size_t bound = 1;
  bool direct = false;
  unsigned workers = 1;
  auto* taut = app.add_subcommand("taut", "Tautology check: propositional, or over models of size <= N");
  taut->add_option("-c,--chain", chain_src, "Chain file or identifier")->required();
  add_formula_options(taut, f_text, f_file);
  taut->add_flag("--prop", prop, "Propositional tautology over the chain");
  taut->add_option("-N,--bound", bound, "Largest domain size");
  taut->add_flag("--direct", direct, "Enumerate models directly instead of grounding");
  taut->add_option("-j,--workers", workers, "Worker threads for --direct");
  taut->callback([&] {
    Chain c = load_chain(chain_src).chain;
    if (prop) {
      auto r = is_taut_prop(c, load_formula(f_text, f_file, Syntax::prop));
      if (r.tautology) {
        std::cout << "tautology\n";
        return;
      }
      std::cout << "refuted value " << to_string(*r.value) << "\n";
      for (const auto& [k, v] : *r.witness) std::cout << "assign " << k << " " << to_string(v) << "\n";
      throw ExitCode{1};
    }
    Formula f = load_formula(f_text, f_file, Syntax::fo);
    BoundedVerdict v = direct ? taut_upto_direct(c, f, bound, workers) : taut_upto_grounded(c, f, bound);
    if (v.closed_automatically) std::cout << "closed " << v.checked << "\n";
    if (v.taut) {
      std::cout << "taut-up-to-" << v.bound << "\n";
      return;
    }
    std::cout << "refuted at " << *v.refuted_at << " value " << to_string(*v.value) << "\n";
    if (v.model) write_model(std::cout, *v.model);
    throw ExitCode{1};
  });

  // translate / modelmap / fragment -------------------------------------
  std::string pass;
  auto* translate = app.add_subcommand("translate", "Apply a formula translation");
  translate->add_option("-p,--pass", pass, "Translation")
      ->required()
      ->check(CLI::IsMember({"wnm-star", "predef", "luk-star", "double-neg", "delta-guard"}));
  add_formula_options(translate, f_text, f_file);
  translate->callback([&] {
    Formula f = load_formula(f_text, f_file, Syntax::fo);
    Formula out = pass == "wnm-star"     ? wnm_star(f)
                  : pass == "predef"     ? predef(f)
                  : pass == "luk-star"   ? luk_star(f)
                  : pass == "double-neg" ? double_neg(f)
                                         : delta_guard(f);
    std::cout << out << "\n";
  });

  auto* modelmap = app.add_subcommand("modelmap", "Apply a model transformation");
  modelmap->add_option("-p,--pass", pass, "Transformation")
      ->required()
      ->check(CLI::IsMember({"plus", "boolean-collapse"}));
  modelmap->add_option("-c,--chain", chain_src, "Chain file or identifier")->required();
  modelmap->add_option("-m,--model", model_src, "Model file")->required();
  modelmap->callback([&] {
    Chain c = load_chain(chain_src).chain;
    Model m = load_model(model_src);
    write_model(std::cout, pass == "plus" ? model_plus(c, m) : boolean_collapse(c, m));
  });

  auto* fragment = app.add_subcommand("fragment", "Goedel fragment on A+ with bottom, plus its embedding");
  fragment->add_option("-c,--chain", chain_src, "Chain file or identifier")->required();
  fragment->callback([&] {
    Chain c = load_chain(chain_src).chain;
    GodelFragment g = godel_fragment(c);
    write_chain(std::cout, g.chain);
    for (std::size_t i = 0; i < g.embedding.size(); ++i) {
      std::cout << "embed " << to_string(g.chain.label(static_cast<Index>(i))) << " "
                << to_string(c.label(g.embedding[i])) << "\n";
    }
  });

  // search / verify / lift ----------------------------------------------
  std::size_t max_size = 1;
  unsigned grid = 0;
  bool inline_chain = false;
  auto* search = app.add_subcommand("search", "Look for a finite countermodel");
  search->add_option("-c,--chain", chain_src, "Chain file or identifier")->required();
  add_formula_options(search, f_text, f_file);
  search->add_option("-N,--max-size", max_size, "Largest domain size")->required();
  search->add_option("--grid", grid, "Cell values p/q with q <= D instead of the carrier");
  search->add_option("-j,--workers", workers, "Worker threads");
  search->add_flag("--inline-chain", inline_chain, "Embed the chain table in the certificate");
  search->callback([&] {
    LoadedChain lc = load_chain(chain_src);
    SearchOptions o;
    o.max_size = max_size;
    o.workers = workers;
    o.inline_chain = inline_chain || lc.from_file;
    if (grid > 0) {
      std::vector<Rational> vals;
      for (const auto& q : rational_grid(grid)) {
        if (lc.chain.contains(q)) vals.push_back(q);
      }
      o.values = vals;
    }
    SearchResult r = find_countermodel(lc.chain, load_formula(f_text, f_file, Syntax::fo), o);
    switch (r.status) {
      case SearchStatus::taut_up_to:
        std::cout << "taut-up-to-" << r.max_size << "\n";
        return;
      case SearchStatus::inconclusive:
        std::cout << "inconclusive-up-to-" << r.max_size << "\n";
        return;
      case SearchStatus::refuted:
        write_certificate(std::cout, *r.certificate);
        throw ExitCode{1};
    }
  });

  std::string cert_src;
  auto* verify = app.add_subcommand("verify", "Re-check a countermodel certificate");
  verify->add_option("--certificate", cert_src, "Certificate file (- for stdin)")->required();
  verify->add_option("-c,--chain", chain_src, "Replay against this chain instead");
  verify->callback([&] {
    std::istringstream in(read_file(cert_src));
    Certificate cert = read_certificate(in);
    bool ok = false;
    try {
      ok = chain_src.empty() ? verify_certificate(cert) : verify_certificate(cert, load_chain(chain_src).chain);
    } catch (const Error& e) {
      if (e.code() != Errc::hash_mismatch) throw;
      std::cout << "invalid: " << e.what() << "\n";
      throw ExitCode{1};
    }
    std::cout << (ok ? "valid" : "invalid") << "\n";
    if (!ok) throw ExitCode{1};
  });

  auto* lift = app.add_subcommand("lift", "Turn a propositional formula into a closed first-order one");
  add_formula_options(lift, f_text, f_file);
  lift->callback([&] { std::cout << lift_prop(load_formula(f_text, f_file, Syntax::prop)) << "\n"; });

  // suite ---------------------------------------------------------------
  std::string suite_name;
  SuiteOptions so;
  unsigned trials = 0;
  bool machine = false;
  auto* suite = app.add_subcommand("suite", "Run a named verification suite ('all' runs every suite)");
  suite->add_option("name", suite_name, "Suite name")->required();
  suite->add_option("--trials", trials, "Random formulas instead of the fixed corpus");
  suite->add_option("--seed", so.seed, "Random seed");
  suite->add_option("--depth", so.depth, "Depth of random formulas");
  suite->add_option("-j,--workers", so.workers, "Worker threads");
  suite->add_option("-N,--bound", so.bound, "Domain bound for tautology comparisons");
  suite->add_option("--model-size", so.model_size, "Largest model size for per-model checks");
  suite->add_flag("--machine", machine, "Line-oriented report");
  suite->callback([&] {
    if (trials > 0) so.trials = trials;
    std::vector<std::string> names;
    if (suite_name == "all") {
      names = suite_names();
    } else if (suite_name == "list") {
      for (const auto& n : suite_names()) std::cout << n << "\n";
      return;
    } else {
      names = {suite_name};
    }
    bool ok = true;
    for (const auto& n : names) {
      SuiteReport r = run_suite(n, so);
      write_report(std::cout, r, machine);
      ok = ok && r.ok();
    }
    if (!ok) throw ExitCode{1};
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const ExitCode& e) {
    return e.code;
  } catch (const mtlwb::Error& e) {
    std::cerr << "error: " << mtlwb::errc_name(e.code()) << ": " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
