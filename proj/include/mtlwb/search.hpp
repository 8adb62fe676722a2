#ifndef MTLWB_SEARCH_HPP
#define MTLWB_SEARCH_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "mtlwb/chain.hpp"
#include "mtlwb/formula.hpp"
#include "mtlwb/grounding.hpp"
#include "mtlwb/semantics.hpp"

namespace mtlwb {

/// A finite countermodel: everything needed to re-check ||formula|| < 1 offline.
struct Certificate {
  std::string chain_id;
  std::string chain_hash;
  /// Copy of the chain table, required when the id cannot be rebuilt.
  std::optional<Chain> inline_chain;
  Formula formula;
  Model model{1};
  Valuation valuation;
  Rational value;
};

void write_certificate(std::ostream& out, const Certificate& cert);
std::string certificate_to_text(const Certificate& cert);
/// Errors: format_error.
Certificate read_certificate(std::istream& in);

/// Re-evaluates the certificate on the chain it names (inline copy first,
/// then the identifier). True iff the value matches and is below 1.
/// Errors: hash_mismatch when the rebuilt chain does not match the hash.
bool verify_certificate(const Certificate& cert);
/// Same, replayed against a given chain. Errors: hash_mismatch.
bool verify_certificate(const Certificate& cert, const Chain& chain);

enum class SearchStatus { refuted, taut_up_to, inconclusive };
std::string_view status_name(SearchStatus s);

struct SearchOptions {
  std::size_t max_size = 1;
  /// Cell values to try; defaults to the carrier, mandatory for rational families.
  std::optional<std::vector<Rational>> values;
  unsigned workers = 1;
  std::uint64_t cap = enumeration_cap();
  bool inline_chain = false;
};

struct SearchResult {
  SearchStatus status = SearchStatus::inconclusive;
  std::optional<Certificate> certificate;
  std::size_t max_size = 0;
  bool closed_automatically = false;
  std::uint64_t models_checked = 0;
};

/// Scans sizes 1..max_size and, per size, models in canonical order; returns
/// the first model with value below 1. The result does not depend on the
/// number of workers. Exhausting the space proves taut-up-to only when the
/// values are the full carrier of a finite chain; otherwise it is inconclusive.
/// Errors: enumeration_cap, invalid_parameter.
SearchResult find_countermodel(const Chain& c, const Formula& f, const SearchOptions& options);

/// Direct bounded check over all models of sizes 1..bound with the full carrier.
BoundedVerdict taut_upto_direct(const Chain& c, const Formula& f, std::size_t bound,
                                unsigned workers = 1);

/// The i-th propositional variable (first occurrence) becomes P<i>(x<i>);
/// the result is universally closed.
Formula lift_prop(const Formula& f);

}  // namespace mtlwb

#endif  // MTLWB_SEARCH_HPP
