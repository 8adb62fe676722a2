#ifndef MTLWB_SUITES_HPP
#define MTLWB_SUITES_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace mtlwb {

struct SuiteFailure {
  std::string chain;
  std::string formula;
  std::string model;  // model file text, empty when not applicable
  std::string expected;
  std::string got;
};

struct SuiteReport {
  std::string name;
  std::uint64_t cases = 0;
  std::vector<SuiteFailure> failures;
  double seconds = 0;
  bool ok() const noexcept { return failures.empty(); }
};

struct SuiteOptions {
  /// Random cases instead of the fixed corpus (suites that support it).
  std::optional<unsigned> trials;
  std::uint64_t seed = 1;
  unsigned depth = 3;
  unsigned workers = 1;
  /// Domain-size bound for the bounded tautology comparisons.
  std::size_t bound = 3;
  /// Largest model size for the exhaustive per-model checks.
  std::size_t model_size = 2;
};

const std::vector<std::string>& suite_names();

/// Runs one named suite. Cases may run on several workers; failures are
/// reported in case order. Errors: invalid_parameter for unknown names.
SuiteReport run_suite(std::string_view name, const SuiteOptions& options = {});

void write_report(std::ostream& out, const SuiteReport& report, bool machine);

}  // namespace mtlwb

#endif  // MTLWB_SUITES_HPP
