#ifndef MTLWB_ERROR_HPP
#define MTLWB_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace mtlwb {

enum class Errc {
  invalid_parameter,
  invalid_negation,
  no_residuum,
  not_an_mv_chain,
  not_wnm,
  unsupported,
  law_violation,
  syntax_error,
  arity_mismatch,
  missing_variable,
  no_delta,
  signature_mismatch,
  unbound_variable,
  non_closed,
  not_classical,
  delta_present,
  enumeration_cap,
  hash_mismatch,
  format_error,
};

std::string_view errc_name(Errc code);

/// All library failures are reported through this exception; `code()` tells
/// callers (and the CLI exit-code logic) which contract was broken.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace mtlwb

#endif  // MTLWB_ERROR_HPP
