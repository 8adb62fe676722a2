#include "mtlwb/error.hpp"

namespace mtlwb {

std::string_view errc_name(Errc code) {
  switch (code) {
    case Errc::invalid_parameter: return "invalid-parameter";
    case Errc::invalid_negation: return "invalid-negation";
    case Errc::no_residuum: return "no-residuum";
    case Errc::not_an_mv_chain: return "not-an-mv-chain";
    case Errc::not_wnm: return "not-wnm";
    case Errc::unsupported: return "unsupported";
    case Errc::law_violation: return "law-violation";
    case Errc::syntax_error: return "syntax-error";
    case Errc::arity_mismatch: return "arity-mismatch";
    case Errc::missing_variable: return "missing-variable";
    case Errc::no_delta: return "no-delta";
    case Errc::signature_mismatch: return "signature-mismatch";
    case Errc::unbound_variable: return "unbound-variable";
    case Errc::non_closed: return "non-closed";
    case Errc::not_classical: return "not-classical";
    case Errc::delta_present: return "delta-present";
    case Errc::enumeration_cap: return "enumeration-cap";
    case Errc::hash_mismatch: return "hash-mismatch";
    case Errc::format_error: return "format-error";
  }
  return "unknown";
}

}  // namespace mtlwb
