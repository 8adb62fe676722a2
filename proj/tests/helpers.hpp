#ifndef MTLWB_TESTS_HELPERS_HPP
#define MTLWB_TESTS_HELPERS_HPP

#include <gtest/gtest.h>

#include <random>

#include "mtlwb/chain.hpp"
#include "mtlwb/error.hpp"
#include "mtlwb/semantics.hpp"

namespace testing_helpers {

inline mtlwb::Rational q(long a, long b = 1) { return mtlwb::Rational(a, b); }

template <class Fn>
mtlwb::Errc error_code(Fn&& fn) {
  try {
    fn();
  } catch (const mtlwb::Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error raised";
  return mtlwb::Errc::format_error;
}

inline mtlwb::Model random_model(std::mt19937_64& rng, const mtlwb::Chain& c, const mtlwb::Signature& sig,
                                 std::size_t n) {
  mtlwb::Model m(n);
  std::uniform_int_distribution<std::size_t> pick(0, c.size() - 1);
  for (const auto& [name, arity] : sig.entries()) {
    m.add_predicate(name, arity);
    for (auto& v : m.table(name).values) v = c.label(static_cast<mtlwb::Index>(pick(rng)));
  }
  return m;
}

inline mtlwb::Model unary_model(const char* pred, std::vector<mtlwb::Rational> values) {
  mtlwb::Model m(values.size());
  m.add_predicate(pred, 1);
  m.table(pred).values = std::move(values);
  return m;
}

}  // namespace testing_helpers

#endif  // MTLWB_TESTS_HELPERS_HPP
