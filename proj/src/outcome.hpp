#pragma once

// Guarded evaluation of one side of a diagram: a side that throws is a
// failing instance, not an aborted check.

#include <optional>
#include <string>
#include <utility>

#include "itdist/errors.hpp"

namespace itdist::detail {

template <typename V>
struct Outcome {
  std::optional<V> value;
  std::string error;

  template <typename Render>
  std::string render(Render&& r) const {
    return value ? r(*value) : "error(" + error + ")";
  }
};

template <typename F>
auto attempt(F&& f) -> Outcome<decltype(f())> {
  try {
    return {f(), {}};
  } catch (const Error& e) {
    return {std::nullopt, e.what()};
  }
}

template <typename V>
bool agree(const Outcome<V>& a, const Outcome<V>& b) {
  return a.value && b.value && *a.value == *b.value;
}

}  // namespace itdist::detail
