#pragma once

#include <optional>
#include <utility>

#include "snell/errors.hpp"

namespace snell::testsupport {

// Runs f and reports the ErrorKind it threw, if any.
template <typename F>
std::optional<ErrorKind> thrown_kind(F&& f) {
  try {
    std::forward<F>(f)();
  } catch (const Error& e) {
    return e.kind();
  }
  return std::nullopt;
}

}  // namespace snell::testsupport
