#pragma once

#include <optional>
#include <string>

#include "grcat/error.hpp"

namespace grcat::testing {

/// Runs fn and reports the grcat error code it threw, if any.
template <class Fn>
std::optional<Errc> error_code_of(Fn&& fn) {
  try {
    fn();
    return std::nullopt;
  } catch (const Error& e) {
    return e.code;
  }
}

inline std::string data_path(const std::string& name) {
  return std::string(GRCAT_TEST_DATA_DIR) + "/" + name;
}

}  // namespace grcat::testing
