#pragma once

#include <cstddef>
#include <optional>
#include <string>

namespace braid {

struct FuzzReport {
  std::size_t trials = 0;
  std::size_t violations = 0;
  std::optional<std::string> first_counterexample;
};

}  // namespace braid
