#pragma once

#include <cstdint>

namespace projembed {

struct Limits {
  std::uint64_t max_order = 1000000;
  std::uint64_t max_classes_cubed = 200000000;

  // Defaults overridden by PROJEMBED_MAX_ORDER / PROJEMBED_MAX_CLASSES_CUBED.
  static Limits from_env();
};

}  // namespace projembed
