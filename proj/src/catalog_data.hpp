#pragma once

#include <cstddef>
#include <cstdint>

namespace projembed::catalog_data {

// Presentations at one fixed prime; star is the covering text or nullptr
// when the multiplier is trivial.
struct FixedEntry {
  const char* name;
  std::uint32_t p;
  const char* multiplier;
  const char* group;
  const char* star;
};

extern const FixedEntry kFixed[];
extern const std::size_t kFixedCount;

}  // namespace projembed::catalog_data
