#include "projembed/config.hpp"

#include <cstdlib>
#include <string>

namespace projembed {

namespace {

void read_env(const char* name, std::uint64_t& out) {
  const char* v = std::getenv(name);
  if (!v || !*v) return;
  try {
    out = std::stoull(v);
  } catch (...) {
  }
}

}  // namespace

Limits Limits::from_env() {
  Limits l;
  read_env("PROJEMBED_MAX_ORDER", l.max_order);
  read_env("PROJEMBED_MAX_CLASSES_CUBED", l.max_classes_cubed);
  return l;
}

}  // namespace projembed
