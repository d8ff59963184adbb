#include <iostream>

#include "harness.hpp"

int main(int argc, char** argv) {
  bool verbose = argc > 1 && std::string(argv[1]) == "-v";
  auto checks = projembed::run_property_suite(verbose ? &std::cout : nullptr);
  bool ok = true;
  for (auto& c : checks) {
    std::cout << (c.ok() && c.cases ? "ok   " : "FAIL ") << c.name << " (" << c.cases << " cases)\n";
    for (auto& f : c.failures) std::cout << "     " << f << "\n";
    ok = ok && c.ok() && c.cases > 0;
  }
  return ok ? 0 : 1;
}
