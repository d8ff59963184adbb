#pragma once

#include <vector>

#include "projembed/cyclotomic.hpp"

namespace projembed {

using IntMatrix = std::vector<std::vector<BigInt>>;

// U * R * V = diag(d) with U, V unimodular and d[i] | d[i+1] among nonzero entries.
struct SmithForm {
  std::vector<BigInt> d;
  IntMatrix U, V, Vinv;
};

SmithForm smith_normal_form(const IntMatrix& r);

IntMatrix identity_matrix(std::size_t n);
IntMatrix multiply(const IntMatrix& a, const IntMatrix& b);

}  // namespace projembed
