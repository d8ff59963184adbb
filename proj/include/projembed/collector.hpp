#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "projembed/presentation.hpp"

namespace projembed {

// Collection from the left on a pc presentation. Elements are mixed-radix
// indices of their exponent vectors, the first generator most significant,
// so index order is lexicographic exponent order.
class Collector {
 public:
  explicit Collector(const PcPresentation& p, bool dense = false);

  std::uint64_t encode(const NormalWord& w) const;
  NormalWord decode(std::uint64_t x) const;
  std::uint64_t generator(std::size_t i) const { return strides_[i]; }

  // x * g_i in normal form.
  std::uint64_t mul_gen(std::uint64_t x, std::size_t i);
  std::uint64_t multiply(std::uint64_t x, std::uint64_t y);
  std::uint64_t gen_power(std::size_t i, std::uint64_t m);

  // Re-read relations of generator i after the presentation was edited.
  void refresh(std::size_t i);

 private:
  const PcPresentation& p_;
  std::size_t n_;
  std::vector<std::uint64_t> strides_;
  std::uint64_t order_;
  bool dense_;
  std::vector<std::vector<std::uint32_t>> pow_list_;
  std::vector<std::vector<std::vector<std::uint32_t>>> conj_list_;  // [j][i]
  std::vector<std::uint32_t> dense_memo_;
  std::unordered_map<std::uint64_t, std::uint64_t> sparse_memo_;

  static std::vector<std::uint32_t> letters(const NormalWord& w);
};

}  // namespace projembed
