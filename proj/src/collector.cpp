#include "projembed/collector.hpp"

#include "projembed/errors.hpp"

namespace projembed {

namespace {
constexpr std::uint32_t kUnset = 0xffffffffu;
}

Collector::Collector(const PcPresentation& p, bool dense)
    : p_(p), n_(p.size()), strides_(p.size()), order_(1), dense_(dense) {
  for (std::size_t i = n_; i-- > 0;) {
    strides_[i] = order_;
    order_ *= p.rel_orders[i];
  }
  pow_list_.resize(n_);
  conj_list_.assign(n_, std::vector<std::vector<std::uint32_t>>(n_));
  for (std::size_t i = 0; i < n_; ++i) refresh(i);
  if (dense_) {
    if (order_ * n_ >= kUnset) throw ResourceError("group too large for dense collection");
    dense_memo_.assign(order_ * n_, kUnset);
  }
}

std::vector<std::uint32_t> Collector::letters(const NormalWord& w) {
  std::vector<std::uint32_t> out;
  for (std::size_t k = 0; k < w.size(); ++k)
    for (std::uint32_t t = 0; t < w[k]; ++t) out.push_back(static_cast<std::uint32_t>(k));
  return out;
}

void Collector::refresh(std::size_t i) {
  pow_list_[i] = letters(p_.power_rels[i]);
  for (std::size_t j = i + 1; j < n_; ++j) conj_list_[j][i] = letters(p_.conj_rels[j][i]);
}

std::uint64_t Collector::encode(const NormalWord& w) const {
  std::uint64_t x = 0;
  for (std::size_t i = 0; i < n_; ++i) x += w[i] * strides_[i];
  return x;
}

NormalWord Collector::decode(std::uint64_t x) const {
  NormalWord w(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    w[i] = static_cast<std::uint32_t>(x / strides_[i]);
    x %= strides_[i];
  }
  return w;
}

std::uint64_t Collector::mul_gen(std::uint64_t x, std::size_t i) {
  const std::uint64_t key = x * n_ + i;
  if (dense_) {
    if (dense_memo_[key] != kUnset) return dense_memo_[key];
  } else {
    auto it = sparse_memo_.find(key);
    if (it != sparse_memo_.end()) return it->second;
  }
  // x = u * v with u on generators <= i, v on generators > i;
  // x * g_i = (u g_i) * v^{g_i}.
  std::uint64_t head = x - x % strides_[i];
  std::uint64_t tail = x % strides_[i];
  std::uint32_t ei = static_cast<std::uint32_t>((x / strides_[i]) % p_.rel_orders[i]);
  std::uint64_t cur;
  bool overflow = ei + 1 == p_.rel_orders[i];
  if (overflow)
    cur = head - static_cast<std::uint64_t>(ei) * strides_[i];
  else
    cur = head + strides_[i];
  if (overflow)
    for (std::uint32_t g : pow_list_[i]) cur = mul_gen(cur, g);
  for (std::size_t j = i + 1; j < n_ && tail; ++j) {
    std::uint64_t a = tail / strides_[j];
    tail %= strides_[j];
    for (std::uint64_t t = 0; t < a; ++t)
      for (std::uint32_t g : conj_list_[j][i]) cur = mul_gen(cur, g);
  }
  if (dense_)
    dense_memo_[key] = static_cast<std::uint32_t>(cur);
  else
    sparse_memo_.emplace(key, cur);
  return cur;
}

std::uint64_t Collector::multiply(std::uint64_t x, std::uint64_t y) {
  for (std::size_t i = 0; i < n_ && y; ++i) {
    std::uint64_t a = y / strides_[i];
    y %= strides_[i];
    for (std::uint64_t t = 0; t < a; ++t) x = mul_gen(x, i);
  }
  return x;
}

std::uint64_t Collector::gen_power(std::size_t i, std::uint64_t m) {
  std::uint64_t x = 0;
  for (std::uint64_t t = 0; t < m; ++t) x = mul_gen(x, i);
  return x;
}

}  // namespace projembed
