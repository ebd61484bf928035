#pragma once

// Fixed-size dynamic bitset used for relation rows and element subsets.
// Word-parallel and/or/andnot keep the closure and scan loops cheap.

#include <cstdint>
#include <cstddef>
#include <vector>

namespace pomc {

class Bits {
public:
  Bits() = default;
  explicit Bits(std::size_t n) : n_(n), w_((n + 63) / 64, 0) {}

  std::size_t size() const { return n_; }

  bool test(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }
  void set(std::size_t i) { w_[i >> 6] |= std::uint64_t(1) << (i & 63); }
  void reset(std::size_t i) { w_[i >> 6] &= ~(std::uint64_t(1) << (i & 63)); }
  void clear() { for (auto& w : w_) w = 0; }

  void set_all() {
    for (auto& w : w_) w = ~std::uint64_t(0);
    trim();
  }

  Bits& operator|=(const Bits& o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
    return *this;
  }
  Bits& operator&=(const Bits& o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
    return *this;
  }
  Bits& subtract(const Bits& o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
    return *this;
  }

  friend Bits operator|(Bits a, const Bits& b) { return a |= b; }
  friend Bits operator&(Bits a, const Bits& b) { return a &= b; }

  bool operator==(const Bits& o) const { return n_ == o.n_ && w_ == o.w_; }
  bool operator!=(const Bits& o) const { return !(*this == o); }

  bool any() const {
    for (auto w : w_) if (w) return true;
    return false;
  }
  bool none() const { return !any(); }

  bool intersects(const Bits& o) const {
    for (std::size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & o.w_[i]) return true;
    return false;
  }

  bool is_subset_of(const Bits& o) const {
    for (std::size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & ~o.w_[i]) return false;
    return true;
  }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : w_) c += static_cast<std::size_t>(__builtin_popcountll(w));
    return c;
  }

  // Index of the lowest set bit, or size() when empty.
  std::size_t first() const { return next(0); }

  std::size_t next(std::size_t from) const {
    if (from >= n_) return n_;
    std::size_t wi = from >> 6;
    std::uint64_t w = w_[wi] & (~std::uint64_t(0) << (from & 63));
    while (true) {
      if (w) return (wi << 6) + static_cast<std::size_t>(__builtin_ctzll(w));
      if (++wi == w_.size()) return n_;
      w = w_[wi];
    }
  }

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t i = first(); i < n_; i = next(i + 1)) f(i);
  }

  std::vector<std::size_t> to_indices() const {
    std::vector<std::size_t> out;
    for_each([&](std::size_t i) { out.push_back(i); });
    return out;
  }

  const std::vector<std::uint64_t>& words() const { return w_; }

private:
  void trim() {
    if (n_ & 63) w_.back() &= (~std::uint64_t(0)) >> (64 - (n_ & 63));
  }

  std::size_t n_ = 0;
  std::vector<std::uint64_t> w_;
};

// Subsets of poset elements are plain bit vectors.
using Subset = Bits;

}  // namespace pomc
