#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace fingeo {

/// Runtime-sized bitset over [0, size). Word-level ops assume equal sizes.
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(int size) : size_(size), w_((size + 63) / 64, 0) {}

  int size() const { return size_; }
  bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }
  void set(int i) { w_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(int i) { w_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

  int count() const {
    int c = 0;
    for (auto x : w_) c += std::popcount(x);
    return c;
  }
  bool none() const {
    for (auto x : w_)
      if (x) return false;
    return true;
  }
  int count_and(const Bitset& o) const {
    int c = 0;
    for (std::size_t i = 0; i < w_.size(); ++i) c += std::popcount(w_[i] & o.w_[i]);
    return c;
  }

  Bitset& operator|=(const Bitset& o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
    return *this;
  }
  Bitset& operator&=(const Bitset& o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
    return *this;
  }
  Bitset& and_not(const Bitset& o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
    return *this;
  }

  /// Calls fn(i) for every set bit in increasing order.
  template <class Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t wi = 0; wi < w_.size(); ++wi) {
      std::uint64_t x = w_[wi];
      while (x) {
        const int b = std::countr_zero(x);
        fn(static_cast<int>(wi * 64 + b));
        x &= x - 1;
      }
    }
  }

  /// Index of the lowest set bit, or -1.
  int first() const {
    for (std::size_t wi = 0; wi < w_.size(); ++wi)
      if (w_[wi]) return static_cast<int>(wi * 64 + std::countr_zero(w_[wi]));
    return -1;
  }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    for_each([&](int i) { out.push_back(i); });
    return out;
  }

  friend bool operator==(const Bitset&, const Bitset&) = default;

 private:
  int size_ = 0;
  std::vector<std::uint64_t> w_;
};

}  // namespace fingeo
