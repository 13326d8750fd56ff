#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace gfree {

// Dynamic bitset sized at construction. One word per 64 bits, so graphs at
// the scale this library targets (n <= 64) stay single-word.
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(int nbits) : nbits_(nbits), w_(words_for(nbits), 0) {}

  static Bitset full(int nbits) {
    Bitset b(nbits);
    for (auto& w : b.w_) w = ~std::uint64_t{0};
    b.trim();
    return b;
  }

  int size() const { return nbits_; }

  void set(int i) { w_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(int i) { w_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1; }

  int count() const {
    int c = 0;
    for (auto w : w_) c += std::popcount(w);
    return c;
  }

  bool any() const {
    for (auto w : w_)
      if (w) return true;
    return false;
  }
  bool none() const { return !any(); }

  bool intersects(const Bitset& o) const {
    for (std::size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & o.w_[i]) return true;
    return false;
  }

  int count_and(const Bitset& o) const {
    int c = 0;
    for (std::size_t i = 0; i < w_.size(); ++i)
      c += std::popcount(w_[i] & o.w_[i]);
    return c;
  }

  Bitset& operator&=(const Bitset& o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
    return *this;
  }
  Bitset& operator|=(const Bitset& o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
    return *this;
  }
  Bitset& andnot(const Bitset& o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
    return *this;
  }

  friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
  friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }

  // First set bit at index >= from, or -1.
  int next(int from = 0) const {
    if (from >= nbits_) return -1;
    int wi = from >> 6;
    std::uint64_t w = w_[wi] & (~std::uint64_t{0} << (from & 63));
    while (true) {
      if (w) return (wi << 6) + std::countr_zero(w);
      if (++wi == static_cast<int>(w_.size())) return -1;
      w = w_[wi];
    }
  }

  template <class F>
  void for_each(F f) const {
    for (int v = next(0); v >= 0; v = next(v + 1)) f(v);
  }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    out.reserve(count());
    for_each([&](int v) { out.push_back(v); });
    return out;
  }

  friend bool operator==(const Bitset& a, const Bitset& b) {
    return a.nbits_ == b.nbits_ && a.w_ == b.w_;
  }

 private:
  static std::size_t words_for(int nbits) {
    return static_cast<std::size_t>((nbits + 63) / 64);
  }
  void trim() {
    if (nbits_ & 63) w_.back() &= (~std::uint64_t{0}) >> (64 - (nbits_ & 63));
    if (nbits_ == 0 && !w_.empty()) w_.clear();
  }

  int nbits_ = 0;
  std::vector<std::uint64_t> w_;
};

}  // namespace gfree
