#pragma once

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>

namespace chordal::detail {

// Fixed 256-bit vertex set used by the sparse solvers.
struct Bits {
  static constexpr int kCapacity = 256;
  std::array<std::uint64_t, 4> w{};

  void set(int i) { w[static_cast<std::size_t>(i >> 6)] |= std::uint64_t{1} << (i & 63); }
  void reset(int i) { w[static_cast<std::size_t>(i >> 6)] &= ~(std::uint64_t{1} << (i & 63)); }
  bool test(int i) const { return (w[static_cast<std::size_t>(i >> 6)] >> (i & 63)) & 1U; }
  bool none() const { return (w[0] | w[1] | w[2] | w[3]) == 0; }
  bool any() const { return !none(); }
  int count() const {
    return std::popcount(w[0]) + std::popcount(w[1]) + std::popcount(w[2]) + std::popcount(w[3]);
  }
  int first() const {
    for (int k = 0; k < 4; ++k) {
      if (w[static_cast<std::size_t>(k)]) return k * 64 + std::countr_zero(w[static_cast<std::size_t>(k)]);
    }
    return -1;
  }
  template <typename F>
  void for_each(F&& f) const {
    for (int k = 0; k < 4; ++k) {
      std::uint64_t x = w[static_cast<std::size_t>(k)];
      while (x) {
        f(k * 64 + std::countr_zero(x));
        x &= x - 1;
      }
    }
  }
  Bits& operator|=(const Bits& o) {
    for (std::size_t k = 0; k < 4; ++k) w[k] |= o.w[k];
    return *this;
  }
  Bits& operator&=(const Bits& o) {
    for (std::size_t k = 0; k < 4; ++k) w[k] &= o.w[k];
    return *this;
  }
  Bits minus(const Bits& o) const {
    Bits r;
    for (std::size_t k = 0; k < 4; ++k) r.w[k] = w[k] & ~o.w[k];
    return r;
  }
  friend Bits operator|(Bits a, const Bits& b) { return a |= b; }
  friend Bits operator&(Bits a, const Bits& b) { return a &= b; }
  friend bool operator==(const Bits&, const Bits&) = default;
  bool subset_of(const Bits& o) const { return minus(o).none(); }
};

struct BitsHash {
  std::size_t operator()(const Bits& b) const noexcept {
    std::uint64_t h = 0x9e3779b97f4a7c15ULL;
    for (auto x : b.w) h = (h ^ x) * 0xff51afd7ed558ccdULL + (h >> 29);
    return static_cast<std::size_t>(h);
  }
};

}  // namespace chordal::detail
