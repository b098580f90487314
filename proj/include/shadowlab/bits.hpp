#pragma once

// Vertex-set bitmasks. Single-word masks cover n <= 64 (the search engine);
// WideMask is the fallback for larger constructions.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <vector>

namespace shadowlab {

using Mask = std::uint64_t;

inline constexpr int kMaxMaskVertices = 64;

namespace bits {

inline int count(Mask m) { return std::popcount(m); }
inline bool any(Mask m) { return m != 0; }
inline bool subset(Mask a, Mask b) { return (a & ~b) == 0; }
inline bool test(Mask m, int v) { return (m >> v) & 1u; }
inline void set(Mask& m, int v) { m |= Mask{1} << v; }
inline void reset(Mask& m, int v) { m &= ~(Mask{1} << v); }
inline int lowest(Mask m) { return std::countr_zero(m); }
inline Mask make_empty(int /*n*/) { return 0; }

template <class F>
void for_each(Mask m, F&& f) {
  while (m) {
    f(std::countr_zero(m));
    m &= m - 1;
  }
}

}  // namespace bits

/// Multi-word vertex set for n > 64. Word count is fixed at construction;
/// binary operations require equal sizes.
class WideMask {
 public:
  WideMask() = default;
  explicit WideMask(int n) : words_((n + 63) / 64, 0) {}

  WideMask& operator&=(const WideMask& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  WideMask& operator|=(const WideMask& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  WideMask& operator^=(const WideMask& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= o.words_[i];
    return *this;
  }
  friend WideMask operator&(WideMask a, const WideMask& b) { return a &= b; }
  friend WideMask operator|(WideMask a, const WideMask& b) { return a |= b; }
  friend WideMask operator^(WideMask a, const WideMask& b) { return a ^= b; }
  friend bool operator==(const WideMask&, const WideMask&) = default;
  friend auto operator<=>(const WideMask&, const WideMask&) = default;

  const std::vector<std::uint64_t>& words() const { return words_; }
  std::vector<std::uint64_t>& words() { return words_; }

 private:
  std::vector<std::uint64_t> words_;
};

namespace bits {

inline int count(const WideMask& m) {
  int c = 0;
  for (auto w : m.words()) c += std::popcount(w);
  return c;
}
inline bool any(const WideMask& m) {
  return std::any_of(m.words().begin(), m.words().end(), [](auto w) { return w != 0; });
}
inline bool subset(const WideMask& a, const WideMask& b) {
  for (std::size_t i = 0; i < a.words().size(); ++i)
    if (a.words()[i] & ~b.words()[i]) return false;
  return true;
}
inline bool test(const WideMask& m, int v) { return (m.words()[v / 64] >> (v % 64)) & 1u; }
inline void set(WideMask& m, int v) { m.words()[v / 64] |= std::uint64_t{1} << (v % 64); }
inline void reset(WideMask& m, int v) { m.words()[v / 64] &= ~(std::uint64_t{1} << (v % 64)); }
inline int lowest(const WideMask& m) {
  for (std::size_t i = 0; i < m.words().size(); ++i)
    if (m.words()[i]) return static_cast<int>(i * 64) + std::countr_zero(m.words()[i]);
  return -1;
}
inline WideMask make_empty_wide(int n) { return WideMask(n); }

template <class F>
void for_each(const WideMask& m, F&& f) {
  for (std::size_t i = 0; i < m.words().size(); ++i) {
    auto w = m.words()[i];
    while (w) {
      f(static_cast<int>(i * 64) + std::countr_zero(w));
      w &= w - 1;
    }
  }
}

}  // namespace bits

/// Mask-type traits so generic kernels can build empty and full sets.
template <class M>
struct MaskTraits;

template <>
struct MaskTraits<Mask> {
  static Mask empty(int) { return 0; }
  static Mask full(int n) { return n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1; }
};

template <>
struct MaskTraits<WideMask> {
  static WideMask empty(int n) { return WideMask(n); }
  static WideMask full(int n) {
    WideMask m(n);
    for (int v = 0; v < n; ++v) bits::set(m, v);
    return m;
  }
};

}  // namespace shadowlab
