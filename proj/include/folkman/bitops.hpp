#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace folkman::bits {

using Word = std::uint64_t;
inline constexpr int kWordBits = 64;

inline int word_count(int nbits) { return (nbits + kWordBits - 1) / kWordBits; }

inline bool test(const Word* w, int i) {
  return (w[i / kWordBits] >> (i % kWordBits)) & 1u;
}
inline void set(Word* w, int i) { w[i / kWordBits] |= Word{1} << (i % kWordBits); }
inline void clear(Word* w, int i) { w[i / kWordBits] &= ~(Word{1} << (i % kWordBits)); }

inline int popcount(const Word* w, int words) {
  int c = 0;
  for (int i = 0; i < words; ++i) c += std::popcount(w[i]);
  return c;
}

inline bool any(const Word* w, int words) {
  for (int i = 0; i < words; ++i)
    if (w[i]) return true;
  return false;
}

inline void and_into(Word* dst, const Word* src, int words) {
  for (int i = 0; i < words; ++i) dst[i] &= src[i];
}
inline void or_into(Word* dst, const Word* src, int words) {
  for (int i = 0; i < words; ++i) dst[i] |= src[i];
}
inline void copy(Word* dst, const Word* src, int words) {
  for (int i = 0; i < words; ++i) dst[i] = src[i];
}
inline void zero(Word* dst, int words) {
  for (int i = 0; i < words; ++i) dst[i] = 0;
}

inline int first_bit(const Word* w, int words) {
  for (int i = 0; i < words; ++i)
    if (w[i]) return i * kWordBits + std::countr_zero(w[i]);
  return -1;
}

// Calls f(v) for every set bit v.
template <typename F>
inline void for_each(const Word* w, int words, F&& f) {
  for (int i = 0; i < words; ++i) {
    Word x = w[i];
    while (x) {
      int b = std::countr_zero(x);
      f(i * kWordBits + b);
      x &= x - 1;
    }
  }
}

// A small dynamic bitset used by the solvers; width fixed at construction.
class Set {
 public:
  Set() = default;
  explicit Set(int nbits) : words_(word_count(nbits)), w_(words_, 0) {}

  int words() const { return words_; }
  Word* data() { return w_.data(); }
  const Word* data() const { return w_.data(); }

  bool test(int i) const { return bits::test(w_.data(), i); }
  void set(int i) { bits::set(w_.data(), i); }
  void clear(int i) { bits::clear(w_.data(), i); }
  void zero() { bits::zero(w_.data(), words_); }
  int count() const { return bits::popcount(w_.data(), words_); }
  bool empty() const { return !bits::any(w_.data(), words_); }

 private:
  int words_ = 0;
  std::vector<Word> w_;
};

}  // namespace folkman::bits
