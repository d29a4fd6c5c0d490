#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <vector>

#include "indgap/errors.hpp"

namespace indgap {

/// Subset of a fixed universe {0, ..., size-1}. One word covers universes up
/// to 64 elements; larger universes use as many words as needed. Equality and
/// ordering require equal universe sizes.
class Bitset {
public:
  Bitset() = default;

  explicit Bitset(int nbits) : nbits_(nbits), words_(word_count(nbits), 0) {
    if (nbits < 0) throw DomainError("bitset size must be nonnegative");
  }

  static Bitset full(int nbits) {
    Bitset b(nbits);
    for (auto& w : b.words_) w = ~std::uint64_t{0};
    b.trim();
    return b;
  }

  static Bitset of(int nbits, std::initializer_list<int> members) {
    Bitset b(nbits);
    for (int m : members) b.set(m);
    return b;
  }

  static Bitset from_mask(int nbits, std::uint64_t mask) {
    Bitset b(nbits);
    if (!b.words_.empty()) {
      b.words_[0] = mask;
      b.trim();
    } else if (mask != 0) {
      throw DomainError("mask has bits beyond universe");
    }
    return b;
  }

  int size() const { return nbits_; }

  bool test(int i) const {
    check(i);
    return (words_[i >> 6] >> (i & 63)) & 1u;
  }

  void set(int i) {
    check(i);
    words_[i >> 6] |= std::uint64_t{1} << (i & 63);
  }

  void reset(int i) {
    check(i);
    words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
  }

  int count() const {
    int c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
  }

  bool empty() const {
    for (auto w : words_) {
      if (w) return false;
    }
    return true;
  }

  bool any() const { return !empty(); }

  /// Lowest member, or -1 when empty.
  int lowest() const {
    for (std::size_t k = 0; k < words_.size(); ++k) {
      if (words_[k]) return static_cast<int>(k * 64 + std::countr_zero(words_[k]));
    }
    return -1;
  }

  /// Next member strictly greater than `i`, or -1.
  int next(int i) const {
    for (int j = i + 1; j < nbits_;) {
      std::uint64_t w = words_[j >> 6] >> (j & 63);
      if (w) return j + std::countr_zero(w);
      j = ((j >> 6) + 1) << 6;
    }
    return -1;
  }

  template <class F>
  void for_each(F&& fn) const {
    for (std::size_t k = 0; k < words_.size(); ++k) {
      for (std::uint64_t w = words_[k]; w; w &= w - 1) {
        fn(static_cast<int>(k * 64 + std::countr_zero(w)));
      }
    }
  }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    out.reserve(count());
    for_each([&](int v) { out.push_back(v); });
    return out;
  }

  /// Bits 0..63 as a machine word; valid only when size() <= 64.
  std::uint64_t low_word() const { return words_.empty() ? 0 : words_[0]; }

  bool intersects(const Bitset& o) const {
    check_same(o);
    for (std::size_t k = 0; k < words_.size(); ++k) {
      if (words_[k] & o.words_[k]) return true;
    }
    return false;
  }

  bool subset_of(const Bitset& o) const {
    check_same(o);
    for (std::size_t k = 0; k < words_.size(); ++k) {
      if (words_[k] & ~o.words_[k]) return false;
    }
    return true;
  }

  Bitset& operator|=(const Bitset& o) { return apply(o, [](std::uint64_t a, std::uint64_t b) { return a | b; }); }
  Bitset& operator&=(const Bitset& o) { return apply(o, [](std::uint64_t a, std::uint64_t b) { return a & b; }); }
  Bitset& operator^=(const Bitset& o) { return apply(o, [](std::uint64_t a, std::uint64_t b) { return a ^ b; }); }
  Bitset& operator-=(const Bitset& o) { return apply(o, [](std::uint64_t a, std::uint64_t b) { return a & ~b; }); }

  friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }
  friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
  friend Bitset operator^(Bitset a, const Bitset& b) { return a ^= b; }
  friend Bitset operator-(Bitset a, const Bitset& b) { return a -= b; }

  /// Complement within the universe.
  Bitset complement_set() const {
    Bitset b = full(nbits_);
    b -= *this;
    return b;
  }

  bool operator==(const Bitset& o) const = default;

  /// Lexicographic by lowest-differing member; usable for deterministic sorts.
  bool operator<(const Bitset& o) const {
    check_same(o);
    for (std::size_t k = 0; k < words_.size(); ++k) {
      if (words_[k] != o.words_[k]) {
        std::uint64_t diff = words_[k] ^ o.words_[k];
        std::uint64_t low = diff & (~diff + 1);
        return (words_[k] & low) != 0;  // the one containing the lowest differing member sorts first
      }
    }
    return false;
  }

  std::size_t hash() const {
    std::size_t h = 1469598103934665603ull;
    for (auto w : words_) {
      h ^= w;
      h *= 1099511628211ull;
    }
    return h ^ static_cast<std::size_t>(nbits_);
  }

private:
  static std::size_t word_count(int nbits) { return (static_cast<std::size_t>(nbits) + 63) / 64; }

  void check(int i) const {
    if (i < 0 || i >= nbits_) throw DomainError("bit index out of range");
  }

  void check_same(const Bitset& o) const {
    if (nbits_ != o.nbits_) throw DomainError("bitset universe mismatch");
  }

  void trim() {
    if (!words_.empty() && (nbits_ & 63)) {
      words_.back() &= (~std::uint64_t{0}) >> (64 - (nbits_ & 63));
    }
  }

  template <class Op>
  Bitset& apply(const Bitset& o, Op op) {
    check_same(o);
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] = op(words_[k], o.words_[k]);
    return *this;
  }

  int nbits_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Vertex subset of a specific graph; the universe size is the graph order.
using VertexSet = Bitset;

}  // namespace indgap
