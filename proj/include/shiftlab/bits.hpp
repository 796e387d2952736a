#pragma once

// Fixed-width bit containers used for symbol subsets and boolean
// symbol x symbol matrices.

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace shiftlab {

using Symbol = std::uint32_t;

class SymbolSet {
 public:
  SymbolSet() = default;
  explicit SymbolSet(std::size_t universe) : universe_(universe), words_((universe + 63) / 64, 0) {}

  static SymbolSet full(std::size_t universe);
  static SymbolSet of(std::size_t universe, std::span<const Symbol> members);

  std::size_t universe() const { return universe_; }

  bool test(Symbol s) const { return (words_[s >> 6] >> (s & 63)) & 1U; }
  void set(Symbol s) { words_[s >> 6] |= std::uint64_t{1} << (s & 63); }
  void reset(Symbol s) { words_[s >> 6] &= ~(std::uint64_t{1} << (s & 63)); }

  std::size_t count() const {
    std::size_t n = 0;
    for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
  }
  bool any() const {
    for (auto w : words_)
      if (w) return true;
    return false;
  }
  bool none() const { return !any(); }
  bool intersects(const SymbolSet& other) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & other.words_[i]) return true;
    return false;
  }
  bool is_subset_of(const SymbolSet& other) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~other.words_[i]) return false;
    return true;
  }

  SymbolSet& operator&=(const SymbolSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  SymbolSet& operator|=(const SymbolSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  friend SymbolSet operator&(SymbolSet a, const SymbolSet& b) { return a &= b; }
  friend SymbolSet operator|(SymbolSet a, const SymbolSet& b) { return a |= b; }
  friend bool operator==(const SymbolSet&, const SymbolSet&) = default;

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      std::uint64_t w = words_[i];
      while (w) {
        int bit = std::countr_zero(w);
        f(static_cast<Symbol>(i * 64 + static_cast<std::size_t>(bit)));
        w &= w - 1;
      }
    }
  }

  std::vector<Symbol> members() const {
    std::vector<Symbol> out;
    for_each([&](Symbol s) { out.push_back(s); });
    return out;
  }

  std::span<const std::uint64_t> words() const { return words_; }
  std::span<std::uint64_t> words() { return words_; }

  std::size_t hash() const;

 private:
  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

// Orders sets by their sorted member lists (lexicographic on symbol indices).
bool lex_less(const SymbolSet& a, const SymbolSet& b);

// Square boolean matrix over a symbol alphabet, stored row-major as bit rows.
class BoolMatrix {
 public:
  BoolMatrix() = default;
  explicit BoolMatrix(std::size_t n) : n_(n), stride_((n + 63) / 64), bits_(n * stride_, 0) {}

  static BoolMatrix diagonal(const SymbolSet& support);

  std::size_t size() const { return n_; }

  bool get(Symbol i, Symbol j) const { return (bits_[i * stride_ + (j >> 6)] >> (j & 63)) & 1U; }
  void set(Symbol i, Symbol j) { bits_[i * stride_ + (j >> 6)] |= std::uint64_t{1} << (j & 63); }

  SymbolSet row(Symbol i) const;
  SymbolSet column(Symbol j) const;
  void or_row(Symbol i, const SymbolSet& s);
  void and_row(Symbol i, const SymbolSet& s);
  bool row_any(Symbol i) const;

  SymbolSet row_support() const;
  SymbolSet column_support() const;

  bool is_zero() const;
  std::size_t count() const;

  BoolMatrix operator*(const BoolMatrix& rhs) const;
  BoolMatrix transposed() const;
  std::vector<std::pair<Symbol, Symbol>> support() const;

  friend bool operator==(const BoolMatrix&, const BoolMatrix&) = default;
  std::size_t hash() const;

 private:
  std::size_t n_ = 0;
  std::size_t stride_ = 0;
  std::vector<std::uint64_t> bits_;
};

inline void hash_combine(std::size_t& seed, std::size_t v) {
  seed ^= v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
}

}  // namespace shiftlab

template <>
struct std::hash<shiftlab::SymbolSet> {
  std::size_t operator()(const shiftlab::SymbolSet& s) const { return s.hash(); }
};
