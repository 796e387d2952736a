#include "shiftlab/bits.hpp"

#include <algorithm>

namespace shiftlab {

SymbolSet SymbolSet::full(std::size_t universe) {
  SymbolSet s(universe);
  for (Symbol i = 0; i < universe; ++i) s.set(i);
  return s;
}

SymbolSet SymbolSet::of(std::size_t universe, std::span<const Symbol> members) {
  SymbolSet s(universe);
  for (auto m : members) s.set(m);
  return s;
}

std::size_t SymbolSet::hash() const {
  std::size_t seed = universe_;
  for (auto w : words_) hash_combine(seed, std::hash<std::uint64_t>{}(w));
  return seed;
}

bool lex_less(const SymbolSet& a, const SymbolSet& b) {
  auto ma = a.members();
  auto mb = b.members();
  return std::lexicographical_compare(ma.begin(), ma.end(), mb.begin(), mb.end());
}

BoolMatrix BoolMatrix::diagonal(const SymbolSet& support) {
  BoolMatrix m(support.universe());
  support.for_each([&](Symbol s) { m.set(s, s); });
  return m;
}

SymbolSet BoolMatrix::row(Symbol i) const {
  SymbolSet s(n_);
  auto dst = s.words();
  std::copy_n(bits_.begin() + static_cast<std::ptrdiff_t>(i * stride_), stride_, dst.begin());
  return s;
}

SymbolSet BoolMatrix::column(Symbol j) const {
  SymbolSet s(n_);
  for (Symbol i = 0; i < n_; ++i)
    if (get(i, j)) s.set(i);
  return s;
}

void BoolMatrix::or_row(Symbol i, const SymbolSet& s) {
  auto src = s.words();
  for (std::size_t k = 0; k < stride_; ++k) bits_[i * stride_ + k] |= src[k];
}

void BoolMatrix::and_row(Symbol i, const SymbolSet& s) {
  auto src = s.words();
  for (std::size_t k = 0; k < stride_; ++k) bits_[i * stride_ + k] &= src[k];
}

bool BoolMatrix::row_any(Symbol i) const {
  for (std::size_t k = 0; k < stride_; ++k)
    if (bits_[i * stride_ + k]) return true;
  return false;
}

SymbolSet BoolMatrix::row_support() const {
  SymbolSet s(n_);
  for (Symbol i = 0; i < n_; ++i)
    if (row_any(i)) s.set(i);
  return s;
}

SymbolSet BoolMatrix::column_support() const {
  SymbolSet s(n_);
  auto dst = s.words();
  for (Symbol i = 0; i < n_; ++i)
    for (std::size_t k = 0; k < stride_; ++k) dst[k] |= bits_[i * stride_ + k];
  return s;
}

bool BoolMatrix::is_zero() const {
  return std::all_of(bits_.begin(), bits_.end(), [](std::uint64_t w) { return w == 0; });
}

std::size_t BoolMatrix::count() const {
  std::size_t c = 0;
  for (auto w : bits_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

BoolMatrix BoolMatrix::operator*(const BoolMatrix& rhs) const {
  BoolMatrix out(n_);
  for (Symbol i = 0; i < n_; ++i) {
    std::uint64_t* dst = out.bits_.data() + i * stride_;
    for (std::size_t k = 0; k < stride_; ++k) {
      std::uint64_t w = bits_[i * stride_ + k];
      while (w) {
        auto mid = static_cast<Symbol>(k * 64 + static_cast<std::size_t>(std::countr_zero(w)));
        const std::uint64_t* src = rhs.bits_.data() + mid * stride_;
        for (std::size_t q = 0; q < stride_; ++q) dst[q] |= src[q];
        w &= w - 1;
      }
    }
  }
  return out;
}

BoolMatrix BoolMatrix::transposed() const {
  BoolMatrix out(n_);
  for (Symbol i = 0; i < n_; ++i)
    for (Symbol j = 0; j < n_; ++j)
      if (get(i, j)) out.set(j, i);
  return out;
}

std::vector<std::pair<Symbol, Symbol>> BoolMatrix::support() const {
  std::vector<std::pair<Symbol, Symbol>> out;
  for (Symbol i = 0; i < n_; ++i)
    for (Symbol j = 0; j < n_; ++j)
      if (get(i, j)) out.emplace_back(i, j);
  return out;
}

std::size_t BoolMatrix::hash() const {
  std::size_t seed = n_;
  for (auto w : bits_) hash_combine(seed, std::hash<std::uint64_t>{}(w));
  return seed;
}

}  // namespace shiftlab
