#pragma once

#include <array>
#include <cstdint>
#include <initializer_list>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cfw/errors.hpp"

namespace cfw {

using Symbol = std::uint8_t;

inline constexpr int kMinAlphabet = 2;
inline constexpr int kMaxAlphabet = 5;

// Finite word over {0, ..., alphabet_size-1}, stored one symbol per byte.
// Immutable after construction. Equality and ordering compare the symbol
// sequence only; the declared alphabet is a capacity bound.
class Word {
 public:
  Word() = default;
  Word(int alphabet_size, std::vector<Symbol> symbols);

  // Parses an ASCII digit string ('0'..'4'). With alphabet_size == 0 the
  // smallest alphabet containing every symbol is used.
  static Word from_digits(std::string_view digits, int alphabet_size = 0);

  int alphabet_size() const { return alphabet_size_; }
  std::size_t size() const { return symbols_.size(); }
  bool empty() const { return symbols_.empty(); }
  Symbol operator[](std::size_t i) const { return symbols_[i]; }
  std::span<const Symbol> symbols() const { return symbols_; }

  Word factor(std::size_t pos, std::size_t len) const;
  bool starts_with(const Word& prefix) const;
  bool ends_with(const Word& suffix) const;
  // w = uv with |u| = offset becomes vu.
  Word rotated_left(std::size_t offset) const;

  std::string to_digits() const;

  friend Word operator+(const Word& a, const Word& b);
  friend bool operator==(const Word& a, const Word& b) {
    return a.symbols_ == b.symbols_;
  }

 private:
  int alphabet_size_ = kMinAlphabet;
  std::vector<Symbol> symbols_;
};

// Length-then-lexicographic order, the canonical order for word sets.
struct ShortLex {
  bool operator()(const Word& a, const Word& b) const;
};

using WordSet = std::set<Word, ShortLex>;

// Per-symbol relabelling table; kNoTarget marks symbols without an image.
inline constexpr int kNoTarget = -1;
using RelabelMap = std::array<int, kMaxAlphabet>;

RelabelMap relabel_map(std::initializer_list<std::pair<int, int>> pairs);

// Pointwise image of w under an injective map defined on w's whole declared
// alphabet. Preserves length and the exponent of every factor.
Word relabel(const Word& w, const RelabelMap& map);

}  // namespace cfw
