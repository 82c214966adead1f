#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string_view>

#include "cfw/morphism.hpp"
#include "cfw/word.hpp"

namespace cfw {

// Deterministic pull-based infinite word. symbol_at is pure and total for
// every index; fill/prefix are the efficient bulk paths (block streams
// recompute from the origin on random access, so prefer prefix/fill or a
// Cursor for sequential reads).
class InfiniteWord {
 public:
  virtual ~InfiniteWord() = default;

  virtual int alphabet_size() const = 0;
  virtual std::string_view name() const = 0;
  virtual Symbol symbol_at(std::uint64_t i) const = 0;

  // Writes symbols at positions [start, start + out.size()).
  virtual void fill(std::uint64_t start, std::span<Symbol> out) const;

  Word prefix(std::size_t n) const;
};

using StreamPtr = std::shared_ptr<const InfiniteWord>;

// The Thue-Morse word t = 0110100110010110...; O(1) random access.
StreamPtr thue_morse_word();

// Pointwise injective relabelling of another stream.
StreamPtr relabelled(StreamPtr base, const RelabelMap& map);

// Binary Champernowne word: concatenated binary expansions of 1, 2, 3, ...
// Contains every finite binary word, so it has 2^n factors of length n.
StreamPtr champernowne_word();

// Squarefree ternary word derived from Thue-Morse: symbol k counts the 1s
// between the k-th and (k+1)-th 0 of t, giving 210201210120...
StreamPtr ternary_squarefree_word();

// Perfect shuffle e0 o0 e1 o1 ...
StreamPtr perfect_shuffle(StreamPtr even, StreamPtr odd);

// Symbol-at-a-time image under a uniform morphism.
StreamPtr morphic_image(StreamPtr base, const Morphism& m);

// Closed form for the Thue-Morse word: parity of the popcount of i.
Symbol tm_symbol_at(std::uint64_t i);
Word tm_prefix(std::size_t n);

// Sequential block reader over a stream.
class Cursor {
 public:
  explicit Cursor(StreamPtr stream, std::uint64_t start = 0)
      : stream_(std::move(stream)), pos_(start) {}

  Word next_block(std::size_t n);
  std::uint64_t position() const { return pos_; }

 private:
  StreamPtr stream_;
  std::uint64_t pos_ = 0;
};

}  // namespace cfw
