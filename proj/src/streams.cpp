#include "cfw/streams.hpp"

#include <bit>
#include <utility>
#include <vector>

namespace cfw {

void InfiniteWord::fill(std::uint64_t start, std::span<Symbol> out) const {
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = symbol_at(start + i);
  }
}

Word InfiniteWord::prefix(std::size_t n) const {
  std::vector<Symbol> symbols(n);
  fill(0, symbols);
  return Word(alphabet_size(), std::move(symbols));
}

Symbol tm_symbol_at(std::uint64_t i) {
  return static_cast<Symbol>(std::popcount(i) & 1);
}

Word tm_prefix(std::size_t n) {
  return thue_morse_word()->prefix(n);
}

Word Cursor::next_block(std::size_t n) {
  std::vector<Symbol> symbols(n);
  stream_->fill(pos_, symbols);
  pos_ += n;
  return Word(stream_->alphabet_size(), std::move(symbols));
}

namespace {

class ThueMorseWord final : public InfiniteWord {
 public:
  int alphabet_size() const override { return 2; }
  std::string_view name() const override { return "tm"; }
  Symbol symbol_at(std::uint64_t i) const override { return tm_symbol_at(i); }
};

class RelabelledWord final : public InfiniteWord {
 public:
  RelabelledWord(StreamPtr base, const RelabelMap& map)
      : base_(std::move(base)), map_(map) {
    int max_target = -1;
    for (int c = 0; c < base_->alphabet_size(); ++c) {
      if (map_[c] == kNoTarget) {
        throw DomainError("relabel map not total on stream alphabet");
      }
      for (int d = 0; d < c; ++d) {
        if (map_[d] == map_[c]) throw DomainError("relabel map not injective");
      }
      if (map_[c] > max_target) max_target = map_[c];
    }
    alphabet_size_ = std::max(max_target + 1, kMinAlphabet);
  }

  int alphabet_size() const override { return alphabet_size_; }
  std::string_view name() const override { return "relabelled"; }

  Symbol symbol_at(std::uint64_t i) const override {
    return static_cast<Symbol>(map_[base_->symbol_at(i)]);
  }

  void fill(std::uint64_t start, std::span<Symbol> out) const override {
    base_->fill(start, out);
    for (Symbol& s : out) s = static_cast<Symbol>(map_[s]);
  }

 private:
  StreamPtr base_;
  RelabelMap map_;
  int alphabet_size_;
};

class ChampernowneWord final : public InfiniteWord {
 public:
  int alphabet_size() const override { return 2; }
  std::string_view name() const override { return "champernowne"; }

  Symbol symbol_at(std::uint64_t i) const override {
    // The k-bit numbers contribute k * 2^(k-1) bits in total.
    std::uint64_t k = 1;
    std::uint64_t count = 1;  // how many k-bit numbers
    std::uint64_t offset = i;
    while (offset >= k * count) {
      offset -= k * count;
      ++k;
      count <<= 1;
    }
    const std::uint64_t value = count + offset / k;  // count == 2^(k-1)
    const std::uint64_t bit_index = offset % k;      // 0 = most significant
    return static_cast<Symbol>((value >> (k - 1 - bit_index)) & 1);
  }
};

class TernarySquarefreeWord final : public InfiniteWord {
 public:
  int alphabet_size() const override { return 3; }
  std::string_view name() const override { return "ternary-squarefree"; }

  Symbol symbol_at(std::uint64_t i) const override {
    // The k-th 0 of t sits at 2k + t(k), so the count of 1s between
    // consecutive 0s is 1 + t(k+1) - t(k).
    return static_cast<Symbol>(1 + tm_symbol_at(i + 1) - tm_symbol_at(i));
  }
};

class ShuffledWord final : public InfiniteWord {
 public:
  ShuffledWord(StreamPtr even, StreamPtr odd)
      : even_(std::move(even)), odd_(std::move(odd)) {}

  int alphabet_size() const override {
    return std::max(even_->alphabet_size(), odd_->alphabet_size());
  }
  std::string_view name() const override { return "shuffle"; }

  Symbol symbol_at(std::uint64_t i) const override {
    return i % 2 == 0 ? even_->symbol_at(i / 2) : odd_->symbol_at(i / 2);
  }

 private:
  StreamPtr even_;
  StreamPtr odd_;
};

class MorphicImageWord final : public InfiniteWord {
 public:
  MorphicImageWord(StreamPtr base, const Morphism& m)
      : base_(std::move(base)), morphism_(m) {
    if (!m.uniform_length()) {
      throw DomainError("morphic image streams require a uniform morphism");
    }
    if (base_->alphabet_size() > m.domain_size()) {
      throw DomainError("stream alphabet exceeds morphism domain");
    }
    unit_ = *m.uniform_length();
  }

  int alphabet_size() const override { return morphism_.codomain_size(); }
  std::string_view name() const override { return "morphic-image"; }

  Symbol symbol_at(std::uint64_t i) const override {
    return morphism_.image(base_->symbol_at(i / unit_))[i % unit_];
  }

  void fill(std::uint64_t start, std::span<Symbol> out) const override {
    if (out.empty()) return;
    const std::uint64_t first = start / unit_;
    const std::uint64_t last = (start + out.size() - 1) / unit_;
    std::vector<Symbol> base_symbols(last - first + 1);
    base_->fill(first, base_symbols);
    std::size_t written = 0;
    for (std::uint64_t k = first; k <= last && written < out.size(); ++k) {
      const Word& img = morphism_.image(base_symbols[k - first]);
      std::uint64_t off = (k == first) ? start - first * unit_ : 0;
      for (; off < unit_ && written < out.size(); ++off) {
        out[written++] = img[off];
      }
    }
  }

 private:
  StreamPtr base_;
  Morphism morphism_;
  std::uint64_t unit_;
};

}  // namespace

StreamPtr thue_morse_word() {
  static const StreamPtr w = std::make_shared<ThueMorseWord>();
  return w;
}

StreamPtr relabelled(StreamPtr base, const RelabelMap& map) {
  return std::make_shared<RelabelledWord>(std::move(base), map);
}

StreamPtr champernowne_word() {
  static const StreamPtr w = std::make_shared<ChampernowneWord>();
  return w;
}

StreamPtr ternary_squarefree_word() {
  static const StreamPtr w = std::make_shared<TernarySquarefreeWord>();
  return w;
}

StreamPtr perfect_shuffle(StreamPtr even, StreamPtr odd) {
  return std::make_shared<ShuffledWord>(std::move(even), std::move(odd));
}

StreamPtr morphic_image(StreamPtr base, const Morphism& m) {
  return std::make_shared<MorphicImageWord>(std::move(base), m);
}

}  // namespace cfw
