#include "cfw/morphism.hpp"

#include <string>
#include <utility>

namespace cfw {

Morphism::Morphism(int domain_size, int codomain_size,
                   std::vector<Word> images)
    : domain_size_(domain_size),
      codomain_size_(codomain_size),
      images_(std::move(images)) {
  if (domain_size_ < kMinAlphabet || domain_size_ > kMaxAlphabet ||
      codomain_size_ < kMinAlphabet || codomain_size_ > kMaxAlphabet) {
    throw DomainError("morphism alphabet sizes out of range");
  }
  if (images_.size() != static_cast<std::size_t>(domain_size_)) {
    throw DomainError("morphism needs one image per domain symbol");
  }
  for (std::size_t c = 0; c < images_.size(); ++c) {
    const Word& img = images_[c];
    if (img.empty()) throw DomainError("morphism image must be nonempty");
    for (Symbol s : img.symbols()) {
      if (s >= codomain_size_) {
        throw DomainError("morphism image outside codomain alphabet");
      }
    }
    for (std::size_t d = 0; d < c; ++d) {
      if (images_[d] == img) {
        throw DomainError("morphism images must be pairwise distinct");
      }
    }
  }
  bool uniform = true;
  for (const Word& img : images_) {
    if (img.size() != images_[0].size()) uniform = false;
  }
  if (uniform) uniform_length_ = images_[0].size();
}

const Word& Morphism::image(Symbol c) const {
  if (c >= domain_size_) {
    throw DomainError("symbol " + std::to_string(int(c)) +
                      " outside morphism domain");
  }
  return images_[c];
}

Word Morphism::apply(const Word& w) const {
  std::vector<Symbol> out;
  if (uniform_length_) out.reserve(w.size() * *uniform_length_);
  for (Symbol c : w.symbols()) {
    const Word& img = image(c);
    out.insert(out.end(), img.symbols().begin(), img.symbols().end());
  }
  return Word(codomain_size_, std::move(out));
}

Word Morphism::iterate(const Word& seed, int k) const {
  if (!is_endomorphism()) {
    throw DomainError("iterate requires an endomorphism");
  }
  if (k < 0) throw DomainError("iteration count must be >= 0");
  Word w = seed;
  for (int i = 0; i < k; ++i) w = apply(w);
  return w;
}

const Morphism& thue_morse_morphism() {
  static const Morphism m(2, 2,
                          {Word::from_digits("01"), Word::from_digits("10")});
  return m;
}

const Morphism& brandenburg_cubefree3() {
  static const Morphism m(3, 2,
                          {Word::from_digits("001011"),
                           Word::from_digits("001101"),
                           Word::from_digits("011001")});
  return m;
}

const Morphism& brandenburg_cubefree4() {
  static const Morphism m(4, 2,
                          {Word::from_digits("001001101"),
                           Word::from_digits("001010011"),
                           Word::from_digits("001101011"),
                           Word::from_digits("011001011")});
  return m;
}

const Morphism& brandenburg_squarefree5() {
  static const Morphism m(5, 3,
                          {Word::from_digits("010201202101210212"),
                           Word::from_digits("010201202102010212"),
                           Word::from_digits("010201202120121012"),
                           Word::from_digits("010201210201021012"),
                           Word::from_digits("010201210212021012")});
  return m;
}

}  // namespace cfw
