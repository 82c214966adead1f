#pragma once

#include <optional>
#include <vector>

#include "cfw/word.hpp"

namespace cfw {

// Letter-to-word substitution. Images are nonempty, over the codomain
// alphabet, and pairwise distinct (injective on letters).
class Morphism {
 public:
  Morphism(int domain_size, int codomain_size, std::vector<Word> images);

  int domain_size() const { return domain_size_; }
  int codomain_size() const { return codomain_size_; }
  bool is_endomorphism() const { return domain_size_ == codomain_size_; }

  // Set iff all letter images share one length.
  std::optional<std::size_t> uniform_length() const { return uniform_length_; }

  const Word& image(Symbol c) const;

  Word apply(const Word& w) const;

  // k-fold application to seed; k == 0 returns seed. Endomorphisms only.
  Word iterate(const Word& seed, int k) const;

 private:
  int domain_size_;
  int codomain_size_;
  std::vector<Word> images_;
  std::optional<std::size_t> uniform_length_;
};

// 0 -> 01, 1 -> 10. Its fixed point from 0 is the Thue-Morse word.
const Morphism& thue_morse_morphism();

// Brandenburg's 6-uniform morphism {0,1,2} -> {0,1}*; maps cubefree words to
// cubefree words.
const Morphism& brandenburg_cubefree3();

// Brandenburg's 9-uniform morphism {0,1,2,3} -> {0,1}*; maps cubefree words
// to cubefree words.
const Morphism& brandenburg_cubefree4();

// Brandenburg's 18-uniform morphism {0,...,4} -> {0,1,2}*; maps squarefree
// words to squarefree words.
const Morphism& brandenburg_squarefree5();

}  // namespace cfw
