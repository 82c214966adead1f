#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "cfw/morphism.hpp"
#include "cfw/repetitions.hpp"
#include "cfw/streams.hpp"
#include "cfw/word.hpp"

using namespace cfw;

namespace {

Word random_word(std::mt19937_64& rng, int alphabet, std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> len_dist(0, max_len);
  std::uniform_int_distribution<int> sym_dist(0, alphabet - 1);
  std::vector<Symbol> symbols(len_dist(rng));
  for (Symbol& s : symbols) s = static_cast<Symbol>(sym_dist(rng));
  return Word(alphabet, std::move(symbols));
}

}  // namespace

TEST_CASE("word construction and digits round-trip") {
  const Word w = Word::from_digits("0110");
  CHECK(w.size() == 4);
  CHECK(w.alphabet_size() == 2);
  CHECK(w.to_digits() == "0110");
  CHECK(Word::from_digits("").empty());
  CHECK(Word::from_digits("402").alphabet_size() == 5);

  CHECK_THROWS_AS(Word::from_digits("01x"), DomainError);
  CHECK_THROWS_AS(Word::from_digits("9"), DomainError);
  CHECK_THROWS_AS(Word(2, {2}), DomainError);
  CHECK_THROWS_AS(Word(6, {0}), DomainError);
  CHECK_THROWS_AS(Word(1, {0}), DomainError);
  CHECK_THROWS_AS(Word::from_digits("3", 2), DomainError);
}

TEST_CASE("word helpers") {
  const Word w = Word::from_digits("10010");
  CHECK(w.starts_with(Word::from_digits("1001")));
  CHECK(w.ends_with(Word::from_digits("010")));
  CHECK_FALSE(w.starts_with(Word::from_digits("11")));
  CHECK(w.factor(1, 3) == Word::from_digits("001"));
  CHECK_THROWS_AS(w.factor(3, 4), DomainError);
  CHECK(w.rotated_left(1) == Word::from_digits("00101"));
  CHECK((Word::from_digits("01") + Word::from_digits("10")).to_digits() ==
        "0110");

  ShortLex less;
  CHECK(less(Word::from_digits("11"), Word::from_digits("000")));
  CHECK(less(Word::from_digits("01"), Word::from_digits("10")));
  CHECK_FALSE(less(Word::from_digits("10"), Word::from_digits("10")));
}

TEST_CASE("relabel examples") {
  const RelabelMap map = relabel_map({{0, 2}, {1, 3}});
  CHECK(relabel(Word::from_digits("0110"), map).to_digits() == "2332");
  CHECK(relabel(Word::from_digits(""), map).to_digits() == "");
  CHECK(relabel(tm_prefix(6), map).to_digits() == "233232");
  CHECK(relabel(Word::from_digits("0110"), map).alphabet_size() == 4);

  // partial and non-injective maps are refused
  CHECK_THROWS_AS(relabel(Word::from_digits("012"), map), DomainError);
  CHECK_THROWS_AS(relabel(Word::from_digits("01"), relabel_map({{0, 1}, {1, 1}})),
                  DomainError);
}

TEST_CASE("relabel preserves repetition structure") {
  std::mt19937_64 rng(7);
  const RelabelMap map = relabel_map({{0, 3}, {1, 0}, {2, 4}});
  for (int i = 0; i < 200; ++i) {
    const Word w = random_word(rng, 3, 64);
    const Word r = relabel(w, map);
    CHECK(r.size() == w.size());
    CHECK(is_square(r) == is_square(w));
    const auto cube_w = find_cube(w, Engine::naive);
    const auto cube_r = find_cube(r, Engine::naive);
    CHECK(cube_w == cube_r);
  }
}

TEST_CASE("thue-morse morphism examples") {
  const Morphism& mu = thue_morse_morphism();
  CHECK(mu.apply(Word::from_digits("0")).to_digits() == "01");
  CHECK(mu.apply(Word::from_digits("")).to_digits() == "");
  CHECK(mu.uniform_length() == std::size_t{2});
  CHECK(mu.is_endomorphism());

  CHECK(brandenburg_cubefree3().apply(Word::from_digits("012")).to_digits() ==
        "001011001101011001");
  CHECK(brandenburg_cubefree4().uniform_length() == std::size_t{9});
  CHECK(brandenburg_squarefree5().uniform_length() == std::size_t{18});

  CHECK_THROWS_AS(mu.apply(Word::from_digits("02")), DomainError);
  CHECK_THROWS_AS(brandenburg_cubefree3().iterate(Word::from_digits("0"), 1),
                  DomainError);
  CHECK_THROWS_AS(mu.iterate(Word::from_digits("0"), -1), DomainError);
}

TEST_CASE("morphism validation") {
  CHECK_THROWS_AS(Morphism(2, 2, {Word::from_digits("01")}), DomainError);
  CHECK_THROWS_AS(
      Morphism(2, 2, {Word::from_digits("01"), Word::from_digits("01")}),
      DomainError);
  CHECK_THROWS_AS(Morphism(2, 2, {Word::from_digits("01"), Word()}),
                  DomainError);
  CHECK_THROWS_AS(
      Morphism(2, 2, {Word::from_digits("02"), Word::from_digits("1")}),
      DomainError);
  const Morphism stretchy(2, 2,
                          {Word::from_digits("0"), Word::from_digits("01")});
  CHECK_FALSE(stretchy.uniform_length().has_value());
}

TEST_CASE("morphism iteration") {
  const Morphism& mu = thue_morse_morphism();
  const Word zero = Word::from_digits("0");
  CHECK(mu.iterate(zero, 0) == zero);
  CHECK(mu.iterate(zero, 2).to_digits() == "0110");
  CHECK(mu.iterate(zero, 5) == tm_prefix(32));

  // iterates are prefixes of the fixed point
  for (int k = 0; k < 10; ++k) {
    const Word a = mu.iterate(zero, k);
    const Word b = mu.iterate(zero, k + 1);
    CHECK(b.factor(0, a.size()) == a);
  }
}

TEST_CASE("morphisms distribute over concatenation") {
  std::mt19937_64 rng(11);
  const Morphism& h = brandenburg_cubefree3();
  for (int i = 0; i < 200; ++i) {
    const Word u = random_word(rng, 3, 40);
    const Word v = random_word(rng, 3, 40);
    CHECK(h.apply(u + v) == h.apply(u) + h.apply(v));
  }
}

TEST_CASE("thue-morse prefix matches the classical expansion") {
  CHECK(tm_prefix(0).to_digits() == "");
  CHECK(tm_prefix(4).to_digits() == "0110");
  CHECK(tm_prefix(24).to_digits() == "011010011001011010010110");
  CHECK(tm_symbol_at(0) == 0);
  CHECK(tm_symbol_at(5) == 0);
  CHECK(tm_symbol_at(23) == 0);
}
