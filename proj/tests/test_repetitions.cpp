#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "cfw/repetitions.hpp"
#include "cfw/streams.hpp"

using namespace cfw;

namespace {

Word random_word(std::mt19937_64& rng, int alphabet, std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> len_dist(0, max_len);
  std::uniform_int_distribution<int> sym_dist(0, alphabet - 1);
  std::vector<Symbol> symbols(len_dist(rng));
  for (Symbol& s : symbols) s = static_cast<Symbol>(sym_dist(rng));
  return Word(alphabet, std::move(symbols));
}

void require_engines_agree(const Word& w) {
  REQUIRE(find_square(w, Engine::fast) == find_square(w, Engine::naive));
  REQUIRE(find_cube(w, Engine::fast) == find_cube(w, Engine::naive));
  REQUIRE(find_overlap(w, Engine::fast) == find_overlap(w, Engine::naive));
  const ExponentThreshold seven_thirds = ExponentThreshold::seven_thirds();
  REQUIRE(find_power(w, seven_thirds, Engine::fast) ==
          find_power(w, seven_thirds, Engine::naive));
  const ExponentThreshold three_halves(3, 2,
                                       ExponentThreshold::Mode::exclude_gt);
  REQUIRE(find_power(w, three_halves, Engine::fast) ==
          find_power(w, three_halves, Engine::naive));
  if (!w.empty()) {
    REQUIRE(max_exponent(w, Engine::fast) == max_exponent(w, Engine::naive));
  }
  REQUIRE(distinct_square_factors(w, 0, Engine::fast) ==
          distinct_square_factors(w, 0, Engine::naive));
}

}  // namespace

TEST_CASE("is_square") {
  CHECK(is_square(Word::from_digits("0101")));
  CHECK_FALSE(is_square(Word::from_digits("")));
  CHECK_FALSE(is_square(Word::from_digits("0110")));
  CHECK_FALSE(is_square(Word::from_digits("010")));
}

TEST_CASE("find_cube") {
  CHECK(find_cube(Word::from_digits("000")) == Occurrence{0, 1, 3});
  CHECK_FALSE(find_cube(tm_prefix(64)).has_value());
  CHECK_FALSE(find_cube(Word::from_digits("1001001")).has_value());
  CHECK(find_cube(Word::from_digits("010101")) == Occurrence{0, 2, 6});
}

TEST_CASE("is_cubefree") {
  CHECK(is_cubefree(Word::from_digits("010010")));
  CHECK_FALSE(is_cubefree(Word::from_digits("010101")));
  CHECK(is_cubefree(Word::from_digits("10011011001001101100")));
}

TEST_CASE("overlaps") {
  CHECK_FALSE(is_overlap_free(Word::from_digits("01010")));
  CHECK(is_overlap_free(tm_prefix(128)));
  CHECK(is_overlap_free(Word::from_digits("0011")));
  CHECK(find_overlap(Word::from_digits("01010")) == Occurrence{0, 2, 5});
}

TEST_CASE("power-freeness thresholds") {
  const ExponentThreshold ge = ExponentThreshold::seven_thirds();
  const ExponentThreshold two_plus(2, 1, ExponentThreshold::Mode::exclude_gt);
  CHECK_FALSE(is_powerfree(Word::from_digits("0010010"), ge));
  CHECK(is_powerfree(Word::from_digits("00"), two_plus));
  CHECK(is_powerfree(Word::from_digits("010010"), ge));

  CHECK_THROWS_AS(ExponentThreshold(1, 1, ExponentThreshold::Mode::exclude_ge),
                  DomainError);
  CHECK_THROWS_AS(ExponentThreshold(2, 3, ExponentThreshold::Mode::exclude_ge),
                  DomainError);
}

TEST_CASE("powerfree thresholds subsume the named detectors") {
  std::mt19937_64 rng(21);
  const ExponentThreshold cube_threshold(3, 1,
                                         ExponentThreshold::Mode::exclude_ge);
  const ExponentThreshold overlap_threshold(
      2, 1, ExponentThreshold::Mode::exclude_gt);
  for (int i = 0; i < 400; ++i) {
    const Word w = random_word(rng, 2 + i % 2, 96);
    CHECK(is_powerfree(w, cube_threshold) == is_cubefree(w));
    CHECK(is_powerfree(w, overlap_threshold) == is_overlap_free(w));
  }
}

TEST_CASE("max_exponent") {
  CHECK(max_exponent(Word::from_digits("01")).first == Rational::of(1, 1));
  const auto flat = max_exponent(Word::from_digits("00100"));
  CHECK(flat.first == Rational::of(2, 1));
  CHECK(flat.second == Occurrence{0, 1, 2});
  const auto overlap = max_exponent(Word::from_digits("01010"));
  CHECK(overlap.first == Rational::of(5, 2));
  CHECK(overlap.second == Occurrence{0, 2, 5});
  CHECK_THROWS_AS(max_exponent(Word::from_digits("")), DomainError);
}

TEST_CASE("distinct_square_factors") {
  SquareSet expected;
  expected.insert(Word::from_digits("0101"));
  CHECK(distinct_square_factors(Word::from_digits("0101")) == expected);
  CHECK(distinct_square_factors(Word::from_digits("")).empty());

  SquareSet zero_square;
  zero_square.insert(Word::from_digits("00"));
  CHECK(distinct_square_factors(Word::from_digits("00100")) == zero_square);

  // length cap drops longer squares
  CHECK(distinct_square_factors(Word::from_digits("0101"), 2).empty());
}

TEST_CASE("square set membership is validated") {
  SquareSet set;
  CHECK(set.insert(Word::from_digits("0101")));
  CHECK_FALSE(set.insert(Word::from_digits("0101")));
  CHECK_THROWS_AS(set.insert(Word::from_digits("01")), DomainError);
}

TEST_CASE("count_occurrences") {
  CHECK(count_occurrences(Word::from_digits("01010"),
                          Word::from_digits("0101010")) == 2);
  const Word even4 = Word::from_digits("10011011001001101100");
  CHECK(count_occurrences(Word::from_digits("00100"), even4) == 1);
  CHECK(count_occurrences(Word::from_digits("11011"), even4) == 2);
  CHECK_THROWS_AS(count_occurrences(Word(), Word::from_digits("0")),
                  DomainError);
}

TEST_CASE("factor_complexity") {
  const Word w = Word::from_digits("0110");
  CHECK(factor_complexity(w, 1) == 2);
  CHECK(factor_complexity(w, 2) == 3);
  CHECK(factor_complexity(w, 0) == 1);
  CHECK(factor_complexity(w, 5) == 0);
}

TEST_CASE("conjugates") {
  CHECK(conjugates(Word::from_digits("00")).size() == 1);
  CHECK(conjugates(Word::from_digits("0110")).size() == 4);
  CHECK(conjugates(Word::from_digits("010010")).size() == 3);
  CHECK_THROWS_AS(conjugates(Word()), DomainError);
}

TEST_CASE("fast detectors equal naive oracles on all short binary words") {
  for (std::size_t len = 0; len <= 12; ++len) {
    std::vector<Symbol> symbols(len, 0);
    while (true) {
      require_engines_agree(Word(2, symbols));
      std::size_t i = len;
      while (i > 0 && symbols[i - 1] == 1) symbols[--i] = 0;
      if (i == 0) break;
      ++symbols[i - 1];
    }
  }
}

TEST_CASE("fast detectors equal naive oracles on random words") {
  std::mt19937_64 rng(42);
  for (int alphabet = 2; alphabet <= 5; ++alphabet) {
    for (int i = 0; i < 600; ++i) {
      require_engines_agree(random_word(rng, alphabet, 300));
    }
  }
}

TEST_CASE("fast detectors handle long structured words") {
  const Word t = tm_prefix(16384);
  CHECK(is_overlap_free(t));
  CHECK(is_cubefree(t));
  const Word t4k = tm_prefix(4096);
  CHECK(find_cube(t4k, Engine::fast) == find_cube(t4k, Engine::naive));
  CHECK(find_overlap(t4k, Engine::fast) == find_overlap(t4k, Engine::naive));
}

TEST_CASE("distinct square count stays within the linear bound") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 100; ++i) {
    const Word w = random_word(rng, 2, 256);
    CHECK(distinct_square_factors(w).size() <= 2 * w.size());
  }
}
