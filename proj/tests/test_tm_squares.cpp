#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "cfw/tm_squares.hpp"

using namespace cfw;

namespace {

SquareSet set_of(std::initializer_list<const char*> digits) {
  SquareSet out;
  for (const char* d : digits) out.insert(Word::from_digits(d));
  return out;
}

}  // namespace

TEST_CASE("base square set") {
  const SquareSet base = base_square_set();
  CHECK(base.size() == 4);
  CHECK(base == set_of({"00", "11", "010010", "101101"}));
  for (const Word& w : base) CHECK(is_square(w));
  // 010010 is the square of a length-3 root
  const Word w = Word::from_digits("010010");
  CHECK(w.factor(0, 3) == w.factor(3, 3));
}

TEST_CASE("iterated square family") {
  CHECK(tm_square_family(2).members == set_of({"00", "11"}));
  CHECK(tm_square_family(8).members ==
        set_of({"00", "11", "0101", "1010", "010010", "101101", "01100110",
                "10011001"}));
  CHECK(tm_square_family(1).members.empty());
}

TEST_CASE("window scan matches the family") {
  CHECK(squares_in_tm(2, 64) == set_of({"00", "11"}));
  CHECK(squares_in_tm(4, 256) == set_of({"00", "11", "0101", "1010"}));
  CHECK(squares_in_tm(8, 512) == tm_square_family(8).members);
  CHECK_THROWS_AS(squares_in_tm(8, 255), WindowError);
}

TEST_CASE("family equality holds for every cap up to 64") {
  for (std::size_t cap = 2; cap <= 64; cap += 2) {
    CHECK(squares_in_tm(cap, 32 * cap) == tm_square_family(cap).members);
  }
}

TEST_CASE("overlap-free squares") {
  CHECK(overlap_free_squares(2) == set_of({"00", "11"}));
  CHECK(overlap_free_squares(4) == set_of({"00", "11", "0101", "1010"}));
  const SquareSet cap8 = overlap_free_squares(8);
  CHECK(cap8.contains(Word::from_digits("01100110")));
  CHECK(cap8.contains(Word::from_digits("00110011")));
  CHECK_THROWS_AS(overlap_free_squares(50), ResourceError);
}

TEST_CASE("conjugate closure keeps only square rotations") {
  CHECK(conjugate_closure(set_of({"00"})) == set_of({"00"}));
  CHECK(conjugate_closure(set_of({"010010"})) ==
        set_of({"010010", "001001", "100100"}));
  CHECK(conjugate_closure(SquareSet{}).empty());
}

TEST_CASE("overlap-free squares are the family conjugates") {
  for (std::size_t cap : {8, 16, 24}) {
    CHECK(overlap_free_squares(cap) ==
          conjugate_closure(tm_square_family(cap).members));
  }
}

TEST_CASE("seven-thirds-free squares") {
  using Mode = ExponentThreshold::Mode;
  CHECK(seven_thirds_free_squares(2, Mode::exclude_ge) == set_of({"00", "11"}));
  CHECK(seven_thirds_free_squares(2, Mode::exclude_gt) == set_of({"00", "11"}));
  CHECK(seven_thirds_free_squares(6, Mode::exclude_ge) ==
        conjugate_closure(tm_square_family(6).members));
  CHECK_THROWS_AS(seven_thirds_free_squares(50, Mode::exclude_ge),
                  ResourceError);
}

TEST_CASE("the exclude_ge threshold realizes the conjugate characterization") {
  CHECK(determine_seven_thirds_mode(24) == ExponentThreshold::Mode::exclude_ge);
  // the strict threshold admits extra squares, e.g. (001001011)^2
  const SquareSet strict =
      seven_thirds_free_squares(24, ExponentThreshold::Mode::exclude_gt);
  const SquareSet closure = conjugate_closure(tm_square_family(24).members);
  CHECK(strict != closure);
  CHECK(strict.contains(Word::from_digits("001001011001001011")));
  CHECK_FALSE(closure.contains(Word::from_digits("001001011001001011")));
}

TEST_CASE("family member half-lengths are 2^k or 3*2^k") {
  for (const Word& w : tm_square_family(64).members) {
    std::size_t half = w.size() / 2;
    while (half % 2 == 0) half /= 2;
    CHECK((half == 1 || half == 3));
  }
}
