#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <vector>

#include "cfw/morphism.hpp"
#include "cfw/repetitions.hpp"
#include "cfw/streams.hpp"

using namespace cfw;

namespace {

// fill() overrides must agree with plain symbol_at access.
void check_fill_consistency(const StreamPtr& stream, std::size_t span) {
  const Word bulk = stream->prefix(span);
  for (std::size_t i = 0; i < span; ++i) {
    REQUIRE(bulk[i] == stream->symbol_at(i));
  }
  std::vector<Symbol> middle(span / 2);
  stream->fill(span / 3, middle);
  for (std::size_t i = 0; i < middle.size(); ++i) {
    REQUIRE(middle[i] == stream->symbol_at(span / 3 + i));
  }
}

}  // namespace

TEST_CASE("thue-morse stream") {
  const StreamPtr t = thue_morse_word();
  CHECK(t->alphabet_size() == 2);
  CHECK(t->prefix(24).to_digits() == "011010011001011010010110");
  check_fill_consistency(t, 500);
}

TEST_CASE("champernowne stream concatenates binary expansions") {
  const StreamPtr c = champernowne_word();
  // 1 10 11 100 101 110 111 1000 ...
  CHECK(c->prefix(18).to_digits() == "110111001011101111");
  check_fill_consistency(c, 400);

  // every short block appears early
  const Word prefix = c->prefix(2000);
  for (std::size_t k = 1; k <= 6; ++k) {
    CHECK(factor_complexity(prefix, k) == (std::size_t{1} << k));
  }
}

TEST_CASE("ternary squarefree stream") {
  const StreamPtr s = ternary_squarefree_word();
  CHECK(s->alphabet_size() == 3);
  CHECK(s->prefix(12).to_digits() == "210201210120");
  CHECK(is_squarefree(s->prefix(2000), Engine::naive));
  check_fill_consistency(s, 300);
}

TEST_CASE("relabelled stream") {
  const StreamPtr r =
      relabelled(thue_morse_word(), relabel_map({{0, 2}, {1, 3}}));
  CHECK(r->alphabet_size() == 4);
  CHECK(r->prefix(6).to_digits() == "233232");
  check_fill_consistency(r, 300);

  CHECK_THROWS_AS(relabelled(ternary_squarefree_word(),
                             relabel_map({{0, 1}, {1, 2}})),
                  DomainError);
}

TEST_CASE("perfect shuffle interleaves tracks") {
  const StreamPtr shuffled = perfect_shuffle(
      thue_morse_word(),
      relabelled(champernowne_word(), relabel_map({{0, 3}, {1, 4}})));
  const Word prefix = shuffled->prefix(100);
  for (std::size_t i = 0; i < prefix.size(); ++i) {
    if (i % 2 == 0) {
      CHECK(prefix[i] == thue_morse_word()->symbol_at(i / 2));
    } else {
      CHECK(prefix[i] >= 3);
    }
  }
  check_fill_consistency(shuffled, 300);
}

TEST_CASE("morphic image stream") {
  const StreamPtr image = morphic_image(thue_morse_word(), thue_morse_morphism());
  // mu(t) = t
  CHECK(image->prefix(64) == tm_prefix(64));
  check_fill_consistency(image, 400);

  const Morphism stretchy(2, 2,
                          {Word::from_digits("0"), Word::from_digits("01")});
  CHECK_THROWS_AS(morphic_image(thue_morse_word(), stretchy), DomainError);
}

TEST_CASE("cursor reads consecutive blocks") {
  Cursor cursor(champernowne_word());
  const Word a = cursor.next_block(7);
  const Word b = cursor.next_block(5);
  CHECK(cursor.position() == 12);
  CHECK(a + b == champernowne_word()->prefix(12));
}
