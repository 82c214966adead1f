#include "cfw/tm_squares.hpp"

#include <string>
#include <vector>

#include "cfw/morphism.hpp"
#include "cfw/streams.hpp"

namespace cfw {

namespace {

constexpr std::size_t kEnumerationCap = 48;  // roots up to 24 symbols

// All binary squares xx with |xx| <= length_cap, roots in increasing length
// then numeric order.
template <typename F>
void for_each_binary_square(std::size_t length_cap, F&& f) {
  for (std::size_t half = 1; 2 * half <= length_cap; ++half) {
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << half); ++bits) {
      std::vector<Symbol> symbols(2 * half);
      for (std::size_t i = 0; i < half; ++i) {
        const Symbol s = static_cast<Symbol>((bits >> (half - 1 - i)) & 1);
        symbols[i] = s;
        symbols[half + i] = s;
      }
      f(Word(2, std::move(symbols)));
    }
  }
}

void check_enumeration_cap(std::size_t length_cap) {
  if (length_cap > kEnumerationCap) {
    throw ResourceError("square enumeration capped at length " +
                        std::to_string(kEnumerationCap));
  }
}

}  // namespace

SquareSet base_square_set() {
  SquareSet out;
  out.insert(Word::from_digits("00"));
  out.insert(Word::from_digits("11"));
  out.insert(Word::from_digits("010010"));
  out.insert(Word::from_digits("101101"));
  return out;
}

TMSquareFamily tm_square_family(std::size_t length_cap) {
  TMSquareFamily family{length_cap, {}};
  const Morphism& mu = thue_morse_morphism();
  std::vector<Word> level;
  for (const Word& w : base_square_set()) level.push_back(w);
  while (true) {
    bool any_within_cap = false;
    for (const Word& w : level) {
      if (w.size() <= length_cap) {
        family.members.insert(w);
        any_within_cap = true;
      }
    }
    if (!any_within_cap) break;  // images only grow
    for (Word& w : level) w = mu.apply(w);
  }
  return family;
}

SquareSet squares_in_tm(std::size_t length_cap, std::size_t window, Engine e) {
  if (window < 32 * length_cap) {
    throw WindowError("window must be at least 32 * length_cap");
  }
  return distinct_square_factors(tm_prefix(window), length_cap, e);
}

SquareSet overlap_free_squares(std::size_t length_cap, Engine e) {
  check_enumeration_cap(length_cap);
  SquareSet out;
  for_each_binary_square(length_cap, [&](Word square) {
    if (is_overlap_free(square, e)) out.insert(std::move(square));
  });
  return out;
}

SquareSet seven_thirds_free_squares(std::size_t length_cap,
                                    ExponentThreshold::Mode mode, Engine e) {
  check_enumeration_cap(length_cap);
  const ExponentThreshold threshold = ExponentThreshold::seven_thirds(mode);
  SquareSet out;
  for_each_binary_square(length_cap, [&](Word square) {
    if (is_powerfree(square, threshold, e)) out.insert(std::move(square));
  });
  return out;
}

SquareSet conjugate_closure(const SquareSet& squares) {
  SquareSet out;
  for (const Word& w : squares) {
    for (const Word& rotation : conjugates(w)) {
      if (is_square(rotation)) out.insert(rotation);
    }
  }
  return out;
}

std::optional<ExponentThreshold::Mode> determine_seven_thirds_mode(
    std::size_t length_cap, Engine e) {
  const SquareSet closure =
      conjugate_closure(tm_square_family(length_cap).members);
  using Mode = ExponentThreshold::Mode;
  for (Mode mode : {Mode::exclude_ge, Mode::exclude_gt}) {
    if (seven_thirds_free_squares(length_cap, mode, e) == closure) {
      return mode;
    }
  }
  return std::nullopt;
}

}  // namespace cfw
