#pragma once

#include <cstddef>
#include <optional>

#include "cfw/repetitions.hpp"
#include "cfw/word.hpp"

namespace cfw {

// The squares of the Thue-Morse word: every iterated image of the four base
// squares {00, 11, 010010, 101101}, capped by length. Member half-lengths
// are always a power of 2 or 3 times a power of 2.
struct TMSquareFamily {
  std::size_t length_cap = 0;
  SquareSet members;
};

// {00, 11, 010010, 101101}.
SquareSet base_square_set();

TMSquareFamily tm_square_family(std::size_t length_cap);

// Distinct square factors of tm_prefix(window) of length <= length_cap.
// The window must be at least 32 * length_cap: the Thue-Morse word is
// uniformly recurrent, so a generous linear window provably suffices, and
// the family-equality check certifies it.
SquareSet squares_in_tm(std::size_t length_cap, std::size_t window,
                        Engine e = Engine::fast);

// Every binary square of length <= length_cap that is overlap-free,
// by exhaustive root enumeration. Caps above 48 are refused.
SquareSet overlap_free_squares(std::size_t length_cap, Engine e = Engine::fast);

// Every binary square of length <= length_cap that is 7/3-power-free under
// the given threshold mode. Caps above 48 are refused.
SquareSet seven_thirds_free_squares(std::size_t length_cap,
                                    ExponentThreshold::Mode mode,
                                    Engine e = Engine::fast);

// Union of all rotations of the members, keeping only rotations that are
// themselves squares.
SquareSet conjugate_closure(const SquareSet& squares);

// The threshold mode under which the 7/3-power-free binary squares of
// length <= length_cap coincide with the conjugate closure of the
// Thue-Morse square family. Decided empirically; exclude_ge is preferred
// when both modes agree. nullopt if neither matches.
std::optional<ExponentThreshold::Mode> determine_seven_thirds_mode(
    std::size_t length_cap, Engine e = Engine::fast);

}  // namespace cfw
