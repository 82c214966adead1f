#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cfw/repetitions.hpp"
#include "cfw/streams.hpp"
#include "cfw/word.hpp"

namespace cfw {

// A Thue-Morse factor that both starts and ends with 1001. Such factors
// exist for every even length n >= 4 except 6, and they are the seeds of
// the odd/even square builders.
struct AnchoredFactor {
  Word word;
  std::size_t source_position = 0;  // first occurrence in t
};

// Smallest-position anchored factor of length n within tm_prefix(64n + 64).
// Throws NoAnchorError for n odd, n < 4, or n == 6; WindowError if the
// window search fails (never expected).
AnchoredFactor find_anchor_factor(std::size_t n);

// (x0)^2 for the anchored factor x of length n: a cubefree square of length
// 2(n+1), i.e. of odd half-length n+1.
Word odd_square(std::size_t n);

// (x101100)^2 for the anchored factor x of length n: a cubefree square of
// length 2(n+6), i.e. of even half-length n+6.
Word even_square(std::size_t n);

// Precomputed cubefree squares for the half-lengths the anchored builders
// cannot reach: {1, 2, 3, 4, 6, 7, 8, 12}. Each entry is the
// lexicographically least cubefree square of its length.
Word base_case_square(std::size_t half);

// A cubefree binary square of length 2*half, for every half >= 1.
Word cubefree_square(std::size_t half);

// At least 2^ceil(m/2) distinct cubefree squares of length 12m: take the
// root x of cubefree_square(m), complemented if 1s outnumber 0s, replace
// every subset of its 0s by 2s, and square the 6-uniform cubefree-
// preserving images of the results.
SquareSet exp_family(std::size_t m);

// |exp_family(m)| without materializing it: 2^(number of 0s in the
// normalized root).
std::uint64_t exp_family_size(std::size_t m);

// Deterministic enumeration of all family members: increasing m,
// lexicographic within each family, no repeats.
class SquareSupplyStream {
 public:
  SquareSupplyStream() = default;

  Word next();

 private:
  std::size_t m_ = 0;
  std::vector<Word> family_;
  std::size_t index_ = 0;
};

// The interleaving x1 S1 x2 S2 ... of the {2,3}-relabelled Thue-Morse word
// with the square supply stream; cubefree over {0,1,2,3}.
StreamPtr w_stream();

// Binary image of w_stream under the 9-uniform cubefree-preserving
// morphism; cubefree with exponentially many distinct squares.
StreamPtr gw_stream();

// Perfect shuffle of the squarefree ternary word with the {3,4}-relabelled
// Champernowne word; squarefree over {0,...,4} with exponential factor
// complexity.
StreamPtr y_stream();

// Ternary image of y_stream under the 18-uniform squarefree-preserving
// morphism; squarefree with exponential factor complexity.
StreamPtr fy_stream();

// Per-length census of cubefree binary squares.
struct CensusRecord {
  std::size_t length = 0;
  std::optional<std::uint64_t> exact_count;         // lengths <= exhaustive cap
  std::optional<std::uint64_t> family_lower_bound;  // lengths divisible by 12
  SquareSet witnesses;
};

// One record per even length <= max_length. Exact counts enumerate square
// roots, so exhaustive_cap is limited to 28 (2^14 roots).
std::vector<CensusRecord> census(std::size_t max_length,
                                 std::size_t exhaustive_cap);

// {"length": int, "exact_count": int|null, "family_lower_bound": int|null,
//  "witnesses": [digit strings]}
std::string census_record_to_json(const CensusRecord& record);

}  // namespace cfw
