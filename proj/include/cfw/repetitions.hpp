#pragma once

#include <cstddef>
#include <optional>
#include <utility>

#include "cfw/rational.hpp"
#include "cfw/word.hpp"

namespace cfw {

// Every detector ships in two independent implementations. Engine::fast uses
// per-period bit-parallel match scanning (and fingerprinted square
// collection); Engine::naive is the direct-scan oracle the fast path is
// validated against. The two must agree exactly, including witnesses; the
// `oracles` verification suite enforces this on exhaustive and random inputs.
enum class Engine { fast, naive };

// A periodic factor of a host word: w[position .. position+length) has
// period `period`. The exponent length/period is kept exact.
struct Occurrence {
  std::size_t position = 0;
  std::size_t period = 0;
  std::size_t length = 0;

  Rational exponent() const {
    return Rational::of(static_cast<std::int64_t>(length),
                        static_cast<std::int64_t>(period));
  }

  friend bool operator==(const Occurrence&, const Occurrence&) = default;
};

// Exponent bound for power-freeness. exclude_ge forbids factors of exponent
// >= numerator/denominator; exclude_gt forbids exponent strictly greater.
// The bound itself must exceed 1.
class ExponentThreshold {
 public:
  enum class Mode { exclude_ge, exclude_gt };

  ExponentThreshold(std::int64_t numerator, std::int64_t denominator,
                    Mode mode);

  static ExponentThreshold seven_thirds(Mode mode = Mode::exclude_ge) {
    return ExponentThreshold(7, 3, mode);
  }

  std::int64_t numerator() const { return numerator_; }
  std::int64_t denominator() const { return denominator_; }
  Mode mode() const { return mode_; }

  // Smallest factor length that violates the bound at period p.
  std::size_t min_violating_length(std::size_t period) const;

 private:
  std::int64_t numerator_;
  std::int64_t denominator_;
  Mode mode_;
};

// Canonical set of squares: deduplicated, shortlex-ordered, and every member
// verified to be a square on insertion.
class SquareSet {
 public:
  using const_iterator = WordSet::const_iterator;

  SquareSet() = default;

  // Returns false if already present; throws DomainError for non-squares.
  bool insert(Word w);

  bool contains(const Word& w) const { return words_.contains(w); }
  std::size_t size() const { return words_.size(); }
  bool empty() const { return words_.empty(); }
  const_iterator begin() const { return words_.begin(); }
  const_iterator end() const { return words_.end(); }

  friend bool operator==(const SquareSet&, const SquareSet&) = default;

 private:
  WordSet words_;
};

bool is_square(const Word& w);

// Leftmost occurrence, ties broken by smallest period; length is the minimal
// length of the repetition kind (2p, 3p, 2p+1, or the threshold minimum).
std::optional<Occurrence> find_square(const Word& w, Engine e = Engine::fast);
std::optional<Occurrence> find_cube(const Word& w, Engine e = Engine::fast);
std::optional<Occurrence> find_overlap(const Word& w, Engine e = Engine::fast);
std::optional<Occurrence> find_power(const Word& w, const ExponentThreshold& t,
                                     Engine e = Engine::fast);

bool is_squarefree(const Word& w, Engine e = Engine::fast);
bool is_cubefree(const Word& w, Engine e = Engine::fast);
bool is_overlap_free(const Word& w, Engine e = Engine::fast);
bool is_powerfree(const Word& w, const ExponentThreshold& t,
                  Engine e = Engine::fast);

// Largest exponent over all factors (with any period p <= factor length),
// plus a witnessing occurrence: the smallest period achieving the maximum,
// leftmost maximal run within it. Words of length >= 1 only.
std::pair<Rational, Occurrence> max_exponent(const Word& w,
                                             Engine e = Engine::fast);

// All distinct square factors, optionally restricted to length <= max_len
// (0 = unbounded).
SquareSet distinct_square_factors(const Word& w, std::size_t max_len = 0,
                                  Engine e = Engine::fast);

// Number of (possibly overlapping) occurrences of pattern in w.
std::size_t count_occurrences(const Word& pattern, const Word& w);

// Number of distinct length-n factors; 1 for n == 0, 0 for n > |w|.
std::size_t factor_complexity(const Word& w, std::size_t n);

// All rotations of w, deduplicated. Words of length >= 1 only.
WordSet conjugates(const Word& w);

}  // namespace cfw
