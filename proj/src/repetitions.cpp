#include "cfw/repetitions.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <string>
#include <unordered_set>
#include <vector>

namespace cfw {

namespace {

constexpr std::uint64_t ones_mask(std::size_t k) {
  return k >= 64 ? ~0ull : ((std::uint64_t{1} << k) - 1);
}

// Per-period match scanning over symbol occurrence bitmasks. For a period p,
// the match vector has bit j set iff w[j] == w[j+p]; maximal runs of set bits
// are exactly the maximal period-p factors (run of length r at position s
// means w[s .. s+r+p) has period p and cannot be extended).
class PeriodScanner {
 public:
  explicit PeriodScanner(const Word& w)
      : n_(w.size()), sigma_(w.alphabet_size()) {
    const std::size_t nw = (n_ + 63) / 64;
    for (int c = 0; c < sigma_; ++c) sym_[c].assign(nw, 0);
    for (std::size_t i = 0; i < n_; ++i) {
      sym_[w[i]][i / 64] |= std::uint64_t{1} << (i % 64);
    }
    eq_.assign(nw, 0);
  }

  // Calls f(start, len) for each maximal run of matches, in increasing
  // position; f returning true stops the walk. Requires 1 <= p < |w|.
  template <typename F>
  void for_each_match_run(std::size_t p, F&& f) {
    const std::size_t m = n_ - p;  // number of comparable positions
    const std::size_t nw = (m + 63) / 64;
    std::fill(eq_.begin(), eq_.begin() + nw, 0);
    const std::size_t wshift = p / 64;
    const unsigned bshift = p % 64;
    for (int c = 0; c < sigma_; ++c) {
      const auto& bits = sym_[c];
      for (std::size_t k = 0; k < nw; ++k) {
        std::uint64_t shifted = bits[k + wshift] >> bshift;
        if (bshift != 0 && k + wshift + 1 < bits.size()) {
          shifted |= bits[k + wshift + 1] << (64 - bshift);
        }
        eq_[k] |= bits[k] & shifted;
      }
    }
    if (m % 64 != 0) eq_[nw - 1] &= ones_mask(m % 64);
    walk_runs(m, std::forward<F>(f));
  }

 private:
  template <typename F>
  void walk_runs(std::size_t nbits, F&& f) const {
    std::size_t run_start = 0;
    std::size_t run_len = 0;
    const std::size_t nw = (nbits + 63) / 64;
    for (std::size_t k = 0; k < nw; ++k) {
      const std::size_t base = k * 64;
      const std::size_t valid = std::min<std::size_t>(64, nbits - base);
      const std::uint64_t v = eq_[k];
      if (v == ones_mask(valid)) {
        if (run_len == 0) run_start = base;
        run_len += valid;
        continue;
      }
      std::size_t j = 0;
      while (j < valid) {
        const std::uint64_t rest = v >> j;
        if ((rest & 1) == 0) {
          if (run_len != 0) {
            if (f(run_start, run_len)) return;
            run_len = 0;
          }
          if (rest == 0) break;
          j += std::countr_zero(rest);
        } else {
          const unsigned ones = std::countr_one(rest);
          if (run_len == 0) run_start = base + j;
          run_len += ones;
          j += ones;
          if (j < valid) {
            if (f(run_start, run_len)) return;
            run_len = 0;
          }
        }
      }
    }
    if (run_len != 0) f(run_start, run_len);
  }

  std::size_t n_;
  int sigma_;
  std::array<std::vector<std::uint64_t>, kMaxAlphabet> sym_;
  std::vector<std::uint64_t> eq_;
};

// Leftmost-position, then smallest-period occurrence of a factor whose
// length reaches min_len(p). min_len must be nondecreasing in p.
template <typename LenFn>
std::optional<Occurrence> fast_find(const Word& w, LenFn min_len) {
  const std::size_t n = w.size();
  if (n < 2) return std::nullopt;
  PeriodScanner scan(w);
  std::optional<Occurrence> best;
  for (std::size_t p = 1; p < n; ++p) {
    const std::size_t len = min_len(p);
    if (len > n) break;
    const std::size_t need = len - p;
    scan.for_each_match_run(p, [&](std::size_t s, std::size_t r) {
      if (r < need) return false;
      if (!best || s < best->position ||
          (s == best->position && p < best->period)) {
        best = Occurrence{s, p, len};
      }
      return true;  // leftmost run for this period
    });
    // Position 0 with the current period cannot be beaten by a larger p.
    if (best && best->position == 0) break;
  }
  return best;
}

template <typename LenFn>
std::optional<Occurrence> naive_find(const Word& w, LenFn min_len) {
  const std::size_t n = w.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t p = 1; i + p < n; ++p) {
      const std::size_t len = min_len(p);
      if (i + len > n) break;
      bool match = true;
      for (std::size_t j = 0; j + p < len; ++j) {
        if (w[i + j] != w[i + j + p]) {
          match = false;
          break;
        }
      }
      if (match) return Occurrence{i, p, len};
    }
  }
  return std::nullopt;
}

template <typename LenFn>
std::optional<Occurrence> find_repetition(const Word& w, Engine e,
                                          LenFn min_len) {
  return e == Engine::fast ? fast_find(w, min_len) : naive_find(w, min_len);
}

std::pair<Rational, Occurrence> fast_max_exponent(const Word& w) {
  const std::size_t n = w.size();
  Rational best = Rational::of(1, 1);
  Occurrence witness{0, 1, 1};
  if (n >= 2) {
    PeriodScanner scan(w);
    for (std::size_t p = 1; p < n; ++p) {
      // (n/p) bounds every exponent achievable at period >= p.
      if (Rational::of(n, p) <= best) break;
      std::size_t max_run = 0;
      std::size_t at = 0;
      scan.for_each_match_run(p, [&](std::size_t s, std::size_t r) {
        if (r > max_run) {
          max_run = r;
          at = s;
        }
        return false;
      });
      if (max_run == 0) continue;
      const Rational cand = Rational::of(p + max_run, p);
      if (best < cand) {
        best = cand;
        witness = Occurrence{at, p, p + max_run};
      }
    }
  }
  return {best, witness};
}

std::pair<Rational, Occurrence> naive_max_exponent(const Word& w) {
  const std::size_t n = w.size();
  Rational best = Rational::of(1, 1);
  Occurrence witness{0, 1, 1};
  for (std::size_t p = 1; p < n; ++p) {
    std::size_t max_run = 0;
    std::size_t at = 0;
    std::size_t cur = 0;
    std::size_t cur_start = 0;
    for (std::size_t j = 0; j + p < n; ++j) {
      if (w[j] == w[j + p]) {
        if (cur == 0) cur_start = j;
        ++cur;
        if (cur > max_run) {
          max_run = cur;
          at = cur_start;
        }
      } else {
        cur = 0;
      }
    }
    if (max_run == 0) continue;
    const Rational cand = Rational::of(p + max_run, p);
    if (best < cand) {
      best = cand;
      witness = Occurrence{at, p, p + max_run};
    }
  }
  return {best, witness};
}

// Wrapping polynomial fingerprints of prefixes; equality of ranges is
// confirmed symbol-by-symbol before use.
class PrefixFingerprint {
 public:
  explicit PrefixFingerprint(std::span<const Symbol> s) {
    hash_.resize(s.size() + 1);
    pow_.resize(s.size() + 1);
    hash_[0] = 0;
    pow_[0] = 1;
    for (std::size_t i = 0; i < s.size(); ++i) {
      hash_[i + 1] = hash_[i] * kMul + s[i] + 1;
      pow_[i + 1] = pow_[i] * kMul;
    }
  }

  std::uint64_t range(std::size_t pos, std::size_t len) const {
    return hash_[pos + len] - hash_[pos] * pow_[len];
  }

 private:
  static constexpr std::uint64_t kMul = 0x9E3779B97F4A7C15ull;
  std::vector<std::uint64_t> hash_;
  std::vector<std::uint64_t> pow_;
};

SquareSet fast_square_factors(const Word& w, std::size_t max_len) {
  SquareSet out;
  const std::size_t n = w.size();
  if (n < 2) return out;
  const std::size_t cap = max_len == 0 ? n : std::min(max_len, n);
  const auto s = w.symbols();
  const PrefixFingerprint fp(s);
  for (std::size_t half = 1; 2 * half <= cap; ++half) {
    for (std::size_t i = 0; i + 2 * half <= n; ++i) {
      if (fp.range(i, half) != fp.range(i + half, half)) continue;
      if (!std::equal(s.begin() + i, s.begin() + i + half,
                      s.begin() + i + half)) {
        continue;  // fingerprint collision
      }
      out.insert(w.factor(i, 2 * half));
    }
  }
  return out;
}

SquareSet naive_square_factors(const Word& w, std::size_t max_len) {
  SquareSet out;
  const std::size_t n = w.size();
  const std::size_t cap = max_len == 0 ? n : std::min(max_len, n);
  const auto s = w.symbols();
  for (std::size_t half = 1; 2 * half <= cap; ++half) {
    for (std::size_t i = 0; i + 2 * half <= n; ++i) {
      bool match = true;
      for (std::size_t j = 0; j < half; ++j) {
        if (s[i + j] != s[i + half + j]) {
          match = false;
          break;
        }
      }
      if (match) out.insert(w.factor(i, 2 * half));
    }
  }
  return out;
}

struct SpanHash {
  std::size_t operator()(std::span<const Symbol> s) const {
    std::uint64_t h = 1469598103934665603ull;
    for (Symbol c : s) {
      h ^= c;
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};

struct SpanEq {
  bool operator()(std::span<const Symbol> a, std::span<const Symbol> b) const {
    return std::equal(a.begin(), a.end(), b.begin(), b.end());
  }
};

}  // namespace

ExponentThreshold::ExponentThreshold(std::int64_t numerator,
                                     std::int64_t denominator, Mode mode)
    : numerator_(numerator), denominator_(denominator), mode_(mode) {
  if (numerator <= 0 || denominator <= 0 || numerator <= denominator) {
    throw DomainError("exponent threshold must exceed 1");
  }
}

std::size_t ExponentThreshold::min_violating_length(std::size_t period) const {
  const std::int64_t p = static_cast<std::int64_t>(period);
  if (mode_ == Mode::exclude_ge) {
    // smallest L with L*den >= num*p
    return static_cast<std::size_t>((numerator_ * p + denominator_ - 1) /
                                    denominator_);
  }
  // smallest L with L*den > num*p
  return static_cast<std::size_t>(numerator_ * p / denominator_ + 1);
}

bool SquareSet::insert(Word w) {
  if (!is_square(w)) {
    throw DomainError("SquareSet member is not a square: " + w.to_digits());
  }
  return words_.insert(std::move(w)).second;
}

bool is_square(const Word& w) {
  const std::size_t n = w.size();
  if (n < 2 || n % 2 != 0) return false;
  const auto s = w.symbols();
  return std::equal(s.begin(), s.begin() + n / 2, s.begin() + n / 2);
}

std::optional<Occurrence> find_square(const Word& w, Engine e) {
  return find_repetition(w, e, [](std::size_t p) { return 2 * p; });
}

std::optional<Occurrence> find_cube(const Word& w, Engine e) {
  return find_repetition(w, e, [](std::size_t p) { return 3 * p; });
}

std::optional<Occurrence> find_overlap(const Word& w, Engine e) {
  return find_repetition(w, e, [](std::size_t p) { return 2 * p + 1; });
}

std::optional<Occurrence> find_power(const Word& w, const ExponentThreshold& t,
                                     Engine e) {
  return find_repetition(
      w, e, [&t](std::size_t p) { return t.min_violating_length(p); });
}

bool is_squarefree(const Word& w, Engine e) {
  return !find_square(w, e).has_value();
}

bool is_cubefree(const Word& w, Engine e) {
  return !find_cube(w, e).has_value();
}

bool is_overlap_free(const Word& w, Engine e) {
  return !find_overlap(w, e).has_value();
}

bool is_powerfree(const Word& w, const ExponentThreshold& t, Engine e) {
  return !find_power(w, t, e).has_value();
}

std::pair<Rational, Occurrence> max_exponent(const Word& w, Engine e) {
  if (w.empty()) throw DomainError("max_exponent of the empty word");
  return e == Engine::fast ? fast_max_exponent(w) : naive_max_exponent(w);
}

SquareSet distinct_square_factors(const Word& w, std::size_t max_len,
                                  Engine e) {
  return e == Engine::fast ? fast_square_factors(w, max_len)
                           : naive_square_factors(w, max_len);
}

std::size_t count_occurrences(const Word& pattern, const Word& w) {
  if (pattern.empty()) throw DomainError("empty pattern");
  if (pattern.size() > w.size()) return 0;
  const auto p = pattern.symbols();
  const auto s = w.symbols();
  std::size_t count = 0;
  for (std::size_t i = 0; i + p.size() <= s.size(); ++i) {
    if (std::equal(p.begin(), p.end(), s.begin() + i)) ++count;
  }
  return count;
}

std::size_t factor_complexity(const Word& w, std::size_t n) {
  if (n == 0) return 1;
  if (n > w.size()) return 0;
  const auto s = w.symbols();
  std::unordered_set<std::span<const Symbol>, SpanHash, SpanEq> distinct;
  distinct.reserve(w.size() - n + 1);
  for (std::size_t i = 0; i + n <= w.size(); ++i) {
    distinct.insert(s.subspan(i, n));
  }
  return distinct.size();
}

WordSet conjugates(const Word& w) {
  if (w.empty()) throw DomainError("conjugates of the empty word");
  WordSet out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    out.insert(w.rotated_left(i));
  }
  return out;
}

}  // namespace cfw
