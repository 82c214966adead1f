#include "cfw/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <ostream>
#include <random>
#include <sstream>
#include <utility>

#include "cfw/constructions.hpp"
#include "cfw/morphism.hpp"
#include "cfw/streams.hpp"
#include "cfw/tm_squares.hpp"

namespace cfw::verify {

namespace {

using Clock = std::chrono::steady_clock;

class Timer {
 public:
  explicit Timer(Report& report) : report_(report), start_(Clock::now()) {}
  ~Timer() {
    report_.elapsed_seconds +=
        std::chrono::duration<double>(Clock::now() - start_).count();
  }

 private:
  Report& report_;
  Clock::time_point start_;
};

void check(Report& r, std::string id, bool ok, std::string input,
           std::string expected, std::string got) {
  ++r.checks_run;
  if (!ok) {
    r.failures.push_back(Failure{std::move(id), std::move(input),
                                 std::move(expected), std::move(got)});
  }
}

std::string describe(const std::optional<Occurrence>& occ) {
  if (!occ) return "none";
  std::ostringstream os;
  os << "pos=" << occ->position << ", period=" << occ->period
     << ", len=" << occ->length;
  return os.str();
}

std::string short_digits(const Word& w) {
  std::string s = w.to_digits();
  if (s.size() > 64) s = s.substr(0, 64) + "...";
  return s;
}

std::string set_difference_sample(const SquareSet& a, const SquareSet& b) {
  std::ostringstream os;
  std::size_t shown = 0;
  for (const Word& w : a) {
    if (!b.contains(w)) {
      os << (shown ? " " : "") << "+" << w.to_digits();
      if (++shown == 3) break;
    }
  }
  for (const Word& w : b) {
    if (shown == 6) break;
    if (!a.contains(w)) {
      os << (shown ? " " : "") << "-" << w.to_digits();
      ++shown;
    }
  }
  return shown ? os.str() : std::string("equal");
}

std::uint64_t limit_or(const Options& opts, std::uint64_t fallback) {
  return opts.limit == 0 ? fallback : opts.limit;
}

// ---- granular checks -------------------------------------------------

void check_constructed_square(Report& r, const std::string& id, const Word& w,
                              std::size_t expected_length, Engine engine) {
  const bool square_ok = is_square(w);
  const bool length_ok = w.size() == expected_length;
  const auto cube = find_cube(w, Engine::naive);
  bool fast_agrees = true;
  if (engine == Engine::fast) {
    fast_agrees = find_cube(w, Engine::fast) == cube;
  }
  const bool ok = square_ok && length_ok && !cube && fast_agrees;
  std::string got;
  if (!length_ok) {
    got = "length " + std::to_string(w.size());
  } else if (!square_ok) {
    got = "not a square";
  } else if (cube) {
    got = "cube at " + describe(cube);
  } else if (!fast_agrees) {
    got = "fast/naive cube verdicts differ";
  }
  check(r, id, ok, short_digits(w),
        "cubefree square of length " + std::to_string(expected_length),
        ok ? "ok" : got);
}

void check_theorem1(Report& r, std::uint64_t half_max, Engine engine) {
  for (std::size_t half = 1; half <= half_max; ++half) {
    check_constructed_square(r, "thm1/half=" + std::to_string(half),
                             cubefree_square(half), 2 * half, engine);
  }
}

void check_lemma3(Report& r, std::uint64_t n_max) {
  for (std::size_t n : {std::size_t{2}, std::size_t{6}}) {
    bool rejected = false;
    try {
      find_anchor_factor(n);
    } catch (const NoAnchorError&) {
      rejected = true;
    }
    check(r, "lemma3/rejects-n=" + std::to_string(n), rejected,
          std::to_string(n), "NoAnchorError", rejected ? "ok" : "no error");
  }
  const Word anchor = Word::from_digits("1001");
  for (std::size_t n = 4; n <= n_max; n += 2) {
    if (n == 6) continue;
    const std::string id = "lemma3/n=" + std::to_string(n);
    try {
      const AnchoredFactor factor = find_anchor_factor(n);
      const Word window = tm_prefix(64 * n + 64);
      const bool place_ok =
          factor.source_position + n <= window.size() &&
          window.factor(factor.source_position, n) == factor.word;
      const bool shape_ok = factor.word.size() == n &&
                            factor.word.starts_with(anchor) &&
                            factor.word.ends_with(anchor);
      check(r, id, place_ok && shape_ok, short_digits(factor.word),
            "anchored factor at position " +
                std::to_string(factor.source_position),
            place_ok && shape_ok ? "ok" : "mismatch");
    } catch (const Error& e) {
      check(r, id, false, std::to_string(n), "anchored factor", e.what());
    }
  }
}

void check_theorem6(Report& r, std::uint64_t n_max, Engine engine) {
  const Word pattern = Word::from_digits("01010");
  for (std::size_t n = 4; n <= n_max; n += 2) {
    if (n == 6) continue;
    const Word w = odd_square(n);
    check_constructed_square(r, "thm6/n=" + std::to_string(n) + "/cubefree", w,
                             2 * (n + 1), engine);
    const std::size_t count = count_occurrences(pattern, w);
    check(r, "thm6/n=" + std::to_string(n) + "/01010-once", count == 1,
          short_digits(w), "1 occurrence", std::to_string(count));
  }
}

void check_theorem8(Report& r, std::uint64_t n_max, Engine engine) {
  const Word once = Word::from_digits("00100");
  const Word twice = Word::from_digits("11011");
  for (std::size_t n = 4; n <= n_max; n += 2) {
    if (n == 6) continue;
    const Word w = even_square(n);
    check_constructed_square(r, "thm8/n=" + std::to_string(n) + "/cubefree", w,
                             2 * (n + 6), engine);
    const std::size_t count_once = count_occurrences(once, w);
    const std::size_t count_twice = count_occurrences(twice, w);
    check(r, "thm8/n=" + std::to_string(n) + "/counts",
          count_once == 1 && count_twice == 2, short_digits(w),
          "00100 once, 11011 twice",
          "00100=" + std::to_string(count_once) +
              " 11011=" + std::to_string(count_twice));
  }
}

void check_exp_family(Report& r, std::uint64_t m_max) {
  for (std::size_t m = 1; m <= m_max; ++m) {
    const std::string id = "prop8/m=" + std::to_string(m);
    const SquareSet family = exp_family(m);
    const std::uint64_t bound = std::uint64_t{1} << ((m + 1) / 2);
    bool members_ok = true;
    std::string offender;
    for (const Word& w : family) {
      if (w.size() != 12 * m || !is_square(w) ||
          find_cube(w, Engine::naive)) {
        members_ok = false;
        offender = short_digits(w);
        break;
      }
    }
    const bool size_ok =
        family.size() >= bound && family.size() == exp_family_size(m);
    check(r, id, size_ok && members_ok, "m=" + std::to_string(m),
          ">=" + std::to_string(bound) + " distinct cubefree squares of length " +
              std::to_string(12 * m),
          !size_ok ? "size " + std::to_string(family.size())
                   : (members_ok ? "ok" : "bad member " + offender));
  }
}

void check_census_bound(Report& r, std::uint64_t m_max) {
  const std::size_t cap = std::min<std::size_t>(28, (m_max * 12 / 2) * 2);
  const auto records = census(cap, cap);
  for (const CensusRecord& record : records) {
    if (record.length % 12 != 0) continue;
    const bool ok = record.exact_count && record.family_lower_bound &&
                    *record.exact_count >= *record.family_lower_bound;
    check(r, "prop8/census-len=" + std::to_string(record.length), ok,
          "length " + std::to_string(record.length),
          "exact count >= family bound",
          ok ? "ok"
             : "exact=" +
                   (record.exact_count ? std::to_string(*record.exact_count)
                                       : std::string("none")) +
                   " bound=" +
                   (record.family_lower_bound
                        ? std::to_string(*record.family_lower_bound)
                        : std::string("none")));
  }
}

// Enumerates every word of exactly the given length over the alphabet.
template <typename F>
void for_each_word_of_length(int alphabet, std::size_t len, F&& f) {
  if (len == 0) {
    f(Word(alphabet, {}));
    return;
  }
  std::vector<Symbol> symbols(len, 0);
  while (true) {
    f(Word(alphabet, symbols));
    std::size_t i = len;
    while (i > 0 && symbols[i - 1] == alphabet - 1) {
      symbols[--i] = 0;
    }
    if (i == 0) break;
    ++symbols[i - 1];
  }
}

void check_preservation(Report& r, const std::string& id_prefix,
                        const Morphism& m, std::size_t max_len, bool cubes,
                        Engine engine) {
  for (std::size_t len = 1; len <= max_len; ++len) {
    const std::string id = id_prefix + "/len=" + std::to_string(len);
    bool all_ok = true;
    std::string offender;
    std::uint64_t images = 0;
    for_each_word_of_length(m.domain_size(), len, [&](const Word& w) {
      if (!all_ok) return;
      const bool free = cubes ? is_cubefree(w, engine) : is_squarefree(w, engine);
      if (!free) return;
      ++images;
      const Word image = m.apply(w);
      const bool image_free = cubes ? is_cubefree(image, Engine::naive)
                                    : is_squarefree(image, Engine::naive);
      if (!image_free) {
        all_ok = false;
        offender = w.to_digits() + " -> " + short_digits(image);
      }
    });
    check(r, id, all_ok, std::to_string(images) + " preimages",
          cubes ? "all images cubefree" : "all images squarefree",
          all_ok ? "ok" : offender);
  }
}

// Length of the w-stream prefix that covers the first two families.
std::size_t w_prefix_covering_families(std::size_t families) {
  std::size_t blocks = 0;
  for (std::size_t m = 1; m <= families; ++m) {
    blocks += static_cast<std::size_t>(exp_family_size(m));
  }
  std::size_t length = 0;
  SquareSupplyStream supply;
  for (std::size_t k = 0; k < blocks; ++k) {
    length += 1 + supply.next().size();
  }
  return length;
}

void check_gw(Report& r, std::uint64_t prefix_len, Engine engine) {
  const Word w = w_stream()->prefix(
      static_cast<std::size_t>(std::min<std::uint64_t>(prefix_len, 10000)));
  const auto w_cube = find_cube(w, engine);
  check(r, "thm2/w-prefix-cubefree", !w_cube,
        "w prefix of length " + std::to_string(w.size()), "cubefree",
        describe(w_cube));
  const Word gw =
      gw_stream()->prefix(static_cast<std::size_t>(prefix_len));
  const auto cube = find_cube(gw, engine);
  check(r, "thm2/gw-prefix-cubefree", !cube,
        "gw prefix of length " + std::to_string(gw.size()), "cubefree",
        describe(cube));
}

void check_gw_squares(Report& r, Engine engine) {
  const std::size_t covering = w_prefix_covering_families(2);
  const Word gw = gw_stream()->prefix(9 * covering);
  const SquareSet squares = distinct_square_factors(gw, 216, engine);
  std::size_t of_108 = 0;
  std::size_t of_216 = 0;
  for (const Word& s : squares) {
    if (s.size() == 108) ++of_108;
    if (s.size() == 216) ++of_216;
  }
  check(r, "thm2/squares-of-length-108", of_108 >= 2,
        "gw prefix of length " + std::to_string(gw.size()), ">= 2",
        std::to_string(of_108));
  check(r, "thm2/squares-of-length-216", of_216 >= 2,
        "gw prefix of length " + std::to_string(gw.size()), ">= 2",
        std::to_string(of_216));
}

bool half_is_power_of_2_or_3_times(std::size_t half) {
  while (half % 2 == 0) half /= 2;
  return half == 1 || half == 3;
}

void check_tm_characterizations(Report& r, std::uint64_t cap, Engine engine) {
  const TMSquareFamily family = tm_square_family(cap);
  const SquareSet scanned = squares_in_tm(cap, 32 * cap, engine);
  check(r, "tm-squares/window-scan-equals-family",
        scanned == family.members, "cap " + std::to_string(cap),
        "equal sets", set_difference_sample(scanned, family.members));

  const std::size_t conj_cap = std::min<std::size_t>(cap, 24);
  const SquareSet closure =
      conjugate_closure(tm_square_family(conj_cap).members);
  const SquareSet overlap_free = overlap_free_squares(conj_cap, engine);
  check(r, "tm-squares/overlap-free-equals-conjugates",
        overlap_free == closure, "cap " + std::to_string(conj_cap),
        "equal sets", set_difference_sample(overlap_free, closure));

  const auto mode = determine_seven_thirds_mode(conj_cap, engine);
  check(r, "tm-squares/seven-thirds-equals-conjugates", mode.has_value(),
        "cap " + std::to_string(conj_cap), "one threshold mode matches",
        mode ? (*mode == ExponentThreshold::Mode::exclude_ge
                    ? "mode=exclude_ge"
                    : "mode=exclude_gt")
             : "neither mode matches");

  bool spectrum_ok = true;
  std::string offender;
  for (const Word& w : family.members) {
    if (!half_is_power_of_2_or_3_times(w.size() / 2)) {
      spectrum_ok = false;
      offender = w.to_digits();
      break;
    }
  }
  check(r, "tm-squares/length-spectrum", spectrum_ok,
        std::to_string(family.members.size()) + " members",
        "half-lengths are 2^k or 3*2^k", spectrum_ok ? "ok" : offender);
}

bool engines_agree(const Word& w, std::string& what) {
  const auto cube_naive = find_cube(w, Engine::naive);
  if (find_cube(w, Engine::fast) != cube_naive) {
    what = "find_cube";
    return false;
  }
  const auto square_naive = find_square(w, Engine::naive);
  if (find_square(w, Engine::fast) != square_naive) {
    what = "find_square";
    return false;
  }
  const auto overlap_naive = find_overlap(w, Engine::naive);
  if (find_overlap(w, Engine::fast) != overlap_naive) {
    what = "find_overlap";
    return false;
  }
  const ExponentThreshold seven_thirds = ExponentThreshold::seven_thirds();
  if (find_power(w, seven_thirds, Engine::fast) !=
      find_power(w, seven_thirds, Engine::naive)) {
    what = "find_power(7/3)";
    return false;
  }
  const ExponentThreshold two_plus(2, 1, ExponentThreshold::Mode::exclude_gt);
  if (find_power(w, two_plus, Engine::fast) !=
      find_power(w, two_plus, Engine::naive)) {
    what = "find_power(2+)";
    return false;
  }
  if (!w.empty() &&
      max_exponent(w, Engine::fast) != max_exponent(w, Engine::naive)) {
    what = "max_exponent";
    return false;
  }
  if (distinct_square_factors(w, 0, Engine::fast) !=
      distinct_square_factors(w, 0, Engine::naive)) {
    what = "distinct_square_factors";
    return false;
  }
  return true;
}

void check_oracles_exhaustive(Report& r, std::uint64_t max_len) {
  for (std::size_t len = 0; len <= max_len; ++len) {
    bool all_ok = true;
    std::string offender;
    std::string what;
    for_each_word_of_length(2, len, [&](const Word& w) {
      if (!all_ok) return;
      if (!engines_agree(w, what)) {
        all_ok = false;
        offender = w.to_digits();
      }
    });
    check(r, "oracles/exhaustive-len=" + std::to_string(len), all_ok,
          offender.empty() ? "all binary words" : offender,
          "fast == naive", all_ok ? "ok" : what + " differs");
  }
}

void check_oracles_random(Report& r, std::uint64_t words_per_alphabet,
                          std::size_t max_len) {
  for (int alphabet = 2; alphabet <= kMaxAlphabet; ++alphabet) {
    std::mt19937_64 rng(0x5eed0000 + alphabet);
    std::uniform_int_distribution<std::size_t> len_dist(0, max_len);
    std::uniform_int_distribution<int> sym_dist(0, alphabet - 1);
    bool all_ok = true;
    std::string offender;
    std::string what;
    for (std::uint64_t i = 0; i < words_per_alphabet && all_ok; ++i) {
      std::vector<Symbol> symbols(len_dist(rng));
      for (Symbol& s : symbols) s = static_cast<Symbol>(sym_dist(rng));
      const Word w(alphabet, std::move(symbols));
      if (!engines_agree(w, what)) {
        all_ok = false;
        offender = short_digits(w);
      }
    }
    check(r, "oracles/random-alphabet=" + std::to_string(alphabet), all_ok,
          all_ok ? std::to_string(words_per_alphabet) + " random words"
                 : offender,
          "fast == naive", all_ok ? "ok" : what + " differs");
  }
}

void check_lemma4(Report& r, std::uint64_t window, std::size_t max_factor) {
  const Word t = tm_prefix(window);
  WordSet factors;
  for (std::size_t len = 1; len <= max_factor; ++len) {
    for (std::size_t i = 0; i + len <= t.size(); ++i) {
      factors.insert(t.factor(i, len));
    }
  }
  for (std::size_t len = 1; len <= max_factor; ++len) {
    bool all_ok = true;
    std::string offender;
    for (const Word& y : factors) {
      if (y.size() != len) continue;
      for (Symbol a = 0; a < 2 && all_ok; ++a) {
        for (Symbol b = 0; b < 2 && all_ok; ++b) {
          const Word ayb = Word(2, {a}) + y + Word(2, {b});
          if (ayb.size() % 3 != 0) continue;
          const std::size_t p = ayb.size() / 3;
          const Word root = ayb.factor(0, p);
          if (ayb == root + root + root && p > 2) {
            all_ok = false;
            offender = ayb.to_digits();
          }
        }
      }
      if (!all_ok) break;
    }
    check(r, "lemma4/factor-len=" + std::to_string(len), all_ok,
          all_ok ? "all Thue-Morse factors" : offender,
          "any cube ayb has period <= 2", all_ok ? "ok" : "period > 2");
  }
}

void check_lemma5(Report& r, std::size_t max_period) {
  for (std::size_t p = 1; p <= max_period; ++p) {
    bool all_ok = true;
    std::string offender;
    for_each_word_of_length(2, p, [&](const Word& y) {
      if (!all_ok) return;
      const Word yyy = y + y + y;
      for (std::size_t len = 1; len <= p + 1 && all_ok; ++len) {
        for (std::size_t i = 0; i + len <= yyy.size(); ++i) {
          const Word z = yyy.factor(i, len);
          if (count_occurrences(z, yyy) < 2) {
            all_ok = false;
            offender = "y=" + y.to_digits() + " z=" + z.to_digits();
            break;
          }
        }
      }
    });
    check(r, "lemma5/period=" + std::to_string(p), all_ok,
          all_ok ? "all binary y" : offender,
          "short factors of yyy occur twice", all_ok ? "ok" : "unique factor");
  }
}

void check_y_fy(Report& r, std::uint64_t prefix_len, Engine engine) {
  const Word y = y_stream()->prefix(static_cast<std::size_t>(prefix_len));
  bool tracks_ok = true;
  for (std::size_t i = 0; i < y.size(); ++i) {
    const bool even = i % 2 == 0;
    if ((even && y[i] > 2) || (!even && (y[i] < 3 || y[i] > 4))) {
      tracks_ok = false;
      break;
    }
  }
  check(r, "prop10/y-shuffle-tracks", tracks_ok,
        "y prefix of length " + std::to_string(y.size()),
        "even symbols in {0,1,2}, odd in {3,4}", tracks_ok ? "ok" : "mixed");

  const auto y_square = find_square(y, engine);
  check(r, "prop10/y-prefix-squarefree", !y_square,
        "y prefix of length " + std::to_string(y.size()), "squarefree",
        describe(y_square));

  const Word fy = fy_stream()->prefix(static_cast<std::size_t>(prefix_len));
  const auto fy_square = find_square(fy, engine);
  check(r, "prop10/fy-prefix-squarefree", !fy_square,
        "fy prefix of length " + std::to_string(fy.size()), "squarefree",
        describe(fy_square));

  for (std::size_t k = 1; k <= 6; ++k) {
    const std::size_t complexity = factor_complexity(y, 2 * k);
    const std::size_t bound = std::size_t{1} << k;
    check(r, "prop10/y-complexity-k=" + std::to_string(k),
          complexity >= bound, "factor length " + std::to_string(2 * k),
          ">= " + std::to_string(bound), std::to_string(complexity));
  }
  for (std::size_t k = 1; k <= 4; ++k) {
    const std::size_t complexity = factor_complexity(fy, 36 * k);
    const std::size_t bound = std::size_t{1} << k;
    check(r, "prop10/fy-complexity-k=" + std::to_string(k),
          complexity >= bound, "factor length " + std::to_string(36 * k),
          ">= " + std::to_string(bound), std::to_string(complexity));
  }
}

}  // namespace

void Report::merge(Report other) {
  checks_run += other.checks_run;
  elapsed_seconds += other.elapsed_seconds;
  failures.insert(failures.end(),
                  std::make_move_iterator(other.failures.begin()),
                  std::make_move_iterator(other.failures.end()));
}

Report theorem1(Options opts) {
  Report r{"thm1"};
  Timer timer(r);
  check_theorem1(r, limit_or(opts, 512), opts.engine);
  return r;
}

Report lemma3(Options opts) {
  Report r{"lemma3"};
  Timer timer(r);
  check_lemma3(r, limit_or(opts, 1024));
  return r;
}

Report theorem6(Options opts) {
  Report r{"thm6"};
  Timer timer(r);
  check_theorem6(r, limit_or(opts, 512), opts.engine);
  return r;
}

Report theorem8(Options opts) {
  Report r{"thm8"};
  Timer timer(r);
  check_theorem8(r, limit_or(opts, 512), opts.engine);
  return r;
}

Report exponential_family(Options opts) {
  Report r{"prop8"};
  Timer timer(r);
  const std::uint64_t m_max = limit_or(opts, 8);
  check_exp_family(r, m_max);
  check_census_bound(r, m_max);
  return r;
}

Report morphism_preservation(Options opts) {
  Report r{"preservation"};
  Timer timer(r);
  const std::uint64_t h_len = limit_or(opts, 9);
  const std::uint64_t g_len = h_len > 2 ? h_len - 2 : 1;
  const std::uint64_t f_len = h_len > 4 ? h_len - 4 : 1;
  check_preservation(r, "prop8/h-preserves-cubefree", brandenburg_cubefree3(),
                     h_len, true, opts.engine);
  check_preservation(r, "thm2/g-preserves-cubefree", brandenburg_cubefree4(),
                     g_len, true, opts.engine);
  check_preservation(r, "prop10/f-preserves-squarefree",
                     brandenburg_squarefree5(), f_len, false, opts.engine);
  return r;
}

Report theorem2_streams(Options opts) {
  Report r{"thm2"};
  Timer timer(r);
  check_gw(r, limit_or(opts, 100000), opts.engine);
  check_gw_squares(r, opts.engine);
  return r;
}

Report tm_characterizations(Options opts) {
  Report r{"tm-squares"};
  Timer timer(r);
  check_tm_characterizations(r, limit_or(opts, 64), opts.engine);
  return r;
}

Report oracle_equivalence(Options opts) {
  Report r{"oracles"};
  Timer timer(r);
  check_oracles_exhaustive(r, limit_or(opts, 14));
  check_oracles_random(r, 10000, 512);
  return r;
}

Report proposition10_streams(Options opts) {
  Report r{"prop10"};
  Timer timer(r);
  check_y_fy(r, limit_or(opts, 100000), opts.engine);
  return r;
}

Report lemma_properties(Options opts) {
  Report r{"lemmas"};
  Timer timer(r);
  check_lemma4(r, limit_or(opts, 2048), 24);
  check_lemma5(r, 6);
  return r;
}

std::vector<std::string> suite_names() {
  return {"thm1", "lemma3", "thm6",       "thm8",   "prop8",
          "thm2", "tm-squares", "prop10", "oracles", "all"};
}

Report run_suite(std::string_view suite, Options opts) {
  if (suite == "thm1") return theorem1(opts);
  if (suite == "lemma3") return lemma3(opts);
  if (suite == "thm6") return theorem6(opts);
  if (suite == "thm8") return theorem8(opts);
  if (suite == "prop8") {
    Report r = exponential_family(opts);
    Report h{"prop8"};
    {
      Timer timer(h);
      check_preservation(h, "prop8/h-preserves-cubefree",
                         brandenburg_cubefree3(),
                         opts.limit == 0 ? 9 : std::min<std::uint64_t>(opts.limit, 9),
                         true, opts.engine);
    }
    r.merge(std::move(h));
    return r;
  }
  if (suite == "thm2") {
    Report r = theorem2_streams(opts);
    Report g{"thm2"};
    {
      Timer timer(g);
      check_preservation(g, "thm2/g-preserves-cubefree",
                         brandenburg_cubefree4(), 7, true, opts.engine);
    }
    r.merge(std::move(g));
    return r;
  }
  if (suite == "tm-squares") return tm_characterizations(opts);
  if (suite == "prop10") {
    Report r = proposition10_streams(opts);
    Report f{"prop10"};
    {
      Timer timer(f);
      check_preservation(f, "prop10/f-preserves-squarefree",
                         brandenburg_squarefree5(), 5, false, opts.engine);
    }
    r.merge(std::move(f));
    return r;
  }
  if (suite == "oracles") {
    Report r = oracle_equivalence(opts);
    r.merge(lemma_properties(Options{0, opts.engine}));
    return r;
  }
  if (suite == "all") {
    Report all{"all"};
    for (const std::string& name : suite_names()) {
      if (name == "all") continue;
      all.merge(run_suite(name, opts));
    }
    return all;
  }
  throw DomainError("unknown suite: " + std::string(suite));
}

void print_report(const Report& report, std::ostream& out) {
  out << "suite=" << report.suite << " checks=" << report.checks_run
      << " failures=" << report.failures.size() << " elapsed=";
  const double seconds = report.elapsed_seconds;
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "%.2fs", seconds);
  out << buffer << "\n";
  for (const Failure& failure : report.failures) {
    out << "FAIL " << failure.check_id << " input=" << failure.input
        << " expected=" << failure.expected << " got=" << failure.got << "\n";
  }
}

}  // namespace cfw::verify
