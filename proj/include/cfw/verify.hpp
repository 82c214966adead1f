#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "cfw/repetitions.hpp"

namespace cfw::verify {

struct Failure {
  std::string check_id;
  std::string input;
  std::string expected;
  std::string got;
};

struct Report {
  std::string suite;
  std::uint64_t checks_run = 0;
  std::vector<Failure> failures;
  double elapsed_seconds = 0.0;

  bool ok() const { return failures.empty(); }
  void merge(Report other);
};

struct Options {
  std::uint64_t limit = 0;          // 0 = suite default
  Engine engine = Engine::fast;     // naive forces the oracles end-to-end
};

// Desk-scale verification of the constructions and characterizations. Each
// suite returns one check per unit of work (per length, per family, per
// equality); the first offending input of a failed check is recorded.

// Every half-length in [1, limit] yields a square of the right length that
// passes the naive cubefree oracle. Default limit 512.
Report theorem1(Options opts = {});

// Anchored factors exist for every even n in [4, limit] except 6, occur at
// their reported positions, and are refused for n in {2, 6}. Default 1024.
Report lemma3(Options opts = {});

// odd_square(n) is cubefree and contains 01010 exactly once, for every
// valid n <= limit. Default 512.
Report theorem6(Options opts = {});

// even_square(n) is cubefree, contains 00100 exactly once and 11011 exactly
// twice, for every valid n <= limit. Default 512.
Report theorem8(Options opts = {});

// exp_family(m) has >= 2^ceil(m/2) distinct cubefree squares of length 12m
// for m in [1, limit] (default 8), and the exhaustive census dominates the
// family bound wherever both exist.
Report exponential_family(Options opts = {});

// The three power-free-preserving morphisms preserve their property on all
// short preimages: cubefree ternary words up to length limit (default 9),
// cubefree quaternary up to limit-2, squarefree 5-ary up to limit-4.
Report morphism_preservation(Options opts = {});

// The binary image stream gw is cubefree on a prefix of length limit
// (default 100000) and already contains at least two distinct squares of
// lengths 108 and 216 within the prefix covering the first two families.
Report theorem2_streams(Options opts = {});

// Squares of the Thue-Morse word: window scan equals the iterated family
// (cap = limit, default 64); overlap-free squares and 7/3-power-free
// squares both equal the family's conjugate closure (cap = min(limit, 24));
// member half-lengths are 2^k or 3*2^k.
Report tm_characterizations(Options opts = {});

// Fast detectors equal the naive oracles on every binary word of length <=
// limit (default 14) and on 10^4 seeded random words of length <= 512 per
// alphabet size 2..5.
Report oracle_equivalence(Options opts = {});

// y and f(y) are squarefree on prefixes of length limit (default 100000);
// the y prefix has >= 2^k factors of length 2k for k <= 6, and the f(y)
// prefix >= 2^k of length 36k for k <= 4.
Report proposition10_streams(Options opts = {});

// Cube-period bound: for overlap-free y, if ayb is a cube of period p then
// p <= 2 (checked over Thue-Morse factors up to length 24 in a prefix of
// length limit, default 2048). Factor recurrence: any factor of yyy of
// length <= |y|+1 occurs at least twice (all binary y with |y| <= 6).
Report lemma_properties(Options opts = {});

// CLI suite names: thm1, lemma3, thm6, thm8, prop8, thm2, tm-squares,
// prop10, oracles, all.
std::vector<std::string> suite_names();

// Runs a named suite (composing the granular reports above); throws
// DomainError for unknown names.
Report run_suite(std::string_view suite, Options opts = {});

void print_report(const Report& report, std::ostream& out);

}  // namespace cfw::verify
