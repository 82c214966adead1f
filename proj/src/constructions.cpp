#include "cfw/constructions.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "json.hpp"

#include "cfw/morphism.hpp"

namespace cfw {

namespace {

constexpr std::size_t kCensusCap = 28;

bool valid_anchor_length(std::size_t n) {
  return n >= 4 && n % 2 == 0 && n != 6;
}

Word complemented(const Word& w) {
  std::vector<Symbol> symbols;
  symbols.reserve(w.size());
  for (Symbol s : w.symbols()) symbols.push_back(static_cast<Symbol>(1 - s));
  return Word(2, std::move(symbols));
}

// Root of cubefree_square(m), complemented if 1s outnumber 0s. The result
// has at least ceil(m/2) zeros.
Word normalized_root(std::size_t m) {
  const Word square = cubefree_square(m);
  Word root = square.factor(0, m);
  std::size_t zeros = 0;
  for (Symbol s : root.symbols()) zeros += (s == 0);
  if (2 * zeros < root.size()) root = complemented(root);
  return root;
}

std::size_t zero_count(const Word& w) {
  std::size_t zeros = 0;
  for (Symbol s : w.symbols()) zeros += (s == 0);
  return zeros;
}

std::uint64_t count_cubefree_squares(std::size_t length) {
  const std::size_t half = length / 2;
  std::uint64_t count = 0;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << half); ++bits) {
    std::vector<Symbol> symbols(length);
    for (std::size_t i = 0; i < half; ++i) {
      const Symbol s = static_cast<Symbol>((bits >> i) & 1);
      symbols[i] = s;
      symbols[half + i] = s;
    }
    if (is_cubefree(Word(2, std::move(symbols)))) ++count;
  }
  return count;
}

class InterleavedSupplyWord final : public InfiniteWord {
 public:
  int alphabet_size() const override { return 4; }
  std::string_view name() const override { return "w"; }

  Symbol symbol_at(std::uint64_t i) const override {
    Symbol s = 0;
    fill(i, std::span<Symbol>(&s, 1));
    return s;
  }

  // Walks segments [separator, block] from the origin; each family is
  // materialized at most once per call.
  void fill(std::uint64_t start, std::span<Symbol> out) const override {
    if (out.empty()) return;
    std::uint64_t pos = 0;
    std::size_t written = 0;
    SquareSupplyStream supply;
    for (std::uint64_t k = 0; written < out.size(); ++k) {
      const Word block = supply.next();
      const Symbol separator = tm_symbol_at(k) == 0 ? 2 : 3;
      const std::uint64_t segment_len = 1 + block.size();
      if (pos + segment_len > start + written) {
        std::uint64_t off =
            start + written > pos ? start + written - pos : 0;
        for (; off < segment_len && written < out.size(); ++off) {
          out[written++] = off == 0 ? separator : block[off - 1];
        }
      }
      pos += segment_len;
    }
  }
};

}  // namespace

AnchoredFactor find_anchor_factor(std::size_t n) {
  if (!valid_anchor_length(n)) {
    throw NoAnchorError("no anchored factor of length " + std::to_string(n) +
                        " (need even n >= 4, n != 6)");
  }
  const std::size_t window = 64 * n + 64;
  const Word t = tm_prefix(window);
  const Word anchor = Word::from_digits("1001");
  const auto s = t.symbols();
  const auto a = anchor.symbols();
  for (std::size_t i = 0; i + n <= window; ++i) {
    if (std::equal(a.begin(), a.end(), s.begin() + i) &&
        std::equal(a.begin(), a.end(), s.begin() + i + n - 4)) {
      return AnchoredFactor{t.factor(i, n), i};
    }
  }
  throw WindowError("anchored factor of length " + std::to_string(n) +
                    " not found in window " + std::to_string(window));
}

Word odd_square(std::size_t n) {
  const Word stem = find_anchor_factor(n).word + Word::from_digits("0");
  return stem + stem;
}

Word even_square(std::size_t n) {
  const Word stem = find_anchor_factor(n).word + Word::from_digits("101100");
  return stem + stem;
}

Word base_case_square(std::size_t half) {
  // Lexicographically least cubefree squares; re-derived by enumeration in
  // the unit tests.
  switch (half) {
    case 1:
      return Word::from_digits("00");
    case 2:
      return Word::from_digits("0101");
    case 3:
      return Word::from_digits("001001");
    case 4:
      return Word::from_digits("00110011");
    case 6:
      return Word::from_digits("001011001011");
    case 7:
      return Word::from_digits("00100110010011");
    case 8:
      return Word::from_digits("0010110100101101");
    case 12:
      return Word::from_digits("001001010011001001010011");
    default:
      throw DomainError("no base-case square for half-length " +
                        std::to_string(half));
  }
}

Word cubefree_square(std::size_t half) {
  if (half < 1) throw DomainError("half-length must be >= 1");
  switch (half) {
    case 1:
    case 2:
    case 3:
    case 4:
    case 6:
    case 7:
    case 8:
    case 12:
      return base_case_square(half);
    default:
      break;
  }
  if (half % 2 == 1) return odd_square(half - 1);  // half >= 5, half != 7
  return even_square(half - 6);                    // half >= 10, half != 12
}

SquareSet exp_family(std::size_t m) {
  if (m < 1) throw DomainError("family index must be >= 1");
  const Word root = normalized_root(m);
  std::vector<std::size_t> zero_positions;
  for (std::size_t i = 0; i < root.size(); ++i) {
    if (root[i] == 0) zero_positions.push_back(i);
  }
  const Morphism& h = brandenburg_cubefree3();
  SquareSet family;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << zero_positions.size());
       ++mask) {
    std::vector<Symbol> symbols(root.symbols().begin(), root.symbols().end());
    for (std::size_t b = 0; b < zero_positions.size(); ++b) {
      if ((mask >> b) & 1) symbols[zero_positions[b]] = 2;
    }
    const Word image = h.apply(Word(3, std::move(symbols)));
    family.insert(image + image);
  }
  return family;
}

std::uint64_t exp_family_size(std::size_t m) {
  if (m < 1) throw DomainError("family index must be >= 1");
  return std::uint64_t{1} << zero_count(normalized_root(m));
}

Word SquareSupplyStream::next() {
  while (m_ == 0 || index_ == family_.size()) {
    ++m_;
    const SquareSet family = exp_family(m_);
    family_.assign(family.begin(), family.end());
    index_ = 0;
  }
  return family_[index_++];
}

StreamPtr w_stream() {
  static const StreamPtr w = std::make_shared<InterleavedSupplyWord>();
  return w;
}

StreamPtr gw_stream() {
  static const StreamPtr w = morphic_image(w_stream(), brandenburg_cubefree4());
  return w;
}

StreamPtr y_stream() {
  static const StreamPtr w = perfect_shuffle(
      ternary_squarefree_word(),
      relabelled(champernowne_word(), relabel_map({{0, 3}, {1, 4}})));
  return w;
}

StreamPtr fy_stream() {
  static const StreamPtr w = morphic_image(y_stream(), brandenburg_squarefree5());
  return w;
}

std::vector<CensusRecord> census(std::size_t max_length,
                                 std::size_t exhaustive_cap) {
  if (max_length % 2 != 0 || exhaustive_cap % 2 != 0) {
    throw DomainError("census lengths must be even");
  }
  if (exhaustive_cap > kCensusCap) {
    throw ResourceError("exhaustive census capped at length " +
                        std::to_string(kCensusCap));
  }
  std::vector<CensusRecord> records;
  for (std::size_t length = 2; length <= max_length; length += 2) {
    CensusRecord record;
    record.length = length;
    if (length <= exhaustive_cap) {
      record.exact_count = count_cubefree_squares(length);
    }
    if (length % 12 == 0) {
      record.family_lower_bound = exp_family_size(length / 12);
    }
    record.witnesses.insert(cubefree_square(length / 2));
    records.push_back(std::move(record));
  }
  return records;
}

std::string census_record_to_json(const CensusRecord& record) {
  nlohmann::json j;
  j["length"] = record.length;
  j["exact_count"] =
      record.exact_count ? nlohmann::json(*record.exact_count)
                         : nlohmann::json(nullptr);
  j["family_lower_bound"] =
      record.family_lower_bound ? nlohmann::json(*record.family_lower_bound)
                                : nlohmann::json(nullptr);
  nlohmann::json witnesses = nlohmann::json::array();
  for (const Word& w : record.witnesses) witnesses.push_back(w.to_digits());
  j["witnesses"] = std::move(witnesses);
  return j.dump();
}

}  // namespace cfw
