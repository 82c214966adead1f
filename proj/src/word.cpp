#include "cfw/word.hpp"

#include <algorithm>
#include <string>

namespace cfw {

namespace {

void check_alphabet_size(int alphabet_size) {
  if (alphabet_size < kMinAlphabet || alphabet_size > kMaxAlphabet) {
    throw DomainError("alphabet size must be in [" +
                      std::to_string(kMinAlphabet) + ", " +
                      std::to_string(kMaxAlphabet) + "], got " +
                      std::to_string(alphabet_size));
  }
}

}  // namespace

Word::Word(int alphabet_size, std::vector<Symbol> symbols)
    : alphabet_size_(alphabet_size), symbols_(std::move(symbols)) {
  check_alphabet_size(alphabet_size_);
  for (Symbol s : symbols_) {
    if (s >= alphabet_size_) {
      throw DomainError("symbol " + std::to_string(int(s)) +
                        " outside alphabet of size " +
                        std::to_string(alphabet_size_));
    }
  }
}

Word Word::from_digits(std::string_view digits, int alphabet_size) {
  std::vector<Symbol> symbols;
  symbols.reserve(digits.size());
  int max_seen = -1;
  for (char c : digits) {
    if (c < '0' || c > '0' + kMaxAlphabet - 1) {
      throw DomainError(std::string("malformed word character '") + c + "'");
    }
    symbols.push_back(static_cast<Symbol>(c - '0'));
    max_seen = std::max(max_seen, c - '0');
  }
  if (alphabet_size == 0) {
    alphabet_size = std::max(max_seen + 1, kMinAlphabet);
  }
  return Word(alphabet_size, std::move(symbols));
}

Word Word::factor(std::size_t pos, std::size_t len) const {
  if (pos + len > symbols_.size()) {
    throw DomainError("factor range out of bounds");
  }
  return Word(alphabet_size_,
              std::vector<Symbol>(symbols_.begin() + pos,
                                  symbols_.begin() + pos + len));
}

bool Word::starts_with(const Word& prefix) const {
  return prefix.size() <= size() &&
         std::equal(prefix.symbols_.begin(), prefix.symbols_.end(),
                    symbols_.begin());
}

bool Word::ends_with(const Word& suffix) const {
  return suffix.size() <= size() &&
         std::equal(suffix.symbols_.begin(), suffix.symbols_.end(),
                    symbols_.end() - suffix.size());
}

Word Word::rotated_left(std::size_t offset) const {
  if (empty()) return *this;
  offset %= size();
  std::vector<Symbol> rotated;
  rotated.reserve(size());
  rotated.insert(rotated.end(), symbols_.begin() + offset, symbols_.end());
  rotated.insert(rotated.end(), symbols_.begin(), symbols_.begin() + offset);
  return Word(alphabet_size_, std::move(rotated));
}

std::string Word::to_digits() const {
  std::string out;
  out.reserve(size());
  for (Symbol s : symbols_) out.push_back(static_cast<char>('0' + s));
  return out;
}

Word operator+(const Word& a, const Word& b) {
  std::vector<Symbol> symbols;
  symbols.reserve(a.size() + b.size());
  symbols.insert(symbols.end(), a.symbols_.begin(), a.symbols_.end());
  symbols.insert(symbols.end(), b.symbols_.begin(), b.symbols_.end());
  return Word(std::max(a.alphabet_size_, b.alphabet_size_),
              std::move(symbols));
}

bool ShortLex::operator()(const Word& a, const Word& b) const {
  if (a.size() != b.size()) return a.size() < b.size();
  auto sa = a.symbols();
  auto sb = b.symbols();
  return std::lexicographical_compare(sa.begin(), sa.end(), sb.begin(),
                                      sb.end());
}

RelabelMap relabel_map(std::initializer_list<std::pair<int, int>> pairs) {
  RelabelMap map;
  map.fill(kNoTarget);
  for (auto [from, to] : pairs) {
    if (from < 0 || from >= kMaxAlphabet || to < 0 || to >= kMaxAlphabet) {
      throw DomainError("relabel entry outside symbol range");
    }
    map[from] = to;
  }
  return map;
}

Word relabel(const Word& w, const RelabelMap& map) {
  int max_target = -1;
  for (int c = 0; c < w.alphabet_size(); ++c) {
    if (map[c] == kNoTarget) {
      throw DomainError("relabel map not total on alphabet of size " +
                        std::to_string(w.alphabet_size()));
    }
    for (int d = 0; d < c; ++d) {
      if (map[d] == map[c]) throw DomainError("relabel map not injective");
    }
    max_target = std::max(max_target, map[c]);
  }
  std::vector<Symbol> symbols;
  symbols.reserve(w.size());
  for (Symbol s : w.symbols()) {
    symbols.push_back(static_cast<Symbol>(map[s]));
  }
  return Word(std::max(max_target + 1, kMinAlphabet), std::move(symbols));
}

}  // namespace cfw
