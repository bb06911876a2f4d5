#include "symdyn/words.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace symdyn {

Alphabet::Alphabet(std::vector<std::string> symbols) : symbols_(std::move(symbols)) {
  if (symbols_.empty()) {
    throw std::invalid_argument("alphabet must be non-empty");
  }
  index_.reserve(symbols_.size());
  for (int i = 0; i < static_cast<int>(symbols_.size()); ++i) {
    if (symbols_[i].empty()) {
      throw std::invalid_argument("alphabet symbols must be non-empty strings");
    }
    auto [it, inserted] = index_.emplace(symbols_[i], i);
    if (!inserted) {
      throw std::invalid_argument("alphabet symbols must be pairwise distinct: " + symbols_[i]);
    }
  }
}

std::optional<int> Alphabet::index_of(std::string_view name) const {
  auto it = index_.find(name);
  if (it == index_.end()) {
    return std::nullopt;
  }
  return it->second;
}

AlphabetPtr make_alphabet(std::vector<std::string> symbols) {
  return std::make_shared<Alphabet>(std::move(symbols));
}

Word::Word(AlphabetPtr alphabet, std::vector<int32_t> letters)
    : alphabet_(std::move(alphabet)), letters_(std::move(letters)) {
  if (!alphabet_) {
    throw std::invalid_argument("word requires an alphabet");
  }
  for (int32_t letter : letters_) {
    if (letter < 0 || letter >= alphabet_->size()) {
      throw std::invalid_argument("letter index out of range for alphabet");
    }
  }
}

Word Word::empty(AlphabetPtr alphabet) { return Word(std::move(alphabet), {}); }

Word Word::from_symbols(const AlphabetPtr& alphabet, const std::vector<std::string>& symbols) {
  std::vector<int32_t> letters;
  letters.reserve(symbols.size());
  for (const auto& name : symbols) {
    auto idx = alphabet->index_of(name);
    if (!idx) {
      throw std::invalid_argument("symbol not in alphabet: " + name);
    }
    letters.push_back(*idx);
  }
  return Word(alphabet, std::move(letters));
}

Word Word::subword(int pos, int len) const {
  if (pos < 0 || len < 0 || pos + len > size()) {
    throw std::invalid_argument("subword range out of bounds");
  }
  return Word(alphabet_, std::vector<int32_t>(letters_.begin() + pos, letters_.begin() + pos + len));
}

Word Word::append(const Word& other) const {
  require_alphabet(alphabet_, other, "append");
  std::vector<int32_t> letters = letters_;
  letters.insert(letters.end(), other.letters_.begin(), other.letters_.end());
  return Word(alphabet_, std::move(letters));
}

Word Word::rotated(int amount) const {
  if (is_empty()) {
    return *this;
  }
  const int n = size();
  amount = ((amount % n) + n) % n;
  std::vector<int32_t> letters;
  letters.reserve(n);
  for (int i = 0; i < n; ++i) {
    letters.push_back(letters_[(i + amount) % n]);
  }
  return Word(alphabet_, std::move(letters));
}

std::vector<std::string> Word::symbols() const {
  std::vector<std::string> names;
  names.reserve(letters_.size());
  for (int32_t letter : letters_) {
    names.push_back(alphabet_->symbol(letter));
  }
  return names;
}

std::string Word::str() const {
  bool single_chars = true;
  for (int i = 0; i < alphabet_->size(); ++i) {
    if (alphabet_->symbol(i).size() != 1) {
      single_chars = false;
      break;
    }
  }
  std::ostringstream out;
  for (int i = 0; i < size(); ++i) {
    if (i > 0 && !single_chars) {
      out << ' ';
    }
    out << alphabet_->symbol(letters_[i]);
  }
  return out.str();
}

bool Word::operator==(const Word& other) const {
  return letters_ == other.letters_ && same_alphabet(alphabet_, other.alphabet_);
}

bool same_alphabet(const AlphabetPtr& a, const AlphabetPtr& b) {
  return a == b || (a && b && *a == *b);
}

void require_alphabet(const AlphabetPtr& expected, const Word& w, const char* where) {
  if (!same_alphabet(expected, w.alphabet())) {
    throw std::invalid_argument(std::string(where) + ": word is over a different alphabet");
  }
}

Word chop(const Word& w, int r) {
  if (r < 0) {
    throw std::invalid_argument("chop requires r >= 0");
  }
  if (2 * r >= w.size()) {
    return Word::empty(w.alphabet());
  }
  return w.subword(r, w.size() - 2 * r);
}

std::pair<Word, int> primitive_root(const Word& w) {
  if (w.is_empty()) {
    throw std::invalid_argument("the empty word has no primitive root");
  }
  const int n = w.size();
  for (int period = 1; period <= n / 2; ++period) {
    if (n % period != 0) {
      continue;
    }
    bool tiles = true;
    for (int i = period; i < n; ++i) {
      if (w[i] != w[i - period]) {
        tiles = false;
        break;
      }
    }
    if (tiles) {
      return {w.subword(0, period), n / period};
    }
  }
  return {w, 1};
}

bool is_primitive(const Word& w) { return primitive_root(w).second == 1; }

WordSet factors_of_word(const Word& w, int n) {
  WordSet out;
  if (n < 0) {
    throw std::invalid_argument("factor length must be >= 0");
  }
  if (n > w.size()) {
    return out;
  }
  for (int pos = 0; pos + n <= w.size(); ++pos) {
    out.insert(w.subword(pos, n));
  }
  return out;
}

Word least_rotation(const Word& w) {
  Word best = w;
  for (int s = 1; s < w.size(); ++s) {
    Word candidate = w.rotated(s);
    if (candidate < best) {
      best = candidate;
    }
  }
  return best;
}

bool symbol_lex_less(const Word& a, const Word& b) {
  const int n = std::min(a.size(), b.size());
  for (int i = 0; i < n; ++i) {
    const std::string& sa = a.alphabet()->symbol(a[i]);
    const std::string& sb = b.alphabet()->symbol(b[i]);
    if (sa != sb) {
      return sa < sb;
    }
  }
  return a.size() < b.size();
}

}  // namespace symdyn
