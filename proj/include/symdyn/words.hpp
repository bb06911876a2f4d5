#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace symdyn {

/// Ordered inventory of distinct symbol names. Symbols are addressed by a
/// dense index; generated inventories (subdivisions, doubles) rely on the
/// systematic string names.
class Alphabet {
 public:
  explicit Alphabet(std::vector<std::string> symbols);

  int size() const { return static_cast<int>(symbols_.size()); }
  const std::string& symbol(int index) const { return symbols_.at(index); }
  const std::vector<std::string>& symbols() const { return symbols_; }
  std::optional<int> index_of(std::string_view name) const;

  bool operator==(const Alphabet& other) const { return symbols_ == other.symbols_; }

 private:
  std::vector<std::string> symbols_;
  std::unordered_map<std::string_view, int> index_;
};

using AlphabetPtr = std::shared_ptr<const Alphabet>;

AlphabetPtr make_alphabet(std::vector<std::string> symbols);

/// Finite (possibly empty) sequence of letter indices over a fixed alphabet.
/// Immutable after construction; cross-alphabet operations are rejected at
/// the operation boundary instead of reinterpreting indices.
class Word {
 public:
  Word(AlphabetPtr alphabet, std::vector<int32_t> letters);

  static Word empty(AlphabetPtr alphabet);
  static Word from_symbols(const AlphabetPtr& alphabet, const std::vector<std::string>& symbols);

  int size() const { return static_cast<int>(letters_.size()); }
  bool is_empty() const { return letters_.empty(); }
  int32_t at(int i) const { return letters_.at(i); }
  int32_t operator[](int i) const { return letters_[i]; }
  const std::vector<int32_t>& letters() const { return letters_; }
  const AlphabetPtr& alphabet() const { return alphabet_; }

  Word subword(int pos, int len) const;
  Word append(const Word& other) const;
  Word rotated(int amount) const;

  std::vector<std::string> symbols() const;
  std::string str() const;

  bool operator==(const Word& other) const;
  bool operator!=(const Word& other) const { return !(*this == other); }
  // Letters-only ordering; containers hold words over one alphabet.
  bool operator<(const Word& other) const { return letters_ < other.letters_; }

 private:
  AlphabetPtr alphabet_;
  std::vector<int32_t> letters_;
};

using WordSet = std::set<Word>;

bool same_alphabet(const AlphabetPtr& a, const AlphabetPtr& b);
void require_alphabet(const AlphabetPtr& expected, const Word& w, const char* where);

/// "w chop r": delete the length-r prefix and suffix; empty once 2r >= |w|.
Word chop(const Word& w, int r);

/// Least v with w = v^k and k maximal (v primitive). Errors on the empty word.
std::pair<Word, int> primitive_root(const Word& w);

bool is_primitive(const Word& w);

/// Deduplicated length-n contiguous factors; n > |w| yields the empty set,
/// n = 0 the singleton {empty word}.
WordSet factors_of_word(const Word& w, int n);

/// Lexicographically least rotation (canonical representative of the cyclic
/// orbit of w).
Word least_rotation(const Word& w);

/// Orders by the symbol-name sequences, the order used for emitted artifacts.
bool symbol_lex_less(const Word& a, const Word& b);

}  // namespace symdyn
