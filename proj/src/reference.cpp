#include "symdyn/reference.hpp"

#include <stdexcept>

namespace symdyn::ref {
namespace {

bool contains_factor(const std::vector<int32_t>& word, const Word& factor) {
  const int fl = factor.size();
  for (int pos = 0; pos + fl <= static_cast<int>(word.size()); ++pos) {
    bool match = true;
    for (int i = 0; i < fl; ++i) {
      if (word[pos + i] != factor[i]) {
        match = false;
        break;
      }
    }
    if (match) {
      return true;
    }
  }
  return false;
}

void collect_avoiding(const AlphabetPtr& alphabet, const std::vector<Word>& forbidden, int n,
                      std::vector<int32_t>& prefix, std::vector<Word>& out) {
  if (static_cast<int>(prefix.size()) == n) {
    out.push_back(Word(alphabet, prefix));
    return;
  }
  for (int32_t a = 0; a < alphabet->size(); ++a) {
    prefix.push_back(a);
    bool bad = false;
    for (const Word& f : forbidden) {
      if (f.size() <= static_cast<int>(prefix.size()) && contains_factor(prefix, f)) {
        bad = true;
        break;
      }
    }
    if (!bad) {
      collect_avoiding(alphabet, forbidden, n, prefix, out);
    }
    prefix.pop_back();
  }
}

}  // namespace

WordSet sft_language_naive(const AlphabetPtr& alphabet, const std::vector<Word>& forbidden,
                           int n) {
  int max_len = 1;
  for (const Word& f : forbidden) {
    max_len = std::max(max_len, f.size());
  }
  const int margin = 2 * max_len;
  std::vector<Word> long_words;
  std::vector<int32_t> prefix;
  collect_avoiding(alphabet, forbidden, n + 2 * margin, prefix, long_words);
  WordSet out;
  for (const Word& w : long_words) {
    out.insert(w.subword(margin, n));
  }
  return out;
}

WordSet substitution_language_naive(const Morphism& endo, int seed_letter, int n,
                                    int iterations) {
  Word w(endo.source(), {seed_letter});
  for (int i = 0; i < iterations; ++i) {
    if (w.size() > (1 << 22)) {
      break;
    }
    w = apply_morphism(endo, w);
  }
  if (w.size() < n) {
    throw std::invalid_argument("iterate too short for the requested factor length");
  }
  return factors_of_word(w, n);
}

WordSet image_language_serial(const std::vector<Word>& inner_words, const Morphism& sigma,
                              int n) {
  WordSet out;
  for (const Word& u : inner_words) {
    const Word image = apply_morphism(sigma, u);
    for (int pos = 0; pos + n <= image.size(); ++pos) {
      out.insert(image.subword(pos, n));
    }
  }
  return out;
}

Word reduce_by_passes(const DoubledAlphabet& da, const Word& w) {
  std::vector<int32_t> letters = w.letters();
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<int32_t> next;
    next.reserve(letters.size());
    for (size_t i = 0; i < letters.size();) {
      if (i + 1 < letters.size() && letters[i + 1] == da.inverse(letters[i])) {
        i += 2;
        changed = true;
      } else {
        next.push_back(letters[i]);
        ++i;
      }
    }
    letters.swap(next);
  }
  return Word(da.full(), std::move(letters));
}

CancellationEstimate cancellation_bound_serial(const FreeGroupHom& phi, int max_length) {
  std::vector<std::vector<Word>> by_length(max_length + 1);
  const DoubledAlphabet& da = phi.source();
  for (int32_t a = 0; a < da.full()->size(); ++a) {
    by_length[1].push_back(Word(da.full(), {a}));
  }
  for (int len = 2; len <= max_length; ++len) {
    for (const Word& w : by_length[len - 1]) {
      for (int32_t a = 0; a < da.full()->size(); ++a) {
        if (a != da.inverse(w[w.size() - 1])) {
          std::vector<int32_t> letters = w.letters();
          letters.push_back(a);
          by_length[len].push_back(Word(da.full(), std::move(letters)));
        }
      }
    }
  }

  CancellationEstimate estimate;
  estimate.maxima_by_length.assign(max_length, 0);
  int running = 0;
  for (int len = 1; len <= max_length; ++len) {
    for (int lu = 1; lu <= len; ++lu) {
      for (int lv = 1; lv <= len; ++lv) {
        if (std::max(lu, lv) != len) {
          continue;  // counted at a smaller window already
        }
        for (const Word& u : by_length[lu]) {
          for (const Word& v : by_length[lv]) {
            if (v[0] == da.inverse(u[u.size() - 1])) {
              continue;
            }
            const Word left = apply_hom(phi, u);
            const Word right = apply_hom(phi, v);
            const Word product = free_reduce(
                phi.target(), Word(phi.target().full(), [&] {
                  std::vector<int32_t> letters = left.letters();
                  letters.insert(letters.end(), right.letters().begin(), right.letters().end());
                  return letters;
                }()));
            const int cancelled = (left.size() + right.size() - product.size()) / 2;
            running = std::max(running, cancelled);
          }
        }
      }
    }
    estimate.maxima_by_length[len - 1] = running;
  }
  estimate.bound = running;
  return estimate;
}

bool is_exact_power(const Word& w, const Word& root, int exponent) {
  if (root.is_empty() || exponent < 1 || w.size() != root.size() * exponent) {
    return false;
  }
  for (int i = 0; i < w.size(); ++i) {
    if (w[i] != root[i % root.size()]) {
      return false;
    }
  }
  return true;
}

bool is_primitive_by_rotation(const Word& w) {
  if (w.is_empty()) {
    return false;
  }
  for (int shift = 1; shift < w.size(); ++shift) {
    if (w.size() % shift != 0) {
      continue;
    }
    if (w.rotated(shift) == w) {
      return false;
    }
  }
  return true;
}

}  // namespace symdyn::ref
