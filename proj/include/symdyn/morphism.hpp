#pragma once

#include <string>
#include <vector>

#include "symdyn/words.hpp"

namespace symdyn {

/// Non-erasing monoid morphism, given by one non-empty target word per
/// source letter.
class Morphism {
 public:
  Morphism(AlphabetPtr source, AlphabetPtr target, std::vector<Word> images);

  const AlphabetPtr& source() const { return source_; }
  const AlphabetPtr& target() const { return target_; }
  const Word& image(int letter) const { return images_.at(letter); }
  const std::vector<Word>& images() const { return images_; }

  int sup_norm() const { return sup_norm_; }  // ||sigma||
  int inf_norm() const { return inf_norm_; }  // <sigma>
  bool letter_to_letter() const { return sup_norm_ == 1; }
  bool is_endomorphism() const;

 private:
  AlphabetPtr source_;
  AlphabetPtr target_;
  std::vector<Word> images_;
  int sup_norm_ = 0;
  int inf_norm_ = 0;
};

Word apply_morphism(const Morphism& sigma, const Word& w);

/// sigma = letter_map . subdivision, with subdivision a_i -> a_i(1)..a_i(k)
/// over the subdivision alphabet and letter_map letter-to-letter.
struct CanonicalDecomposition {
  Morphism subdivision;  // pi_sigma
  Morphism letter_map;   // alpha_sigma
};

CanonicalDecomposition canonical_decomposition(const Morphism& sigma);

/// compose(f, g): w -> f(g(w)).
Morphism compose(const Morphism& outer, const Morphism& inner);

/// a_i -> a_i- a_i+ over the split alphabet (the paper-style two-piece
/// subdivision used by the counterexample suite).
Morphism letter_pair_split(const AlphabetPtr& alphabet);

/// Bijective letter renaming onto a same-size target alphabet, by position.
Morphism renaming(const AlphabetPtr& source, const AlphabetPtr& target);

/// a1 -> a2, a2 -> a2 a1 on a two-letter alphabet.
Morphism fibonacci_morphism(const AlphabetPtr& alphabet);

}  // namespace symdyn
