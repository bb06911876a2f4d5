#pragma once

#include <vector>

#include "symdyn/freegroup.hpp"
#include "symdyn/morphism.hpp"
#include "symdyn/words.hpp"

// Straightforward serial reference implementations. They stay independent of
// the main computation paths: tests use them as oracles and the bench target
// uses them as the serial baseline for the parallel kernels. Production code
// must not call into this namespace.
namespace symdyn::ref {

/// SFT language by brute force: words of length n + 2K avoiding every
/// forbidden factor, K = 2 * max forbidden length, chopped by K.
WordSet sft_language_naive(const AlphabetPtr& alphabet, const std::vector<Word>& forbidden,
                           int n);

/// Substitution language by long iteration: factors of sigma^iterations(seed).
WordSet substitution_language_naive(const Morphism& endo, int seed_letter, int n,
                                    int iterations = 20);

/// Image language, plain serial loop over the inner window.
WordSet image_language_serial(const std::vector<Word>& inner_words, const Morphism& sigma, int n);

/// Free reduction by repeated full scans (distinct from the stack reducer).
Word reduce_by_passes(const DoubledAlphabet& da, const Word& w);

/// Serial cancellation-bound enumeration.
CancellationEstimate cancellation_bound_serial(const FreeGroupHom& phi, int max_length);

/// Does w equal root repeated exponent times?
bool is_exact_power(const Word& w, const Word& root, int exponent);

/// Primitivity via cyclic shifts: w is a proper power iff it equals one of
/// its non-trivial rotations with rotation amount dividing |w|.
bool is_primitive_by_rotation(const Word& w);

}  // namespace symdyn::ref
