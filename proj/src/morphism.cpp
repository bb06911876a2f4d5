#include "symdyn/morphism.hpp"

#include <algorithm>
#include <stdexcept>

namespace symdyn {

Morphism::Morphism(AlphabetPtr source, AlphabetPtr target, std::vector<Word> images)
    : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)) {
  if (!source_ || !target_) {
    throw std::invalid_argument("morphism requires source and target alphabets");
  }
  if (static_cast<int>(images_.size()) != source_->size()) {
    throw std::invalid_argument("morphism needs exactly one image per source letter");
  }
  sup_norm_ = 0;
  inf_norm_ = 0;
  for (const Word& image : images_) {
    require_alphabet(target_, image, "morphism image");
    if (image.is_empty()) {
      throw std::invalid_argument("morphism must be non-erasing");
    }
    sup_norm_ = std::max(sup_norm_, image.size());
    inf_norm_ = inf_norm_ == 0 ? image.size() : std::min(inf_norm_, image.size());
  }
}

bool Morphism::is_endomorphism() const { return same_alphabet(source_, target_); }

Word apply_morphism(const Morphism& sigma, const Word& w) {
  require_alphabet(sigma.source(), w, "apply_morphism");
  std::vector<int32_t> letters;
  letters.reserve(static_cast<size_t>(w.size()) * sigma.sup_norm());
  for (int i = 0; i < w.size(); ++i) {
    const Word& image = sigma.image(w[i]);
    letters.insert(letters.end(), image.letters().begin(), image.letters().end());
  }
  return Word(sigma.target(), std::move(letters));
}

CanonicalDecomposition canonical_decomposition(const Morphism& sigma) {
  const AlphabetPtr& src = sigma.source();
  std::vector<std::string> cell_names;
  for (int a = 0; a < src->size(); ++a) {
    const int len = sigma.image(a).size();
    for (int k = 1; k <= len; ++k) {
      cell_names.push_back(src->symbol(a) + "(" + std::to_string(k) + ")");
    }
  }
  AlphabetPtr cells = make_alphabet(std::move(cell_names));

  std::vector<Word> subdivision_images;
  std::vector<Word> letter_images;
  int next_cell = 0;
  for (int a = 0; a < src->size(); ++a) {
    const Word& image = sigma.image(a);
    std::vector<int32_t> piece;
    for (int k = 0; k < image.size(); ++k) {
      piece.push_back(next_cell);
      letter_images.push_back(Word(sigma.target(), {image[k]}));
      ++next_cell;
    }
    subdivision_images.push_back(Word(cells, std::move(piece)));
  }
  return CanonicalDecomposition{
      Morphism(src, cells, std::move(subdivision_images)),
      Morphism(cells, sigma.target(), std::move(letter_images)),
  };
}

Morphism compose(const Morphism& outer, const Morphism& inner) {
  if (!same_alphabet(outer.source(), inner.target())) {
    throw std::invalid_argument("compose: inner target does not match outer source");
  }
  std::vector<Word> images;
  images.reserve(inner.source()->size());
  for (int a = 0; a < inner.source()->size(); ++a) {
    images.push_back(apply_morphism(outer, inner.image(a)));
  }
  return Morphism(inner.source(), outer.target(), std::move(images));
}

Morphism letter_pair_split(const AlphabetPtr& alphabet) {
  std::vector<std::string> split_names;
  for (int a = 0; a < alphabet->size(); ++a) {
    split_names.push_back(alphabet->symbol(a) + "-");
    split_names.push_back(alphabet->symbol(a) + "+");
  }
  AlphabetPtr split = make_alphabet(std::move(split_names));
  std::vector<Word> images;
  for (int a = 0; a < alphabet->size(); ++a) {
    images.push_back(Word(split, {2 * a, 2 * a + 1}));
  }
  return Morphism(alphabet, split, std::move(images));
}

Morphism renaming(const AlphabetPtr& source, const AlphabetPtr& target) {
  if (source->size() != target->size()) {
    throw std::invalid_argument("renaming requires same-size alphabets");
  }
  std::vector<Word> images;
  for (int a = 0; a < source->size(); ++a) {
    images.push_back(Word(target, {a}));
  }
  return Morphism(source, target, std::move(images));
}

Morphism fibonacci_morphism(const AlphabetPtr& alphabet) {
  if (alphabet->size() != 2) {
    throw std::invalid_argument("fibonacci morphism needs a two-letter alphabet");
  }
  std::vector<Word> images = {Word(alphabet, {1}), Word(alphabet, {1, 0})};
  return Morphism(alphabet, alphabet, std::move(images));
}

}  // namespace symdyn
