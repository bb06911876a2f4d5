#include <doctest.h>

#include <functional>
#include <stdexcept>

#include "symdyn/morphism.hpp"

using namespace symdyn;

namespace {

template <typename Fn>
void for_all_words(const AlphabetPtr& a, int max_len, Fn&& fn) {
  std::vector<int32_t> letters;
  const std::function<void()> rec = [&] {
    fn(Word(a, letters));
    if (static_cast<int>(letters.size()) == max_len) {
      return;
    }
    for (int32_t x = 0; x < a->size(); ++x) {
      letters.push_back(x);
      rec();
      letters.pop_back();
    }
  };
  rec();
}

}  // namespace

TEST_CASE("morphism invariants") {
  auto ab = make_alphabet({"a", "b"});
  CHECK_THROWS_AS(Morphism(ab, ab, {Word(ab, {0})}), std::invalid_argument);
  CHECK_THROWS_AS(Morphism(ab, ab, {Word(ab, {0}), Word::empty(ab)}), std::invalid_argument);

  const Morphism fib = fibonacci_morphism(ab);
  CHECK(fib.sup_norm() == 2);
  CHECK(fib.inf_norm() == 1);
  CHECK(!fib.letter_to_letter());
  CHECK(fib.is_endomorphism());
}

TEST_CASE("applying a morphism") {
  auto ab = make_alphabet({"a", "b"});
  const Morphism split = letter_pair_split(ab);
  CHECK(split.target()->symbols() == std::vector<std::string>{"a-", "a+", "b-", "b+"});
  CHECK(apply_morphism(split, Word::from_symbols(ab, {"a", "b"})) ==
        Word::from_symbols(split.target(), {"a-", "a+", "b-", "b+"}));
  CHECK(apply_morphism(split, Word::empty(ab)) == Word::empty(split.target()));

  auto fib_alpha = make_alphabet({"a1", "a2"});
  const Morphism fib = fibonacci_morphism(fib_alpha);
  CHECK(apply_morphism(fib, Word::from_symbols(fib_alpha, {"a2"})) ==
        Word::from_symbols(fib_alpha, {"a2", "a1"}));

  auto other = make_alphabet({"x"});
  CHECK_THROWS_AS(apply_morphism(fib, Word(other, {0})), std::invalid_argument);
}

TEST_CASE("image length bounded by the norms") {
  auto ab = make_alphabet({"a", "b"});
  const Morphism fib2 = compose(fibonacci_morphism(ab), fibonacci_morphism(ab));
  for_all_words(ab, 7, [&](const Word& u) {
    const Word image = apply_morphism(fib2, u);
    CHECK(image.size() >= fib2.inf_norm() * u.size());
    CHECK(image.size() <= fib2.sup_norm() * u.size());
  });
}

TEST_CASE("canonical decomposition of the pair split") {
  auto ab = make_alphabet({"a", "b"});
  const Morphism split = letter_pair_split(ab);
  const CanonicalDecomposition dec = canonical_decomposition(split);
  CHECK(dec.subdivision.target()->symbols() ==
        std::vector<std::string>{"a(1)", "a(2)", "b(1)", "b(2)"});
  CHECK(dec.letter_map.letter_to_letter());
  CHECK(dec.letter_map.image(0) == Word::from_symbols(split.target(), {"a-"}));
  CHECK(dec.letter_map.image(1) == Word::from_symbols(split.target(), {"a+"}));
}

TEST_CASE("canonical decomposition of the fibonacci morphism") {
  auto ab = make_alphabet({"a1", "a2"});
  const Morphism fib = fibonacci_morphism(ab);
  const CanonicalDecomposition dec = canonical_decomposition(fib);
  CHECK(dec.subdivision.target()->symbols() ==
        std::vector<std::string>{"a1(1)", "a2(1)", "a2(2)"});
  CHECK(dec.letter_map.image(0) == Word::from_symbols(ab, {"a2"}));
  CHECK(dec.letter_map.image(1) == Word::from_symbols(ab, {"a2"}));
  CHECK(dec.letter_map.image(2) == Word::from_symbols(ab, {"a1"}));
}

TEST_CASE("recomposition: letter_map after subdivision equals the morphism") {
  auto ab = make_alphabet({"a", "b"});
  for (const Morphism& sigma :
       {letter_pair_split(ab), fibonacci_morphism(ab),
        compose(fibonacci_morphism(ab), fibonacci_morphism(ab))}) {
    const CanonicalDecomposition dec = canonical_decomposition(sigma);
    for_all_words(ab, 8, [&](const Word& u) {
      CHECK(apply_morphism(dec.letter_map, apply_morphism(dec.subdivision, u)) ==
            apply_morphism(sigma, u));
    });
  }
}

TEST_CASE("letter-to-letter decomposition is a renaming") {
  auto ab = make_alphabet({"a", "b"});
  auto xy = make_alphabet({"x", "y"});
  const Morphism rename = renaming(ab, xy);
  const CanonicalDecomposition dec = canonical_decomposition(rename);
  CHECK(dec.subdivision.letter_to_letter());
  CHECK(dec.subdivision.target()->size() == 2);
  for_all_words(ab, 5, [&](const Word& u) {
    CHECK(apply_morphism(dec.letter_map, apply_morphism(dec.subdivision, u)) ==
          apply_morphism(rename, u));
  });
}

TEST_CASE("composition builds the squared fibonacci morphism") {
  auto ab = make_alphabet({"a1", "a2"});
  const Morphism fib2 = compose(fibonacci_morphism(ab), fibonacci_morphism(ab));
  CHECK(fib2.image(0) == Word::from_symbols(ab, {"a2", "a1"}));
  CHECK(fib2.image(1) == Word::from_symbols(ab, {"a2", "a1", "a2"}));
  CHECK(fib2.inf_norm() == 2);
  CHECK(fib2.sup_norm() == 3);
}
