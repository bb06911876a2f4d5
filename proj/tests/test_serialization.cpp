#include <doctest.h>

#include <nlohmann/json.hpp>

#include "symdyn/recognizability.hpp"
#include "symdyn/serialization.hpp"

using namespace symdyn;

TEST_CASE("alphabet and word round-trips") {
  auto a = make_alphabet({"a1", "a2"});
  CHECK(*alphabet_from_json(alphabet_to_json(*a)) == *a);
  const Word w = Word::from_symbols(a, {"a2", "a1", "a2"});
  CHECK(word_from_json(a, word_to_json(w)) == w);
  CHECK_THROWS(word_from_json(a, Json::parse(R"(["zz"])")));
}

TEST_CASE("morphism json round-trip and inference") {
  auto a = make_alphabet({"a1", "a2"});
  const Morphism fib = fibonacci_morphism(a);
  const Morphism back = morphism_from_json(morphism_to_json(fib));
  CHECK(*back.source() == *fib.source());
  CHECK(*back.target() == *fib.target());
  CHECK(back.image(1) == fib.image(1));

  // Bare map: source from key order, endomorphism target inferred.
  const Morphism bare = morphism_from_json(
      Json::parse(R"({"a1": ["a2"], "a2": ["a2", "a1"]})"));
  CHECK(bare.is_endomorphism());
  CHECK(bare.image(0) == Word::from_symbols(bare.target(), {"a2"}));

  // Fresh target symbols are collected in order of first appearance.
  const Morphism split = morphism_from_json(
      Json::parse(R"({"a": ["a-", "a+"], "b": ["b-", "b+"]})"));
  CHECK(split.target()->symbols() == std::vector<std::string>{"a-", "a+", "b-", "b+"});
}

TEST_CASE("presentation json round-trips for every kind") {
  auto a = make_alphabet({"a1", "a2"});
  const SubshiftPtr full = Subshift::full_shift(a);
  const SubshiftPtr sft = Subshift::sft(a, {Word::from_symbols(a, {"a2", "a2"})});
  const SubshiftPtr sub = Subshift::substitution(fibonacci_morphism(a));
  const SubshiftPtr img = Subshift::image(full, letter_pair_split(a));
  const SubshiftPtr dbl = Subshift::doubled(sft);
  for (const SubshiftPtr& x : {full, sft, sub, img, dbl}) {
    const SubshiftPtr back = subshift_from_json(subshift_to_json(*x));
    CHECK(back->kind() == x->kind());
    CHECK(*back->alphabet() == *x->alphabet());
    for (int n = 1; n <= 4; ++n) {
      CHECK(language(*back, n) == language(*x, n));
    }
  }
  CHECK_THROWS(subshift_from_json(Json::parse(R"({"type": "wat"})")));
  CHECK_THROWS(subshift_from_json(Json::parse(R"({"alphabet": ["a"]})")));
}

TEST_CASE("hom json round-trip keeps the inverse-suffix convention") {
  auto a = make_alphabet({"a1", "a2"});
  DoubledAlphabet da(a);
  const FreeGroupHom phi(da, da, {Word(da.full(), {3, 0, 0}), Word(da.full(), {2, 1})});
  const Json j = hom_to_json(phi);
  CHECK(j.at("images").at("a1") == Json::parse(R"(["a2^-1", "a1", "a1"])"));
  const FreeGroupHom back = hom_from_json(j);
  CHECK(back.positive_image(0) == phi.positive_image(0));
  CHECK(back.positive_image(1) == phi.positive_image(1));
}

TEST_CASE("certificates serialize by verdict") {
  auto a = make_alphabet({"a1", "a2"});
  const SubshiftPtr full2 = Subshift::full_shift(a);
  const Morphism split = letter_pair_split(a);
  const Json certified =
      certificate_to_json(check_recognizability(split, full2, 3, 10, 4));
  CHECK(certified.at("verdict") == "certified_up_to");
  CHECK(certified.at("r") == 0);

  auto x_only = make_alphabet({"x"});
  const Morphism constant(a, x_only, {Word(x_only, {0}), Word(x_only, {0})});
  const Json found =
      certificate_to_json(check_recognizability(constant, full2, 3, 10, 4));
  CHECK(found.at("verdict") == "counterexample_found");
  CHECK(found.at("witness").contains("kind"));

  const Json open = certificate_to_json(find_repetition_bound(constant, *full2, 5, 12));
  CHECK(open.at("verdict") == "inconclusive");
}

TEST_CASE("table csv format and hash stability") {
  auto a = make_alphabet({"a1", "a2"});
  const ComplexityTable table = complexity_table(*Subshift::full_shift(a), 3);
  CHECK(table_to_csv(table) == "n,p\n1,2\n2,4\n3,8\n");
  CHECK(table_hash(table) == table_hash(table));
  ComplexityTable other = table;
  other.entries[3] = 7;
  CHECK(table_hash(other) != table_hash(table));
}

TEST_CASE("profile csv format") {
  auto a = make_alphabet({"a1", "a2"});
  const EntropyProfile profile = entropy_profile(*Subshift::full_shift(a), 1, 2);
  const std::string csv = profile_to_csv(profile);
  CHECK(csv.rfind("n,p,log_p_over_n\n", 0) == 0);
  CHECK(csv.find("1,2,") != std::string::npos);
  CHECK(csv.find("2,4,") != std::string::npos);
}

TEST_CASE("word sets are emitted in symbol-name order") {
  auto a = make_alphabet({"a1", "a2", "a1^-1", "a2^-1"});
  WordSet words;
  words.insert(Word(a, {1}));  // a2
  words.insert(Word(a, {2}));  // a1^-1
  words.insert(Word(a, {0}));  // a1
  const Json j = word_set_to_json(words);
  CHECK(j == Json::parse(R"([["a1"], ["a1^-1"], ["a2"]])"));
}

TEST_CASE("format_double produces round-trippable shortest forms") {
  CHECK(format_double(0.5) == "0.5");
  CHECK(format_double(std::log(2.0)) == "0.6931471805599453");
}
