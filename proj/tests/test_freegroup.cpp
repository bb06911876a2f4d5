#include <doctest.h>

#include <functional>
#include <stdexcept>

#include "symdyn/freegroup.hpp"
#include "symdyn/reference.hpp"

using namespace symdyn;

namespace {

struct Fixtures {
  AlphabetPtr ab = make_alphabet({"a1", "a2"});
  DoubledAlphabet da{ab};
  SubshiftPtr full2 = Subshift::full_shift(ab);
  Morphism fib = fibonacci_morphism(ab);
  Morphism fib2 = compose(fib, fib);

  FreeGroupHom phi_ba{da, da, {Word(da.full(), {1, 0}), Word(da.full(), {1, 0, 1})}};
  FreeGroupHom phi_ab{da, da, {Word(da.full(), {3, 0, 0}), Word(da.full(), {2, 1})}};
};

Word dw(const DoubledAlphabet& da, const std::vector<std::string>& symbols) {
  return Word::from_symbols(da.full(), symbols);
}

template <typename Fn>
void for_all_reduced(const DoubledAlphabet& da, int max_len, Fn&& fn) {
  std::vector<int32_t> letters;
  const std::function<void()> rec = [&] {
    if (!letters.empty()) {
      fn(Word(da.full(), letters));
    }
    if (static_cast<int>(letters.size()) == max_len) {
      return;
    }
    for (int32_t x = 0; x < da.full()->size(); ++x) {
      if (!letters.empty() && x == da.inverse(letters.back())) {
        continue;
      }
      letters.push_back(x);
      rec();
      letters.pop_back();
    }
  };
  rec();
}

}  // namespace

TEST_CASE("doubled alphabet pairing") {
  Fixtures f;
  CHECK(f.da.full()->symbols() ==
        std::vector<std::string>{"a1", "a2", "a1^-1", "a2^-1"});
  for (int i = 0; i < 4; ++i) {
    CHECK(f.da.inverse(f.da.inverse(i)) == i);
    CHECK(f.da.inverse(i) != i);
  }
  const auto from_full = DoubledAlphabet::from_full(f.da.full());
  REQUIRE(from_full.has_value());
  CHECK(*from_full->positive() == *f.ab);
  CHECK(!DoubledAlphabet::from_full(make_alphabet({"a", "b"})).has_value());
}

TEST_CASE("free reduction") {
  Fixtures f;
  CHECK(free_reduce(f.da, dw(f.da, {"a1", "a1^-1", "a2"})) == dw(f.da, {"a2"}));
  CHECK(free_reduce(f.da, dw(f.da, {"a1", "a2", "a2^-1", "a1^-1"})).is_empty());
  CHECK(free_reduce(f.da, dw(f.da, {"a1", "a2", "a1^-1"})) == dw(f.da, {"a1", "a2", "a1^-1"}));
}

TEST_CASE("free reduction agrees with pass-based reduction on every short word") {
  Fixtures f;
  std::vector<int32_t> letters;
  const std::function<void()> rec = [&] {
    const Word raw(f.da.full(), letters);
    const Word reduced = free_reduce(f.da, raw);
    CHECK(reduced == ref::reduce_by_passes(f.da, raw));
    CHECK(is_reduced(f.da, reduced));
    CHECK(free_reduce(f.da, reduced) == reduced);     // idempotent
    CHECK(reduced.size() <= raw.size());              // length-non-increasing
    if (letters.size() == 7) {
      return;
    }
    for (int32_t x = 0; x < 4; ++x) {
      letters.push_back(x);
      rec();
      letters.pop_back();
    }
  };
  rec();
}

TEST_CASE("reduced product length bound") {
  Fixtures f;
  for_all_reduced(f.da, 4, [&](const Word& u) {
    for_all_reduced(f.da, 4, [&](const Word& v) {
      const Word product = free_reduce(f.da, u.append(v));
      CHECK(product.size() >= u.size() + v.size() - 2 * std::min(u.size(), v.size()));
    });
  });
}

TEST_CASE("hom images and application") {
  Fixtures f;
  CHECK(f.phi_ba.sup_norm() == 3);
  CHECK(apply_hom(f.phi_ba, dw(f.da, {"a1"})) == dw(f.da, {"a2", "a1"}));
  // Inverse-letter images are derived by inverse-reversal.
  CHECK(f.phi_ba.image_of(2) == dw(f.da, {"a1^-1", "a2^-1"}));

  // phi(a1^-1 a2) reduces: a1^-1 a2^-1 . a2 a1 a2 -> a2
  const Word input = dw(f.da, {"a1^-1", "a2"});
  const Word expected = ref::reduce_by_passes(
      f.da, f.phi_ba.image_of(2).append(f.phi_ba.positive_image(1)));
  CHECK(apply_hom(f.phi_ba, input) == expected);
  CHECK(expected == dw(f.da, {"a2"}));

  const FreeGroupHom id = FreeGroupHom::identity(f.da);
  for_all_reduced(f.da, 4, [&](const Word& u) { CHECK(apply_hom(id, u) == u); });

  CHECK_THROWS_AS(apply_hom(f.phi_ba, dw(f.da, {"a1", "a1^-1"})), std::invalid_argument);
}

TEST_CASE("declared inverses compose to the identity") {
  Fixtures f;
  CHECK(compose_check_inverse(f.phi_ba, f.phi_ab));
  CHECK(compose_check_inverse(FreeGroupHom::identity(f.da), FreeGroupHom::identity(f.da)));

  // a1 -> a1 a1 generates a proper subgroup; nothing inverts it.
  const FreeGroupHom square(f.da, f.da, {Word(f.da.full(), {0, 0}), Word(f.da.full(), {1})});
  CHECK(!compose_check_inverse(square, FreeGroupHom::identity(f.da)));
}

TEST_CASE("hom application is multiplicative up to reduction") {
  Fixtures f;
  for_all_reduced(f.da, 5, [&](const Word& u) {
    for_all_reduced(f.da, 5, [&](const Word& v) {
      const Word joined = free_reduce(f.da, u.append(v));
      const Word lhs = apply_hom(f.phi_ba, joined);
      const Word rhs =
          free_reduce(f.da, apply_hom(f.phi_ba, u).append(apply_hom(f.phi_ba, v)));
      CHECK(lhs == rhs);
    });
  });
}

TEST_CASE("norm sandwich for invertible homs") {
  Fixtures f;
  REQUIRE(compose_check_inverse(f.phi_ba, f.phi_ab));
  for_all_reduced(f.da, 6, [&](const Word& w) {
    const Word image = apply_hom(f.phi_ba, w);
    CHECK(image.size() * f.phi_ab.sup_norm() >= w.size());  // |w|/||phi^-1|| <= |phi(w)|
    CHECK(image.size() <= f.phi_ba.sup_norm() * w.size());
  });
}

TEST_CASE("cancellation bound estimates") {
  Fixtures f;
  const CancellationEstimate id_est =
      cancellation_bound_estimate(FreeGroupHom::identity(f.da), 5);
  CHECK(id_est.bound == 0);

  // Letter permutation: single-letter images never cancel.
  const FreeGroupHom swap(f.da, f.da, {Word(f.da.full(), {1}), Word(f.da.full(), {0})});
  CHECK(cancellation_bound_estimate(swap, 6).bound == 0);

  const CancellationEstimate fib2_est = cancellation_bound_estimate(f.phi_ba, 4);
  CHECK(fib2_est.bound == 3);
  CHECK(fib2_est.maxima_by_length == std::vector<int>{2, 3, 3, 3});
  CHECK(fib2_est.stabilized(2));
  CHECK(!fib2_est.stabilized(3));

  const CancellationEstimate serial = ref::cancellation_bound_serial(f.phi_ba, 4);
  CHECK(serial.bound == fib2_est.bound);
  CHECK(serial.maxima_by_length == fib2_est.maxima_by_length);

  const CancellationEstimate inv_est = cancellation_bound_estimate(f.phi_ab, 6);
  CHECK(inv_est.bound == 2);
  CHECK(inv_est.maxima_by_length == std::vector<int>{2, 2, 2, 2, 2, 2});
  CHECK(inv_est.stabilized(3));
}

TEST_CASE("basis change with the identity hom reproduces the language") {
  Fixtures f;
  const AlphabetPtr ab = f.ab;
  const SubshiftPtr golden_pm = Subshift::doubled(
      Subshift::sft(ab, {Word::from_symbols(ab, {"a2", "a2"})}));
  const FreeGroupHom id = FreeGroupHom::identity(f.da);
  for (int n = 1; n <= 5; ++n) {
    CHECK(basis_change_language(*golden_pm, id, id, 0, 0, n) == language(*golden_pm, n));
  }
}

TEST_CASE("basis change on the doubled fibonacci subshift (direct enumeration engine)") {
  Fixtures f;
  const SubshiftPtr fib_pm = Subshift::doubled(Subshift::substitution(f.fib));
  REQUIRE(!as_sft_form(*fib_pm).has_value());
  // fib^2 fixes its own subshift, so the basis image has the same language.
  for (int n = 1; n <= 3; ++n) {
    CHECK(basis_change_language(*fib_pm, f.phi_ba, f.phi_ab, 3, 2, n) ==
          language(*fib_pm, n));
  }
}

TEST_CASE("basis change window guard") {
  Fixtures f;
  const SubshiftPtr x_pm = Subshift::doubled(f.full2);
  CHECK_THROWS_AS(basis_change_language(*x_pm, f.phi_ba, f.phi_ab, 3, 2, 9, 1),
                  std::invalid_argument);
  const FreeGroupHom id = FreeGroupHom::identity(f.da);
  CHECK_THROWS_AS(basis_change_language(*x_pm, f.phi_ba, id, 3, 2, 2), std::invalid_argument);
}

TEST_CASE("basis change inequality report") {
  Fixtures f;
  const SubshiftPtr golden = Subshift::sft(f.ab, {Word::from_symbols(f.ab, {"a2", "a2"})});
  const SubshiftPtr x_pm = Subshift::doubled(golden);
  const FreeGroupHom id = FreeGroupHom::identity(f.da);
  const BasisChangeReport report = verify_basis_change_inequality(*x_pm, *x_pm, id, id, 0, 0, 5);
  CHECK(report.pass);
  CHECK(report.upper_c == 1);
  CHECK(report.upper_d == 2);
  CHECK(report.skipped == std::vector<int>{1});

  ComplexityTable table_x = complexity_table(*x_pm, 2 * 5);
  ComplexityTable table_y = complexity_table(*x_pm, 5);
  table_y.entries[3] = table_y.entries[3] * 1000;  // corrupt
  const BasisChangeReport bad =
      verify_basis_change_inequality(table_x, table_y, 1, 1, 0, 0, 5);
  CHECK(!bad.pass);
  REQUIRE(!bad.failures.empty());
  CHECK(bad.failures.front().n == 3);
}

TEST_CASE("basis change rejects subshifts with non-reduced words") {
  Fixtures f;
  // A full shift over the doubled alphabet contains a1 a1^-1.
  const SubshiftPtr raw = Subshift::full_shift(f.da.full());
  const FreeGroupHom id = FreeGroupHom::identity(f.da);
  CHECK_THROWS_AS(basis_change_language(*raw, id, id, 0, 0, 2), std::invalid_argument);
}
