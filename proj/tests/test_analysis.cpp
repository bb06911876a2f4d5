#include <doctest.h>

#include <cmath>

#include "symdyn/analysis.hpp"
#include "symdyn/freegroup.hpp"

using namespace symdyn;

namespace {

struct Fixtures {
  AlphabetPtr ab = make_alphabet({"a1", "a2"});
  SubshiftPtr full2 = Subshift::full_shift(ab);
  Morphism split = letter_pair_split(ab);
  Morphism fib = fibonacci_morphism(ab);
  Morphism fib2 = compose(fib, fib);
  SubshiftPtr fib_sub = Subshift::substitution(fib);
};

}  // namespace

TEST_CASE("entropy profile of the full shift is constant log 2") {
  Fixtures f;
  const EntropyProfile profile = entropy_profile(*f.full2, 1, 20);
  for (const auto& e : profile.entries) {
    CHECK(e.p == nat_pow(Nat(2), e.n));
    CHECK(std::abs(e.log_p_over_n - std::log(2.0)) < 1e-12);
  }
}

TEST_CASE("entropy profile of the split image approaches half log 2 from above") {
  Fixtures f;
  const SubshiftPtr y = Subshift::image(f.full2, f.split);
  const EntropyProfile profile = entropy_profile(*y, 1, 30);
  const double expected = (std::log(3.0) + 15 * std::log(2.0)) / 30.0;
  CHECK(std::abs(profile.headline() - expected) < 1e-12);
  CHECK(profile.headline() > 0.5 * std::log(2.0));
}

TEST_CASE("entropy profile of the fibonacci subshift decays like log(n+1)/n") {
  Fixtures f;
  const EntropyProfile profile = entropy_profile(*f.fib_sub, 1, 30);
  for (const auto& e : profile.entries) {
    CHECK(e.p == e.n + 1);
    CHECK(std::abs(e.log_p_over_n - std::log(static_cast<double>(e.n + 1)) / e.n) < 1e-12);
  }
}

TEST_CASE("upper bound verifier on the split image") {
  Fixtures f;
  const BoundReport report = verify_upper_bound(f.full2, f.split, 10);
  CHECK(report.pass);
  CHECK(report.failures.empty());
  CHECK(report.table_hashes.size() == 2);
}

TEST_CASE("upper bound verifier is an equality for renamings") {
  Fixtures f;
  auto xy = make_alphabet({"x1", "x2"});
  const Morphism rename = renaming(f.ab, xy);
  const SubshiftPtr y = Subshift::image(f.full2, rename);
  for (int n = 1; n <= 10; ++n) {
    CHECK(complexity(*y, n) == complexity(*f.full2, n));
  }
  CHECK(verify_upper_bound(f.full2, rename, 10).pass);
}

TEST_CASE("upper bound verifier fails on a corrupted table") {
  Fixtures f;
  ComplexityTable table_x = complexity_table(*f.full2, 10);
  ComplexityTable table_y =
      complexity_table(*Subshift::image(f.full2, f.split), 2 * 9 + 1);
  table_y.entries[4] = table_y.entries[4] * 100;
  const BoundReport report = verify_upper_bound(table_x, table_y, 2, 2, 10);
  CHECK(!report.pass);
  REQUIRE(!report.failures.empty());
  CHECK(report.failures.front().n == 4);
}

TEST_CASE("letter-to-letter lower bound") {
  Fixtures f;
  auto xy = make_alphabet({"x1", "x2"});
  const BoundReport rename_report = verify_lower_bound_l2l(f.full2, renaming(f.ab, xy), 10, 3);
  CHECK(rename_report.pass);

  // The subdivided full shift under the residual letter map of the pair split.
  const CanonicalDecomposition dec = canonical_decomposition(f.split);
  const SubshiftPtr z = Subshift::image(f.full2, dec.subdivision);
  const BoundReport alpha_report = verify_lower_bound_l2l(z, dec.letter_map, 10, 3);
  CHECK(alpha_report.pass);
}

TEST_CASE("general lower bound pipeline details") {
  Fixtures f;
  const BoundReport split_report = verify_lower_bound_general(f.full2, f.split, 20, 3);
  CHECK(split_report.pass);
  // d = 1/3 puts the threshold at ||sigma||(||sigma||+1) = 6.
  CHECK(split_report.skipped == std::vector<int>{1, 2, 3, 4, 5});

  const BoundReport fib2_report = verify_lower_bound_general(f.fib_sub, f.fib2, 12, 3);
  CHECK(fib2_report.pass);
  CHECK(fib2_report.skipped.size() == 11);  // threshold 12
}

TEST_CASE("general lower bound agrees with the letter-to-letter route on renamings") {
  Fixtures f;
  auto xy = make_alphabet({"x1", "x2"});
  const Morphism rename = renaming(f.ab, xy);
  const BoundReport general = verify_lower_bound_general(f.full2, rename, 10, 2);
  const BoundReport l2l = verify_lower_bound_l2l(f.full2, rename, 10, 2);
  CHECK(general.pass);
  CHECK(l2l.pass);
  CHECK(general.skipped == std::vector<int>{1});  // threshold ||sigma||(||sigma||+1) = 2
}

TEST_CASE("counterexample suite spot values") {
  const CounterexampleBundle bundle = counterexample_suite(2, 12);
  CHECK(bundle.pass);
  REQUIRE(bundle.reports.size() == 4);
  for (const BoundReport& report : bundle.reports) {
    CHECK(report.pass);
  }
  REQUIRE(bundle.ratios.size() == 12);
  CHECK(bundle.ratios[9].first == 1048576);  // p_X(20)
  CHECK(bundle.ratios[9].second == 3072);    // p_Y(20)
  CHECK(std::abs(bundle.profile_x.headline() - std::log(2.0)) < 1e-12);
  CHECK(bundle.profile_y.headline() <= 0.40);
  CHECK_THROWS_AS(counterexample_suite(1, 12), std::invalid_argument);
}

TEST_CASE("theta diagnostic") {
  Fixtures f;
  const ComplexityTable table_x = complexity_table(*f.full2, 12);
  SUBCASE("a table against itself") {
    const ThetaReport report = theta_diagnostic(table_x, table_x);
    CHECK(report.min_ratio == std::pair<Nat, Nat>{2, 2});
    CHECK(report.max_ratio == std::pair<Nat, Nat>{2, 2});
    CHECK(!report.flagged);
  }
  SUBCASE("the split image drifts away without bound") {
    const ComplexityTable table_y =
        complexity_table(*Subshift::image(f.full2, f.split), 12);
    const ThetaReport report = theta_diagnostic(table_x, table_y);
    CHECK(report.ratio_strictly_increasing);
    CHECK(report.flagged);
    CHECK(report.max_at == 12);
  }
  SUBCASE("the two fibonacci bases stay in a bounded corridor") {
    const SubshiftPtr a_side = Subshift::doubled(f.fib_sub);
    const SubshiftPtr b_side = Subshift::doubled(Subshift::image(f.fib_sub, f.fib2));
    const ThetaReport report =
        theta_diagnostic(complexity_table(*a_side, 12), complexity_table(*b_side, 12));
    CHECK(!report.flagged);
    CHECK(report.min_ratio.first * report.max_ratio.second ==
          report.min_ratio.second * report.max_ratio.first);  // constant ratio 1
  }
}

TEST_CASE("log_nat handles values beyond the double range") {
  const Nat huge = nat_pow(Nat(2), 5000);
  CHECK(std::abs(log_nat(huge) - 5000 * std::log(2.0)) < 1e-6);
  CHECK(std::abs(log_nat(Nat(98304)) - std::log(98304.0)) < 1e-12);
}

TEST_CASE("zero entropy survives the basis change arithmetic on the fibonacci pair") {
  // With p_Ypm(n) <= C * p_Xpm(D*n) verified, the Y headline is forced below
  // D * h_X(D*n) + log(C)/n; both sides are computable exactly here.
  Fixtures f;
  DoubledAlphabet da(f.ab);
  const FreeGroupHom phi_ba(da, da, {Word(da.full(), {1, 0}), Word(da.full(), {1, 0, 1})});
  const FreeGroupHom phi_ab(da, da, {Word(da.full(), {3, 0, 0}), Word(da.full(), {2, 1})});
  const int c_ba = cancellation_bound_estimate(phi_ba, 5).bound;
  const int c_ab = cancellation_bound_estimate(phi_ab, 5).bound;

  const SubshiftPtr x_pm = Subshift::doubled(f.fib_sub);
  const SubshiftPtr y_pm = Subshift::doubled(Subshift::image(f.fib_sub, f.fib2));
  const int window = 12;
  const BasisChangeReport report =
      verify_basis_change_inequality(*x_pm, *y_pm, phi_ba, phi_ab, c_ba, c_ab, window);
  REQUIRE(report.pass);

  const double log_c = std::log(report.upper_c.convert_to<double>());
  const int d = report.upper_d;
  const EntropyProfile profile_y = entropy_profile(*y_pm, window, window);
  const EntropyProfile profile_x = entropy_profile(*x_pm, d * window, d * window);
  CHECK(profile_y.headline() <= d * profile_x.headline() + log_c / window + 1e-12);
  // Both sides of the pair sit in the zero-entropy regime.
  CHECK(profile_y.headline() < 0.3);
  CHECK(profile_x.headline() < 0.05);
}
