#include "symdyn/analysis.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "symdyn/serialization.hpp"

namespace symdyn {
namespace {

const Nat& entry(const ComplexityTable& table, int n) {
  auto it = table.entries.find(n);
  if (it == table.entries.end()) {
    throw std::invalid_argument("complexity table window too small at n=" + std::to_string(n));
  }
  return it->second;
}

void check(BoundReport& report, int n, const std::string& inequality, const Nat& lhs,
           const Nat& rhs, bool holds) {
  if (!holds) {
    report.failures.push_back({n, inequality, lhs, rhs});
  }
}

}  // namespace

EntropyProfile entropy_profile(const Subshift& shift, int n_from, int n_to) {
  if (n_from < 1 || n_to < n_from) {
    throw std::invalid_argument("entropy profile requires 1 <= n_from <= n_to");
  }
  EntropyProfile profile;
  profile.presentation = shift.describe();
  for (int n = n_from; n <= n_to; ++n) {
    Nat p = complexity(shift, n);
    const double value = log_nat(p) / n;
    profile.entries.push_back({n, std::move(p), value});
  }
  return profile;
}

BoundReport verify_upper_bound(const ComplexityTable& table_x, const ComplexityTable& table_y,
                               int sup_norm, int inf_norm, int window) {
  BoundReport report;
  report.claim = "theorem-1.1(1)/lemma-X.1";
  report.window = window;
  report.constants = {{"sup_norm", std::to_string(sup_norm)},
                      {"inf_norm", std::to_string(inf_norm)}};
  report.table_hashes = {{"p_X", table_hash(table_x)}, {"p_Y", table_hash(table_y)}};
  for (int n = 1; n <= window; ++n) {
    const int chain_n = inf_norm * (n - 1) + 1;
    const Nat& py = entry(table_y, n);
    const Nat& py_chain = entry(table_y, chain_n);
    const Nat rhs = Nat(sup_norm) * entry(table_x, n);
    check(report, n, "p_Y(n) <= ||sigma||*p_X(n)", py, rhs, py <= rhs);
    check(report, n, "p_Y(n) <= p_Y(<sigma>*(n-1)+1)", py, py_chain, py <= py_chain);
    check(report, n, "p_Y(<sigma>*(n-1)+1) <= ||sigma||*p_X(n)", py_chain, rhs, py_chain <= rhs);
  }
  report.pass = report.failures.empty();
  return report;
}

BoundReport verify_upper_bound(const SubshiftPtr& x, const Morphism& sigma, int window) {
  const SubshiftPtr y = Subshift::image(x, sigma);
  const ComplexityTable table_x = complexity_table(*x, window);
  const ComplexityTable table_y = complexity_table(*y, sigma.inf_norm() * (window - 1) + 1);
  return verify_upper_bound(table_x, table_y, sigma.sup_norm(), sigma.inf_norm(), window);
}

BoundReport verify_lower_bound_l2l(const ComplexityTable& table_x, const ComplexityTable& table_y,
                                   int alphabet_size, int repetition_bound, int window) {
  BoundReport report;
  report.claim = "proposition-4.1";
  report.window = window;
  report.constants = {{"r", std::to_string(repetition_bound)},
                      {"c", "1/" + nat_to_string(nat_pow(Nat(alphabet_size),
                                                         2 * repetition_bound))}};
  report.table_hashes = {{"p_X", table_hash(table_x)}, {"p_Y", table_hash(table_y)}};
  const Nat scale = nat_pow(Nat(alphabet_size), 2 * repetition_bound);
  for (int m = 1; m <= window; ++m) {
    const Nat lhs = entry(table_y, m) * scale;
    const Nat& rhs = entry(table_x, m);
    check(report, m, "p_Y(m)*card(A)^(2r) >= p_X(m)", lhs, rhs, lhs >= rhs);
  }
  report.pass = report.failures.empty();
  return report;
}

BoundReport verify_lower_bound_l2l(const SubshiftPtr& x, const Morphism& sigma, int window,
                                   int r_max) {
  if (!sigma.letter_to_letter()) {
    throw std::invalid_argument("verify_lower_bound_l2l requires a letter-to-letter morphism");
  }
  const RecognizabilityCertificate cert = find_repetition_bound(sigma, *x, r_max, window);
  BoundReport report;
  if (cert.verdict != RecognizabilityCertificate::Verdict::CertifiedUpTo) {
    report.claim = "proposition-4.1";
    report.window = window;
    report.constants = {{"certificate", "missing: no repetition bound <= r_max certified"}};
    report.pass = false;
    return report;
  }
  const SubshiftPtr y = Subshift::image(x, sigma);
  const ComplexityTable table_x = complexity_table(*x, window);
  const ComplexityTable table_y = complexity_table(*y, window);
  return verify_lower_bound_l2l(table_x, table_y, x->alphabet()->size(), cert.r, window);
}

BoundReport verify_lower_bound_general(const SubshiftPtr& x, const Morphism& sigma, int window,
                                       int r_max) {
  BoundReport report;
  report.claim = "proposition-3.5";
  report.window = window;

  const CanonicalDecomposition dec = canonical_decomposition(sigma);
  const SubshiftPtr z = Subshift::image(x, dec.subdivision);
  const SubshiftPtr y = Subshift::image(x, sigma);
  const RecognizabilityCertificate cert = find_repetition_bound(dec.letter_map, *z, r_max, window);
  if (cert.verdict != RecognizabilityCertificate::Verdict::CertifiedUpTo) {
    report.constants = {{"certificate", "missing: no repetition bound <= r_max certified"}};
    report.pass = false;
    return report;
  }
  const int r = cert.r;
  const int sup = sigma.sup_norm();
  const int cells = dec.subdivision.target()->size();  // card(A_sigma)
  const int threshold = sup * (sup + 1);  // least m with d*m <= (m - ||sigma||)/||sigma||
  const Nat scale = nat_pow(Nat(cells), 2 * r);

  report.constants = {{"r", std::to_string(r)},
                      {"card(A_sigma)", std::to_string(cells)},
                      {"c", "1/" + nat_to_string(scale)},
                      {"d", "1/" + std::to_string(sup + 1)},
                      {"threshold", std::to_string(threshold)}};

  const ComplexityTable table_x = complexity_table(*x, window);
  const ComplexityTable table_y = complexity_table(*y, window);
  const ComplexityTable table_z = complexity_table(*z, window);
  report.table_hashes = {{"p_X", table_hash(table_x)},
                         {"p_Y", table_hash(table_y)},
                         {"p_Z", table_hash(table_z)}};

  for (int n = 1; n + 2 * r <= window; ++n) {
    const Nat& lhs = entry(table_y, n + 2 * r);
    const Nat& rhs = entry(table_z, n);
    check(report, n, "lemma-3.3: p_Y(n+2r) >= p_Z(n)", lhs, rhs, lhs >= rhs);
  }
  for (int n = 1; n + 2 * r <= window; ++n) {
    const Nat& lhs = entry(table_z, n + 2 * r);
    const Nat rhs = scale * entry(table_z, n);
    check(report, n, "eq-3.3: p_Z(n+2r) <= card(A_sigma)^(2r)*p_Z(n)", lhs, rhs, lhs <= rhs);
  }
  for (int n = 1; sup * n <= window; ++n) {
    const Nat& lhs = entry(table_z, sup * n);
    const Nat& rhs = entry(table_x, n);
    check(report, n, "lemma-3.4: p_Z(||sigma||*n) >= p_X(n)", lhs, rhs, lhs >= rhs);
  }
  for (int m = 1; m <= window; ++m) {
    if (m < threshold) {
      report.skipped.push_back(m);
      continue;
    }
    const Nat lhs = entry(table_y, m) * scale;
    const Nat& rhs = entry(table_x, m / (sup + 1));
    check(report, m, "prop-3.5: p_Y(m)*card(A_sigma)^(2r) >= p_X(floor(d*m))", lhs, rhs,
          lhs >= rhs);
  }
  report.pass = report.failures.empty();
  return report;
}

CounterexampleBundle counterexample_suite(int alphabet_size, int window) {
  if (alphabet_size < 2) {
    throw std::invalid_argument("counterexample suite requires alphabet size >= 2");
  }
  if (window < 1) {
    throw std::invalid_argument("counterexample suite requires window >= 1");
  }
  std::vector<std::string> names;
  for (int i = 1; i <= alphabet_size; ++i) {
    names.push_back("a" + std::to_string(i));
  }
  const AlphabetPtr alphabet = make_alphabet(std::move(names));
  const SubshiftPtr x = Subshift::full_shift(alphabet);
  const Morphism split = letter_pair_split(alphabet);
  const SubshiftPtr y = Subshift::image(x, split);
  const Nat k(alphabet_size);

  const ComplexityTable table_x = complexity_table(*x, 2 * window + 1);
  const ComplexityTable table_y = complexity_table(*y, 2 * window);
  const std::string hx = table_hash(table_x);
  const std::string hy = table_hash(table_y);

  CounterexampleBundle bundle;

  BoundReport odd;
  odd.claim = "lemma-4.2-odd";
  odd.window = window;
  odd.table_hashes = {{"p_X", hx}, {"p_Y", hy}};
  for (int n = 1; n <= window; ++n) {
    const Nat& lhs = entry(table_y, 2 * n - 1);
    const Nat rhs = 2 * entry(table_x, n);
    check(odd, n, "p_Y(2n-1) = 2*p_X(n)", lhs, rhs, lhs == rhs);
  }
  odd.pass = odd.failures.empty();

  BoundReport even;
  even.claim = "lemma-4.2-even";
  even.window = window;
  even.table_hashes = {{"p_X", hx}, {"p_Y", hy}};
  for (int n = 1; n <= window; ++n) {
    const Nat& lhs = entry(table_y, 2 * n);
    const Nat rhs = entry(table_x, n) + entry(table_x, n + 1);
    check(even, n, "p_Y(2n) = p_X(n) + p_X(n+1)", lhs, rhs, lhs == rhs);
  }
  even.pass = even.failures.empty();

  BoundReport ratio;
  ratio.claim = "theorem-1.1(4)-ratio";
  ratio.window = window;
  ratio.constants = {{"closed_form", "p_X(2n)/p_Y(2n) = k^(2n)/(k^n + k^(n+1))"}};
  ratio.table_hashes = {{"p_X", hx}, {"p_Y", hy}};
  for (int n = 1; n <= window; ++n) {
    const Nat& num = entry(table_x, 2 * n);
    const Nat& den = entry(table_y, 2 * n);
    bundle.ratios.emplace_back(num, den);
    const Nat closed_num = nat_pow(k, 2 * n);
    const Nat closed_den = nat_pow(k, n) + nat_pow(k, n + 1);
    check(ratio, n, "ratio equals closed form", num * closed_den, den * closed_num,
          num * closed_den == den * closed_num);
    if (n >= 2) {
      const auto& [pn, pd] = bundle.ratios[n - 2];
      check(ratio, n, "ratio strictly increasing", num * pd, den * pn, num * pd > den * pn);
    }
  }
  ratio.pass = ratio.failures.empty();

  // Entropy window scaled so the image enumeration stays feasible.
  int profile_window = 30;
  while (profile_window > 4 &&
         nat_pow(k, profile_window / 2 + 1) > 300000) {
    profile_window -= 2;
  }
  bundle.profile_x = entropy_profile(*x, 1, profile_window);
  bundle.profile_y = entropy_profile(*y, 1, profile_window);

  BoundReport drop;
  drop.claim = "corollary-5.1(3)-entropy-drop";
  drop.window = profile_window;
  const double log_k = std::log(static_cast<double>(alphabet_size));
  const double expected_tail =
      (std::log(static_cast<double>(alphabet_size + 1)) + (profile_window / 2) * log_k) /
      profile_window;
  drop.constants = {{"h_X", format_double(log_k)},
                    {"h_Y_window_value", format_double(expected_tail)}};
  bool drop_ok = true;
  for (const auto& e : bundle.profile_x.entries) {
    if (std::abs(e.log_p_over_n - log_k) > 1e-9) {
      drop_ok = false;
      drop.failures.push_back({e.n, "full-shift profile equals log k", 0, 0});
    }
  }
  if (std::abs(bundle.profile_y.headline() - expected_tail) > 1e-9) {
    drop_ok = false;
    drop.failures.push_back({profile_window, "image headline equals closed form", 0, 0});
  }
  const double half_gap = std::abs(bundle.profile_y.headline() -
                                   (log_k / 2 + std::log(static_cast<double>(alphabet_size + 1)) /
                                                    profile_window));
  if (half_gap > 1e-9) {
    drop_ok = false;
    drop.failures.push_back({profile_window, "headline equals log(k)/2 + log(k+1)/W", 0, 0});
  }
  // The odd/even interleaving wobbles within a step; the trend is strict on
  // windows two apart.
  for (size_t i = 2; i < bundle.profile_y.entries.size(); ++i) {
    if (!(bundle.profile_y.entries[i].log_p_over_n <
          bundle.profile_y.entries[i - 2].log_p_over_n)) {
      drop_ok = false;
      drop.failures.push_back({bundle.profile_y.entries[i].n, "image profile trending downward",
                               0, 0});
      break;
    }
  }
  drop.pass = drop_ok;

  bundle.reports = {std::move(odd), std::move(even), std::move(ratio), std::move(drop)};
  bundle.pass = true;
  for (const BoundReport& r : bundle.reports) {
    bundle.pass = bundle.pass && r.pass;
  }
  return bundle;
}

ThetaReport theta_diagnostic(const ComplexityTable& table_a, const ComplexityTable& table_b) {
  if (table_a.entries.empty() || table_b.entries.empty()) {
    throw std::invalid_argument("theta diagnostic requires non-empty tables");
  }
  const int window = std::min(table_a.entries.rbegin()->first, table_b.entries.rbegin()->first);
  ThetaReport report;
  report.window = window;
  report.table_a_hash = table_hash(table_a);
  report.table_b_hash = table_hash(table_b);
  report.ratio_strictly_increasing = true;

  Nat prev_num, prev_den;
  for (int n = 1; n <= window; ++n) {
    const Nat& num = entry(table_a, n);
    const Nat& den = entry(table_b, n);
    if (n == 1) {
      report.min_ratio = {num, den};
      report.max_ratio = {num, den};
      report.min_at = report.max_at = 1;
    } else {
      if (num * report.min_ratio.second < report.min_ratio.first * den) {
        report.min_ratio = {num, den};
        report.min_at = n;
      }
      if (num * report.max_ratio.second > report.max_ratio.first * den) {
        report.max_ratio = {num, den};
        report.max_at = n;
      }
      if (!(num * prev_den > prev_num * den)) {
        report.ratio_strictly_increasing = false;
      }
    }
    prev_num = num;
    prev_den = den;
  }
  report.flagged = report.ratio_strictly_increasing && window >= 3;
  return report;
}

}  // namespace symdyn
