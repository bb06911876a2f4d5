#pragma once

#include <string>
#include <vector>

#include "symdyn/nat.hpp"
#include "symdyn/recognizability.hpp"
#include "symdyn/subshift.hpp"

namespace symdyn {

/// Finite sequence n -> log p(n) / n. No extrapolation: the headline is the
/// last window value, with the window stated.
struct EntropyProfile {
  struct Entry {
    int n = 0;
    Nat p;
    double log_p_over_n = 0.0;
  };
  std::string presentation;
  std::vector<Entry> entries;

  double headline() const { return entries.empty() ? 0.0 : entries.back().log_p_over_n; }
  int window() const { return entries.empty() ? 0 : entries.back().n; }
};

EntropyProfile entropy_profile(const Subshift& shift, int n_from, int n_to);

struct BoundFailure {
  int n = 0;
  std::string inequality;
  Nat lhs;
  Nat rhs;
};

/// Pass/fail verdict for one claim over a window; failures carry replayable
/// instances and the report embeds the table hashes it was computed from.
struct BoundReport {
  std::string claim;
  std::vector<std::pair<std::string, std::string>> constants;
  int window = 0;
  bool pass = false;
  std::vector<BoundFailure> failures;
  std::vector<int> skipped;  // below-threshold n, listed rather than checked
  std::vector<std::pair<std::string, std::string>> table_hashes;
};

/// p_Y(n) <= ||sigma|| p_X(n) plus the sharper chain
/// p_Y(n) <= p_Y(<sigma>(n-1)+1) <= ||sigma|| p_X(n), exact arithmetic.
BoundReport verify_upper_bound(const ComplexityTable& table_x, const ComplexityTable& table_y,
                               int sup_norm, int inf_norm, int window);
BoundReport verify_upper_bound(const SubshiftPtr& x, const Morphism& sigma, int window);

/// Letter-to-letter lower bound p_Y(m) >= p_X(m) / card(A)^{2r}.
BoundReport verify_lower_bound_l2l(const ComplexityTable& table_x, const ComplexityTable& table_y,
                                   int alphabet_size, int repetition_bound, int window);
BoundReport verify_lower_bound_l2l(const SubshiftPtr& x, const Morphism& sigma, int window,
                                   int r_max);

/// General lower bound with d = 1/(||sigma||+1): the final inequality and its
/// three ingredients (image vs subdivision, the 2r prolongation bound, and
/// the subdivision stretch), each verified exactly on its applicable window.
BoundReport verify_lower_bound_general(const SubshiftPtr& x, const Morphism& sigma, int window,
                                       int r_max);

/// The doubling-morphism counterexample suite on the full k-shift.
struct CounterexampleBundle {
  std::vector<BoundReport> reports;
  EntropyProfile profile_x;
  EntropyProfile profile_y;
  std::vector<std::pair<Nat, Nat>> ratios;  // p_X(2n)/p_Y(2n) as exact fractions
  bool pass = false;
};

CounterexampleBundle counterexample_suite(int alphabet_size, int window);

/// Min/max of p_A(n)/p_B(n) over the common window plus the growth trend.
/// A monotone ratio is flagged as evidence against a common Theta class,
/// never as proof.
struct ThetaReport {
  int window = 0;
  std::pair<Nat, Nat> min_ratio;
  std::pair<Nat, Nat> max_ratio;
  int min_at = 0;
  int max_at = 0;
  bool ratio_strictly_increasing = false;
  bool flagged = false;
  std::string table_a_hash;
  std::string table_b_hash;
};

ThetaReport theta_diagnostic(const ComplexityTable& table_a, const ComplexityTable& table_b);

}  // namespace symdyn
