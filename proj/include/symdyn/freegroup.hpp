#pragma once

#include <optional>
#include <string>
#include <vector>

#include "symdyn/nat.hpp"
#include "symdyn/subshift.hpp"
#include "symdyn/words.hpp"

namespace symdyn {

/// Positive alphabet A together with the inventory A u A^-1; the involution
/// pairs index i with i + positive_count. Inverse symbols carry the "^-1"
/// name suffix (the wire convention).
class DoubledAlphabet {
 public:
  explicit DoubledAlphabet(AlphabetPtr positive);

  /// Recognizes an inventory already of the form [a1..ak, a1^-1..ak^-1].
  static std::optional<DoubledAlphabet> from_full(const AlphabetPtr& full);

  const AlphabetPtr& positive() const { return positive_; }
  const AlphabetPtr& full() const { return full_; }
  int positive_count() const { return positive_->size(); }
  int inverse(int letter) const;
  bool is_positive(int letter) const { return letter < positive_->size(); }

 private:
  DoubledAlphabet() = default;
  AlphabetPtr positive_;
  AlphabetPtr full_;
};

/// Fully cancelled form; idempotent.
Word free_reduce(const DoubledAlphabet& da, const Word& w);

bool is_reduced(const DoubledAlphabet& da, const Word& w);

/// Reverse the word and invert each letter.
Word inverse_word(const DoubledAlphabet& da, const Word& w);

/// Free-group homomorphism between doubled alphabets. Inverse-letter images
/// are always derived from the positive ones, never stored.
class FreeGroupHom {
 public:
  FreeGroupHom(DoubledAlphabet source, DoubledAlphabet target, std::vector<Word> positive_images);

  static FreeGroupHom identity(const DoubledAlphabet& da);

  const DoubledAlphabet& source() const { return source_; }
  const DoubledAlphabet& target() const { return target_; }
  const Word& positive_image(int positive_letter) const { return positive_images_.at(positive_letter); }
  Word image_of(int letter) const;
  int sup_norm() const { return sup_norm_; }  // ||phi||, over positive letters

 private:
  DoubledAlphabet source_;
  DoubledAlphabet target_;
  std::vector<Word> positive_images_;
  int sup_norm_ = 0;
};

/// free_reduce of the concatenated letter images; input must be reduced.
Word apply_hom(const FreeGroupHom& phi, const Word& w);

/// psi(phi(a)) = a and phi(psi(b)) = b on all basis letters.
bool compose_check_inverse(const FreeGroupHom& phi, const FreeGroupHom& psi);

/// Empirical cancellation bound: max letters cancelled in phi(u)phi(v) over
/// reduced u, v up to length L with uv reduced as written, with the maxima
/// sequence so the stabilization is visible.
struct CancellationEstimate {
  int bound = 0;
  std::vector<int> maxima_by_length;  // entry l-1: max over |u|,|v| <= l

  bool stabilized(int increments = 3) const;
};

CancellationEstimate cancellation_bound_estimate(const FreeGroupHom& phi, int max_length);

/// L(Y_pm) in B_pm^n via chopped images: length-n factors of
/// chop(phi_ba(u), c_ba) over u in L(X_pm) up to the proof window
/// m = ||phi_ba|| ||phi_ab|| (n + 2h), h = c_ab ||phi_ba|| + c_ba.
/// SFT-presentable X_pm run on a bounded-cancellation graph walk; other
/// presentations are enumerated directly (feasible for low complexity).
/// window_override replaces m (diagnostics and cross-engine tests).
WordSet basis_change_language(const Subshift& x_pm, const FreeGroupHom& phi_ba,
                              const FreeGroupHom& phi_ab, int c_ba, int c_ab, int n,
                              int window_override = 0);

struct BasisChangeFailure {
  int n = 0;
  std::string inequality;
  Nat lhs;
  Nat rhs;
};

struct BasisChangeReport {
  bool pass = false;
  Nat upper_c;   // C = 4 c_ab ||phi_ba|| + 1
  int upper_d = 0;   // D = ||phi_ba|| ||phi_ab|| + 1
  Nat lower_c;   // C' of the reverse direction
  int lower_d = 0;
  int window = 0;
  std::vector<int> skipped;  // n with floor(n / D') < 1
  std::vector<BasisChangeFailure> failures;
  std::string table_x_hash;
  std::string table_y_hash;
};

/// Both inequalities of the two-basis comparison with the proof constants,
/// on exact tables.
BasisChangeReport verify_basis_change_inequality(const ComplexityTable& table_x,
                                                 const ComplexityTable& table_y,
                                                 int sup_ba, int sup_ab, int c_ba, int c_ab,
                                                 int window);

BasisChangeReport verify_basis_change_inequality(const Subshift& x_pm, const Subshift& y_pm,
                                                 const FreeGroupHom& phi_ba,
                                                 const FreeGroupHom& phi_ab, int c_ba, int c_ab,
                                                 int window);

}  // namespace symdyn
