#pragma once

#include <optional>
#include <string>
#include <variant>

#include "symdyn/morphism.hpp"
#include "symdyn/subshift.hpp"

namespace symdyn {

/// Two equal-length words with equal letter-to-letter images that disagree at
/// a position far enough from both ends to defeat every chop r <= r_max.
struct RepetitionWitness {
  Word w1;
  Word w2;
  int position = 0;
};

/// Primitive v whose image is a proper power: sigma(v) = root^exponent.
struct PeriodicPowerWitness {
  Word v;
  Word root;
  int exponent = 0;
};

/// Distinct primitive cyclic orbits whose sigma-images generate one periodic
/// biinfinite word.
struct OrbitCollisionWitness {
  Word v1;
  Word v2;
};

using Witness = std::variant<RepetitionWitness, PeriodicPowerWitness, OrbitCollisionWitness>;

/// Verdicts are certified only up to the finite windows they record; the
/// names say so because the underlying property quantifies over all
/// biinfinite words.
struct RecognizabilityCertificate {
  enum class Verdict { CertifiedUpTo, CounterexampleFound, Inconclusive };

  Verdict verdict = Verdict::Inconclusive;
  int r = -1;          // least certified repetition bound, when applicable
  int window = 0;
  int r_max = 0;
  int period_max = 0;
  std::optional<Witness> witness;
};

/// Group L(Z) by alpha-image for every length <= window and find the least
/// r <= r_max after which all members of every group agree.
RecognizabilityCertificate find_repetition_bound(const Morphism& alpha, const Subshift& z,
                                                 int r_max, int window);

/// Audit periodic points of X up to period_max for shift-period preservation
/// and shift-orbit injectivity of sigma.
RecognizabilityCertificate periodic_point_audit(const Morphism& sigma, const Subshift& x,
                                                int period_max);

/// Canonical decomposition + repetition bound on the subdivided image +
/// periodic audit; a counterexample from either side dominates.
RecognizabilityCertificate check_recognizability(const Morphism& sigma, const SubshiftPtr& x,
                                                 int r_max, int window, int period_max);

/// Independent replay of a counterexample witness against the recognizability
/// definitions themselves (pasted-image windows, chop semantics). The inputs
/// are the ones the producing call saw: (alpha, Z) for repetition witnesses,
/// (sigma, X) for periodic ones.
bool replay_witness(const Witness& witness, const Morphism& morphism, const Subshift& shift,
                    int r_max);

}  // namespace symdyn
