#include "symdyn/recognizability.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "parallel_util.hpp"

namespace symdyn {
namespace {

int mod(int a, int m) { return ((a % m) + m) % m; }

// Letters of T^shift(sigma(x)) on positions lo..hi, for the periodic point
// x = T^phase(v^inf) with x_i = v[(i-1+phase) mod |v|]. The image is pasted
// around the origin: sigma(x_1) starts at position 1, sigma(x_0) ends at 0.
std::vector<int32_t> pasted_window(const Morphism& sigma, const Word& v, int phase, int shift,
                                   int lo, int hi) {
  const int period = v.size();
  const int want_lo = lo + shift;
  const int want_hi = hi + shift;
  const int span = std::max(std::abs(want_lo), std::abs(want_hi)) + 2;

  std::vector<int32_t> right;  // positions 1..|right|
  for (int i = 1; i <= span; ++i) {
    const Word& image = sigma.image(v[mod(i - 1 + phase, period)]);
    right.insert(right.end(), image.letters().begin(), image.letters().end());
    if (static_cast<int>(right.size()) >= want_hi) {
      break;
    }
  }
  std::vector<int32_t> left;  // positions -|left|+1..0
  for (int i = 0; i > -span; --i) {
    const Word& image = sigma.image(v[mod(i - 1 + phase, period)]);
    left.insert(left.begin(), image.letters().begin(), image.letters().end());
    if (static_cast<int>(left.size()) >= -want_lo + 1) {
      break;
    }
  }

  std::vector<int32_t> out;
  out.reserve(hi - lo + 1);
  for (int p = want_lo; p <= want_hi; ++p) {
    if (p >= 1) {
      out.push_back(right.at(p - 1));
    } else {
      out.push_back(left.at(static_cast<int>(left.size()) - 1 + p));
    }
  }
  return out;
}

bool same_cyclic_orbit(const Word& a, const Word& b) {
  if (a.size() != b.size()) {
    return false;
  }
  return least_rotation(a) == least_rotation(b);
}

// Definition-level violation: two lifts (x, k) != (x', l) of one biinfinite
// image word, with x, x' phases of v1^inf and v2^inf and the offsets within
// the first-letter images. Windows of length >= |sigma(v1)| + |sigma(v2)|
// decide equality of the pasted periodic images.
bool definition_violation(const Morphism& sigma, const Word& v1, const Word& v2) {
  const int window = 2 * (apply_morphism(sigma, v1).size() + apply_morphism(sigma, v2).size()) + 8;
  const bool same_orbit = same_cyclic_orbit(v1, v2);
  for (int t = 0; t < v1.size(); ++t) {
    const int k_max = sigma.image(v1[mod(t, v1.size())]).size() - 1;
    for (int s = 0; s < v2.size(); ++s) {
      const int l_max = sigma.image(v2[mod(s, v2.size())]).size() - 1;
      for (int k = 0; k <= k_max; ++k) {
        for (int l = 0; l <= l_max; ++l) {
          const bool distinct_points = !same_orbit || mod(t - s, v1.size()) != 0;
          if (!distinct_points && k == l) {
            continue;
          }
          if (pasted_window(sigma, v1, t, k, -window, window) ==
              pasted_window(sigma, v2, s, l, -window, window)) {
            return true;
          }
        }
      }
    }
  }
  return false;
}

// Does the periodic orbit of v lie in X, as far as a desk-scale window can
// tell: every factor of v^inf of length 3|v|+2 must lie in L(X).
bool periodic_point_in(const Subshift& x, const Word& v) {
  const int probe = 3 * v.size() + 2;
  std::vector<int32_t> tiled;
  while (static_cast<int>(tiled.size()) < probe + v.size()) {
    tiled.insert(tiled.end(), v.letters().begin(), v.letters().end());
  }
  const WordSet lang = language(x, probe);
  const Word tiling(v.alphabet(), std::move(tiled));
  for (int offset = 0; offset < v.size(); ++offset) {
    if (lang.find(tiling.subword(offset, probe)) == lang.end()) {
      return false;
    }
  }
  return true;
}

struct LengthScan {
  int needed_r = 0;
  std::optional<RepetitionWitness> witness;  // definitive for every r <= r_max
};

bool witness_less(const RepetitionWitness& a, const RepetitionWitness& b) {
  if (a.w1.size() != b.w1.size()) {
    return a.w1.size() < b.w1.size();
  }
  if (a.w1 != b.w1) {
    return a.w1 < b.w1;
  }
  if (a.w2 != b.w2) {
    return a.w2 < b.w2;
  }
  return a.position < b.position;
}

LengthScan scan_length(const Morphism& alpha, const Subshift& z, int length, int r_max) {
  LengthScan scan;
  const WordSet words = language(z, length);
  std::map<Word, std::vector<Word>> groups;
  for (const Word& w : words) {
    groups[apply_morphism(alpha, w)].push_back(w);
  }
  for (const auto& [image, members] : groups) {
    const Word& first = members.front();
    for (size_t i = 1; i < members.size(); ++i) {
      const Word& other = members[i];
      for (int d = 0; d < length; ++d) {
        if (first[d] == other[d]) {
          continue;
        }
        const int end_distance = std::min(d, length - 1 - d);
        scan.needed_r = std::max(scan.needed_r, end_distance + 1);
        if (end_distance > r_max) {
          RepetitionWitness cand{first, other, d};
          if (!scan.witness || witness_less(cand, *scan.witness)) {
            scan.witness = std::move(cand);
          }
        }
      }
    }
  }
  return scan;
}

}  // namespace

RecognizabilityCertificate find_repetition_bound(const Morphism& alpha, const Subshift& z,
                                                 int r_max, int window) {
  if (!alpha.letter_to_letter()) {
    throw std::invalid_argument("find_repetition_bound requires a letter-to-letter morphism");
  }
  if (!same_alphabet(alpha.source(), z.alphabet())) {
    throw std::invalid_argument("find_repetition_bound: subshift is not over the morphism source");
  }
  if (r_max < 0 || window < 1) {
    throw std::invalid_argument("find_repetition_bound requires r_max >= 0 and window >= 1");
  }

  std::vector<LengthScan> scans(window);
#pragma omp parallel for schedule(dynamic)
  for (int length = 1; length <= window; ++length) {
    scans[length - 1] = scan_length(alpha, z, length, r_max);
  }

  RecognizabilityCertificate cert;
  cert.r_max = r_max;
  cert.window = window;
  int needed_r = 0;
  std::optional<RepetitionWitness> witness;
  for (const LengthScan& scan : scans) {
    needed_r = std::max(needed_r, scan.needed_r);
    if (scan.witness && (!witness || witness_less(*scan.witness, *witness))) {
      witness = scan.witness;
    }
  }
  if (needed_r <= r_max) {
    cert.verdict = RecognizabilityCertificate::Verdict::CertifiedUpTo;
    cert.r = needed_r;  // the least r passing all lengths
  } else if (witness) {
    cert.verdict = RecognizabilityCertificate::Verdict::CounterexampleFound;
    cert.witness = Witness(*witness);
  } else {
    cert.verdict = RecognizabilityCertificate::Verdict::Inconclusive;
  }
  return cert;
}

RecognizabilityCertificate periodic_point_audit(const Morphism& sigma, const Subshift& x,
                                                int period_max) {
  if (!same_alphabet(sigma.source(), x.alphabet())) {
    throw std::invalid_argument("periodic_point_audit: subshift is not over the morphism source");
  }
  if (period_max < 1) {
    throw std::invalid_argument("periodic_point_audit requires period_max >= 1");
  }
  RecognizabilityCertificate cert;
  cert.period_max = period_max;
  cert.window = period_max;

  std::vector<Word> reps;
  for (int len = 1; len <= period_max; ++len) {
    for (const Word& v : language(x, len)) {
      if (!is_primitive(v) || least_rotation(v) != v) {
        continue;
      }
      if (periodic_point_in(x, v)) {
        reps.push_back(v);
      }
    }
  }

  // Shift-period preservation, tested on every cyclic conjugate.
  for (const Word& v : reps) {
    for (int s = 0; s < v.size(); ++s) {
      const Word rot = v.rotated(s);
      auto [root, exponent] = primitive_root(apply_morphism(sigma, rot));
      if (exponent >= 2) {
        cert.verdict = RecognizabilityCertificate::Verdict::CounterexampleFound;
        cert.witness = Witness(PeriodicPowerWitness{rot, root, exponent});
        return cert;
      }
    }
  }

  // Shift-orbit injectivity: distinct primitive orbits must keep distinct
  // image orbits.
  std::map<Word, Word> image_orbits;
  for (const Word& v : reps) {
    const Word canon = least_rotation(primitive_root(apply_morphism(sigma, v)).first);
    auto [it, inserted] = image_orbits.emplace(canon, v);
    if (!inserted) {
      cert.verdict = RecognizabilityCertificate::Verdict::CounterexampleFound;
      cert.witness = Witness(OrbitCollisionWitness{it->second, v});
      return cert;
    }
  }

  cert.verdict = RecognizabilityCertificate::Verdict::CertifiedUpTo;
  return cert;
}

RecognizabilityCertificate check_recognizability(const Morphism& sigma, const SubshiftPtr& x,
                                                 int r_max, int window, int period_max) {
  if (!x) {
    throw std::invalid_argument("check_recognizability requires a subshift");
  }
  if (window < 2 * r_max + 2) {
    throw std::invalid_argument("check_recognizability requires window >= 2*r_max + 2");
  }
  const CanonicalDecomposition dec = canonical_decomposition(sigma);
  const SubshiftPtr z = Subshift::image(x, dec.subdivision);

  RecognizabilityCertificate audit = periodic_point_audit(sigma, *x, period_max);
  if (audit.verdict == RecognizabilityCertificate::Verdict::CounterexampleFound) {
    audit.r_max = r_max;
    audit.window = window;
    return audit;
  }
  RecognizabilityCertificate rep = find_repetition_bound(dec.letter_map, *z, r_max, window);
  rep.period_max = period_max;
  if (rep.verdict == RecognizabilityCertificate::Verdict::CounterexampleFound) {
    return rep;
  }
  if (rep.verdict == RecognizabilityCertificate::Verdict::CertifiedUpTo &&
      audit.verdict == RecognizabilityCertificate::Verdict::CertifiedUpTo) {
    return rep;
  }
  RecognizabilityCertificate out;
  out.verdict = RecognizabilityCertificate::Verdict::Inconclusive;
  out.r_max = r_max;
  out.window = window;
  out.period_max = period_max;
  return out;
}

namespace {

bool replay_repetition(const RepetitionWitness& wit, const Morphism& alpha, const Subshift& z,
                       int r_max) {
  if (wit.w1.size() != wit.w2.size() || wit.w1 == wit.w2) {
    return false;
  }
  const int length = wit.w1.size();
  if (wit.position < 0 || wit.position >= length) {
    return false;
  }
  if (wit.w1[wit.position] == wit.w2[wit.position]) {
    return false;
  }
  // Distance > r_max from both ends defeats every chop r <= r_max.
  if (std::min(wit.position, length - 1 - wit.position) <= r_max) {
    return false;
  }
  for (int i = 0; i < length; ++i) {
    const Word& im1 = alpha.image(wit.w1[i]);
    const Word& im2 = alpha.image(wit.w2[i]);
    if (!(im1 == im2)) {
      return false;
    }
  }
  const WordSet lang = language(z, length);
  return lang.count(wit.w1) == 1 && lang.count(wit.w2) == 1;
}

bool replay_periodic_power(const PeriodicPowerWitness& wit, const Morphism& sigma,
                           const Subshift& x) {
  if (wit.exponent < 2 || wit.root.is_empty() || !is_primitive(wit.v)) {
    return false;
  }
  const Word image = apply_morphism(sigma, wit.v);
  if (image.size() != wit.root.size() * wit.exponent) {
    return false;
  }
  for (int i = 0; i < image.size(); ++i) {
    if (image[i] != wit.root[i % wit.root.size()]) {
      return false;
    }
  }
  if (!periodic_point_in(x, wit.v)) {
    return false;
  }
  return definition_violation(sigma, wit.v, wit.v);
}

bool replay_orbit_collision(const OrbitCollisionWitness& wit, const Morphism& sigma,
                            const Subshift& x) {
  if (!is_primitive(wit.v1) || !is_primitive(wit.v2) || same_cyclic_orbit(wit.v1, wit.v2)) {
    return false;
  }
  if (!periodic_point_in(x, wit.v1) || !periodic_point_in(x, wit.v2)) {
    return false;
  }
  return definition_violation(sigma, wit.v1, wit.v2);
}

}  // namespace

bool replay_witness(const Witness& witness, const Morphism& morphism, const Subshift& shift,
                    int r_max) {
  if (const auto* rep = std::get_if<RepetitionWitness>(&witness)) {
    return replay_repetition(*rep, morphism, shift, r_max);
  }
  if (const auto* pp = std::get_if<PeriodicPowerWitness>(&witness)) {
    return replay_periodic_power(*pp, morphism, shift);
  }
  return replay_orbit_collision(std::get<OrbitCollisionWitness>(witness), morphism, shift);
}

}  // namespace symdyn
