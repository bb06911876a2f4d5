#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "symdyn/morphism.hpp"
#include "symdyn/nat.hpp"
#include "symdyn/words.hpp"

namespace symdyn {

class Subshift;
using SubshiftPtr = std::shared_ptr<const Subshift>;

/// Finite presentation of a subshift from which the exact factor language at
/// every window length is computable.
class Subshift {
 public:
  enum class Kind { FullShift, Sft, Substitution, Image, Double };

  static SubshiftPtr full_shift(AlphabetPtr alphabet);
  static SubshiftPtr sft(AlphabetPtr alphabet, std::vector<Word> forbidden);
  static SubshiftPtr substitution(Morphism endomorphism);  // requires primitivity
  static SubshiftPtr image(SubshiftPtr inner, Morphism morphism);
  static SubshiftPtr doubled(SubshiftPtr inner);

  Kind kind() const { return kind_; }
  const AlphabetPtr& alphabet() const { return alphabet_; }

  const std::vector<Word>& forbidden() const;        // Sft
  const Morphism& endomorphism() const;              // Substitution
  const SubshiftPtr& inner() const;                  // Image, Double
  const Morphism& morphism() const;                  // Image
  int positive_count() const;                        // Double

  /// Canonical JSON description; used as the presentation id in tables.
  std::string describe() const;

 private:
  Subshift() = default;

  Kind kind_ = Kind::FullShift;
  AlphabetPtr alphabet_;
  std::vector<Word> forbidden_;
  std::optional<Morphism> morphism_;
  SubshiftPtr inner_;
  int positive_count_ = 0;
};

/// Exactly L(X) intersected with A^n. Throws on n = 0 (complexity starts at
/// n = 1) and when the enumeration would exceed the feasibility cap.
WordSet language(const Subshift& shift, int n);

/// |language(X, n)|, computed by exact counting where a closed form or a
/// transfer-matrix recursion exists (full shifts, doubles, SFTs) and by
/// enumeration otherwise.
Nat complexity(const Subshift& shift, int n);

struct ComplexityTable {
  std::string presentation;      // canonical description of the source
  std::map<int, Nat> entries;    // window length -> p(n)
};

ComplexityTable complexity_table(const Subshift& shift, int window);

/// Throws if the table violates monotonicity, submultiplicativity or p >= 1.
void validate_table(const ComplexityTable& table);

struct PrimitivityCheck {
  bool primitive = false;
  int witness_power = 0;  // least k <= card(A)^2 with M^k entrywise positive
};

PrimitivityCheck check_primitive(const Morphism& endomorphism);

/// L(sigma(X)) intersected with B^n, collected from sigma-images of inner
/// words of window ceil(n / <sigma>) + 1 (+ window_slack, used by the
/// stability check).
WordSet image_language(const Subshift& shift, const Morphism& sigma, int n,
                       int window_slack = 0);

/// SFT normal form (full shifts, SFTs and their doubles have one); the
/// basis-change walker and the SFT language machinery run on it.
struct SftForm {
  AlphabetPtr alphabet;
  std::vector<Word> forbidden;
};

std::optional<SftForm> as_sft_form(const Subshift& shift);

/// De-Bruijn-style graph of allowed (K-1)-blocks restricted to its recurrent
/// part (nodes with an infinite past and future).
struct BlockGraph {
  AlphabetPtr alphabet;
  int block_len = 1;                                   // K-1
  std::vector<Word> nodes;                             // recurrent blocks
  std::vector<std::vector<std::pair<int32_t, int>>> edges;  // (letter, node)
};

BlockGraph build_block_graph(const SftForm& form);

}  // namespace symdyn
