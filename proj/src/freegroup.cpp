#include "symdyn/freegroup.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <tuple>

#include "parallel_util.hpp"
#include "symdyn/serialization.hpp"

namespace symdyn {
namespace {

bool has_inverse_suffix(const std::string& name) {
  return name.size() > 3 && name.compare(name.size() - 3, 3, "^-1") == 0;
}

}  // namespace

DoubledAlphabet::DoubledAlphabet(AlphabetPtr positive) : positive_(std::move(positive)) {
  std::vector<std::string> names = positive_->symbols();
  for (const std::string& name : names) {
    if (has_inverse_suffix(name)) {
      throw std::invalid_argument("positive alphabet must not contain ^-1 symbols: " + name);
    }
  }
  for (int i = 0; i < positive_->size(); ++i) {
    names.push_back(positive_->symbol(i) + "^-1");
  }
  full_ = make_alphabet(std::move(names));
}

std::optional<DoubledAlphabet> DoubledAlphabet::from_full(const AlphabetPtr& full) {
  const int n = full->size();
  if (n % 2 != 0) {
    return std::nullopt;
  }
  const int k = n / 2;
  for (int i = 0; i < k; ++i) {
    if (has_inverse_suffix(full->symbol(i)) || full->symbol(k + i) != full->symbol(i) + "^-1") {
      return std::nullopt;
    }
  }
  DoubledAlphabet da;
  da.positive_ = make_alphabet(
      std::vector<std::string>(full->symbols().begin(), full->symbols().begin() + k));
  da.full_ = full;
  return da;
}

int DoubledAlphabet::inverse(int letter) const {
  const int k = positive_->size();
  return letter < k ? letter + k : letter - k;
}

Word free_reduce(const DoubledAlphabet& da, const Word& w) {
  require_alphabet(da.full(), w, "free_reduce");
  std::vector<int32_t> stack;
  stack.reserve(w.size());
  for (int i = 0; i < w.size(); ++i) {
    if (!stack.empty() && stack.back() == da.inverse(w[i])) {
      stack.pop_back();
    } else {
      stack.push_back(w[i]);
    }
  }
  return Word(da.full(), std::move(stack));
}

bool is_reduced(const DoubledAlphabet& da, const Word& w) {
  for (int i = 0; i + 1 < w.size(); ++i) {
    if (w[i + 1] == da.inverse(w[i])) {
      return false;
    }
  }
  return true;
}

Word inverse_word(const DoubledAlphabet& da, const Word& w) {
  require_alphabet(da.full(), w, "inverse_word");
  std::vector<int32_t> letters;
  letters.reserve(w.size());
  for (int i = w.size() - 1; i >= 0; --i) {
    letters.push_back(da.inverse(w[i]));
  }
  return Word(da.full(), std::move(letters));
}

FreeGroupHom::FreeGroupHom(DoubledAlphabet source, DoubledAlphabet target,
                           std::vector<Word> positive_images)
    : source_(std::move(source)), target_(std::move(target)),
      positive_images_(std::move(positive_images)) {
  if (static_cast<int>(positive_images_.size()) != source_.positive_count()) {
    throw std::invalid_argument("hom needs exactly one image per positive letter");
  }
  for (const Word& image : positive_images_) {
    require_alphabet(target_.full(), image, "hom image");
    if (image.is_empty()) {
      throw std::invalid_argument("hom images must be non-empty");
    }
    if (!is_reduced(target_, image)) {
      throw std::invalid_argument("hom images must be reduced words");
    }
    sup_norm_ = std::max(sup_norm_, image.size());
  }
}

FreeGroupHom FreeGroupHom::identity(const DoubledAlphabet& da) {
  std::vector<Word> images;
  for (int i = 0; i < da.positive_count(); ++i) {
    images.push_back(Word(da.full(), {i}));
  }
  return FreeGroupHom(da, da, std::move(images));
}

Word FreeGroupHom::image_of(int letter) const {
  if (source_.is_positive(letter)) {
    return positive_images_.at(letter);
  }
  return inverse_word(target_, positive_images_.at(source_.inverse(letter)));
}

Word apply_hom(const FreeGroupHom& phi, const Word& w) {
  require_alphabet(phi.source().full(), w, "apply_hom");
  if (!is_reduced(phi.source(), w)) {
    throw std::invalid_argument("apply_hom expects a reduced word");
  }
  std::vector<int32_t> letters;
  letters.reserve(static_cast<size_t>(w.size()) * phi.sup_norm());
  for (int i = 0; i < w.size(); ++i) {
    const Word image = phi.image_of(w[i]);
    letters.insert(letters.end(), image.letters().begin(), image.letters().end());
  }
  return free_reduce(phi.target(), Word(phi.target().full(), std::move(letters)));
}

bool compose_check_inverse(const FreeGroupHom& phi, const FreeGroupHom& psi) {
  if (!same_alphabet(phi.target().full(), psi.source().full()) ||
      !same_alphabet(psi.target().full(), phi.source().full())) {
    return false;
  }
  for (int a = 0; a < phi.source().positive_count(); ++a) {
    const Word round_trip = apply_hom(psi, phi.positive_image(a));
    if (round_trip.size() != 1 || round_trip[0] != a) {
      return false;
    }
  }
  for (int b = 0; b < psi.source().positive_count(); ++b) {
    const Word round_trip = apply_hom(phi, psi.positive_image(b));
    if (round_trip.size() != 1 || round_trip[0] != b) {
      return false;
    }
  }
  return true;
}

bool CancellationEstimate::stabilized(int increments) const {
  const int len = static_cast<int>(maxima_by_length.size());
  if (len < increments + 1) {
    return false;
  }
  for (int i = len - increments; i < len; ++i) {
    if (maxima_by_length[i] != maxima_by_length[len - increments - 1]) {
      return false;
    }
  }
  return true;
}

namespace {

void enumerate_reduced(const DoubledAlphabet& da, int max_length, std::vector<Word>& out) {
  const int full = da.full()->size();
  std::vector<size_t> level_start{0};
  for (int32_t a = 0; a < full; ++a) {
    out.push_back(Word(da.full(), {a}));
  }
  for (int len = 2; len <= max_length; ++len) {
    level_start.push_back(out.size());
    const size_t from = level_start[len - 2];
    const size_t to = level_start[len - 1];
    for (size_t i = from; i < to; ++i) {
      for (int32_t a = 0; a < full; ++a) {
        if (a == da.inverse(out[i][out[i].size() - 1])) {
          continue;
        }
        std::vector<int32_t> letters = out[i].letters();
        letters.push_back(a);
        out.push_back(Word(da.full(), std::move(letters)));
      }
    }
  }
}

int junction_cancellation(const DoubledAlphabet& target, const Word& left, const Word& right) {
  int k = 0;
  while (k < left.size() && k < right.size() &&
         left[left.size() - 1 - k] == target.inverse(right[k])) {
    ++k;
  }
  return k;
}

}  // namespace

CancellationEstimate cancellation_bound_estimate(const FreeGroupHom& phi, int max_length) {
  if (max_length < 1) {
    throw std::invalid_argument("cancellation estimate requires L >= 1");
  }
  std::vector<Word> words;
  enumerate_reduced(phi.source(), max_length, words);
  std::vector<Word> images;
  images.reserve(words.size());
  for (const Word& w : words) {
    images.push_back(apply_hom(phi, w));
  }

  std::vector<std::vector<int>> best(detail::max_threads(),
                                     std::vector<int>(max_length + 1, 0));
  const long long count = static_cast<long long>(words.size());
  // Pair enumeration sharded by the first word.
#pragma omp parallel for schedule(dynamic, 16)
  for (long long i = 0; i < count; ++i) {
    std::vector<int>& mine = best[detail::thread_id()];
    const Word& u = words[i];
    const int32_t u_last = u[u.size() - 1];
    for (long long j = 0; j < count; ++j) {
      const Word& v = words[j];
      if (v[0] == phi.source().inverse(u_last)) {
        continue;  // uv must be reduced as written
      }
      const int cancelled = junction_cancellation(phi.target(), images[i], images[j]);
      int& slot = mine[std::max(u.size(), v.size())];
      slot = std::max(slot, cancelled);
    }
  }

  CancellationEstimate estimate;
  estimate.maxima_by_length.resize(max_length);
  int running = 0;
  for (int len = 1; len <= max_length; ++len) {
    for (const auto& mine : best) {
      running = std::max(running, mine[len]);
    }
    estimate.maxima_by_length[len - 1] = running;
  }
  estimate.bound = running;
  return estimate;
}

namespace {

// Bounded-cancellation walk over the recurrent block graph of an
// SFT-presentable X_pm. The state keeps the follower node, the last T
// letters of the reduced image, and the image length (exact until it is
// safely past the left chop margin). Letters at distance >= C from the
// running end of the reduced image are permanent for every reduced
// extension, so windows inside the chop region can be emitted on first
// sight and deduplicated by state.
class BasisChangeWalk {
 public:
  BasisChangeWalk(const BlockGraph& bg, const FreeGroupHom& phi, int c_ba, int n, int m)
      : bg_(bg), target_(phi.target()), c_(c_ba), n_(n), m_(m),
        depth_cap_(n + 2 * c_ba + phi.sup_norm() + 2),
        big_len_(depth_cap_ + 3 * c_ba + 1) {
    const int letters = phi.source().full()->size();
    images_.reserve(letters);
    for (int a = 0; a < letters; ++a) {
      images_.push_back(phi.image_of(a));
    }
  }

  WordSet run() {
    WordSet out;
    if (bg_.nodes.empty()) {
      return out;
    }
    std::vector<State> frontier;
    for (int node = 0; node < static_cast<int>(bg_.nodes.size()); ++node) {
      State state{node, 0, {}};
      for (int i = 0; i < bg_.nodes[node].size(); ++i) {
        advance(state, bg_.nodes[node][i]);
      }
      visit(state, out, frontier);
    }
    for (int length = bg_.block_len; length < m_ && !frontier.empty(); ++length) {
      std::vector<State> next;
      for (const State& state : frontier) {
        for (const auto& [letter, to] : bg_.edges[state.node]) {
          State succ = state;
          succ.node = to;
          advance(succ, letter);
          visit(succ, out, next);
        }
      }
      frontier.swap(next);
    }
    return out;
  }

 private:
  struct State {
    int node = 0;
    int image_len = 0;  // capped at big_len_
    std::vector<int32_t> buffer;
  };

  void advance(State& state, int32_t letter) {
    const Word& image = images_[letter];
    int cancelled = 0;
    while (!state.buffer.empty() && cancelled < image.size() &&
           state.buffer.back() == target_.inverse(image[cancelled])) {
      state.buffer.pop_back();
      ++cancelled;
    }
    for (int i = cancelled; i < image.size(); ++i) {
      state.buffer.push_back(image[i]);
    }
    if (state.image_len < big_len_) {
      state.image_len = std::min(state.image_len + image.size() - 2 * cancelled, big_len_);
    }
    if (static_cast<int>(state.buffer.size()) > depth_cap_) {
      state.buffer.erase(state.buffer.begin(),
                         state.buffer.end() - depth_cap_);
    }
  }

  void visit(const State& state, WordSet& out, std::vector<State>& frontier) {
    auto key = std::make_tuple(state.node, state.image_len, state.buffer);
    if (!seen_.insert(std::move(key)).second) {
      return;
    }
    emit(state, out);
    frontier.push_back(state);
  }

  void emit(const State& state, WordSet& out) {
    const int b = static_cast<int>(state.buffer.size());
    for (int start = 0; start + n_ <= b; ++start) {
      if (start + n_ - 1 > b - 1 - c_) {
        break;  // within the right chop margin, not yet permanent
      }
      // Absolute position of the window start must clear the left chop.
      if (state.image_len < big_len_ && state.image_len - b + start < c_) {
        continue;
      }
      out.insert(Word(target_.full(), std::vector<int32_t>(state.buffer.begin() + start,
                                                           state.buffer.begin() + start + n_)));
    }
  }

  const BlockGraph& bg_;
  const DoubledAlphabet& target_;
  const int c_;
  const int n_;
  const int m_;
  const int depth_cap_;
  const int big_len_;
  std::vector<Word> images_;
  std::set<std::tuple<int, int, std::vector<int32_t>>> seen_;
};

WordSet basis_change_enumerate(const Subshift& x_pm, const FreeGroupHom& phi_ba, int c_ba,
                               int n, int m) {
  WordSet out;
  for (int length = 1; length <= m; ++length) {
    for (const Word& u : language(x_pm, length)) {
      const Word image = chop(apply_hom(phi_ba, u), c_ba);
      for (int pos = 0; pos + n <= image.size(); ++pos) {
        out.insert(image.subword(pos, n));
      }
    }
  }
  return out;
}

}  // namespace

WordSet basis_change_language(const Subshift& x_pm, const FreeGroupHom& phi_ba,
                              const FreeGroupHom& phi_ab, int c_ba, int c_ab, int n,
                              int window_override) {
  if (n < 1) {
    throw std::invalid_argument("window n must be >= 1");
  }
  if (c_ba < 0 || c_ab < 0) {
    throw std::invalid_argument("cancellation bounds must be >= 0");
  }
  if (!compose_check_inverse(phi_ba, phi_ab)) {
    throw std::invalid_argument("basis change requires mutually inverse homs");
  }
  if (!same_alphabet(x_pm.alphabet(), phi_ba.source().full())) {
    throw std::invalid_argument("subshift alphabet does not match the hom source");
  }
  // Reduction is a 2-local property, so the length-2 language decides it.
  for (const Word& w : language(x_pm, 2)) {
    if (!is_reduced(phi_ba.source(), w)) {
      throw std::invalid_argument("basis change requires a subshift of reduced words");
    }
  }
  const int h = c_ab * phi_ba.sup_norm() + c_ba;
  int m = phi_ba.sup_norm() * phi_ab.sup_norm() * (n + 2 * h);
  if (window_override > 0) {
    m = window_override;
  }
  if (phi_ba.sup_norm() * m < n + 2 * c_ba) {
    throw std::invalid_argument("window too small: n is below the cancellation-bound margin");
  }

  const auto form = as_sft_form(x_pm);
  if (form) {
    const BlockGraph bg = build_block_graph(*form);
    WordSet out = BasisChangeWalk(bg, phi_ba, c_ba, n, m).run();
    // Words shorter than one block are not walk paths.
    for (int length = 1; length <= std::min(bg.block_len, m); ++length) {
      for (const Word& u : language(x_pm, length)) {
        const Word image = chop(apply_hom(phi_ba, u), c_ba);
        for (int pos = 0; pos + n <= image.size(); ++pos) {
          out.insert(image.subword(pos, n));
        }
      }
    }
    return out;
  }
  return basis_change_enumerate(x_pm, phi_ba, c_ba, n, m);
}

BasisChangeReport verify_basis_change_inequality(const ComplexityTable& table_x,
                                                 const ComplexityTable& table_y,
                                                 int sup_ba, int sup_ab, int c_ba, int c_ab,
                                                 int window) {
  BasisChangeReport report;
  report.window = window;
  report.upper_c = Nat(4) * c_ab * sup_ba + 1;
  report.upper_d = sup_ba * sup_ab + 1;
  report.lower_c = Nat(4) * c_ba * sup_ab + 1;
  report.lower_d = sup_ab * sup_ba + 1;
  report.table_x_hash = table_hash(table_x);
  report.table_y_hash = table_hash(table_y);

  const auto entry = [](const ComplexityTable& table, int n) -> const Nat& {
    auto it = table.entries.find(n);
    if (it == table.entries.end()) {
      throw std::invalid_argument("complexity table window too small at n=" + std::to_string(n));
    }
    return it->second;
  };

  for (int n = 1; n <= window; ++n) {
    const Nat& py = entry(table_y, n);
    const Nat upper_rhs = report.upper_c * entry(table_x, report.upper_d * n);
    if (py > upper_rhs) {
      report.failures.push_back({n, "p_Y(n) <= C * p_X(D*n)", py, upper_rhs});
    }
    const int dm = n / report.lower_d;
    if (dm < 1) {
      report.skipped.push_back(n);
    } else {
      const Nat lower_lhs = report.lower_c * py;
      const Nat& lower_rhs = entry(table_x, dm);
      if (lower_lhs < lower_rhs) {
        report.failures.push_back({n, "C' * p_Y(n) >= p_X(floor(n/D'))", lower_lhs, lower_rhs});
      }
    }
  }
  report.pass = report.failures.empty();
  return report;
}

BasisChangeReport verify_basis_change_inequality(const Subshift& x_pm, const Subshift& y_pm,
                                                 const FreeGroupHom& phi_ba,
                                                 const FreeGroupHom& phi_ab, int c_ba, int c_ab,
                                                 int window) {
  const int upper_d = phi_ba.sup_norm() * phi_ab.sup_norm() + 1;
  const ComplexityTable table_x = complexity_table(x_pm, upper_d * window);
  const ComplexityTable table_y = complexity_table(y_pm, window);
  return verify_basis_change_inequality(table_x, table_y, phi_ba.sup_norm(), phi_ab.sup_norm(),
                                        c_ba, c_ab, window);
}

}  // namespace symdyn
