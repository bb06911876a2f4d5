#include "symdyn/subshift.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "parallel_util.hpp"

namespace symdyn {
namespace {

constexpr long long kEnumerationCap = 8'000'000;
constexpr int kIterateLengthCap = 1 << 22;

void append_all_words(const AlphabetPtr& alphabet, int n, std::vector<int32_t>& prefix,
                      WordSet& out) {
  if (static_cast<int>(prefix.size()) == n) {
    out.insert(Word(alphabet, prefix));
    return;
  }
  for (int32_t a = 0; a < alphabet->size(); ++a) {
    prefix.push_back(a);
    append_all_words(alphabet, n, prefix, out);
    prefix.pop_back();
  }
}

WordSet all_words(const AlphabetPtr& alphabet, int n) {
  WordSet out;
  std::vector<int32_t> prefix;
  prefix.reserve(n);
  append_all_words(alphabet, n, prefix, out);
  return out;
}

bool ends_with_forbidden(const std::vector<int32_t>& word, const std::vector<Word>& forbidden) {
  for (const Word& f : forbidden) {
    const int fl = f.size();
    if (fl > static_cast<int>(word.size())) {
      continue;
    }
    bool match = true;
    for (int i = 0; i < fl; ++i) {
      if (word[word.size() - fl + i] != f[i]) {
        match = false;
        break;
      }
    }
    if (match) {
      return true;
    }
  }
  return false;
}

void collect_avoiding(const AlphabetPtr& alphabet, const std::vector<Word>& forbidden, int n,
                      std::vector<int32_t>& prefix, std::vector<Word>& out) {
  if (static_cast<int>(prefix.size()) == n) {
    out.push_back(Word(alphabet, prefix));
    return;
  }
  for (int32_t a = 0; a < alphabet->size(); ++a) {
    prefix.push_back(a);
    if (!ends_with_forbidden(prefix, forbidden)) {
      collect_avoiding(alphabet, forbidden, n, prefix, out);
    }
    prefix.pop_back();
  }
}

// Nodes on directed cycles, via path-based strongly connected components
// (iterative Tarjan); the cycle nodes are those in an SCC of size >= 2 or
// with a self-loop.
std::vector<bool> cycle_nodes(const std::vector<std::vector<int>>& succ) {
  const int n = static_cast<int>(succ.size());
  std::vector<int> index(n, -1), low(n, 0), comp(n, -1);
  std::vector<bool> on_stack(n, false);
  std::vector<int> stack;
  int next_index = 0, next_comp = 0;

  struct Frame {
    int v;
    size_t edge;
  };
  for (int root = 0; root < n; ++root) {
    if (index[root] != -1) {
      continue;
    }
    std::vector<Frame> frames{{root, 0}};
    index[root] = low[root] = next_index++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!frames.empty()) {
      Frame& f = frames.back();
      if (f.edge < succ[f.v].size()) {
        const int w = succ[f.v][f.edge++];
        if (index[w] == -1) {
          index[w] = low[w] = next_index++;
          stack.push_back(w);
          on_stack[w] = true;
          frames.push_back({w, 0});
        } else if (on_stack[w]) {
          low[f.v] = std::min(low[f.v], index[w]);
        }
      } else {
        const int v = f.v;
        frames.pop_back();
        if (!frames.empty()) {
          low[frames.back().v] = std::min(low[frames.back().v], low[v]);
        }
        if (low[v] == index[v]) {
          while (true) {
            const int w = stack.back();
            stack.pop_back();
            on_stack[w] = false;
            comp[w] = next_comp;
            if (w == v) {
              break;
            }
          }
          ++next_comp;
        }
      }
    }
  }

  std::vector<int> comp_size(next_comp, 0);
  for (int v = 0; v < n; ++v) {
    ++comp_size[comp[v]];
  }
  std::vector<bool> cyclic(n, false);
  for (int v = 0; v < n; ++v) {
    if (comp_size[comp[v]] >= 2) {
      cyclic[v] = true;
      continue;
    }
    for (int w : succ[v]) {
      if (w == v) {
        cyclic[v] = true;
        break;
      }
    }
  }
  return cyclic;
}

std::vector<bool> reachable_from(const std::vector<std::vector<int>>& succ,
                                 const std::vector<bool>& seeds) {
  std::vector<bool> seen = seeds;
  std::vector<int> queue;
  for (int v = 0; v < static_cast<int>(succ.size()); ++v) {
    if (seen[v]) {
      queue.push_back(v);
    }
  }
  while (!queue.empty()) {
    const int v = queue.back();
    queue.pop_back();
    for (int w : succ[v]) {
      if (!seen[w]) {
        seen[w] = true;
        queue.push_back(w);
      }
    }
  }
  return seen;
}

Nat count_paths(const BlockGraph& bg, int steps) {
  std::vector<Nat> counts(bg.nodes.size(), 1);
  for (int s = 0; s < steps; ++s) {
    std::vector<Nat> next(bg.nodes.size(), 0);
    for (size_t v = 0; v < bg.nodes.size(); ++v) {
      for (const auto& [letter, to] : bg.edges[v]) {
        next[v] += counts[to];
      }
    }
    counts.swap(next);
  }
  Nat total = 0;
  for (const Nat& c : counts) {
    total += c;
  }
  return total;
}

void enumerate_paths(const BlockGraph& bg, int start, int steps, std::vector<int32_t>& word,
                     WordSet& out) {
  struct Frame {
    int node;
    size_t edge;
  };
  std::vector<Frame> frames{{start, 0}};
  while (!frames.empty()) {
    Frame& f = frames.back();
    if (static_cast<int>(frames.size()) - 1 == steps) {
      out.insert(Word(bg.alphabet, word));
      frames.pop_back();
      if (!word.empty() && !frames.empty()) {
        word.pop_back();
      }
      continue;
    }
    if (f.edge < bg.edges[f.node].size()) {
      const auto& [letter, to] = bg.edges[f.node][f.edge++];
      word.push_back(letter);
      frames.push_back({to, 0});
    } else {
      frames.pop_back();
      if (!frames.empty() && !word.empty()) {
        word.pop_back();
      }
    }
  }
}

WordSet sft_language(const BlockGraph& bg, int n) {
  WordSet out;
  if (bg.nodes.empty()) {
    return out;
  }
  if (n < bg.block_len) {
    for (const Word& node : bg.nodes) {
      WordSet factors = factors_of_word(node, n);
      out.insert(factors.begin(), factors.end());
    }
    return out;
  }
  const int steps = n - bg.block_len;
  if (count_paths(bg, steps) > kEnumerationCap) {
    throw std::length_error("language enumeration would exceed the feasibility cap");
  }
  for (int start = 0; start < static_cast<int>(bg.nodes.size()); ++start) {
    std::vector<int32_t> word = bg.nodes[start].letters();
    const size_t base = word.size();
    enumerate_paths(bg, start, steps, word, out);
    word.resize(base);
  }
  return out;
}

Nat sft_count(const BlockGraph& bg, int n) {
  if (bg.nodes.empty()) {
    return 0;
  }
  if (n < bg.block_len) {
    return Nat(sft_language(bg, n).size());
  }
  return count_paths(bg, n - bg.block_len);
}

WordSet substitution_language(const Morphism& endo, int n) {
  const PrimitivityCheck pc = check_primitive(endo);
  if (!pc.primitive) {
    throw std::invalid_argument("substitution is not primitive");
  }
  Word w(endo.source(), {0});
  WordSet prev;
  bool have_prev = false;
  int stable_transitions = 0;
  for (int iter = 0; iter < 96; ++iter) {
    if (w.size() > kIterateLengthCap) {
      throw std::length_error("substitution iterate exceeds the length cap");
    }
    std::vector<bool> seen(endo.source()->size(), false);
    for (int i = 0; i < w.size(); ++i) {
      seen[w[i]] = true;
    }
    const bool covers = std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
    if (covers && w.size() >= n) {
      WordSet cur = factors_of_word(w, n);
      if (have_prev && cur == prev) {
        // One stable step per primitivity witness power guards against a
        // transient coincidence of the length-n factor sets.
        if (++stable_transitions >= pc.witness_power) {
          return cur;
        }
      } else {
        stable_transitions = 0;
      }
      prev = std::move(cur);
      have_prev = true;
    }
    w = apply_morphism(endo, w);
  }
  throw std::runtime_error("substitution language did not stabilize");
}

}  // namespace

SubshiftPtr Subshift::full_shift(AlphabetPtr alphabet) {
  auto s = std::shared_ptr<Subshift>(new Subshift());
  s->kind_ = Kind::FullShift;
  s->alphabet_ = std::move(alphabet);
  return s;
}

SubshiftPtr Subshift::sft(AlphabetPtr alphabet, std::vector<Word> forbidden) {
  auto s = std::shared_ptr<Subshift>(new Subshift());
  s->kind_ = Kind::Sft;
  s->alphabet_ = std::move(alphabet);
  for (const Word& f : forbidden) {
    require_alphabet(s->alphabet_, f, "sft forbidden word");
    if (f.is_empty()) {
      throw std::invalid_argument("forbidden words must be non-empty");
    }
  }
  s->forbidden_ = std::move(forbidden);
  return s;
}

SubshiftPtr Subshift::substitution(Morphism endomorphism) {
  if (!endomorphism.is_endomorphism()) {
    throw std::invalid_argument("substitution requires equal source and target alphabets");
  }
  const PrimitivityCheck pc = check_primitive(endomorphism);
  if (!pc.primitive) {
    throw std::invalid_argument("substitution fails the primitivity check");
  }
  auto s = std::shared_ptr<Subshift>(new Subshift());
  s->kind_ = Kind::Substitution;
  s->alphabet_ = endomorphism.source();
  s->morphism_ = std::move(endomorphism);
  return s;
}

SubshiftPtr Subshift::image(SubshiftPtr inner, Morphism morphism) {
  if (!inner) {
    throw std::invalid_argument("image requires an inner presentation");
  }
  if (!same_alphabet(morphism.source(), inner->alphabet())) {
    throw std::invalid_argument("image morphism source must match the inner alphabet");
  }
  auto s = std::shared_ptr<Subshift>(new Subshift());
  s->kind_ = Kind::Image;
  s->alphabet_ = morphism.target();
  s->inner_ = std::move(inner);
  s->morphism_ = std::move(morphism);
  return s;
}

SubshiftPtr Subshift::doubled(SubshiftPtr inner) {
  if (!inner) {
    throw std::invalid_argument("double requires an inner presentation");
  }
  const AlphabetPtr& pos = inner->alphabet();
  std::vector<std::string> symbols = pos->symbols();
  for (const std::string& name : symbols) {
    if (name.size() > 3 && name.substr(name.size() - 3) == "^-1") {
      throw std::invalid_argument("double requires a positive alphabet (no ^-1 symbols)");
    }
  }
  for (int i = 0; i < pos->size(); ++i) {
    symbols.push_back(pos->symbol(i) + "^-1");
  }
  auto s = std::shared_ptr<Subshift>(new Subshift());
  s->kind_ = Kind::Double;
  s->alphabet_ = make_alphabet(std::move(symbols));
  s->inner_ = std::move(inner);
  s->positive_count_ = pos->size();
  return s;
}

const std::vector<Word>& Subshift::forbidden() const {
  if (kind_ != Kind::Sft) {
    throw std::logic_error("forbidden(): not an SFT presentation");
  }
  return forbidden_;
}

const Morphism& Subshift::endomorphism() const {
  if (kind_ != Kind::Substitution) {
    throw std::logic_error("endomorphism(): not a substitution presentation");
  }
  return *morphism_;
}

const SubshiftPtr& Subshift::inner() const {
  if (kind_ != Kind::Image && kind_ != Kind::Double) {
    throw std::logic_error("inner(): presentation has no inner subshift");
  }
  return inner_;
}

const Morphism& Subshift::morphism() const {
  if (kind_ != Kind::Image) {
    throw std::logic_error("morphism(): not an image presentation");
  }
  return *morphism_;
}

int Subshift::positive_count() const {
  if (kind_ != Kind::Double) {
    throw std::logic_error("positive_count(): not a double presentation");
  }
  return positive_count_;
}

namespace {

std::string quoted_list(const std::vector<std::string>& names) {
  std::ostringstream out;
  out << '[';
  for (size_t i = 0; i < names.size(); ++i) {
    if (i > 0) {
      out << ',';
    }
    out << '"' << names[i] << '"';
  }
  out << ']';
  return out.str();
}

std::string word_text(const Word& w) { return quoted_list(w.symbols()); }

std::string morphism_text(const Morphism& m) {
  std::ostringstream out;
  out << "{";
  for (int a = 0; a < m.source()->size(); ++a) {
    if (a > 0) {
      out << ',';
    }
    out << '"' << m.source()->symbol(a) << "\":" << word_text(m.image(a));
  }
  out << "}";
  return out.str();
}

}  // namespace

std::string Subshift::describe() const {
  std::ostringstream out;
  switch (kind_) {
    case Kind::FullShift:
      out << "{\"type\":\"full\",\"alphabet\":" << quoted_list(alphabet_->symbols()) << "}";
      break;
    case Kind::Sft: {
      out << "{\"type\":\"sft\",\"alphabet\":" << quoted_list(alphabet_->symbols())
          << ",\"forbidden\":[";
      for (size_t i = 0; i < forbidden_.size(); ++i) {
        if (i > 0) {
          out << ',';
        }
        out << word_text(forbidden_[i]);
      }
      out << "]}";
      break;
    }
    case Kind::Substitution:
      out << "{\"type\":\"substitution\",\"alphabet\":" << quoted_list(alphabet_->symbols())
          << ",\"images\":" << morphism_text(*morphism_) << "}";
      break;
    case Kind::Image:
      out << "{\"type\":\"image\",\"inner\":" << inner_->describe()
          << ",\"morphism\":" << morphism_text(*morphism_) << "}";
      break;
    case Kind::Double:
      out << "{\"type\":\"double\",\"inner\":" << inner_->describe() << "}";
      break;
  }
  return out.str();
}

std::optional<SftForm> as_sft_form(const Subshift& shift) {
  switch (shift.kind()) {
    case Subshift::Kind::FullShift:
      return SftForm{shift.alphabet(), {}};
    case Subshift::Kind::Sft:
      return SftForm{shift.alphabet(), shift.forbidden()};
    case Subshift::Kind::Double: {
      const auto inner_form = as_sft_form(*shift.inner());
      if (!inner_form) {
        return std::nullopt;
      }
      const AlphabetPtr& full = shift.alphabet();
      const int k = shift.positive_count();
      std::vector<Word> forbidden;
      for (const Word& f : inner_form->forbidden) {
        forbidden.push_back(Word(full, f.letters()));
        std::vector<int32_t> inverted;
        inverted.reserve(f.size());
        for (int i = f.size() - 1; i >= 0; --i) {
          inverted.push_back(f[i] + k);
        }
        forbidden.push_back(Word(full, std::move(inverted)));
      }
      // Mixed-sign pairs are forbidden: the double is sign-constant.
      for (int32_t x = 0; x < k; ++x) {
        for (int32_t y = 0; y < k; ++y) {
          forbidden.push_back(Word(full, {x, y + k}));
          forbidden.push_back(Word(full, {x + k, y}));
        }
      }
      return SftForm{full, std::move(forbidden)};
    }
    default:
      return std::nullopt;
  }
}

BlockGraph build_block_graph(const SftForm& form) {
  int max_len = 2;
  for (const Word& f : form.forbidden) {
    max_len = std::max(max_len, f.size());
  }
  const int block_len = max_len - 1;
  const int k = form.alphabet->size();
  double node_estimate = 1;
  for (int i = 0; i < block_len; ++i) {
    node_estimate *= k;
  }
  if (node_estimate > 300000) {
    throw std::length_error("SFT block graph too large");
  }

  std::vector<Word> candidates;
  {
    std::vector<int32_t> prefix;
    collect_avoiding(form.alphabet, form.forbidden, block_len, prefix, candidates);
  }
  std::map<Word, int> node_index;
  for (int i = 0; i < static_cast<int>(candidates.size()); ++i) {
    node_index.emplace(candidates[i], i);
  }

  std::vector<std::vector<std::pair<int32_t, int>>> edges(candidates.size());
  std::vector<std::vector<int>> succ(candidates.size());
  for (int v = 0; v < static_cast<int>(candidates.size()); ++v) {
    std::vector<int32_t> extended = candidates[v].letters();
    for (int32_t a = 0; a < k; ++a) {
      extended.push_back(a);
      if (!ends_with_forbidden(extended, form.forbidden)) {
        Word next(form.alphabet,
                  std::vector<int32_t>(extended.begin() + 1, extended.end()));
        auto it = node_index.find(next);
        if (it != node_index.end()) {
          edges[v].emplace_back(a, it->second);
          succ[v].push_back(it->second);
        }
      }
      extended.pop_back();
    }
  }

  // Recurrent part: nodes with an infinite past and an infinite future.
  const std::vector<bool> cyclic = cycle_nodes(succ);
  std::vector<std::vector<int>> pred(candidates.size());
  for (int v = 0; v < static_cast<int>(candidates.size()); ++v) {
    for (int w : succ[v]) {
      pred[w].push_back(v);
    }
  }
  const std::vector<bool> has_future = reachable_from(pred, cyclic);  // reaches a cycle
  const std::vector<bool> has_past = reachable_from(succ, cyclic);    // reached from a cycle

  std::vector<int> remap(candidates.size(), -1);
  BlockGraph bg;
  bg.alphabet = form.alphabet;
  bg.block_len = block_len;
  for (int v = 0; v < static_cast<int>(candidates.size()); ++v) {
    if (has_future[v] && has_past[v]) {
      remap[v] = static_cast<int>(bg.nodes.size());
      bg.nodes.push_back(candidates[v]);
    }
  }
  bg.edges.resize(bg.nodes.size());
  for (int v = 0; v < static_cast<int>(candidates.size()); ++v) {
    if (remap[v] < 0) {
      continue;
    }
    for (const auto& [letter, to] : edges[v]) {
      if (remap[to] >= 0) {
        bg.edges[remap[v]].emplace_back(letter, remap[to]);
      }
    }
  }
  return bg;
}

WordSet language(const Subshift& shift, int n) {
  if (n < 1) {
    throw std::invalid_argument("window n must be >= 1 (complexity starts at n = 1)");
  }
  switch (shift.kind()) {
    case Subshift::Kind::FullShift: {
      if (complexity(shift, n) > kEnumerationCap) {
        throw std::length_error("language enumeration would exceed the feasibility cap");
      }
      return all_words(shift.alphabet(), n);
    }
    case Subshift::Kind::Sft: {
      const BlockGraph bg = build_block_graph(SftForm{shift.alphabet(), shift.forbidden()});
      return sft_language(bg, n);
    }
    case Subshift::Kind::Substitution:
      return substitution_language(shift.endomorphism(), n);
    case Subshift::Kind::Image:
      return image_language(*shift.inner(), shift.morphism(), n);
    case Subshift::Kind::Double: {
      const WordSet inner_words = language(*shift.inner(), n);
      const AlphabetPtr& full = shift.alphabet();
      const int k = shift.positive_count();
      WordSet out;
      for (const Word& w : inner_words) {
        out.insert(Word(full, w.letters()));
        std::vector<int32_t> inverted;
        inverted.reserve(w.size());
        for (int i = w.size() - 1; i >= 0; --i) {
          inverted.push_back(w[i] + k);
        }
        out.insert(Word(full, std::move(inverted)));
      }
      return out;
    }
  }
  throw std::logic_error("unreachable presentation kind");
}

Nat complexity(const Subshift& shift, int n) {
  if (n < 1) {
    throw std::invalid_argument("window n must be >= 1 (complexity starts at n = 1)");
  }
  switch (shift.kind()) {
    case Subshift::Kind::FullShift:
      return nat_pow(Nat(shift.alphabet()->size()), static_cast<unsigned>(n));
    case Subshift::Kind::Sft: {
      const BlockGraph bg = build_block_graph(SftForm{shift.alphabet(), shift.forbidden()});
      return sft_count(bg, n);
    }
    case Subshift::Kind::Double:
      return 2 * complexity(*shift.inner(), n);
    case Subshift::Kind::Substitution:
    case Subshift::Kind::Image:
      return Nat(language(shift, n).size());
  }
  throw std::logic_error("unreachable presentation kind");
}

ComplexityTable complexity_table(const Subshift& shift, int window) {
  if (window < 1) {
    throw std::invalid_argument("table window must be >= 1");
  }
  ComplexityTable table;
  table.presentation = shift.describe();
  for (int n = 1; n <= window; ++n) {
    table.entries.emplace(n, complexity(shift, n));
  }
  validate_table(table);
  return table;
}

void validate_table(const ComplexityTable& table) {
  const Nat* prev = nullptr;
  for (const auto& [n, p] : table.entries) {
    if (p < 1) {
      throw std::runtime_error("complexity table violates p >= 1 at n=" + std::to_string(n));
    }
    if (prev && *prev > p) {
      throw std::runtime_error("complexity table not monotone at n=" + std::to_string(n));
    }
    prev = &p;
  }
  for (const auto& [m, pm] : table.entries) {
    for (const auto& [n, pn] : table.entries) {
      auto it = table.entries.find(m + n);
      if (it != table.entries.end() && it->second > pm * pn) {
        throw std::runtime_error("complexity table not submultiplicative at m=" +
                                 std::to_string(m) + ", n=" + std::to_string(n));
      }
    }
  }
}

PrimitivityCheck check_primitive(const Morphism& endomorphism) {
  if (!endomorphism.is_endomorphism()) {
    throw std::invalid_argument("primitivity check requires an endomorphism");
  }
  const int k = endomorphism.source()->size();
  std::vector<std::vector<Nat>> matrix(k, std::vector<Nat>(k, 0));
  for (int j = 0; j < k; ++j) {
    const Word& image = endomorphism.image(j);
    for (int i = 0; i < image.size(); ++i) {
      matrix[image[i]][j] += 1;
    }
  }
  std::vector<std::vector<Nat>> power = matrix;
  for (int e = 1; e <= k * k; ++e) {
    bool positive = true;
    for (int i = 0; i < k && positive; ++i) {
      for (int j = 0; j < k; ++j) {
        if (power[i][j] == 0) {
          positive = false;
          break;
        }
      }
    }
    if (positive) {
      return PrimitivityCheck{true, e};
    }
    std::vector<std::vector<Nat>> next(k, std::vector<Nat>(k, 0));
    for (int i = 0; i < k; ++i) {
      for (int l = 0; l < k; ++l) {
        if (power[i][l] == 0) {
          continue;
        }
        for (int j = 0; j < k; ++j) {
          next[i][j] += power[i][l] * matrix[l][j];
        }
      }
    }
    power.swap(next);
  }
  return PrimitivityCheck{false, 0};
}

WordSet image_language(const Subshift& shift, const Morphism& sigma, int n, int window_slack) {
  if (n < 1) {
    throw std::invalid_argument("window n must be >= 1 (complexity starts at n = 1)");
  }
  if (!same_alphabet(sigma.source(), shift.alphabet())) {
    throw std::invalid_argument("image_language: morphism source must match the subshift alphabet");
  }
  const int m = (n + sigma.inf_norm() - 1) / sigma.inf_norm() + 1 + window_slack;
  const WordSet inner = language(shift, m);
  const std::vector<Word> words(inner.begin(), inner.end());

  std::vector<WordSet> parts(detail::max_threads());
#pragma omp parallel for schedule(dynamic, 64)
  for (long long i = 0; i < static_cast<long long>(words.size()); ++i) {
    WordSet& local = parts[detail::thread_id()];
    const Word image = apply_morphism(sigma, words[i]);
    for (int pos = 0; pos + n <= image.size(); ++pos) {
      local.insert(image.subword(pos, n));
    }
  }
  WordSet out;
  for (WordSet& part : parts) {
    out.merge(part);
  }
  return out;
}

}  // namespace symdyn
