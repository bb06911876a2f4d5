// Compares the parallel kernels against the serial reference implementations
// on representative workloads. Build with OpenMP to see the parallel side.

#include <chrono>
#include <iostream>

#include "symdyn/analysis.hpp"
#include "symdyn/freegroup.hpp"
#include "symdyn/reference.hpp"

using namespace symdyn;

namespace {

template <typename F>
double time_ms(F&& fn) {
  const auto start = std::chrono::steady_clock::now();
  fn();
  const auto stop = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(stop - start).count();
}

}  // namespace

int main() {
  const AlphabetPtr ab = make_alphabet({"a1", "a2"});
  const SubshiftPtr full2 = Subshift::full_shift(ab);
  const Morphism split = letter_pair_split(ab);

  {
    const int n = 26;
    const int m = (n + split.inf_norm() - 1) / split.inf_norm() + 1;
    const WordSet inner = language(*full2, m);
    const std::vector<Word> words(inner.begin(), inner.end());

    WordSet serial, parallel;
    const double t_serial = time_ms([&] { serial = ref::image_language_serial(words, split, n); });
    const double t_parallel = time_ms([&] { parallel = image_language(*full2, split, n); });
    std::cout << "image_language n=" << n << "  serial " << t_serial << " ms, parallel "
              << t_parallel << " ms, sets " << (serial == parallel ? "agree" : "DISAGREE")
              << " (" << parallel.size() << " words)\n";
  }

  {
    DoubledAlphabet da(ab);
    const FreeGroupHom fib2(da, da,
                            {Word(da.full(), {1, 0}), Word(da.full(), {1, 0, 1})});
    CancellationEstimate serial, parallel;
    const double t_serial = time_ms([&] { serial = ref::cancellation_bound_serial(fib2, 6); });
    const double t_parallel = time_ms([&] { parallel = cancellation_bound_estimate(fib2, 6); });
    std::cout << "cancellation_bound L=6  serial " << t_serial << " ms, parallel " << t_parallel
              << " ms, bounds " << serial.bound << "/" << parallel.bound
              << (serial.bound == parallel.bound ? " agree" : " DISAGREE") << "\n";
  }

  return 0;
}
