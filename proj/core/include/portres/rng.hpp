#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace portres {

/// Deterministic random source. All variate transforms are implemented here
/// rather than through std:: distributions so that a (seed, call sequence)
/// pair yields the same stream on every run.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  /// Uniform on (0, 1), never returning 0 or 1.
  double uniform() {
    const std::uint64_t u = gen_();
    return (static_cast<double>(u >> 11) + 0.5) * (1.0 / 9007199254740992.0);
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  std::uint64_t next_u64() { return gen_(); }

  /// Uniform integer in [0, n).
  std::uint64_t below(std::uint64_t n);

  bool bernoulli(double p) { return uniform() < p; }

  /// Standard normal via the Marsaglia polar method (one value cached).
  double normal();
  double normal(double mean, double sd) { return mean + sd * normal(); }

  double exponential(double rate) ;

  /// Gamma(shape, rate) by Marsaglia–Tsang, with the shape<1 boost.
  double gamma(double shape, double rate);

  /// Poisson via inversion for small mean, PTRS-style rejection otherwise.
  std::uint64_t poisson(double mean);

  /// In-place Fisher–Yates shuffle.
  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      const std::size_t j = static_cast<std::size_t>(below(i));
      std::swap(v[i - 1], v[j]);
    }
  }

  /// Derives an independent stream, e.g. one per chain or per replication.
  static std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream);

 private:
  std::mt19937_64 gen_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace portres
