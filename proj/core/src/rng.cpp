#include "portres/rng.hpp"

#include <cmath>

namespace portres {

std::uint64_t Rng::below(std::uint64_t n) {
  // Rejection to remove modulo bias.
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  std::uint64_t u;
  do {
    u = gen_();
  } while (u >= limit);
  return u % n;
}

double Rng::normal() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  double u, v, s;
  do {
    u = 2.0 * uniform() - 1.0;
    v = 2.0 * uniform() - 1.0;
    s = u * u + v * v;
  } while (s >= 1.0 || s == 0.0);
  const double f = std::sqrt(-2.0 * std::log(s) / s);
  spare_ = v * f;
  has_spare_ = true;
  return u * f;
}

double Rng::exponential(double rate) { return -std::log(uniform()) / rate; }

double Rng::gamma(double shape, double rate) {
  if (shape < 1.0) {
    const double u = uniform();
    return gamma(shape + 1.0, rate) * std::pow(u, 1.0 / shape);
  }
  const double d = shape - 1.0 / 3.0;
  const double c = 1.0 / std::sqrt(9.0 * d);
  for (;;) {
    double x, v;
    do {
      x = normal();
      v = 1.0 + c * x;
    } while (v <= 0.0);
    v = v * v * v;
    const double u = uniform();
    if (u < 1.0 - 0.0331 * x * x * x * x) return d * v / rate;
    if (std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) return d * v / rate;
  }
}

std::uint64_t Rng::poisson(double mean) {
  if (mean < 30.0) {
    const double limit = std::exp(-mean);
    std::uint64_t k = 0;
    double p = uniform();
    while (p > limit) {
      ++k;
      p *= uniform();
    }
    return k;
  }
  // Atkinson's rejection for large means.
  const double c = 0.767 - 3.36 / mean;
  const double beta = M_PI / std::sqrt(3.0 * mean);
  const double alpha = beta * mean;
  const double k = std::log(c) - mean - std::log(beta);
  for (;;) {
    const double u = uniform();
    const double x = (alpha - std::log((1.0 - u) / u)) / beta;
    const double n = std::floor(x + 0.5);
    if (n < 0) continue;
    const double v = uniform();
    const double y = alpha - beta * x;
    const double lhs = y + std::log(v / ((1.0 + std::exp(y)) * (1.0 + std::exp(y))));
    const double rhs = k + n * std::log(mean) - std::lgamma(n + 1.0);
    if (lhs <= rhs) return static_cast<std::uint64_t>(n);
  }
}

std::uint64_t Rng::derive_seed(std::uint64_t base, std::uint64_t stream) {
  // splitmix64 over (base, stream); decorrelates neighboring streams.
  std::uint64_t z = base + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace portres
