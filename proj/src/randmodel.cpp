#include "cubicdist/randmodel.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "cubicdist/charfn.hpp"
#include "cubicdist/parallel.hpp"

namespace cubicdist {

namespace {

// splitmix64 finalizer; good avalanche, stateless per (seed, i, j) counter.
inline std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

inline double uniform01(std::uint64_t seed, std::uint64_t i, std::uint64_t j) {
  std::uint64_t h = mix64(mix64(mix64(seed) ^ (i * 0xd6e8feb86659fd93ULL)) ^ j);
  return (double)(h >> 11) * 0x1.0p-53;
}

}  // namespace

void ModelConfig::validate() const {
  if (n_samples < 1) throw std::invalid_argument("ModelConfig: n_samples must be >= 1");
  if (prime_cutoff < 3) throw std::invalid_argument("ModelConfig: prime_cutoff must be >= 3");
  if (sigma <= 0.5) throw std::invalid_argument("ModelConfig: need sigma > 1/2");
}

std::vector<double> sample_sum(const ModelConfig& config, int threads) {
  config.validate();
  const Complex s{config.sigma, 0.0};

  struct PrimeAtoms {
    double p0;       // mass at 0
    double third;    // (1 - p0)/3
    double val[3];   // -a_{p,j}
  };
  std::vector<PrimeAtoms> atoms;
  for (long long n : unramified_prime_norms(config.prime_cutoff)) {
    PrimeAtoms pa;
    pa.p0 = 1.0 / ((double)n + 1.0);
    pa.third = (1.0 - pa.p0) / 3.0;
    for (int j = 0; j < 3; ++j) pa.val[j] = -atom(n, {s, config.kind, j});
    atoms.push_back(pa);
  }
  const double ramified = -atom(3, {s, config.kind, 0});

  std::vector<double> out((size_t)config.n_samples);
  parallel_for((size_t)config.n_samples, threads, [&](size_t i) {
    double acc = ramified;
    for (size_t j = 0; j < atoms.size(); ++j) {
      const PrimeAtoms& pa = atoms[j];
      double u = uniform01(config.seed, (std::uint64_t)i, (std::uint64_t)j);
      if (u >= pa.p0) {
        int k = (int)((u - pa.p0) / pa.third);
        acc += pa.val[k > 2 ? 2 : k];
      }
    }
    out[i] = acc;
  });
  return out;
}

std::vector<double> model_cdf(std::vector<double> samples) {
  if (samples.empty()) throw std::invalid_argument("model_cdf: empty sample set");
  std::sort(samples.begin(), samples.end());
  return samples;
}

}  // namespace cubicdist
