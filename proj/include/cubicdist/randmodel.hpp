#pragma once

#include <cstdint>
#include <vector>

#include "cubicdist/case_kind.hpp"

namespace cubicdist {

// Monte Carlo sampler of the independent local model: each unramified prime
// ideal with N <= prime_cutoff contributes X_p = 0 with probability 1/(N+1)
// and -a_{p,j} with probability N/(3(N+1)) for j = 0,1,2 (the j = 1 and j = 2
// atoms coincide numerically but are sampled as distinct outcomes); the
// ramified prime contributes its deterministic constant.
struct ModelConfig {
  double sigma = 1.0;
  CaseKind kind = CaseKind::Log;
  long long prime_cutoff = 100000;  // >= 3 (ramified term only at 3)
  long long n_samples = 1;
  std::uint64_t seed = 1;

  void validate() const;
};

// n_samples independent draws of the model sum. Counter-based generator keyed
// by (seed, sample index, prime index): output is reproducible from the seed
// and independent of the thread count.
std::vector<double> sample_sum(const ModelConfig& config, int threads = 0);

// Sorted copy (empirical CDF support points).
std::vector<double> model_cdf(std::vector<double> samples);

}  // namespace cubicdist
