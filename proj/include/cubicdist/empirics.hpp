#pragma once

#include <string>
#include <vector>

#include "cubicdist/case_kind.hpp"
#include "cubicdist/density.hpp"
#include "cubicdist/eisenstein.hpp"
#include "cubicdist/lfunction.hpp"

namespace cubicdist {

struct EmpiricalSample {
  ModulusC modulus;
  double value = 0.0;    // meaningless when excluded
  double err_est = 0.0;  // evaluator self-consistency estimate
  bool excluded = false;
};

// Weighted empirical CDF support: values sorted ascending with normalized
// cumulative weights (uniform weights unless stated otherwise).
struct Ecdf {
  std::vector<double> values;
  std::vector<double> cum;  // same length; cum.back() == 1
};

Ecdf make_ecdf(std::vector<double> values);
Ecdf make_ecdf(std::vector<std::pair<double, double>> weighted_values);  // (value, weight)

struct FamilyOptions {
  int threads = 0;
  std::string cache_dir;  // empty = no disk cache
};

struct FamilyEvaluation {
  long long max_norm = 0;
  double sigma = 0.0;
  CaseKind kind = CaseKind::Log;
  std::vector<EmpiricalSample> samples;  // sorted by (norm, a, b)
  long long n_excluded = 0;

  Ecdf ecdf(long long restrict_norm = 0) const;           // unweighted
  Ecdf ecdf_weighted(long long y_weight) const;           // weights e^{-N(c)/Y}
};

// Evaluate L_c behaviour over the whole family with N(c) <= Y. For sigma > 1
// the absolutely convergent prime sums are used; for 1/2 < sigma <= 1 the
// smoothed prime-power series with scale X = params.smoothing (or a default
// batch scale clamped to [1e4, 1e5]). Deterministic output; parallel over
// moduli. Results are cached as CSV when opts.cache_dir is set.
FamilyEvaluation empirical_cdf(long long max_norm, double sigma, CaseKind kind,
                               const EvalParams& params, const FamilyOptions& opts = {});

// sup_z |F_emp(z) - F_pred(z)| over the sample points.
double ks_distance(const Ecdf& empirical, const DensityGrid& predicted);
// Grid-vs-grid variant (union of support points).
double ks_distance(const DensityGrid& f, const DensityGrid& g);

// Divisibility and symbol-value census for one unramified prime over the
// moduli with N(c) <= Y.
struct LocalCensus {
  long long n_total = 0;     // # of moduli
  long long n_divisible = 0; // pi | c
  long long n_symbol[3] = {0, 0, 0};  // (c/pi)_3 = zeta3^j among coprime c
};
LocalCensus local_census(const PrimeIdealRec& p, long long max_norm);

// Fraction of c with pi | c (0 when no modulus has norm <= Y and N(p) > Y).
double divisor_probability(const PrimeIdealRec& p, long long max_norm);

// Counting report: N(Y) (exact count), N*(Y) = sum over the whole family of
// exp(-N(c)/Y) (truncated at N(c) <= 12 Y; the rest is below e^{-12} per
// term), and the predicted slope
//   (3/4) res_{s=1} zeta_k / (|H_<9>| zeta_k(2)).
struct CountReport {
  long long max_norm = 0;
  long long count = 0;
  double weighted = 0.0;
  double predicted_slope = 0.0;
};
CountReport count_C(long long max_norm, int threads = 0);

// Weighted count restricted to c coprime to the given ideal, with the
// predicted value C_a * Y, C_a = slope * prod_{p | a} (1 + 1/N(p))^{-1}.
struct RestrictedCount {
  double weighted = 0.0;
  double predicted = 0.0;
};
RestrictedCount restricted_count(const EisensteinInt& ideal_gen, long long max_norm,
                                 int threads = 0);

}  // namespace cubicdist
