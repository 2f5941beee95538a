#pragma once

#include <span>
#include <vector>

#include "cubicdist/case_kind.hpp"
#include "cubicdist/cubic_symbol.hpp"
#include "cubicdist/eisenstein.hpp"

namespace cubicdist {

// Evaluation knobs shared by the L-value routines.
struct EvalParams {
  long long prime_cutoff = 100000;  // max N(p) in Euler products / prime sums
  double smoothing = 0.0;           // X in the exp(-N/X) weights; 0 = default rule
  long long series_cutoff = 0;      // max N(a) in Dirichlet sums; 0 = derived from X

  void validate() const;

  // Default smoothing scale: 1e3 * N(c) at sigma = 1, scaled by
  // (1/2 / (sigma - 1/2))^2 as sigma decreases.
  double smoothing_for(long long norm_c, double sigma) const;
  long long series_cutoff_for(double x) const;  // 15 X when unset
};

struct LResult {
  double value = 0.0;
  double err_est = 0.0;   // tail bound (sigma > 1) or X-doubling estimate
  bool excluded = false;  // L-value within 1e-10 of zero (starred-sum exclusion)
};

// log L_c(sigma) for sigma > 1 by the absolutely convergent prime sum
//   -2 log(1 - 3^{-sigma}) - 2 sum_{p not| 3, N <= cutoff} log|1 - chi_c(p) N^{-sigma}|,
// with the reported tail bound O(cutoff^{1-sigma}/(sigma-1)).
LResult log_Lc(const ModulusC& c, double sigma, const EvalParams& params);
LResult log_Lc(const ModulusC& c, double sigma, const EvalParams& params,
               std::span<const PrimeIdealRec> primes);

// (L'_c/L_c)(sigma) for sigma > 1:
//   -2 log 3/(3^sigma - 1) - 2 sum Re(chi_c(p) log N / (N^sigma - chi_c(p))).
LResult logderiv_Lc(const ModulusC& c, double sigma, const EvalParams& params);
LResult logderiv_Lc(const ModulusC& c, double sigma, const EvalParams& params,
                    std::span<const PrimeIdealRec> primes);

// Heuristic smoothed evaluator for 1/2 < sigma <= 1. Case 1 takes
// 2 Re log of  (3^s/(3^s-1)) sum_{a == 1 mod <3>} (c/a)_3 N(a)^{-sigma} e^{-N(a)/X}
// (the element sum enumerated multiplicatively over prime ideals); Case 2
// sums the von Mangoldt expansion termwise:
//   -2 sum_{p^m} Re(chi_c(p)^m) log N(p) N(p^m)^{-sigma} e^{-N(p^m)/X}.
// The error estimate compares X against X/2; accuracy in the critical strip
// is certified empirically only (see README).
LResult value_smoothed(const ModulusC& c, double sigma, CaseKind kind, const EvalParams& params);
LResult value_smoothed(const ModulusC& c, double sigma, CaseKind kind, const EvalParams& params,
                       std::span<const PrimeIdealRec> primes);

// Batch-friendly variant used by the family sweeps: the smoothed prime-power
// logarithmic series for both cases (Case 1 uses the 1/m-weighted expansion of
// 2 Re log L instead of the log of the smoothed L-series). Orders of magnitude
// cheaper per modulus at equal X; cross-checked against value_smoothed in the
// tests.
LResult value_smoothed_prime_series(const ModulusC& c, double sigma, CaseKind kind, double x_smooth,
                                    std::span<const PrimeIdealRec> primes);

// ln(4 sqrt(3) pi^2), the class-number-formula constant of E(c).
double brauer_siegel_constant();

// E(c) = log L_c(1) - log(4 sqrt3 pi^2), via value_smoothed at sigma = 1.
LResult brauer_siegel_error(const ModulusC& c, const EvalParams& params);

// gamma_{K_c} = (L'_c/L_c)(1) + gamma_k. The field constant gamma_k is an
// input (see dedekind.hpp for the side computation).
LResult euler_kronecker(const ModulusC& c, double gamma_k_value, const EvalParams& params);

// Per-prime symbol table chi_c(p) for the moduli sweeps.
std::vector<CubeRoot> chi_table(const ModulusC& c, std::span<const PrimeIdealRec> primes);

}  // namespace cubicdist
