#pragma once

#include <complex>
#include <vector>

#include "cubicdist/cubic_symbol.hpp"
#include "cubicdist/eisenstein.hpp"

namespace cubicdist {

// Independent second routes used by the test suites and the acceptance
// runner. Nothing here is on the production evaluation path; each function
// recomputes a quantity by a different algorithm than the module it checks.

// log L_c(sigma) through the smoothed double Dirichlet series
//   (3^{2s}/(3^s-1)^2) sum_{a,b == 1 mod <3>} (c/a)_3 conj((c/b)_3)
//                                   N(ab)^{-sigma} e^{-N(ab)/x_smooth},
// truncated at N(a) N(b) <= pair_cutoff. Checks the Euler-product route at
// sigma > 1.
double log_Lc_double_series(const ModulusC& c, double sigma, long long pair_cutoff,
                            double x_smooth);

// Taylor coefficients through t^order of exp(u t/(1-t)) and (1-t)^{-u},
// computed by power-series exponentiation (n e_n = sum k s_k e_{n-k}); an
// independent oracle for the closed-form coefficient formulas.
std::vector<std::complex<double>> series_exp_ut_over_1mt(std::complex<double> u, int order);
std::vector<std::complex<double>> series_one_minus_t_pow(std::complex<double> u, int order);

// (alpha/lambda)_3 through the factorization of lambda and the definitional
// prime-power oracle; checks the reciprocity recursion.
CubeRoot symbol_factored_oracle(const EisensteinInt& alpha, const EisensteinInt& lambda);

// Brute-force irreducibility scan: the number of prime ideals of norm
// <= max_norm found by trial division over all elements of smaller norm.
long long count_primes_brute_force(long long max_norm);

// Richardson-extrapolated smoothed prime-power route for gamma_k; a third
// route besides dedekind's Stieltjes and Hurwitz evaluations:
//   f(h) = -sum_{N(p^m) <= T} log N(p) N(p^m)^{-(1+h)} + (1 - T^{-h})/h.
double gamma_k_prime_sum(long long prime_power_cutoff);

}  // namespace cubicdist
