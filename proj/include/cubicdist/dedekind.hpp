#pragma once

namespace cubicdist {

// Special values and constants of k = Q(sqrt(-3)) used by the counting
// asymptotics and the Euler-Kronecker pipeline.

// Euler-Mascheroni constant, Euler-Maclaurin evaluation.
double euler_mascheroni();

// Hurwitz zeta(s, a) for real s > 1, 0 < a <= 1 (Euler-Maclaurin), and its
// s-derivative.
double hurwitz_zeta(double s, double a);
double hurwitz_zeta_ds(double s, double a);

// Generalized Stieltjes constant gamma_1(a): coefficient of -(s-1) in the
// expansion zeta(s,a) = 1/(s-1) - psi(a) - gamma_1(a)(s-1) + ...
double stieltjes_gamma1(double a);

// L(s, chi_{-3}) for the odd quadratic character mod 3, via
// L(s) = 3^{-s} (zeta(s,1/3) - zeta(s,2/3)); valid for s > 0, s != 1.
double L_chi3(double s);
double L_chi3_ds(double s);

// L(1, chi_{-3}) = pi/(3 sqrt 3) = res_{s=1} zeta_k(s)  (h = 1, w = 6, |d| = 3).
double residue_zeta_k();

// zeta_k(s) for real s > 1 by the splitting-type Euler product over rational
// primes up to `prime_limit` (error roughly 1/(P log P) in the log).
double zeta_k_euler(double s, long long prime_limit);

// zeta_k(2) to ~1e-9, cached.
double zeta_k_2();

// Order of the <9>-ray class group of k, verified by brute force over
// (O_k/<9>)^x modulo the image of the six units. Equals 9.
int ray_class_order_mod9();

// Euler-Kronecker constant of k: gamma_k = gamma + L'/L(1, chi_{-3}),
// computed through the Stieltjes expansion at s = 1.
double gamma_k();

// Independent route for tests: Richardson extrapolation of
// zeta_k'/zeta_k(1+h) + 1/h as h -> 0, with the zeta factors evaluated by
// Euler-Maclaurin at s = 1 + h.
double gamma_k_richardson();

}  // namespace cubicdist
