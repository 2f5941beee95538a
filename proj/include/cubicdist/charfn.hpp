#pragma once

#include <complex>
#include <vector>

#include "cubicdist/case_kind.hpp"
#include "cubicdist/eisenstein.hpp"

namespace cubicdist {

using Complex = std::complex<double>;

// --------------------------------------------------------------------------
// Coefficient machinery for the Dirichlet-series route.
//
//   exp(u t/(1-t))   = sum_r G_r(u) t^r,  G_0 = 1,
//   G_r(u) = sum_{n=1..r} (1/n!) C(r-1, n-1) u^n
//          = ((2(r-1)+u) G_{r-1} - (r-2) G_{r-2}) / r   (recurrence used here)
//
//   (1-t)^{-u}       = sum_r H_r(u) t^r,  H_0 = 1,
//   H_r(u) = u(u+1)...(u+r-1)/r!
// --------------------------------------------------------------------------
Complex coeff_G(int r, Complex u);
Complex coeff_H(int r, Complex u);

// lambda_y on a prime power p^power: H_power(iy) in Case 1,
// G_power(-iy log N(p)) in Case 2; multiplicative extension is the caller's.
Complex lambda_y(long long prime_norm, int power, double y, CaseKind kind);
Complex lambda_y(const PrimeIdealRec& p, int power, double y, CaseKind kind);

// --------------------------------------------------------------------------
// Local laws and local characteristic-function factors.
// --------------------------------------------------------------------------

struct AtomSpec {
  Complex s;        // real sigma or complex s, Re(s) > 1/2
  CaseKind kind = CaseKind::Log;
  int j = 0;        // indexes zeta3^j
};

// a_{p,j}(s): 2 Re log(1 - zeta3^j N^{-s}) in Case 1,
//             2 Re(zeta3^j log N / (N^s - zeta3^j)) in Case 2.
double atom(long long prime_norm, const AtomSpec& spec);

// The discrete law F_{s,p}: for unramified p, mass 1/(N+1) at 0 and mass
// N/(3(N+1)) at -a_{p,j}, j = 0,1,2; for the ramified prime a single atom of
// mass 1 at -a_{p,0} (the sign that reproduces the stated product formulas
// and the deterministic term of the prime-sum expansions).
struct LocalLaw {
  long long prime_norm = 0;
  Splitting splitting = Splitting::kSplit;
  std::vector<std::pair<double, double>> atoms;  // (location, mass)
};
LocalLaw make_local_law(const PrimeIdealRec& p, Complex s, CaseKind kind);

// E[exp(i y X_p)] for the local law: unramified
//   1/(N+1) + (N/(3(N+1))) sum_j exp(-i y a_{p,j});
// ramified: exp(-i y a_{p,0}).
Complex local_factor(long long prime_norm, Complex s, double y, CaseKind kind);

// Characteristic function of a LocalLaw (two-path check against local_factor).
Complex law_char_fn(const LocalLaw& law, double y);

// --------------------------------------------------------------------------
// The predicted characteristic function phi_{F_s}(y): ramified prefactor
// times the product of unramified local factors over N(p) <= prime_cutoff,
// with a crude over-estimate of the dropped tail
//   |1 - local| <= |y| c1 N^{-3 sigma} log N + y^2 c2 N^{-2 sigma} log^2 N
// summed by integral comparison (the linear-in-y term is small because the
// local mean nearly cancels).
// --------------------------------------------------------------------------
struct CharFnValue {
  Complex value;
  double tail_est = 0.0;
};

CharFnValue char_fn(Complex s, double y, CaseKind kind, long long prime_cutoff);
// Same, with a caller-provided norm table (ascending unramified_prime_norms).
CharFnValue char_fn(Complex s, double y, CaseKind kind, const std::vector<long long>& norms);

// phi on the uniform grid y = y0 + j*h, j = 0..n-1, using per-atom phase
// rotations (no trig in the inner loop). Exact same values as char_fn up to
// rounding; used by the Fourier inversion.
std::vector<Complex> char_fn_grid(Complex s, CaseKind kind, double y0, double h, int n,
                                  const std::vector<long long>& norms);

// --------------------------------------------------------------------------
// Independent Dirichlet-series route: the triple sum over (a, b, m) coprime
// to 3 with gcd(a,b) = 1 and weights
//   lambda_y(a^3 m) lambda_y(b^3 m) / (N(a^3 b^3 m^2)^sigma prod_{p | abm} (1 + 1/N(p)))
// times the ramified double sum  sum_{r1,r2} lambda_y(l^{r1}) lambda_y(l^{r2}) 3^{-(r1+r2)s}.
// Enumerated by recursive generation over the prime ideals of norm <=
// term_cutoff with per-prime exponent sums taken to numerical convergence;
// coprimality is enforced structurally (min(v_p(a), v_p(b)) = 0 at every
// prime). No closed forms are used anywhere on this route.
// --------------------------------------------------------------------------
Complex dirichlet_M(double sigma, double y, CaseKind kind, long long term_cutoff);

// --------------------------------------------------------------------------
// Decay diagnostics: |phi(y)| on a grid, a power-law fit
// |phi| ~ exp(-C y^kappa), and windowed monotonicity flags.
// --------------------------------------------------------------------------
struct DecayRow {
  double y;
  double abs_phi;
  double tail_est;
};
struct DecayReport {
  std::vector<DecayRow> rows;
  double kappa = 0.0;          // fitted exponent
  bool eventually_decreasing = false;  // windowed-max comparison
};
DecayReport decay_check(double sigma, CaseKind kind, const std::vector<double>& y_grid,
                        long long prime_cutoff);

}  // namespace cubicdist
