#include "cubicdist/dedekind.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "cubicdist/eisenstein.hpp"

namespace cubicdist {

namespace {

// B_2, B_4, ..., B_12
constexpr std::array<double, 6> kBernoulli = {
    1.0 / 6, -1.0 / 30, 1.0 / 42, -1.0 / 30, 5.0 / 66, -691.0 / 2730,
};
constexpr int kEmTerms = 64;

}  // namespace

double euler_mascheroni() {
  // H_M - log M - 1/(2M) + sum B_{2j}/(2j M^{2j})
  const int M = kEmTerms;
  double h = 0.0;
  for (int k = 1; k <= M; ++k) h += 1.0 / k;
  double g = h - std::log((double)M) - 0.5 / M;
  double m2 = (double)M * M, mp = m2;
  for (size_t j = 0; j < kBernoulli.size(); ++j) {
    g += kBernoulli[j] / (2.0 * (j + 1) * mp);
    mp *= m2;
  }
  return g;
}

double hurwitz_zeta(double s, double a) {
  if (s <= 1.0) throw std::invalid_argument("hurwitz_zeta: need s > 1");
  const int M = kEmTerms;
  double sum = 0.0;
  for (int k = 0; k < M; ++k) sum += std::pow(k + a, -s);
  double u = M + a;
  sum += std::pow(u, 1.0 - s) / (s - 1.0);
  sum += 0.5 * std::pow(u, -s);
  // + sum_j B_{2j}/(2j)! * (s)_{2j-1} * u^{-s-2j+1}
  double poch = s;           // (s)_1
  double fact = 2.0;         // (2j)! at j=1
  double upow = std::pow(u, -s - 1.0);
  for (size_t j = 0; j < kBernoulli.size(); ++j) {
    sum += kBernoulli[j] / fact * poch * upow;
    // advance to j+1: multiply pochhammer by (s+2j-1)(s+2j), factorial by (2j+1)(2j+2)
    double tj = 2.0 * (j + 1);
    poch *= (s + tj - 1.0) * (s + tj);
    fact *= (tj + 1.0) * (tj + 2.0);
    upow /= u * u;
  }
  return sum;
}

double hurwitz_zeta_ds(double s, double a) {
  if (s <= 1.0) throw std::invalid_argument("hurwitz_zeta_ds: need s > 1");
  const int M = kEmTerms;
  double sum = 0.0;
  for (int k = 0; k < M; ++k) sum -= std::log(k + a) * std::pow(k + a, -s);
  double u = M + a, lu = std::log(u);
  // d/ds [u^{1-s}/(s-1)] = u^{1-s} (-lu/(s-1) - 1/(s-1)^2)
  sum += std::pow(u, 1.0 - s) * (-lu / (s - 1.0) - 1.0 / ((s - 1.0) * (s - 1.0)));
  sum += 0.5 * std::pow(u, -s) * (-lu);
  // d/ds of the Bernoulli tail: product rule on (s)_{2j-1} * u^{-s-2j+1}.
  for (size_t j = 0; j < kBernoulli.size(); ++j) {
    int m = 2 * (int)j + 1;  // pochhammer length
    double poch = 1.0, dpoch = 0.0;
    for (int i = 0; i < m; ++i) {
      dpoch = dpoch * (s + i) + poch;
      poch *= (s + i);
    }
    double fact = 1.0;
    for (int i = 2; i <= m + 1; ++i) fact *= i;
    double upow = std::pow(u, -s - (double)m);
    sum += kBernoulli[j] / fact * (dpoch * upow + poch * upow * (-lu));
  }
  return sum;
}

double stieltjes_gamma1(double a) {
  // gamma_1(a) = lim [ sum_{k<=m} log(k+a)/(k+a) - log^2(m+a)/2 ], by
  // Euler-Maclaurin with f(x) = log(x+a)/(x+a),
  // f^{(n)}(x) = (-1)^n n! (log u - H_n)/u^{n+1}, u = x + a.
  const int M = kEmTerms;
  double sum = 0.0;
  for (int k = 0; k < M; ++k) sum += std::log(k + a) / (k + a);
  double u = M + a, lu = std::log(u);
  sum -= 0.5 * lu * lu;
  sum += 0.5 * lu / u;
  double h = 0.0;  // harmonic number H_{2j-1}
  double u2 = u * u, upow = u2;
  for (size_t j = 0; j < kBernoulli.size(); ++j) {
    int n = 2 * (int)j + 1;
    for (int i = (n == 1) ? 1 : n - 1; i <= n; ++i) h += 1.0 / i;
    sum += kBernoulli[j] * (lu - h) / (2.0 * (j + 1) * upow);
    upow *= u2;
  }
  return sum;
}

double L_chi3(double s) {
  return std::pow(3.0, -s) * (hurwitz_zeta(s, 1.0 / 3.0) - hurwitz_zeta(s, 2.0 / 3.0));
}

double L_chi3_ds(double s) {
  return -std::log(3.0) * L_chi3(s) +
         std::pow(3.0, -s) * (hurwitz_zeta_ds(s, 1.0 / 3.0) - hurwitz_zeta_ds(s, 2.0 / 3.0));
}

double residue_zeta_k() { return std::numbers::pi / (3.0 * std::sqrt(3.0)); }

double zeta_k_euler(double s, long long prime_limit) {
  if (s <= 1.0) throw std::invalid_argument("zeta_k_euler: need s > 1");
  double lg = 0.0;
  for (long long p : sieve_rational_primes(prime_limit)) {
    double ps = std::pow((double)p, -s);
    if (p == 3) {
      lg -= std::log1p(-ps);
    } else if (p % 3 == 1) {
      lg -= 2.0 * std::log1p(-ps);
    } else {
      lg -= std::log1p(-ps * ps);
    }
  }
  return std::exp(lg);
}

double zeta_k_2() {
  static const double v = zeta_k_euler(2.0, 30'000'000);
  return v;
}

int ray_class_order_mod9() {
  // |(O_k/<9>)^x| / |image of the units|, h = 1. An element a + b*zeta3 is
  // invertible mod <9> iff its norm is prime to 3.
  int invertible = 0;
  for (int a = 0; a < 9; ++a)
    for (int b = 0; b < 9; ++b) {
      long long n = EisensteinInt{a, b}.norm();
      if (n % 3 != 0) ++invertible;
    }
  // The six units are pairwise distinct mod <9>.
  int unit_images = 0;
  for (const EisensteinInt& u : units()) {
    bool dup = false;
    for (const EisensteinInt& v : units()) {
      if (&u == &v) break;
      if (((u.a - v.a) % 9 + 9) % 9 == 0 && ((u.b - v.b) % 9 + 9) % 9 == 0) dup = true;
    }
    if (!dup) ++unit_images;
  }
  return invertible / unit_images;
}

double gamma_k() {
  // zeta_k = zeta * L(chi_{-3}), so gamma_k = gamma + L'/L(1, chi_{-3}).
  // At s = 1 the Stieltjes expansion of the Hurwitz difference gives
  //   L(1)  = (1/3)(psi(2/3) - psi(1/3)) = pi/(3 sqrt 3),
  //   L'(1) = -log(3) L(1) + (1/3)(gamma_1(2/3) - gamma_1(1/3)).
  double l1 = residue_zeta_k();
  double dl1 = -std::log(3.0) * l1 + (stieltjes_gamma1(2.0 / 3.0) - stieltjes_gamma1(1.0 / 3.0)) / 3.0;
  return euler_mascheroni() + dl1 / l1;
}

double gamma_k_richardson() {
  // g(h) = zeta_k'/zeta_k(1+h) + 1/h -> gamma_k; Richardson on h, 2h, 4h, 8h.
  auto g = [](double h) {
    double s = 1.0 + h;
    double zz = hurwitz_zeta_ds(s, 1.0) / hurwitz_zeta(s, 1.0);
    double ll = L_chi3_ds(s) / L_chi3(s);
    return zz + ll + 1.0 / h;
  };
  const int n = 4;
  double t[n][n];
  double h = 0.4;
  for (int i = 0; i < n; ++i) {
    t[i][0] = g(h);
    h /= 2.0;
  }
  // g is analytic in h at 0, so eliminate h, h^2, h^3 successively.
  for (int j = 1; j < n; ++j) {
    double f = std::pow(2.0, j);
    for (int i = j; i < n; ++i) t[i][j] = (f * t[i][j - 1] - t[i - 1][j - 1]) / (f - 1.0);
  }
  return t[n - 1][n - 1];
}

}  // namespace cubicdist
