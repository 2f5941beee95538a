#include "cubicdist/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace cubicdist {

double log_Lc_double_series(const ModulusC& c, double sigma, long long pair_cutoff,
                            double x_smooth) {
  if (sigma <= 1.0) throw std::invalid_argument("log_Lc_double_series: need sigma > 1");
  // Ideal table (norm, symbol) for all ideals coprime to <3> with norm up to
  // pair_cutoff, generated multiplicatively and sorted by norm.
  auto primes = enumerate_primes(pair_cutoff);
  std::vector<const PrimeIdealRec*> ps;
  std::vector<CubeRoot> chi;
  for (const PrimeIdealRec& p : primes) {
    if (p.splitting == Splitting::kRamified) continue;
    ps.push_back(&p);
    chi.push_back(symbol(c.value, p.generator));
  }
  std::vector<std::pair<long long, signed char>> table;  // (norm, symbol code: 0..2, 3 = zero)
  auto code_of = [](CubeRoot r) -> signed char {
    return r.is_zero() ? (signed char)3 : (signed char)r.exponent();
  };
  auto rec = [&](auto&& self, size_t i, long long n, CubeRoot ch) -> void {
    table.emplace_back(n, code_of(ch));
    for (size_t j = i; j < ps.size(); ++j) {
      long long pn = ps[j]->norm;
      if (pn > pair_cutoff / n) break;
      long long m = n;
      CubeRoot cc = ch;
      while (m <= pair_cutoff / pn) {
        m *= pn;
        cc = cc * chi[j];
        self(self, j + 1, m, cc);
      }
    }
  };
  rec(rec, 0, 1, CubeRoot::one());
  std::sort(table.begin(), table.end());

  // Double sum over ordered pairs with N(a) N(b) <= pair_cutoff. Group by
  // symbol difference: sym(a) * conj(sym(b)) depends on code_a - code_b only.
  const std::complex<double> w[3] = {CubeRoot::one().to_complex(), CubeRoot::zeta().to_complex(),
                                     CubeRoot::zeta2().to_complex()};
  std::vector<double> npow(table.size());
  for (size_t i = 0; i < table.size(); ++i) npow[i] = std::pow((double)table[i].first, -sigma);
  std::complex<double> total = 0.0;
  for (size_t i = 0; i < table.size(); ++i) {
    auto [na, ca] = table[i];
    if (ca == 3) continue;
    long long cap = pair_cutoff / na;
    if (table[0].first > cap) break;
    for (size_t j = 0; j < table.size() && table[j].first <= cap; ++j) {
      signed char cb = table[j].second;
      if (cb == 3) continue;
      double nn = (double)na * (double)table[j].first;
      double term = npow[i] * npow[j] * std::exp(-nn / x_smooth);
      total += w[((ca - cb) % 3 + 3) % 3] * term;
    }
  }
  double pref = std::pow(3.0, sigma) / (std::pow(3.0, sigma) - 1.0);
  double val = total.real() * pref * pref;
  if (val <= 0.0) throw std::runtime_error("log_Lc_double_series: non-positive truncated value");
  return std::log(val);
}

namespace {

// exp of a power series with zero constant term: n e_n = sum_{k=1..n} k s_k e_{n-k}.
std::vector<std::complex<double>> series_exp(const std::vector<std::complex<double>>& s) {
  size_t n = s.size();
  std::vector<std::complex<double>> e(n, 0.0);
  e[0] = 1.0;
  for (size_t m = 1; m < n; ++m) {
    std::complex<double> acc = 0.0;
    for (size_t k = 1; k <= m; ++k) acc += (double)k * s[k] * e[m - k];
    e[m] = acc / (double)m;
  }
  return e;
}

}  // namespace

std::vector<std::complex<double>> series_exp_ut_over_1mt(std::complex<double> u, int order) {
  // u t/(1-t) = u (t + t^2 + ...)
  std::vector<std::complex<double>> s((size_t)order + 1, u);
  s[0] = 0.0;
  return series_exp(s);
}

std::vector<std::complex<double>> series_one_minus_t_pow(std::complex<double> u, int order) {
  // (1-t)^{-u} = exp(-u log(1-t)), -u log(1-t) = u (t + t^2/2 + ...)
  std::vector<std::complex<double>> s((size_t)order + 1);
  s[0] = 0.0;
  for (int k = 1; k <= order; ++k) s[(size_t)k] = u / (double)k;
  return series_exp(s);
}

CubeRoot symbol_factored_oracle(const EisensteinInt& alpha, const EisensteinInt& lambda) {
  if (lambda.is_zero()) throw std::invalid_argument("symbol_factored_oracle: lambda = 0");
  if ((lambda.a + lambda.b) % 3 == 0)
    throw std::invalid_argument("symbol_factored_oracle: lambda divisible by 1 - zeta3");
  if (lambda.is_unit()) return CubeRoot::one();
  CubeRoot acc = CubeRoot::one();
  for (const auto& [p, e] : factor(lambda).primes) {
    CubeRoot s = symbol_prime_oracle(alpha, p.generator);
    for (int i = 0; i < e; ++i) acc = acc * s;
  }
  return acc;
}

long long count_primes_brute_force(long long max_norm) {
  // Scan elements x with 2 <= N(x) <= max_norm, one per associate class
  // (primary representatives plus the lambda-adic ones), and test
  // irreducibility by trial division over all elements of norm in [2, sqrt N].
  long long bound = (long long)(2.0 * std::sqrt((double)max_norm / 3.0)) + 2;
  long long div_norm_max = (long long)std::sqrt((double)max_norm) + 1;
  long long div_bound = (long long)(2.0 * std::sqrt((double)div_norm_max / 3.0)) + 2;
  std::vector<EisensteinInt> divisors;  // every element with 2 <= norm <= sqrt(max_norm)
  for (long long a = -div_bound; a <= div_bound; ++a)
    for (long long b = -div_bound; b <= div_bound; ++b) {
      EisensteinInt d{a, b};
      long long n = d.norm();
      if (n >= 2 && n <= div_norm_max) divisors.push_back(d);
    }
  std::sort(divisors.begin(), divisors.end(),
            [](const EisensteinInt& x, const EisensteinInt& y) { return x.norm() < y.norm(); });

  long long count = 0;
  for (long long a = -bound; a <= bound; ++a) {
    for (long long b = -bound; b <= bound; ++b) {
      EisensteinInt x{a, b};
      long long n = x.norm();
      if (n < 2 || n > max_norm) continue;
      // one representative per associate class: the primary one, or lambda
      // itself for the ramified prime
      PrimaryDecomposition pd = primary_associate(x);
      if (pd.lambda_exponent == 0) {
        if (!(pd.unit == EisensteinInt{1, 0})) continue;
      } else {
        if (!(x == kLambda)) continue;
      }
      bool irreducible = true;
      for (const EisensteinInt& d : divisors) {
        long long dn = d.norm();
        if (dn * dn > n) break;
        if (is_divisible(x, d)) {
          irreducible = false;
          break;
        }
      }
      if (irreducible) ++count;
    }
  }
  return count;
}

double gamma_k_prime_sum(long long prime_power_cutoff) {
  const long long t = prime_power_cutoff;
  std::vector<std::pair<long long, double>> terms;  // (N(p^m), log N(p))
  for (long long p : sieve_rational_primes(t)) {
    long long norm;
    double lg;
    if (p == 3) {
      norm = 3;
      lg = std::log(3.0);
    } else if (p % 3 == 1) {
      norm = p;
      lg = std::log((double)p);
    } else {
      if (p > t / p) continue;
      norm = p * p;
      lg = std::log((double)norm);
    }
    long long pw = norm;
    int mult = (p % 3 == 1) ? 2 : 1;
    while (pw <= t) {
      terms.emplace_back(pw, lg * mult);
      if (pw > t / norm) break;
      pw *= norm;
    }
  }
  std::sort(terms.begin(), terms.end());

  auto f = [&](double h) {
    double s = 0.0;
    for (auto [n, lg] : terms) s += lg * std::pow((double)n, -(1.0 + h));
    return -s + (1.0 - std::pow((double)t, -h)) / h;
  };
  const int n = 4;
  double tab[n][n];
  double h = 0.8;
  for (int i = 0; i < n; ++i) {
    tab[i][0] = f(h);
    h /= 2.0;
  }
  for (int j = 1; j < n; ++j) {
    double fac = std::pow(2.0, j);
    for (int i = j; i < n; ++i) tab[i][j] = (fac * tab[i][j - 1] - tab[i - 1][j - 1]) / (fac - 1.0);
  }
  return tab[n - 1][n - 1];
}

}  // namespace cubicdist
