#include "cubicdist/lfunction.hpp"

#include <cmath>
#include <complex>
#include <numbers>

namespace cubicdist {

namespace {

constexpr double kExclusionThreshold = 1e-10;  // |L_c| below this flags the starred sum

double tail_bound_prime_sum(double sigma, long long cutoff) {
  // 2 sum_{N > P} (N^{-sigma} + N^{-2 sigma}) over prime ideals, majorised by
  // integral comparison with ideal counts <= 3 t / log t.
  double p = (double)cutoff, lp = std::log(p);
  return 12.0 * std::pow(p, 1.0 - sigma) / ((sigma - 1.0) * lp);
}

}  // namespace

void EvalParams::validate() const {
  if (prime_cutoff < 7) throw std::invalid_argument("EvalParams: prime_cutoff must be >= 7");
  if (smoothing != 0.0 && smoothing < 1.0)
    throw std::invalid_argument("EvalParams: smoothing must be >= 1");
  if (series_cutoff != 0 && series_cutoff < prime_cutoff)
    throw std::invalid_argument("EvalParams: series_cutoff must be >= prime_cutoff");
}

double EvalParams::smoothing_for(long long norm_c, double sigma) const {
  if (smoothing > 0.0) return smoothing;
  double scale = 0.5 / (sigma - 0.5);
  return 1e3 * (double)norm_c * scale * scale;
}

long long EvalParams::series_cutoff_for(double x) const {
  if (series_cutoff > 0) return series_cutoff;
  return (long long)std::ceil(15.0 * x);
}

std::vector<CubeRoot> chi_table(const ModulusC& c, std::span<const PrimeIdealRec> primes) {
  std::vector<CubeRoot> out;
  out.reserve(primes.size());
  for (const PrimeIdealRec& p : primes) out.push_back(chi_c(c, p));
  return out;
}

LResult log_Lc(const ModulusC& c, double sigma, const EvalParams& params,
               std::span<const PrimeIdealRec> primes) {
  if (sigma <= 1.0) throw std::invalid_argument("log_Lc: need sigma > 1 (use value_smoothed)");
  params.validate();
  double v = -2.0 * std::log1p(-std::pow(3.0, -sigma));
  for (const PrimeIdealRec& p : primes) {
    if (p.norm > params.prime_cutoff) break;
    if (p.splitting == Splitting::kRamified) continue;
    CubeRoot chi = chi_c(c, p);
    if (chi.is_zero()) continue;  // p | c contributes log 1 = 0
    std::complex<double> t = 1.0 - chi.to_complex() * std::pow((double)p.norm, -sigma);
    v -= 2.0 * std::log(std::abs(t));
  }
  return {v, tail_bound_prime_sum(sigma, params.prime_cutoff), false};
}

LResult log_Lc(const ModulusC& c, double sigma, const EvalParams& params) {
  auto primes = enumerate_primes(params.prime_cutoff);
  return log_Lc(c, sigma, params, primes);
}

LResult logderiv_Lc(const ModulusC& c, double sigma, const EvalParams& params,
                    std::span<const PrimeIdealRec> primes) {
  if (sigma <= 1.0) throw std::invalid_argument("logderiv_Lc: need sigma > 1 (use value_smoothed)");
  params.validate();
  double v = -2.0 * std::log(3.0) / (std::pow(3.0, sigma) - 1.0);
  for (const PrimeIdealRec& p : primes) {
    if (p.norm > params.prime_cutoff) break;
    if (p.splitting == Splitting::kRamified) continue;
    CubeRoot chi = chi_c(c, p);
    if (chi.is_zero()) continue;
    std::complex<double> w = chi.to_complex();
    double n = (double)p.norm;
    v -= 2.0 * (w * std::log(n) / (std::pow(n, sigma) - w)).real();
  }
  double lp = std::log((double)params.prime_cutoff);
  return {v, tail_bound_prime_sum(sigma, params.prime_cutoff) * lp, false};
}

LResult logderiv_Lc(const ModulusC& c, double sigma, const EvalParams& params) {
  auto primes = enumerate_primes(params.prime_cutoff);
  return logderiv_Lc(c, sigma, params, primes);
}

namespace {

// Smoothed L-series sum over the ideals coprime to <3>, enumerated
// multiplicatively: S(X) = sum chi_c(a) N(a)^{-sigma} e^{-N(a)/X}. Two
// smoothing scales are accumulated in one sweep for the X-doubling estimate.
struct SeriesSums {
  std::complex<double> main{1.0, 0.0};  // ideal <1>
  std::complex<double> half{1.0, 0.0};
};

SeriesSums smoothed_ideal_sum(const ModulusC& c, double sigma, double x, long long t_max,
                              std::span<const PrimeIdealRec> primes) {
  std::vector<const PrimeIdealRec*> ps;
  std::vector<std::complex<double>> chi;
  for (const PrimeIdealRec& p : primes) {
    if (p.norm > t_max) break;
    if (p.splitting == Splitting::kRamified) continue;
    CubeRoot cr = chi_c(c, p);
    if (cr.is_zero()) continue;  // ideals through p contribute 0
    ps.push_back(&p);
    chi.push_back(cr.to_complex());
  }
  SeriesSums sums;
  // DFS over prime-power supports in ascending-norm order.
  auto rec = [&](auto&& self, size_t i, long long n, std::complex<double> ch) -> void {
    for (size_t j = i; j < ps.size(); ++j) {
      long long pn = ps[j]->norm;
      if (pn > t_max / n) break;
      long long m = n;
      std::complex<double> cc = ch;
      while (m <= t_max / pn) {
        m *= pn;
        cc *= chi[j];
        double w = std::pow((double)m, -sigma);
        sums.main += cc * (w * std::exp(-(double)m / x));
        sums.half += cc * (w * std::exp(-2.0 * (double)m / x));
        self(self, j + 1, m, cc);
      }
    }
  };
  rec(rec, 0, 1, {1.0, 0.0});
  return sums;
}

// Termwise smoothed prime-power series: Case 1 accumulates
// 2 sum Re(chi^m)/(m N^{m sigma}) e^{-N^m/X}; Case 2 accumulates
// -2 sum Re(chi^m) log N N^{-m sigma} e^{-N^m/X}. The ramified prime enters
// with chi = 1. Returns the pair (value at X, value at X/2).
std::pair<double, double> smoothed_log_series(const ModulusC& c, double sigma, CaseKind kind,
                                              double x, long long t_max,
                                              std::span<const PrimeIdealRec> primes) {
  double vx = 0.0, vh = 0.0;
  auto add = [&](long long norm, CubeRoot chi, double logn) {
    long long pw = 1;
    CubeRoot cm = CubeRoot::one();
    for (int m = 1;; ++m) {
      if (pw > t_max / norm) break;
      pw *= norm;
      cm = cm * chi;
      if (cm.is_zero()) break;
      double re = cm.to_complex().real();
      double base = (kind == CaseKind::Log) ? 2.0 * re / ((double)m * std::pow((double)pw, sigma))
                                            : -2.0 * re * logn * std::pow((double)pw, -sigma);
      vx += base * std::exp(-(double)pw / x);
      vh += base * std::exp(-2.0 * (double)pw / x);
    }
  };
  add(3, CubeRoot::one(), std::log(3.0));  // ramified prime
  for (const PrimeIdealRec& p : primes) {
    if (p.norm > t_max) break;
    if (p.splitting == Splitting::kRamified) continue;
    CubeRoot chi = chi_c(c, p);
    if (chi.is_zero()) continue;
    add(p.norm, chi, std::log((double)p.norm));
  }
  return {vx, vh};
}

}  // namespace

LResult value_smoothed(const ModulusC& c, double sigma, CaseKind kind, const EvalParams& params,
                       std::span<const PrimeIdealRec> primes) {
  // The intended domain is 1/2 < sigma <= 1; a little headroom above 1 is
  // kept so the overlap-regime cross-checks against the prime sums can run.
  if (sigma <= 0.5 || sigma > 1.2)
    throw std::invalid_argument("value_smoothed: need 1/2 < sigma <= 1 (+overlap headroom)");
  params.validate();
  double x = params.smoothing_for(c.norm, sigma);
  long long t_max = params.series_cutoff_for(x);
  if (t_max > 200'000'000LL)
    throw std::invalid_argument("value_smoothed: smoothing scale needs an infeasible series length");
  if (primes.empty() || primes.back().norm < t_max / 2)
    throw std::invalid_argument("value_smoothed: prime table does not cover the series cutoff");

  if (kind == CaseKind::Log) {
    SeriesSums sums = smoothed_ideal_sum(c, sigma, x, t_max, primes);
    double pref = std::pow(3.0, sigma) / (std::pow(3.0, sigma) - 1.0);
    double abs_main = std::abs(sums.main) * pref;
    double abs_half = std::abs(sums.half) * pref;
    LResult r;
    if (abs_main * abs_main < kExclusionThreshold) {
      r.excluded = true;
      return r;
    }
    r.value = 2.0 * std::log(abs_main);  // log L_c = 2 Re log L(sigma, chi_c)
    r.err_est = std::abs(r.value - 2.0 * std::log(std::max(abs_half, 1e-300)));
    return r;
  }

  auto [vx, vh] = smoothed_log_series(c, sigma, kind, x, t_max, primes);
  return {vx, std::abs(vx - vh), false};
}

LResult value_smoothed(const ModulusC& c, double sigma, CaseKind kind, const EvalParams& params) {
  double x = params.smoothing_for(c.norm, sigma);
  auto primes = enumerate_primes(params.series_cutoff_for(x));
  return value_smoothed(c, sigma, kind, params, primes);
}

LResult value_smoothed_prime_series(const ModulusC& c, double sigma, CaseKind kind, double x_smooth,
                                    std::span<const PrimeIdealRec> primes) {
  if (sigma <= 0.5) throw std::invalid_argument("value_smoothed_prime_series: need sigma > 1/2");
  long long t_max = (long long)std::ceil(15.0 * x_smooth);
  if (!primes.empty() && primes.back().norm < t_max) t_max = primes.back().norm;
  auto [vx, vh] = smoothed_log_series(c, sigma, kind, x_smooth, t_max, primes);
  LResult r{vx, std::abs(vx - vh), false};
  if (kind == CaseKind::Log && vx < std::log(kExclusionThreshold)) r.excluded = true;
  return r;
}

double brauer_siegel_constant() {
  return std::log(4.0 * std::sqrt(3.0)) + 2.0 * std::log(std::numbers::pi_v<double>);
}

LResult brauer_siegel_error(const ModulusC& c, const EvalParams& params) {
  LResult r = value_smoothed(c, 1.0, CaseKind::Log, params);
  r.value -= brauer_siegel_constant();
  return r;
}

LResult euler_kronecker(const ModulusC& c, double gamma_k_value, const EvalParams& params) {
  LResult r = value_smoothed(c, 1.0, CaseKind::LogDeriv, params);
  r.value += gamma_k_value;
  return r;
}

}  // namespace cubicdist
