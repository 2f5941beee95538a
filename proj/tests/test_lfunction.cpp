#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "cubicdist/dedekind.hpp"
#include "cubicdist/lfunction.hpp"
#include "cubicdist/oracles.hpp"
#include "cubicdist/parallel.hpp"

using namespace cubicdist;

TEST_CASE("eval params validation") {
  EvalParams p;
  p.prime_cutoff = 5;
  CHECK_THROWS_AS(p.validate(), std::invalid_argument);
  p = {};
  p.smoothing = 0.5;
  CHECK_THROWS_AS(p.validate(), std::invalid_argument);
  p = {};
  p.series_cutoff = 10;
  CHECK_THROWS_AS(p.validate(), std::invalid_argument);
  p = {};
  CHECK_NOTHROW(p.validate());
  CHECK(p.smoothing_for(100, 1.0) == doctest::Approx(1e5));
  CHECK(p.smoothing_for(100, 0.75) == doctest::Approx(4e5));  // (0.5/0.25)^2 = 4
}

TEST_CASE("domain guards") {
  ModulusC c = ModulusC::make_checked({1, 9});
  EvalParams p;
  CHECK_THROWS_AS(log_Lc(c, 1.0, p), std::invalid_argument);
  CHECK_THROWS_AS(logderiv_Lc(c, 0.9, p), std::invalid_argument);
  CHECK_THROWS_AS(value_smoothed(c, 0.5, CaseKind::Log, p), std::invalid_argument);
  CHECK_THROWS_AS(value_smoothed(c, 2.0, CaseKind::Log, p), std::invalid_argument);
}

TEST_CASE("euler product vs double Dirichlet series at sigma 2") {
  // the two norm-73 moduli, against the smoothed double-series oracle
  for (auto v : {EisensteinInt{1, 9}, EisensteinInt{-8, -9}}) {
    ModulusC c = ModulusC::make_checked(v);
    EvalParams p;
    p.prime_cutoff = 300000;
    double euler = log_Lc(c, 2.0, p).value;
    double series = log_Lc_double_series(c, 2.0, 3000000, 3e7);
    CHECK(std::abs(euler - series) < 1e-6);
  }
}

TEST_CASE("conjugate modulus gives the same values") {
  EvalParams p;
  p.prime_cutoff = 50000;
  auto primes = enumerate_primes(p.prime_cutoff);
  for (auto v : {EisensteinInt{1, 9}, EisensteinInt{10, 18}, EisensteinInt{-17, -9}}) {
    ModulusC c = ModulusC::make_checked(v);
    ModulusC cc = ModulusC::make_checked(conj(v));
    CHECK(log_Lc(c, 2.0, p, primes).value ==
          doctest::Approx(log_Lc(cc, 2.0, p, primes).value).epsilon(1e-12));
    CHECK(logderiv_Lc(c, 1.5, p, primes).value ==
          doctest::Approx(logderiv_Lc(cc, 1.5, p, primes).value).epsilon(1e-12));
  }
}

TEST_CASE("cutoff doubling stays within the reported tail bound") {
  ModulusC c = ModulusC::make_checked({10, 0});
  EvalParams lo, hi;
  lo.prime_cutoff = 100000;
  hi.prime_cutoff = 200000;
  LResult a = log_Lc(c, 2.0, lo), b = log_Lc(c, 2.0, hi);
  CHECK(std::abs(a.value - b.value) < a.err_est);
  LResult a2 = logderiv_Lc(c, 1.5, lo), b2 = logderiv_Lc(c, 1.5, hi);
  CHECK(std::abs(a2.value - b2.value) < a2.err_est);
}

TEST_CASE("finite difference duality at sigma 2") {
  EvalParams p;
  auto primes = enumerate_primes(p.prime_cutoff);
  const double h = 1e-4;
  for (const ModulusC& c : enumerate_C(400)) {
    double fd = (log_Lc(c, 2.0 + h, p, primes).value - log_Lc(c, 2.0 - h, p, primes).value) / (2 * h);
    double ld = logderiv_Lc(c, 2.0, p, primes).value;
    CHECK(std::abs(fd - ld) / std::abs(ld) < 1e-3);
  }
}

TEST_CASE("smoothed evaluator against the prime sums in the overlap regime") {
  // at sigma = 1.01 both devices are usable; they agree within the combined
  // error estimates
  EvalParams prime_params;
  prime_params.prime_cutoff = 2000000;
  auto primes = enumerate_primes(prime_params.prime_cutoff);
  auto mods = enumerate_C(900);  // 20 smallest moduli
  REQUIRE(mods.size() >= 20);
  mods.resize(20);
  parallel_for(mods.size(), 2, [&](size_t i) {
    const ModulusC& c = mods[i];
    EvalParams sp;
    sp.smoothing = 50000;
    LResult smooth1 = value_smoothed(c, 1.01, CaseKind::Log, sp, primes);
    LResult euler1 = log_Lc(c, 1.01, prime_params, primes);
    CHECK(std::abs(smooth1.value - euler1.value) <
          std::max(0.02, 3 * (smooth1.err_est + euler1.err_est)));
    LResult smooth2 = value_smoothed(c, 1.01, CaseKind::LogDeriv, sp, primes);
    LResult euler2 = logderiv_Lc(c, 1.01, prime_params, primes);
    CHECK(std::abs(smooth2.value - euler2.value) <
          std::max(0.05, 3 * (smooth2.err_est + euler2.err_est)));
  });
}

TEST_CASE("the two smoothed devices agree at sigma 1") {
  // Case 1: log of the smoothed series vs the smoothed logarithmic series
  auto primes = enumerate_primes(1600000);
  for (const ModulusC& c : enumerate_C(300)) {
    EvalParams sp;
    sp.smoothing = 100000;
    double a = value_smoothed(c, 1.0, CaseKind::Log, sp, primes).value;
    double b = value_smoothed_prime_series(c, 1.0, CaseKind::Log, 1e5, primes).value;
    CHECK(std::abs(a - b) < 2e-3);
  }
}

TEST_CASE("smoothed values are finite and real across the family at sigma 0.9") {
  EvalParams sp;
  sp.smoothing = 10000;
  auto primes = enumerate_primes(160000);
  auto mods = enumerate_C(10000);
  std::vector<int> bad(mods.size(), 0);
  parallel_for(mods.size(), 2, [&](size_t i) {
    LResult r = value_smoothed(mods[i], 0.9, CaseKind::Log, sp, primes);
    if (!std::isfinite(r.value) || r.excluded) bad[i] = 1;
  });
  long long nbad = 0;
  for (int b : bad) nbad += b;
  CHECK(nbad == 0);
}

TEST_CASE("doubling the smoothing scale is stable at sigma 1") {
  // relative change < 1e-3 with X = 1e3 N(c) against 2X
  auto primes = enumerate_primes(13000000);
  auto mods = enumerate_C(400);
  std::vector<double> rel(mods.size(), 0.0);
  parallel_for(mods.size(), 2, [&](size_t i) {
    const ModulusC& c = mods[i];
    EvalParams p1, p2;
    p1.smoothing = 1e3 * (double)c.norm;
    p2.smoothing = 2e3 * (double)c.norm;
    double a = value_smoothed(c, 1.0, CaseKind::Log, p1, primes).value;
    double b = value_smoothed(c, 1.0, CaseKind::Log, p2, primes).value;
    rel[i] = std::abs(a - b) / std::max(1e-9, std::abs(b));
  });
  for (double r : rel) CHECK(r < 1e-3);
}

TEST_CASE("primes dividing the modulus contribute nothing") {
  // c = 154 = 2 * 7 * 11 lies in the family and is divisible by every prime
  // ideal of norm <= 7, so with that cutoff only the leading terms survive.
  ModulusC c = ModulusC::make_checked({154, 0});
  EvalParams p;
  p.prime_cutoff = 7;
  double sigma = 2.0;
  CHECK(logderiv_Lc(c, sigma, p).value ==
        doctest::Approx(-2.0 * std::log(3.0) / (std::pow(3.0, sigma) - 1.0)).epsilon(1e-14));
  CHECK(log_Lc(c, sigma, p).value ==
        doctest::Approx(-2.0 * std::log1p(-std::pow(3.0, -sigma))).epsilon(1e-14));
  // and chi_c vanishes there
  for (const auto& q : enumerate_primes(7))
    if (q.splitting != Splitting::kRamified) CHECK(chi_c(c, q).is_zero());
}

TEST_CASE("larger smoothing scales shrink the self-reported error") {
  auto primes = enumerate_primes(1400000);
  auto mods = enumerate_C(600);
  double small_x = 0.0, big_x = 0.0;
  for (const ModulusC& c : mods) {
    small_x += value_smoothed_prime_series(c, 1.0, CaseKind::LogDeriv, 1e4, primes).err_est;
    big_x += value_smoothed_prime_series(c, 1.0, CaseKind::LogDeriv, 9e4, primes).err_est;
  }
  CHECK(big_x < small_x);
}

TEST_CASE("corollary transforms") {
  ModulusC c = ModulusC::make_checked({1, 9});
  EvalParams p;
  p.smoothing = 30000;
  LResult logl = value_smoothed(c, 1.0, CaseKind::Log, p);
  LResult e = brauer_siegel_error(c, p);
  CHECK(e.value == doctest::Approx(logl.value - brauer_siegel_constant()).epsilon(1e-12));
  // sign sanity: negative whenever L_c(1) < 4 sqrt3 pi^2 ~ 68.4
  const double pi = 3.14159265358979323846;
  CHECK(brauer_siegel_constant() == doctest::Approx(std::log(4.0 * std::sqrt(3.0) * pi * pi)).epsilon(1e-12));
  if (logl.value < brauer_siegel_constant()) CHECK(e.value < 0.0);

  double gk = gamma_k();
  LResult ld = value_smoothed(c, 1.0, CaseKind::LogDeriv, p);
  LResult ek = euler_kronecker(c, gk, p);
  CHECK(ek.value == doctest::Approx(ld.value + gk).epsilon(1e-12));
}
