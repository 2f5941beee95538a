#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <cstdio>
#include <filesystem>

#include "cubicdist/empirics.hpp"

using namespace cubicdist;

TEST_CASE("ecdf is a step function from 0 to 1") {
  Ecdf e = make_ecdf(std::vector<double>{3.0, 1.0, 2.0, 2.0});
  REQUIRE(e.values.size() == 4);
  CHECK(e.values.front() == 1.0);
  CHECK(e.cum.front() == doctest::Approx(0.25));
  CHECK(e.cum.back() == doctest::Approx(1.0));
  for (size_t i = 1; i < e.cum.size(); ++i) CHECK(e.cum[i] >= e.cum[i - 1]);
  CHECK_THROWS_AS(make_ecdf(std::vector<double>{}), std::invalid_argument);
}

TEST_CASE("ks distance trivial cases") {
  QuadratureParams q;
  q.prime_cutoff = 5000;
  DensityGrid g = invert(1.0, CaseKind::Log, {}, q);
  CHECK(ks_distance(g, g) == 0.0);
  DensityGrid shifted = g;
  for (double& z : shifted.z_values) z += 10.0;
  CHECK(ks_distance(g, shifted) > 0.99);
}

TEST_CASE("family evaluation at the smallest scale") {
  EvalParams p;
  FamilyOptions opts;
  opts.threads = 2;
  FamilyEvaluation fam = empirical_cdf(73, 2.0, CaseKind::Log, p, opts);
  REQUIRE(fam.samples.size() == 2);  // exactly the two norm-73 moduli
  CHECK(fam.samples[0].modulus.norm == 73);
  CHECK(fam.samples[1].modulus.norm == 73);
  CHECK(fam.samples[0].value == doctest::Approx(fam.samples[1].value).epsilon(1e-12));
  CHECK(fam.n_excluded == 0);
  CHECK_THROWS_AS(empirical_cdf(72, 2.0, CaseKind::Log, p, opts), std::invalid_argument);
}

TEST_CASE("cache round trip") {
  std::string dir = "test_cache_tmp";
  std::filesystem::remove_all(dir);
  EvalParams p;
  FamilyOptions opts;
  opts.threads = 2;
  opts.cache_dir = dir;
  FamilyEvaluation a = empirical_cdf(2000, 1.0, CaseKind::LogDeriv, p, opts);
  FamilyEvaluation b = empirical_cdf(2000, 1.0, CaseKind::LogDeriv, p, opts);  // from disk
  REQUIRE(a.samples.size() == b.samples.size());
  for (size_t i = 0; i < a.samples.size(); ++i) {
    CHECK(a.samples[i].modulus.value == b.samples[i].modulus.value);
    CHECK(a.samples[i].value == doctest::Approx(b.samples[i].value).epsilon(1e-15));
  }
  std::filesystem::remove_all(dir);
}

TEST_CASE("easy-regime agreement with the prediction at sigma 2") {
  EvalParams p;
  p.prime_cutoff = 10000;
  FamilyOptions opts;
  opts.threads = 2;
  FamilyEvaluation fam = empirical_cdf(100000, 2.0, CaseKind::Log, p, opts);
  QuadratureParams q;
  q.prime_cutoff = 20000;
  DensityGrid g = invert(2.0, CaseKind::Log, {}, q);
  CHECK(ks_distance(fam.ecdf(), g) <= 0.05);
  CHECK(fam.n_excluded == 0);
  // the weighted variant stays in the same ballpark
  CHECK(ks_distance(fam.ecdf_weighted(100000), g) <= 0.08);
}

TEST_CASE("agreement with the prediction at sigma 1.5") {
  EvalParams p;
  p.prime_cutoff = 30000;
  FamilyOptions opts;
  opts.threads = 2;
  FamilyEvaluation fam = empirical_cdf(20000, 1.5, CaseKind::LogDeriv, p, opts);
  QuadratureParams q;
  q.prime_cutoff = 30000;
  DensityGrid g = invert(1.5, CaseKind::LogDeriv, {}, q);
  CHECK(ks_distance(fam.ecdf(), g) <= 0.10);
}

TEST_CASE("local census and divisor probabilities") {
  auto primes = enumerate_primes(13);
  const PrimeIdealRec* p4 = nullptr;
  const PrimeIdealRec* p7 = nullptr;
  for (const auto& p : primes) {
    if (p.norm == 4) p4 = &p;
    if (p.norm == 7 && !p7) p7 = &p;
  }
  REQUIRE(p4 != nullptr);
  REQUIRE(p7 != nullptr);

  const long long y = 200000;
  for (const PrimeIdealRec* p : {p4, p7}) {
    LocalCensus census = local_census(*p, y);
    double n = (double)census.n_total;
    double pd = 1.0 / ((double)p->norm + 1.0);
    CHECK(std::abs((double)census.n_divisible / n - pd) <= 4.0 * std::sqrt(pd * (1 - pd) / n));
    double qs = (double)p->norm / (3.0 * ((double)p->norm + 1.0));
    for (int j = 0; j < 3; ++j) {
      CHECK(std::abs((double)census.n_symbol[j] / n - qs) <= 4.0 * std::sqrt(qs * (1 - qs) / n));
    }
    CHECK(census.n_divisible + census.n_symbol[0] + census.n_symbol[1] + census.n_symbol[2] ==
          census.n_total);
  }

  // a prime larger than every modulus norm divides nothing
  auto big = enumerate_primes(10009);
  const PrimeIdealRec* pbig = &big.back();
  CHECK(pbig->norm > 10000);
  CHECK(divisor_probability(*pbig, 10000) == 0.0);
  CHECK_THROWS_AS(divisor_probability(*p4, 500), std::invalid_argument);  // < 100 moduli
}

TEST_CASE("counting asymptotics at desk scale") {
  CountReport r72 = count_C(72, 2);
  CHECK(r72.count == 0);

  CountReport rep = count_C(300000, 2);
  CHECK(rep.predicted_slope == doctest::Approx(0.0392).epsilon(0.02));
  double ratio = (double)rep.count / (double)rep.max_norm / rep.predicted_slope;
  CHECK(std::abs(ratio - 1.0) < 0.05);
  double wratio = rep.weighted / (double)rep.max_norm / rep.predicted_slope;
  CHECK(std::abs(wratio - 1.0) < 0.05);
  CHECK(rep.weighted <= std::exp(1.0) * (double)rep.count);  // coarse sanity

  // restricted to ideals coprime to <1> reduces to the full weighted count
  RestrictedCount r1 = restricted_count({1, 0}, 300000, 2);
  CHECK(r1.weighted == doctest::Approx(rep.weighted).epsilon(1e-12));
  CHECK(r1.predicted == doctest::Approx(rep.predicted_slope * 300000).epsilon(1e-12));

  // Euler factor for <2> is (1 + 1/4)^{-1} = 0.8 exactly
  RestrictedCount r2 = restricted_count({2, 0}, 300000, 2);
  CHECK(r2.predicted == doctest::Approx(0.8 * rep.predicted_slope * 300000).epsilon(1e-12));
  CHECK(std::abs(r2.weighted / r2.predicted - 1.0) < 0.05);

  CHECK_THROWS_AS(restricted_count({3, 0}, 1000, 2), std::invalid_argument);  // not coprime to <3>
}
