#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <complex>

#include "cubicdist/charfn.hpp"
#include "cubicdist/density.hpp"
#include "cubicdist/empirics.hpp"
#include "cubicdist/randmodel.hpp"

using namespace cubicdist;

TEST_CASE("config validation") {
  ModelConfig bad;
  bad.n_samples = 0;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  bad = {};
  bad.prime_cutoff = 2;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
}

TEST_CASE("cutoff 3 leaves only the deterministic ramified term") {
  ModelConfig cfg;
  cfg.sigma = 1.0;
  cfg.kind = CaseKind::Log;
  cfg.prime_cutoff = 3;
  cfg.n_samples = 1;
  auto s = sample_sum(cfg);
  REQUIRE(s.size() == 1);
  CHECK(s[0] == doctest::Approx(-atom(3, {Complex{1.0, 0.0}, CaseKind::Log, 0})).epsilon(1e-15));
  CHECK(s[0] == doctest::Approx(-2.0 * std::log(2.0 / 3.0)));
}

TEST_CASE("same seed, same output, any thread count") {
  ModelConfig cfg;
  cfg.sigma = 1.0;
  cfg.kind = CaseKind::LogDeriv;
  cfg.prime_cutoff = 2000;
  cfg.n_samples = 5000;
  cfg.seed = 424242;
  auto a = sample_sum(cfg, 1);
  auto b = sample_sum(cfg, 2);
  auto c = sample_sum(cfg, 7);
  CHECK(a == b);
  CHECK(a == c);
  cfg.seed = 424243;
  CHECK(sample_sum(cfg, 2) != a);
}

TEST_CASE("per-prime law frequencies") {
  // with cutoff 4 exactly one unramified prime (norm 4) contributes
  ModelConfig cfg;
  cfg.sigma = 1.0;
  cfg.kind = CaseKind::Log;
  cfg.prime_cutoff = 4;
  cfg.n_samples = 200000;
  cfg.seed = 5;
  auto s = sample_sum(cfg, 2);
  double ram = -atom(3, {Complex{1.0, 0.0}, CaseKind::Log, 0});
  double a0 = -atom(4, {Complex{1.0, 0.0}, CaseKind::Log, 0});
  double a1 = -atom(4, {Complex{1.0, 0.0}, CaseKind::Log, 1});
  long long n0 = 0, nj0 = 0, nj12 = 0;
  for (double v : s) {
    double x = v - ram;
    if (std::abs(x) < 1e-12) ++n0;
    else if (std::abs(x - a0) < 1e-12) ++nj0;
    else if (std::abs(x - a1) < 1e-12) ++nj12;
    else FAIL("sample off the atom set");
  }
  double n = (double)cfg.n_samples;
  // masses 1/5, 4/15, 8/15 (the two conjugate atoms coincide numerically)
  CHECK(std::abs(n0 / n - 0.2) < 4.0 * std::sqrt(0.2 * 0.8 / n));
  CHECK(std::abs(nj0 / n - 4.0 / 15.0) < 4.0 * std::sqrt(4.0 / 15.0 * 11.0 / 15.0 / n));
  CHECK(std::abs(nj12 / n - 8.0 / 15.0) < 4.0 * std::sqrt(8.0 / 15.0 * 7.0 / 15.0 / n));
}

TEST_CASE("sample mean matches the density moment at sigma 2") {
  ModelConfig cfg;
  cfg.sigma = 2.0;
  cfg.kind = CaseKind::Log;
  cfg.prime_cutoff = 10000;
  cfg.n_samples = 400000;
  cfg.seed = 99;
  auto s = sample_sum(cfg, 2);
  double mean = 0.0, var = 0.0;
  for (double v : s) mean += v;
  mean /= (double)s.size();
  for (double v : s) var += (v - mean) * (v - mean);
  var /= (double)s.size();
  QuadratureParams q;
  q.prime_cutoff = 10000;
  DensityGrid g = invert(2.0, CaseKind::Log, {}, q);
  double se = std::sqrt(var / (double)s.size());
  CHECK(std::abs(mean - g.mean()) <= 3.5 * se);
}

TEST_CASE("empirical characteristic function matches the product") {
  ModelConfig cfg;
  cfg.sigma = 1.0;
  cfg.kind = CaseKind::LogDeriv;
  cfg.prime_cutoff = 5000;
  cfg.n_samples = 300000;
  cfg.seed = 7;
  auto s = sample_sum(cfg, 2);
  const double y = 1.0;
  std::complex<double> acc = 0.0;
  for (double v : s) acc += std::polar(1.0, y * v);
  acc /= (double)s.size();
  Complex predicted = char_fn(Complex{1.0, 0.0}, y, cfg.kind, cfg.prime_cutoff).value;
  double se = 1.0 / std::sqrt((double)cfg.n_samples);  // |e^{iyX}| = 1 bounds both parts
  CHECK(std::abs(acc - predicted) <= 3.5 * se);
}

TEST_CASE("model cdf against the inverted density") {
  ModelConfig cfg;
  cfg.sigma = 1.0;
  cfg.kind = CaseKind::Log;
  cfg.prime_cutoff = 50000;
  cfg.n_samples = 200000;
  cfg.seed = 2024;
  auto samples = sample_sum(cfg, 2);
  auto sorted = model_cdf(samples);
  CHECK(sorted.size() == samples.size());
  CHECK(std::is_sorted(sorted.begin(), sorted.end()));
  QuadratureParams q;
  q.prime_cutoff = 50000;
  DensityGrid g = invert(1.0, CaseKind::Log, {}, q);
  CHECK(ks_distance(make_ecdf(samples), g) <= 0.02);
}
