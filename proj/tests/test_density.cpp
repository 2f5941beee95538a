#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>

#include "cubicdist/density.hpp"

using namespace cubicdist;

namespace {

DensityGrid make_grid(double sigma, CaseKind k, long long cutoff = 20000) {
  QuadratureParams q;
  q.prime_cutoff = cutoff;
  return invert(sigma, k, {}, q);
}

}  // namespace

TEST_CASE("normalization, positivity, monotone cdf") {
  for (CaseKind k : {CaseKind::Log, CaseKind::LogDeriv}) {
    DensityGrid g = make_grid(1.0, k);
    CHECK(std::abs(g.total_mass() - 1.0) <= 1e-3);
    CHECK(g.refine_error <= 1e-5);
    for (double m : g.m_values) CHECK(m >= -1e-6);
    for (size_t i = 1; i < g.cdf_values.size(); ++i)
      CHECK(g.cdf_values[i] >= g.cdf_values[i - 1] - 1e-9);
    // smoothness proxy: bounded second divided differences
    double worst = 0.0, h = g.z_values[1] - g.z_values[0];
    for (size_t i = 1; i + 1 < g.m_values.size(); ++i)
      worst = std::max(worst, std::abs(g.m_values[i + 1] - 2 * g.m_values[i] + g.m_values[i - 1]));
    CHECK(worst < 50.0 * h);  // no oscillation artifacts at the 0.01 step
  }
}

TEST_CASE("moment--derivative duality") {
  for (double sigma : {1.0, 2.0}) {
    for (CaseKind k : {CaseKind::Log, CaseKind::LogDeriv}) {
      DensityGrid g = make_grid(sigma, k);
      double h = 1e-3;
      Complex ph = char_fn(Complex{sigma, 0.0}, h, k, unramified_prime_norms(g.prime_cutoff)).value;
      CHECK(std::abs(g.mean() - ph.imag() / h) <= 1e-3);
    }
  }
}

TEST_CASE("quadrature self-test reacts to the step") {
  // halving the step should keep values stable well below the tolerance
  QuadratureParams q;
  q.prime_cutoff = 20000;
  DensityGrid a = invert(1.0, CaseKind::Log, {}, q);
  q.y_step = a.y_step / 2.0;
  q.y_max = a.y_max;
  DensityGrid b = invert(1.0, CaseKind::Log, a.z_values, q);
  double worst = 0.0;
  for (size_t i = 0; i < a.m_values.size(); ++i)
    worst = std::max(worst, std::abs(a.m_values[i] - b.m_values[i]));
  CHECK(worst < 1e-5);
}

TEST_CASE("cdf_at") {
  DensityGrid g = make_grid(1.0, CaseKind::Log);
  CHECK(cdf_at(g, g.z_values.front() - 5.0) == 0.0);
  CHECK(cdf_at(g, g.z_values.back() + 5.0) == 1.0);

  // a unique median crossing on the bulk
  double lo = g.z_values.front(), hi = g.z_values.back();
  for (int i = 0; i < 60; ++i) {
    double mid = 0.5 * (lo + hi);
    (cdf_at(g, mid) < 0.5 ? lo : hi) = mid;
  }
  CHECK(cdf_at(g, lo) == doctest::Approx(0.5).epsilon(1e-3));

  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> zd(g.z_values.front(), g.z_values.back());
  for (int i = 0; i < 1000; ++i) {
    double z1 = zd(rng), z2 = zd(rng);
    if (z1 > z2) std::swap(z1, z2);
    CHECK(cdf_at(g, z1) <= cdf_at(g, z2) + 1e-9);
  }
}

TEST_CASE("non-convergence is signalled") {
  QuadratureParams q;
  q.prime_cutoff = 1000;
  q.y_max_cap = 60.0;  // |phi| cannot fall below the floor this early at sigma = 1
  CHECK_THROWS_AS(invert(1.0, CaseKind::Log, {}, q), NonConvergence);
  CHECK_THROWS_AS(invert(0.4, CaseKind::Log, {}, QuadratureParams{}), std::invalid_argument);
}
