#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "cubicdist/cubic_symbol.hpp"
#include "cubicdist/oracles.hpp"

using namespace cubicdist;

namespace {

EisensteinInt rand_elem(std::mt19937_64& rng, long long m) {
  std::uniform_int_distribution<long long> d(-m, m);
  while (true) {
    EisensteinInt x{d(rng), d(rng)};
    if (!x.is_zero()) return x;
  }
}

EisensteinInt rand_primary(std::mt19937_64& rng, long long m) {
  while (true) {
    auto pd = primary_associate(rand_elem(rng, m));
    if (!pd.primary.is_unit()) return pd.primary;
  }
}

}  // namespace

TEST_CASE("cube root algebra") {
  CHECK(CubeRoot::zeta() * CubeRoot::zeta() == CubeRoot::zeta2());
  CHECK(CubeRoot::zeta() * CubeRoot::zeta2() == CubeRoot::one());
  CHECK((CubeRoot::zero() * CubeRoot::zeta()).is_zero());
  CHECK(CubeRoot::zeta().conj() == CubeRoot::zeta2());
  CHECK(CubeRoot::zeta().pow(3) == CubeRoot::one());
  CHECK(CubeRoot::from_exponent(-1) == CubeRoot::zeta2());
  CHECK(CubeRoot::one().label() == "1");
  CHECK(CubeRoot::zero().label() == "0");
}

TEST_CASE("prime oracle basics") {
  auto primes = enumerate_primes(200);
  for (const auto& p : primes) {
    if (p.splitting == Splitting::kRamified) continue;
    CHECK(symbol_prime_oracle({1, 0}, p.generator) == CubeRoot::one());
    CHECK(symbol_prime_oracle(p.generator * EisensteinInt{5, 2}, p.generator).is_zero());
  }
  // (2 / (1 + 3 zeta3))_3 = zeta3^2: the residue field has 7 elements with
  // zeta3 -> 2, and 2^2 = 4 is the image of zeta3^2.
  CHECK(symbol_prime_oracle({2, 0}, {1, 3}) == CubeRoot::zeta2());
  CHECK(symbol({2, 0}, {1, 3}) == CubeRoot::zeta2());
}

TEST_CASE("symbol base cases") {
  std::mt19937_64 rng(11);
  for (const auto& u : units()) {
    CHECK(symbol({5, 1}, u) == CubeRoot::one());  // unit denominator
  }
  for (int i = 0; i < 200; ++i) {
    EisensteinInt l = rand_primary(rng, 2000);
    CHECK(symbol({-1, 0}, l) == CubeRoot::one());
    CHECK(symbol({1, 0}, l) == CubeRoot::one());
  }
  CHECK_THROWS_AS(symbol({1, 0}, {0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(symbol({1, 0}, {3, 0}), std::invalid_argument);  // 3 = -zeta3^2 (1-zeta3)^2
}

TEST_CASE("fast symbol equals factored oracle") {
  // complete sweep over all valid denominators of norm <= 300, random alphas
  std::mt19937_64 rng(12);
  long long checked = 0;
  for (long long a = -20; a <= 20; ++a) {
    for (long long b = -20; b <= 20; ++b) {
      EisensteinInt l{a, b};
      long long n = l.norm();
      if (n < 2 || n > 300 || (a + b) % 3 == 0) continue;
      for (int k = 0; k < 10; ++k) {
        EisensteinInt alpha = rand_elem(rng, 500);
        CHECK(symbol(alpha, l) == symbol_factored_oracle(alpha, l));
        ++checked;
      }
    }
  }
  CHECK(checked > 2000);
  // random larger denominators
  for (int i = 0; i < 2000; ++i) {
    EisensteinInt l = rand_elem(rng, 60);
    if ((l.a + l.b) % 3 == 0 || l.norm() < 2) continue;
    EisensteinInt alpha = rand_elem(rng, 100000);
    CHECK(symbol(alpha, l) == symbol_factored_oracle(alpha, l));
  }
}

TEST_CASE("fast symbol equals prime oracle on random prime pairs") {
  auto primes = enumerate_primes(100000);
  std::mt19937_64 rng(13);
  std::uniform_int_distribution<size_t> pick(0, primes.size() - 1);
  int done = 0;
  while (done < 10000) {
    const auto& p = primes[pick(rng)];
    if (p.splitting == Splitting::kRamified) continue;
    EisensteinInt alpha = rand_elem(rng, 1000000);
    CHECK(symbol(alpha, p.generator) == symbol_prime_oracle(alpha, p.generator));
    ++done;
  }
}

TEST_CASE("reciprocity for primary pairs") {
  std::mt19937_64 rng(14);
  int done = 0;
  while (done < 1000) {
    EisensteinInt a = rand_primary(rng, 3000), l = rand_primary(rng, 3000);
    if (!gcd(a, l).is_unit()) continue;
    CHECK(symbol(a, l) == symbol(l, a));
    ++done;
  }
}

TEST_CASE("periodicity in the numerator") {
  auto primes = enumerate_primes(50000);
  std::mt19937_64 rng(15);
  std::uniform_int_distribution<size_t> pick(0, primes.size() - 1);
  std::uniform_int_distribution<long long> mul(-50, 50);
  for (int i = 0; i < 1000; ++i) {
    const auto& p = primes[pick(rng)];
    if (p.splitting == Splitting::kRamified) continue;
    EisensteinInt alpha = rand_elem(rng, 10000);
    EisensteinInt beta = alpha + p.generator * EisensteinInt{mul(rng), mul(rng)};
    CHECK(symbol(alpha, p.generator) == symbol(beta, p.generator));
  }
}

TEST_CASE("complete multiplicativity in the numerator") {
  std::mt19937_64 rng(16);
  for (int i = 0; i < 1000; ++i) {
    EisensteinInt l = rand_primary(rng, 1000);
    EisensteinInt a = rand_elem(rng, 10000), b = rand_elem(rng, 10000);
    CHECK(symbol(a * b, l) == symbol(a, l) * symbol(b, l));
  }
}

TEST_CASE("supplementary formulas against the oracle") {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 500; ++i) {
    EisensteinInt l = rand_primary(rng, 300);
    long long sa = (l.a - 1) / 3, sb = l.b / 3;
    CubeRoot expect_zeta = CubeRoot::from_exponent((int)(((-(sa + sb)) % 3 + 3) % 3));
    CubeRoot expect_lam = CubeRoot::from_exponent((int)((sa % 3 + 3) % 3));
    CHECK(symbol({0, 1}, l) == expect_zeta);
    CHECK(symbol(kLambda, l) == expect_lam);
    CHECK(symbol_factored_oracle({0, 1}, l) == expect_zeta);
    CHECK(symbol_factored_oracle(kLambda, l) == expect_lam);
  }
}

TEST_CASE("hecke character chi_c") {
  ModulusC c = ModulusC::make_checked({1, 9});
  CHECK(chi_c(c, kLambda) == CubeRoot::one());           // ramified ideal
  CHECK(chi_c(c, EisensteinInt{1, 0}) == CubeRoot::one());  // unit ideal
  auto primes = enumerate_primes(3000);
  for (const auto& p : primes) {
    CHECK(chi_c(c, p.generator) == chi_c(c, p));
  }

  // multiplicativity on random ideal generators
  std::mt19937_64 rng(18);
  auto cs = enumerate_C(5000);
  std::uniform_int_distribution<size_t> pick(0, cs.size() - 1);
  for (int i = 0; i < 1000; ++i) {
    const ModulusC& cc = cs[pick(rng)];
    EisensteinInt g1 = rand_elem(rng, 3000), g2 = rand_elem(rng, 3000);
    CHECK(chi_c(cc, g1 * g2) == chi_c(cc, g1) * chi_c(cc, g2));
  }

  // chi_c cubed is trivial whenever nonzero
  for (int i = 0; i < 500; ++i) {
    const ModulusC& cc = cs[pick(rng)];
    EisensteinInt g = rand_elem(rng, 3000);
    CubeRoot v = chi_c(cc, g);
    if (!v.is_zero()) CHECK(v * v * v == CubeRoot::one());
  }
}
