#include "cubicdist/cubic_symbol.hpp"

#include <cassert>
#include <cmath>

namespace cubicdist {

namespace {

constexpr double kSqrt3Over2 = 0.86602540378443864676;

unsigned long long mulmod(unsigned long long a, unsigned long long b, unsigned long long m) {
  return (unsigned long long)((unsigned __int128)a * b % m);
}

long long powmod(long long base, long long exp, long long m) {
  unsigned long long r = 1 % m, b = (unsigned long long)(((base % m) + m) % m);
  while (exp) {
    if (exp & 1) r = mulmod(r, b, m);
    b = mulmod(b, b, m);
    exp >>= 1;
  }
  return (long long)r;
}

long long mod_p(long long v, long long p) { return ((v % p) + p) % p; }

// Residue field F_{p^2} = F_p[w]/(w^2 + w + 1) for inert p.
struct Fp2 {
  long long x, y;  // x + y*w
};

Fp2 fp2_mul(const Fp2& u, const Fp2& v, long long p) {
  long long xx = (long long)mulmod(u.x, v.x, p);
  long long yy = (long long)mulmod(u.y, v.y, p);
  long long cross = ((long long)mulmod(u.x, v.y, p) + (long long)mulmod(u.y, v.x, p)) % p;
  return {mod_p(xx - yy, p), mod_p(cross - yy, p)};
}

Fp2 fp2_pow(Fp2 b, long long e, long long p) {
  Fp2 r{1, 0};
  while (e) {
    if (e & 1) r = fp2_mul(r, b, p);
    b = fp2_mul(b, b, p);
    e >>= 1;
  }
  return r;
}

// zeta3^k for the unit u in {+-1, +-zeta3, +-zeta3^2}; the sign is invisible
// to the symbol since (-1/pi)_3 = 1.
int unit_zeta_exponent(const EisensteinInt& u) {
  if (u.b == 0) return 0;  // +-1
  if (u.a == 0) return 1;  // +-zeta3
  return 2;                // +-zeta3^2 = -+(1 + zeta3)
}

bool divisible_by_lambda(const EisensteinInt& x) { return (x.a + x.b) % 3 == 0; }

}  // namespace

std::complex<double> CubeRoot::to_complex() const {
  switch (code_) {
    case 0: return {1.0, 0.0};
    case 1: return {-0.5, kSqrt3Over2};
    case 2: return {-0.5, -kSqrt3Over2};
    default: return {0.0, 0.0};
  }
}

std::string CubeRoot::label() const {
  switch (code_) {
    case 0: return "1";
    case 1: return "zeta3";
    case 2: return "zeta3^2";
    default: return "0";
  }
}

CubeRoot symbol_prime_oracle(const EisensteinInt& alpha, const EisensteinInt& pi) {
  long long n = pi.norm();
  if (n % 3 == 0) throw std::invalid_argument("symbol_prime_oracle: pi divides 3");
  if (n <= 1) throw std::invalid_argument("symbol_prime_oracle: pi is a unit or zero");

  if (is_prime_ll(n)) {
    // Split prime: O_k/<pi> = F_p with zeta3 -> t, where pi.a + pi.b*t == 0.
    long long p = n;
    long long binv = powmod(mod_p(pi.b, p), p - 2, p);
    long long t = (long long)mulmod(mod_p(-pi.a, p), binv, p);
    assert((mulmod(t, t, p) + t + 1) % p == 0);
    long long a = mod_p(mod_p(alpha.a, p) + (long long)mulmod(mod_p(alpha.b, p), t, p), p);
    if (a == 0) return CubeRoot::zero();
    long long m = powmod(a, (p - 1) / 3, p);
    if (m == 1) return CubeRoot::one();
    if (m == t) return CubeRoot::zeta();
    if (m == (long long)mulmod(t, t, p)) return CubeRoot::zeta2();
    throw std::logic_error("symbol_prime_oracle: residue is not a cube root of unity");
  }

  // Inert prime: n = p^2, residue field F_{p^2} with zeta3 -> w.
  long long p = (long long)std::llround(std::sqrt((double)n));
  while (p * p < n) ++p;
  while (p * p > n) --p;
  if (p * p != n || !is_prime_ll(p)) throw std::invalid_argument("symbol_prime_oracle: pi is not prime");
  Fp2 a{mod_p(alpha.a, p), mod_p(alpha.b, p)};
  if (a.x == 0 && a.y == 0) return CubeRoot::zero();
  Fp2 m = fp2_pow(a, (n - 1) / 3, p);
  if (m.x == 1 && m.y == 0) return CubeRoot::one();
  if (m.x == 0 && m.y == 1) return CubeRoot::zeta();
  if (m.x == p - 1 && m.y == p - 1) return CubeRoot::zeta2();
  throw std::logic_error("symbol_prime_oracle: residue is not a cube root of unity");
}

CubeRoot symbol(EisensteinInt alpha, EisensteinInt lambda) {
  if (lambda.is_zero()) throw std::invalid_argument("symbol: lambda = 0");
  if (divisible_by_lambda(lambda)) throw std::invalid_argument("symbol: lambda divisible by 1 - zeta3");
  if (std::llabs(alpha.a) > kCoordLimit || std::llabs(alpha.b) > kCoordLimit ||
      std::llabs(lambda.a) > kCoordLimit || std::llabs(lambda.b) > kCoordLimit)
    throw std::invalid_argument("symbol: coordinates exceed the documented 128-bit-safe bound");

  CubeRoot acc = CubeRoot::one();
  long long prev_norm = 0;
  (void)prev_norm;
  while (true) {
    long long ln = lambda.norm();
    if (ln == 1) return acc;  // unit denominator: symbol is 1
    assert(prev_norm == 0 || ln < prev_norm);
    prev_norm = ln;

    alpha = mod(alpha, lambda);
    if (alpha.is_zero()) return CubeRoot::zero();

    PrimaryDecomposition ad = primary_associate(alpha);
    EisensteinInt lp = primary_associate(lambda).primary;  // unit factors of the
                                                           // denominator are free
    // lp = 1 + 3a + 3b*zeta3; supplementary formulas:
    //   (zeta3/lp)_3 = zeta3^{-(a+b)},  ((1-zeta3)/lp)_3 = zeta3^{a}.
    long long sa = (lp.a - 1) / 3;
    long long sb = lp.b / 3;
    int uexp = unit_zeta_exponent(ad.unit);
    acc = acc * CubeRoot::from_exponent((int)((-(sa + sb) % 3) * uexp));
    acc = acc * CubeRoot::from_exponent((int)((sa % 3) * ad.lambda_exponent));

    // Cubic reciprocity: (primary/lp) = (lp/primary); recurse with the roles
    // flipped. The new denominator norm is at most (3/4) of the old one.
    alpha = lp;
    lambda = ad.primary;
  }
}

CubeRoot chi_c(const ModulusC& c, const EisensteinInt& ideal_gen) {
  if (ideal_gen.is_zero()) throw std::invalid_argument("chi_c: zero ideal");
  EisensteinInt a = primary_associate(ideal_gen).primary;
  return symbol(a, c.value);
}

CubeRoot chi_c(const ModulusC& c, const PrimeIdealRec& p) {
  if (p.splitting == Splitting::kRamified) return CubeRoot::one();
  // (pi/c)_3 = (c/pi)_3 by reciprocity; reducing c mod pi first is cheaper
  // when N(pi) is large.
  return symbol(c.value, p.generator);
}

}  // namespace cubicdist
