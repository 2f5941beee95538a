#include "cubicdist/eisenstein.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <cstdio>

namespace cubicdist {

namespace {

void check_coords(const EisensteinInt& x, const char* where) {
  if (std::llabs(x.a) > kCoordLimit || std::llabs(x.b) > kCoordLimit) {
    throw std::invalid_argument(std::string(where) + ": coordinates exceed the documented 128-bit-safe bound");
  }
}

int mod3(long long v) { return (int)(((v % 3) + 3) % 3); }

// Round n/d to the nearest integer, d > 0.
long long div_round(__int128 n, long long d) {
  __int128 half = d / 2;
  if (n >= 0) return (long long)((n + half) / d);
  return -(long long)((-n + half) / d);
}

unsigned long long mulmod_u64(unsigned long long a, unsigned long long b, unsigned long long m) {
  return (unsigned long long)((unsigned __int128)a * b % m);
}

unsigned long long powmod_u64(unsigned long long base, unsigned long long exp, unsigned long long m) {
  unsigned long long r = 1 % m;
  base %= m;
  while (exp) {
    if (exp & 1) r = mulmod_u64(r, base, m);
    base = mulmod_u64(base, base, m);
    exp >>= 1;
  }
  return r;
}

// A primitive cube root of unity mod p, p == 1 (mod 3): g^((p-1)/3) for the
// first g that gives an element of order 3.
long long cube_root_of_unity_mod(long long p) {
  for (long long g = 2;; ++g) {
    long long t = (long long)powmod_u64(g, (unsigned long long)(p - 1) / 3, p);
    if (t != 1) {
      unsigned long long chk = (mulmod_u64(t, t, p) + t + 1) % p;
      if (chk != 0) throw std::logic_error("cube_root_of_unity_mod: bad root");
      return t;
    }
  }
}

PrimeIdealRec ramified_record() { return {kLambda, 3, Splitting::kRamified}; }

PrimeIdealRec inert_record(long long p) {
  // -p is the generator == 1 mod <3> when p == 2 (mod 3).
  return {{-p, 0}, p * p, Splitting::kInert};
}

std::pair<PrimeIdealRec, PrimeIdealRec> split_records(long long p) {
  long long t = cube_root_of_unity_mod(p);
  // The prime above p containing zeta3 - t.
  EisensteinInt g = gcd(EisensteinInt{p, 0}, EisensteinInt{-t, 1});
  if (g.norm() != p) throw std::logic_error("split_records: gcd norm mismatch");
  EisensteinInt pi = primary_associate(g).primary;
  EisensteinInt pibar = primary_associate(conj(pi)).primary;
  PrimeIdealRec r1{pi, p, Splitting::kSplit};
  PrimeIdealRec r2{pibar, p, Splitting::kSplit};
  if (std::tie(r2.generator.a, r2.generator.b) < std::tie(r1.generator.a, r1.generator.b)) std::swap(r1, r2);
  return {r1, r2};
}

}  // namespace

const std::array<EisensteinInt, 6>& units() {
  static const std::array<EisensteinInt, 6> kUnits = {{
      {1, 0}, {-1, 0}, {0, 1}, {0, -1}, {-1, -1}, {1, 1},
  }};
  return kUnits;
}

std::string to_string(const EisensteinInt& x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%lld%+lld*zeta3", x.a, x.b);
  return buf;
}

const char* splitting_name(Splitting s) {
  switch (s) {
    case Splitting::kSplit: return "split";
    case Splitting::kInert: return "inert";
    case Splitting::kRamified: return "ramified";
  }
  return "?";
}

DivModResult divmod(const EisensteinInt& x, const EisensteinInt& y) {
  if (y.is_zero()) throw std::invalid_argument("divmod: division by zero");
  // x * conj(y), computed in 128 bits.
  __int128 ca = (__int128)y.a - y.b;
  __int128 cb = -(__int128)y.b;
  __int128 na = (__int128)x.a * ca - (__int128)x.b * cb;
  __int128 nb = (__int128)x.a * cb + (__int128)x.b * ca - (__int128)x.b * cb;
  long long d = y.norm();
  EisensteinInt q{div_round(na, d), div_round(nb, d)};
  EisensteinInt r = x - q * y;
  assert(r.norm() < d);
  return {q, r};
}

EisensteinInt exact_div(const EisensteinInt& x, const EisensteinInt& y) {
  DivModResult dm = divmod(x, y);
  if (!dm.rem.is_zero()) throw std::invalid_argument("exact_div: not divisible");
  return dm.quot;
}

bool is_divisible(const EisensteinInt& x, const EisensteinInt& y) {
  if (y.is_zero()) return x.is_zero();
  __int128 ca = (__int128)y.a - y.b;
  __int128 cb = -(__int128)y.b;
  __int128 na = (__int128)x.a * ca - (__int128)x.b * cb;
  __int128 nb = (__int128)x.a * cb + (__int128)x.b * ca - (__int128)x.b * cb;
  long long d = y.norm();
  return na % d == 0 && nb % d == 0;
}

EisensteinInt gcd(EisensteinInt x, EisensteinInt y) {
  while (!y.is_zero()) {
    EisensteinInt r = mod(x, y);
    x = y;
    y = r;
  }
  return x;
}

PrimaryDecomposition primary_associate(EisensteinInt x) {
  if (x.is_zero()) throw std::invalid_argument("primary_associate: zero input");
  int r = 0;
  while ((x.a + x.b) % 3 == 0) {  // lambda | x  iff  a + b == 0 (mod 3)
    x = exact_div(x, kLambda);
    ++r;
  }
  // Exactly one of the six unit multiples of x is == 1 mod <3>.
  for (size_t i = 0; i < units().size(); ++i) {
    EisensteinInt cand = units()[i] * x;
    if (mod3(cand.a) == 1 && mod3(cand.b) == 0) {
      // x = u^{-1} * cand; the inverse of a unit is its conjugate times a sign
      // but a scan is simplest.
      for (const EisensteinInt& v : units()) {
        if (v * units()[i] == EisensteinInt{1, 0}) return {v, r, cand};
      }
    }
  }
  throw std::logic_error("primary_associate: no primary associate");
}

std::vector<long long> sieve_rational_primes(long long limit) {
  std::vector<long long> out;
  if (limit < 2) return out;
  std::vector<bool> comp(limit + 1, false);
  for (long long i = 2; i * i <= limit; ++i) {
    if (comp[i]) continue;
    for (long long j = i * i; j <= limit; j += i) comp[j] = true;
  }
  for (long long i = 2; i <= limit; ++i)
    if (!comp[i]) out.push_back(i);
  return out;
}

std::vector<PrimeIdealRec> enumerate_primes(long long max_norm) {
  if (max_norm < 3) throw std::invalid_argument("enumerate_primes: max_norm must be >= 3");
  std::vector<PrimeIdealRec> out;
  for (long long p : sieve_rational_primes(max_norm)) {
    if (p == 3) {
      out.push_back(ramified_record());
    } else if (p % 3 == 1) {
      auto [r1, r2] = split_records(p);
      out.push_back(r1);
      out.push_back(r2);
    } else if (p * p <= max_norm) {
      out.push_back(inert_record(p));
    }
  }
  std::sort(out.begin(), out.end(), [](const PrimeIdealRec& x, const PrimeIdealRec& y) {
    return std::tie(x.norm, x.generator.a, x.generator.b) < std::tie(y.norm, y.generator.a, y.generator.b);
  });
  return out;
}

std::vector<long long> unramified_prime_norms(long long max_norm) {
  std::vector<long long> out;
  for (long long p : sieve_rational_primes(max_norm)) {
    if (p == 3) continue;
    if (p % 3 == 1) {
      out.push_back(p);
      out.push_back(p);
    } else if (p * p <= max_norm) {
      out.push_back(p * p);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_prime_ll(long long n) {
  if (n < 2) return false;
  for (long long p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % p == 0) return n == p;
  }
  long long d = n - 1;
  int s = 0;
  while (d % 2 == 0) d /= 2, ++s;
  for (long long a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    unsigned long long x = powmod_u64(a, d, n);
    if (x == 1 || x == (unsigned long long)n - 1) continue;
    bool witness = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod_u64(x, x, n);
      if (x == (unsigned long long)n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

std::vector<std::pair<long long, int>> factor_ll(long long n) {
  if (n < 1) throw std::invalid_argument("factor_ll: n must be >= 1");
  std::vector<std::pair<long long, int>> out;
  auto strip = [&](long long p) {
    int e = 0;
    while (n % p == 0) n /= p, ++e;
    if (e) out.emplace_back(p, e);
  };
  strip(2);
  strip(3);
  for (long long d = 5; d * d <= n; d += 6) {
    strip(d);
    strip(d + 2);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

Factorization factor(const EisensteinInt& x) {
  if (x.is_zero()) throw std::invalid_argument("factor: zero input");
  check_coords(x, "factor");
  Factorization res;
  EisensteinInt cur = x;
  for (auto [p, e] : factor_ll(x.norm())) {
    if (p == 3) {
      for (int i = 0; i < e; ++i) cur = exact_div(cur, kLambda);
      res.primes.emplace_back(ramified_record(), e);
    } else if (p % 3 == 2) {
      if (e % 2 != 0) throw std::logic_error("factor: odd inert exponent");
      EisensteinInt gen = inert_record(p).generator;  // -p, the primary associate
      for (int i = 0; i < e / 2; ++i) cur = exact_div(cur, gen);
      res.primes.emplace_back(inert_record(p), e / 2);
    } else {
      auto [r1, r2] = split_records(p);
      int m1 = 0;
      while (is_divisible(cur, r1.generator)) {
        cur = exact_div(cur, r1.generator);
        ++m1;
      }
      int m2 = e - m1;
      for (int i = 0; i < m2; ++i) cur = exact_div(cur, r2.generator);
      if (m1) res.primes.emplace_back(r1, m1);
      if (m2) res.primes.emplace_back(r2, m2);
    }
  }
  if (!cur.is_unit()) throw std::logic_error("factor: non-unit cofactor");
  res.unit = cur;
  std::sort(res.primes.begin(), res.primes.end(), [](const auto& x_, const auto& y_) {
    return std::tie(x_.first.norm, x_.first.generator.a, x_.first.generator.b) <
           std::tie(y_.first.norm, y_.first.generator.a, y_.first.generator.b);
  });
  return res;
}

bool is_squarefree(const EisensteinInt& x) {
  if (x.is_zero()) throw std::invalid_argument("is_squarefree: zero input");
  long long n = x.norm();
  if (n == 1) return true;
  for (auto [p, e] : factor_ll(n)) {
    if (p == 3) {
      if (e >= 2) return false;
    } else if (p % 3 == 2) {
      if (e > 2) return false;
    } else {
      if (e >= 3) return false;
      if (e == 2 && !(x.a % p == 0 && x.b % p == 0)) return false;
    }
  }
  return true;
}

std::optional<ModulusC> ModulusC::make(const EisensteinInt& v) {
  if (v == EisensteinInt{1, 0}) return std::nullopt;
  if (((v.a % 9) + 9) % 9 != 1 || v.b % 9 != 0) return std::nullopt;
  if (std::llabs(v.a) > kCoordLimit || std::llabs(v.b) > kCoordLimit) return std::nullopt;
  if (!is_squarefree(v)) return std::nullopt;
  return ModulusC{v, v.norm()};
}

ModulusC ModulusC::make_checked(const EisensteinInt& v) {
  auto m = make(v);
  if (!m) throw std::invalid_argument("not a member of the modulus family: " + to_string(v));
  return *m;
}

void for_each_C(long long max_norm, const std::function<void(const ModulusC&)>& fn) {
  if (max_norm < 1) throw std::invalid_argument("for_each_C: max_norm must be >= 1");
  // Lattice a = 1 + 9s, b = 9t inside the norm ellipse, then square-free
  // filter. Streams in lattice order (b ascending, then a); enumerate_C sorts.
  long long tmax = (long long)(2.0 * std::sqrt((double)max_norm / 3.0) / 9.0) + 2;
  for (long long t = -tmax; t <= tmax; ++t) {
    long long b = 9 * t;
    double disc = 4.0 * (double)max_norm - 3.0 * (double)b * (double)b;
    if (disc < 0) continue;
    double root = std::sqrt(disc);
    long long alo = (long long)std::floor(((double)b - root) / 2.0) - 2;
    long long ahi = (long long)std::ceil(((double)b + root) / 2.0) + 2;
    for (long long a = alo + (((1 - alo) % 9 + 9) % 9); a <= ahi; a += 9) {
      EisensteinInt c{a, b};
      if (c == EisensteinInt{1, 0}) continue;
      long long n = c.norm();
      if (n > max_norm) continue;
      if (!is_squarefree(c)) continue;
      fn(ModulusC{c, n});
    }
  }
}

std::vector<ModulusC> enumerate_C(long long max_norm) {
  std::vector<ModulusC> out;
  for_each_C(max_norm, [&](const ModulusC& c) { out.push_back(c); });
  std::sort(out.begin(), out.end(), [](const ModulusC& x, const ModulusC& y) {
    return std::tie(x.norm, x.value.a, x.value.b) < std::tie(y.norm, y.value.a, y.value.b);
  });
  return out;
}

}  // namespace cubicdist
