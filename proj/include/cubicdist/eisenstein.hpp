#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace cubicdist {

// Exact arithmetic in Z[zeta3], zeta3 = exp(2*pi*i/3), with zeta3^2 = -1 - zeta3.
// An element is stored as a + b*zeta3; its norm is a^2 - a*b + b^2.
//
// Integer width: all routines assume |a|, |b| <= kCoordLimit. Within that
// range a norm fits in a signed 64-bit integer and every intermediate product
// used by divmod fits in signed 128-bit arithmetic. Entry points that take
// untrusted input (enumeration, factoring, symbols) check the bound; inner
// loops do not.
inline constexpr long long kCoordLimit = 1'500'000'000LL;

struct EisensteinInt {
  long long a = 0;  // coefficient of 1
  long long b = 0;  // coefficient of zeta3

  constexpr EisensteinInt() = default;
  constexpr EisensteinInt(long long a_, long long b_) : a(a_), b(b_) {}

  long long norm() const {
    __int128 n = (__int128)a * a - (__int128)a * b + (__int128)b * b;
    return (long long)n;
  }
  bool is_zero() const { return a == 0 && b == 0; }
  bool is_unit() const { return norm() == 1; }

  friend constexpr bool operator==(const EisensteinInt&, const EisensteinInt&) = default;
};

inline EisensteinInt conj(const EisensteinInt& x) { return {x.a - x.b, -x.b}; }
inline EisensteinInt operator-(const EisensteinInt& x) { return {-x.a, -x.b}; }
inline EisensteinInt operator+(const EisensteinInt& x, const EisensteinInt& y) {
  return {x.a + y.a, x.b + y.b};
}
inline EisensteinInt operator-(const EisensteinInt& x, const EisensteinInt& y) {
  return {x.a - y.a, x.b - y.b};
}
inline EisensteinInt operator*(const EisensteinInt& x, const EisensteinInt& y) {
  // (a1 + b1 w)(a2 + b2 w), w^2 = -1 - w
  return {x.a * y.a - x.b * y.b, x.a * y.b + x.b * y.a - x.b * y.b};
}

// 1 - zeta3 generates the unique ramified prime; <3> = <1 - zeta3>^2.
inline constexpr EisensteinInt kLambda{1, -1};

// The six units of Z[zeta3]: +-1, +-zeta3, +-zeta3^2.
const std::array<EisensteinInt, 6>& units();

std::string to_string(const EisensteinInt& x);

// Nearest-lattice-point division: x = q*y + r with N(r) <= (3/4) N(y).
struct DivModResult {
  EisensteinInt quot;
  EisensteinInt rem;
};
DivModResult divmod(const EisensteinInt& x, const EisensteinInt& y);

inline EisensteinInt mod(const EisensteinInt& x, const EisensteinInt& y) {
  return divmod(x, y).rem;
}

// Exact quotient; throws std::invalid_argument if y does not divide x.
EisensteinInt exact_div(const EisensteinInt& x, const EisensteinInt& y);

bool is_divisible(const EisensteinInt& x, const EisensteinInt& y);

// Norm-descent Euclidean gcd; result is determined up to a unit.
EisensteinInt gcd(EisensteinInt x, EisensteinInt y);

// x = unit * (1 - zeta3)^lambda_exponent * primary, with primary == 1 mod <3>.
// The primary part is the unique such associate.
struct PrimaryDecomposition {
  EisensteinInt unit;
  int lambda_exponent = 0;
  EisensteinInt primary;
};
PrimaryDecomposition primary_associate(EisensteinInt x);

enum class Splitting { kSplit, kInert, kRamified };

const char* splitting_name(Splitting s);

// A prime ideal of Z[zeta3]. The generator is the primary one (== 1 mod <3>)
// except for the ramified prime, whose generator is 1 - zeta3. The norm is p
// for split rational primes p == 1 (mod 3), p^2 for inert p == 2 (mod 3), and
// 3 for the ramified prime.
struct PrimeIdealRec {
  EisensteinInt generator;
  long long norm = 0;
  Splitting splitting = Splitting::kSplit;
};

// All prime ideals with norm <= max_norm, sorted by (norm, gen.a, gen.b).
// Split rational primes contribute two conjugate records.
std::vector<PrimeIdealRec> enumerate_primes(long long max_norm);

// Norms of the unramified prime ideals up to max_norm (p twice when split,
// p^2 once when inert), sorted ascending. Cheaper than enumerate_primes when
// generators are not needed.
std::vector<long long> unramified_prime_norms(long long max_norm);

// Rational prime sieve (shared helper).
std::vector<long long> sieve_rational_primes(long long limit);

struct Factorization {
  EisensteinInt unit;
  std::vector<std::pair<PrimeIdealRec, int>> primes;  // sorted by norm, generator
};

// Unique factorization; throws std::invalid_argument on x = 0.
Factorization factor(const EisensteinInt& x);

// True iff no prime of Z[zeta3] divides x to order >= 2. Decided from the
// rational factorization of N(x): for p = 3 require v_3(N) <= 1, for inert
// p == 2 (mod 3) require v_p(N) <= 2, and for split p == 1 (mod 3) require
// v_p(N) <= 2 with v_p(N) = 2 allowed only when p | x (then x is divisible by
// both conjugate primes once each rather than by one of them squared).
bool is_squarefree(const EisensteinInt& x);

// A member of the modulus family: square-free, != 1, and == 1 mod <9>
// (a == 1 mod 9 and b == 0 mod 9 in the 1, zeta3 basis).
struct ModulusC {
  EisensteinInt value;
  long long norm = 0;

  static std::optional<ModulusC> make(const EisensteinInt& v);
  static ModulusC make_checked(const EisensteinInt& v);  // throws on invalid
};

// All c in the family with N(c) <= max_norm, sorted by (norm, a, b).
std::vector<ModulusC> enumerate_C(long long max_norm);

// Streaming variant in deterministic lattice order (not norm-sorted). Used by
// the counting code to avoid materialising millions of records.
void for_each_C(long long max_norm, const std::function<void(const ModulusC&)>& fn);

// Deterministic Miller-Rabin for 64-bit inputs.
bool is_prime_ll(long long n);

// Trial-division factorization of n >= 1, sorted by prime.
std::vector<std::pair<long long, int>> factor_ll(long long n);

}  // namespace cubicdist
