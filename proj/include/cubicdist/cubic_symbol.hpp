#pragma once

#include <complex>
#include <string>

#include "cubicdist/eisenstein.hpp"

namespace cubicdist {

// A value of the cubic residue symbol: zeta3^exponent, or 0.
class CubeRoot {
 public:
  static constexpr CubeRoot one() { return CubeRoot(0); }
  static constexpr CubeRoot zeta() { return CubeRoot(1); }
  static constexpr CubeRoot zeta2() { return CubeRoot(2); }
  static constexpr CubeRoot zero() { return CubeRoot(3); }
  static constexpr CubeRoot from_exponent(int e) { return CubeRoot(((e % 3) + 3) % 3); }

  constexpr bool is_zero() const { return code_ == 3; }
  // Exponent in {0,1,2}; only meaningful when nonzero.
  constexpr int exponent() const { return code_ == 3 ? -1 : code_; }

  friend constexpr CubeRoot operator*(CubeRoot x, CubeRoot y) {
    if (x.is_zero() || y.is_zero()) return zero();
    return CubeRoot((x.code_ + y.code_) % 3);
  }
  constexpr CubeRoot conj() const { return is_zero() ? zero() : CubeRoot((3 - code_) % 3); }
  constexpr CubeRoot pow(int k) const {
    if (is_zero()) return k == 0 ? one() : zero();
    return from_exponent(code_ * ((k % 3 + 3) % 3));
  }

  std::complex<double> to_complex() const;
  std::string label() const;  // "1", "zeta3", "zeta3^2", "0"

  friend constexpr bool operator==(CubeRoot, CubeRoot) = default;

 private:
  explicit constexpr CubeRoot(int code) : code_(code) {}
  int code_;  // 0,1,2 = exponent of zeta3; 3 = zero
};

// Definitional cubic residue symbol (alpha/pi)_3 for a prime pi not dividing
// 3: the cube root of unity congruent to alpha^((N(pi)-1)/3) mod <pi>, or 0
// when pi | alpha. Computed by square-and-multiply in the residue field
// (F_p for split pi, F_{p^2} for inert pi). This is the slow oracle route;
// production code uses symbol() below.
CubeRoot symbol_prime_oracle(const EisensteinInt& alpha, const EisensteinInt& pi);

// (alpha/lambda)_3 for any lambda not divisible by 1 - zeta3, equal to the
// product of prime symbols over the factorization of lambda but computed
// without factoring: reduce alpha mod lambda, strip units and 1 - zeta3
// powers (supplementary formulas), flip primary/primary symbols by cubic
// reciprocity, recurse. The denominator norm strictly decreases each round.
CubeRoot symbol(EisensteinInt alpha, EisensteinInt lambda);

// The Hecke character chi_c on ideals: for an ideal with unique generator
// (1-zeta3)^r * a, a == 1 mod <3>, chi_c = (a/c)_3. In particular the
// ramified prime ideal maps to 1.
CubeRoot chi_c(const ModulusC& c, const EisensteinInt& ideal_gen);
CubeRoot chi_c(const ModulusC& c, const PrimeIdealRec& p);

}  // namespace cubicdist
