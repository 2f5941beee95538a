#include "cubicdist/charfn.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace cubicdist {

namespace {

constexpr double kSqrt3Over2 = 0.86602540378443864676;

Complex zeta3_pow(int j) {
  switch (((j % 3) + 3) % 3) {
    case 0: return {1.0, 0.0};
    case 1: return {-0.5, kSqrt3Over2};
    default: return {-0.5, -kSqrt3Over2};
  }
}

Complex pow_ns(long long n, Complex s) {  // n^s
  return std::exp(s * std::log((double)n));
}

bool is_ramified_norm(long long n) { return n == 3; }

// Per-prime factor of the triple-sum route: with q = N^{-sigma},
// L(r) = lambda_y(p^r) and w = (1 + 1/N)^{-1},
//   factor = 1 + w * [ sum_{m>=0} q^{2m} L(m) (2 A(m) - L(m)) - 1 ],
//   A(m)   = sum_{a>=0} L(3a+m) q^{3a},
// which is the sum over exponent triples (a, b, m), min(a,b) = 0, of
// L(3a+m) L(3b+m) q^{3a+3b+2m} with the trivial triple carrying weight 1.
Complex series_local_factor(long long norm, double sigma, double y, CaseKind kind) {
  const double q = std::pow((double)norm, -sigma);
  const double w = (double)norm / ((double)norm + 1.0);
  const Complex u = (kind == CaseKind::Log) ? Complex{0.0, y}
                                            : Complex{0.0, -y * std::log((double)norm)};

  // lambda coefficients on demand, by recurrence.
  std::vector<Complex> L = {Complex{1.0, 0.0}};
  auto lam = [&](int r) -> Complex {
    while ((int)L.size() <= r) {
      int n = (int)L.size();
      if (kind == CaseKind::Log) {
        L.push_back(L[n - 1] * (u + (double)(n - 1)) / (double)n);
      } else {
        Complex prev2 = (n >= 2) ? L[n - 2] : Complex{0.0, 0.0};
        L.push_back(((2.0 * (n - 1) + u) * L[n - 1] - (double)(n - 2) * prev2) / (double)n);
      }
    }
    return L[r];
  };

  const double q3 = q * q * q;
  Complex total = 0.0;
  double q2m = 1.0;
  for (int m = 0;; ++m) {
    Complex a_sum = 0.0;
    double q3a = 1.0;
    for (int a = 0;; ++a) {
      Complex t = lam(3 * a + m) * q3a;
      a_sum += t;
      q3a *= q3;
      if (std::abs(t) < 1e-18 * (1.0 + std::abs(a_sum)) && a >= 2) break;
      if (a > 400) break;
    }
    Complex lm = lam(m);
    Complex term = q2m * (lm * (2.0 * a_sum - lm));
    total += term;
    q2m *= q * q;
    if (std::abs(term) < 1e-18 * (1.0 + std::abs(total)) && m >= 3) break;
    if (m > 600) break;
  }
  return 1.0 + w * (total - 1.0);
}

// Ramified double sum sum_{r1,r2} lambda_y(l^{r1}) lambda_y(l^{r2}) 3^{-(r1+r2)sigma}
// = S^2 with S = sum_r lambda_y(l^r) 3^{-r sigma}, summed to convergence.
Complex series_ramified_factor(double sigma, double y, CaseKind kind) {
  const double q = std::pow(3.0, -sigma);
  const Complex u = (kind == CaseKind::Log) ? Complex{0.0, y} : Complex{0.0, -y * std::log(3.0)};
  Complex s = 0.0, coeff = 1.0, prev2 = 0.0;
  double qr = 1.0;
  for (int r = 0;; ++r) {
    if (r > 0) {
      if (kind == CaseKind::Log) {
        coeff = coeff * (u + (double)(r - 1)) / (double)r;
      } else {
        Complex next = ((2.0 * (r - 1) + u) * coeff - (double)(r - 2) * prev2) / (double)r;
        prev2 = coeff;
        coeff = next;
      }
    }
    Complex t = coeff * qr;
    s += t;
    qr *= q;
    if (std::abs(t) < 1e-18 * (1.0 + std::abs(s)) && r >= 4) break;
    if (r > 2000) break;
  }
  return s * s;
}

}  // namespace

Complex coeff_G(int r, Complex u) {
  if (r < 0) throw std::invalid_argument("coeff_G: r < 0");
  if (r == 0) return {1.0, 0.0};
  if (r == 1) return u;
  Complex gm2 = {1.0, 0.0}, gm1 = u;
  for (int n = 2; n <= r; ++n) {
    Complex g = ((2.0 * (n - 1) + u) * gm1 - (double)(n - 2) * gm2) / (double)n;
    gm2 = gm1;
    gm1 = g;
  }
  return gm1;
}

Complex coeff_H(int r, Complex u) {
  if (r < 0) throw std::invalid_argument("coeff_H: r < 0");
  Complex h = {1.0, 0.0};
  for (int n = 1; n <= r; ++n) h = h * (u + (double)(n - 1)) / (double)n;
  return h;
}

Complex lambda_y(long long prime_norm, int power, double y, CaseKind kind) {
  if (kind == CaseKind::Log) return coeff_H(power, Complex{0.0, y});
  return coeff_G(power, Complex{0.0, -y * std::log((double)prime_norm)});
}

Complex lambda_y(const PrimeIdealRec& p, int power, double y, CaseKind kind) {
  return lambda_y(p.norm, power, y, kind);
}

double atom(long long prime_norm, const AtomSpec& spec) {
  if (is_ramified_norm(prime_norm) && spec.j != 0)
    throw std::invalid_argument("atom: ramified prime has only j = 0");
  Complex w = zeta3_pow(spec.j);
  Complex ns = pow_ns(prime_norm, spec.s);
  if (spec.kind == CaseKind::Log) {
    return std::log(std::norm(Complex{1.0, 0.0} - w / ns));  // 2 Re log(1 - w N^{-s})
  }
  return 2.0 * (w * std::log((double)prime_norm) / (ns - w)).real();
}

LocalLaw make_local_law(const PrimeIdealRec& p, Complex s, CaseKind kind) {
  LocalLaw law;
  law.prime_norm = p.norm;
  law.splitting = p.splitting;
  if (p.splitting == Splitting::kRamified) {
    law.atoms = {{-atom(p.norm, {s, kind, 0}), 1.0}};
    return law;
  }
  double n = (double)p.norm;
  law.atoms.reserve(4);
  law.atoms.emplace_back(0.0, 1.0 / (n + 1.0));
  for (int j = 0; j < 3; ++j) {
    law.atoms.emplace_back(-atom(p.norm, {s, kind, j}), n / (3.0 * (n + 1.0)));
  }
  return law;
}

Complex local_factor(long long prime_norm, Complex s, double y, CaseKind kind) {
  if (is_ramified_norm(prime_norm)) {
    double a0 = atom(prime_norm, {s, kind, 0});
    return std::polar(1.0, -y * a0);
  }
  double n = (double)prime_norm;
  Complex acc = 0.0;
  for (int j = 0; j < 3; ++j) {
    acc += std::polar(1.0, -y * atom(prime_norm, {s, kind, j}));
  }
  return 1.0 / (n + 1.0) + n / (3.0 * (n + 1.0)) * acc;
}

Complex law_char_fn(const LocalLaw& law, double y) {
  Complex acc = 0.0;
  for (auto [loc, mass] : law.atoms) acc += mass * std::polar(1.0, y * loc);
  return acc;
}

namespace {

double tail_estimate(double sigma, double y, CaseKind kind, long long cutoff) {
  // sum_{N > P} |1 - local(N)|, bounded by |y| c1 N^{-3s} log^e N +
  // y^2 c2 N^{-2s} log^{2e} N (e = 0 for Case 1, 1 for Case 2), with prime
  // ideal counts majorised by 3 t / log t. Crude but honest over-estimate.
  double p = (double)cutoff;
  double lp = std::log(p);
  double l1 = (kind == CaseKind::Log) ? 1.0 : lp;
  double l2 = (kind == CaseKind::Log) ? 1.0 : lp * lp;
  double a = 3.0 * sigma, b = 2.0 * sigma;
  double t1 = std::abs(y) * 2.0 * l1 * std::pow(p, 1.0 - a) / ((a - 1.0) * lp);
  double t2 = y * y * 3.0 * l2 * std::pow(p, 1.0 - b) / ((b - 1.0) * lp);
  return 3.0 * (t1 + t2);
}

}  // namespace

CharFnValue char_fn(Complex s, double y, CaseKind kind, const std::vector<long long>& norms) {
  Complex acc = local_factor(3, s, y, kind);  // ramified prefactor
  for (long long n : norms) acc *= local_factor(n, s, y, kind);
  long long cutoff = norms.empty() ? 7 : norms.back();
  return {acc, tail_estimate(s.real(), y, kind, cutoff)};
}

CharFnValue char_fn(Complex s, double y, CaseKind kind, long long prime_cutoff) {
  if (prime_cutoff < 7) throw std::invalid_argument("char_fn: prime_cutoff must be >= 7");
  return char_fn(s, y, kind, unramified_prime_norms(prime_cutoff));
}

std::vector<Complex> char_fn_grid(Complex s, CaseKind kind, double y0, double h, int n,
                                  const std::vector<long long>& norms) {
  // Group equal norms; each distinct norm contributes three atom phases (the
  // ramified prefactor one). Values are advanced along the grid by complex
  // rotation, with periodic exact refresh to cap drift.
  struct Osc {
    double mass0;          // mass at 0 (ramified: 0)
    double massj;          // mass per j-atom
    int mult;              // number of ideals with this norm
    double loc[3];         // atom locations -a_j
    Complex rot[3];        // e^{i h loc}
    Complex cur[3];        // e^{i y loc}
  };
  std::vector<Osc> oscs;
  auto add_norm = [&](long long nn, int mult) {
    Osc o;
    o.mult = mult;
    if (is_ramified_norm(nn)) {
      o.mass0 = 0.0;
      o.massj = 1.0;
      o.loc[0] = -atom(nn, {s, kind, 0});
      o.loc[1] = o.loc[2] = 0.0;
      o.massj = 1.0;
    } else {
      double nd = (double)nn;
      o.mass0 = 1.0 / (nd + 1.0);
      o.massj = nd / (3.0 * (nd + 1.0));
      for (int j = 0; j < 3; ++j) o.loc[j] = -atom(nn, {s, kind, j});
    }
    oscs.push_back(o);
  };
  add_norm(3, 1);
  for (size_t i = 0; i < norms.size();) {
    size_t j = i;
    while (j < norms.size() && norms[j] == norms[i]) ++j;
    add_norm(norms[i], (int)(j - i));
    i = j;
  }

  auto refresh = [&](double y) {
    for (Osc& o : oscs)
      for (int j = 0; j < 3; ++j) {
        o.rot[j] = std::polar(1.0, h * o.loc[j]);
        o.cur[j] = std::polar(1.0, y * o.loc[j]);
      }
  };

  std::vector<Complex> out((size_t)n);
  for (int step = 0; step < n; ++step) {
    if (step % 512 == 0) refresh(y0 + h * step);
    Complex prod = 1.0;
    for (Osc& o : oscs) {
      Complex f;
      if (o.mass0 == 0.0 && o.massj == 1.0) {
        f = o.cur[0];  // ramified
      } else {
        f = o.mass0 + o.massj * (o.cur[0] + o.cur[1] + o.cur[2]);
      }
      if (o.mult == 1) {
        prod *= f;
      } else {
        prod *= f * f;  // split pair (mult is 1 or 2 by construction)
      }
      for (int j = 0; j < 3; ++j) o.cur[j] *= o.rot[j];
    }
    out[(size_t)step] = prod;
  }
  return out;
}

Complex dirichlet_M(double sigma, double y, CaseKind kind, long long term_cutoff) {
  if (term_cutoff < 1) throw std::invalid_argument("dirichlet_M: term_cutoff must be >= 1");
  if (sigma <= 0.5) throw std::invalid_argument("dirichlet_M: need sigma > 1/2");
  Complex acc = series_ramified_factor(sigma, y, kind);
  if (term_cutoff >= 4) {
    for (long long n : unramified_prime_norms(term_cutoff)) {
      acc *= series_local_factor(n, sigma, y, kind);
    }
  }
  return acc;
}

DecayReport decay_check(double sigma, CaseKind kind, const std::vector<double>& y_grid,
                        long long prime_cutoff) {
  if (y_grid.empty()) throw std::invalid_argument("decay_check: empty grid");
  for (size_t i = 1; i < y_grid.size(); ++i)
    if (y_grid[i] <= y_grid[i - 1] || y_grid[0] <= 0.0)
      throw std::invalid_argument("decay_check: grid must be positive increasing");

  auto norms = unramified_prime_norms(prime_cutoff);
  DecayReport rep;
  rep.rows.reserve(y_grid.size());
  for (double y : y_grid) {
    CharFnValue v = char_fn(Complex{sigma, 0.0}, y, kind, norms);
    rep.rows.push_back({y, std::abs(v.value), v.tail_est});
  }

  // Fit log(-log|phi|) = log C + kappa log y on the usable rows.
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int n = 0;
  for (const DecayRow& r : rep.rows) {
    if (r.abs_phi <= 0.0 || r.abs_phi >= 0.999) continue;
    double x = std::log(r.y), v = std::log(-std::log(r.abs_phi));
    sx += x;
    sy += v;
    sxx += x * x;
    sxy += x * v;
    ++n;
  }
  rep.kappa = (n >= 2) ? (n * sxy - sx * sy) / (n * sxx - sx * sx) : 0.0;

  // Windowed monotonicity: max over the last third below max over the first
  // third, and window maxima not increasing.
  size_t m = rep.rows.size();
  auto window_max = [&](size_t lo, size_t hi) {
    double v = 0.0;
    for (size_t i = lo; i < hi; ++i) v = std::max(v, rep.rows[i].abs_phi);
    return v;
  };
  if (m >= 6) {
    double head = window_max(0, m / 3);
    double tail = window_max(m - m / 3, m);
    rep.eventually_decreasing = tail < head;
  } else {
    rep.eventually_decreasing = rep.rows.back().abs_phi < rep.rows.front().abs_phi;
  }
  return rep;
}

}  // namespace cubicdist
