#include "cubicdist/reproduce.hpp"

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdarg>
#include <cstdio>
#include <random>

#include "cubicdist/charfn.hpp"
#include "cubicdist/cubic_symbol.hpp"
#include "cubicdist/dedekind.hpp"
#include "cubicdist/density.hpp"
#include "cubicdist/empirics.hpp"
#include "cubicdist/lfunction.hpp"
#include "cubicdist/oracles.hpp"
#include "cubicdist/parallel.hpp"
#include "cubicdist/randmodel.hpp"

namespace cubicdist {

namespace {

using Clock = std::chrono::steady_clock;

std::string fmt(const char* f, ...) {
  char buf[512];
  va_list ap;
  va_start(ap, f);
  std::vsnprintf(buf, sizeof buf, f, ap);
  va_end(ap);
  return buf;
}

EisensteinInt random_element(std::mt19937_64& rng, long long coord_max) {
  std::uniform_int_distribution<long long> d(-coord_max, coord_max);
  while (true) {
    EisensteinInt x{d(rng), d(rng)};
    if (!x.is_zero()) return x;
  }
}

// Shared state across criteria (built lazily, in order).
struct Ctx {
  Profile profile;
  int threads;
  long long family_norm;      // 1e5 quick, 1e6 full
  double gamma_k_value = 0.0;
  DensityGrid dens1[2];       // sigma = 1, Log / LogDeriv, cutoff 1e5
  bool dens1_ready = false;
  FamilyEvaluation fam[2];    // sigma = 1, Log / LogDeriv, up to family_norm
  bool fam_ready = false;

  const DensityGrid& density1(CaseKind k) {
    if (!dens1_ready) {
      QuadratureParams q;
      q.prime_cutoff = 100000;
      dens1[0] = invert(1.0, CaseKind::Log, {}, q);
      dens1[1] = invert(1.0, CaseKind::LogDeriv, {}, q);
      dens1_ready = true;
    }
    return dens1[k == CaseKind::Log ? 0 : 1];
  }
  const FamilyEvaluation& family(CaseKind k) {
    if (!fam_ready) {
      EvalParams params;
      FamilyOptions opts;
      opts.threads = threads;
      fam[0] = empirical_cdf(family_norm, 1.0, CaseKind::Log, params, opts);
      fam[1] = empirical_cdf(family_norm, 1.0, CaseKind::LogDeriv, params, opts);
      fam_ready = true;
    }
    return fam[k == CaseKind::Log ? 0 : 1];
  }
};

// --------------------------------------------------------------------------
// criterion 1: fast reciprocity symbol == definitional exponentiation on all
// primes of norm <= 1e4, 100 numerators each; exact; < 60 s.
// --------------------------------------------------------------------------
CriterionResult crit1(Ctx& ctx) {
  auto primes = enumerate_primes(10000);
  std::vector<long long> mismatches(primes.size(), 0);
  long long total = 0;
  for (size_t i = 0; i < primes.size(); ++i)
    if (primes[i].splitting != Splitting::kRamified) total += 100;
  parallel_for(primes.size(), ctx.threads, [&](size_t i) {
    const PrimeIdealRec& p = primes[i];
    if (p.splitting == Splitting::kRamified) return;
    std::mt19937_64 rng(0xC1u + (std::uint64_t)i);
    for (int k = 0; k < 100; ++k) {
      EisensteinInt alpha = random_element(rng, 1000);
      if (symbol(alpha, p.generator) != symbol_prime_oracle(alpha, p.generator)) ++mismatches[i];
    }
  });
  long long bad = 0;
  for (long long m : mismatches) bad += m;
  CriterionResult r;
  r.pass = bad == 0;
  r.detail = fmt("%lld/%lld symbols matched over %zu primes", total - bad, total, primes.size());
  return r;
}

// --------------------------------------------------------------------------
// criterion 2: reciprocity flip on 1e3 random primary coprime pairs and the
// two supplementary formulas against the factored oracle on 1e3 moduli.
// --------------------------------------------------------------------------
CriterionResult crit2(Ctx&) {
  std::mt19937_64 rng(0xC2);
  int flips = 0, flip_fail = 0, supp = 0, supp_fail = 0;
  while (flips < 1000) {
    EisensteinInt a = random_element(rng, 2000), l = random_element(rng, 2000);
    PrimaryDecomposition pa = primary_associate(a), pl = primary_associate(l);
    if (pa.primary.is_unit() || pl.primary.is_unit()) continue;
    if (!gcd(pa.primary, pl.primary).is_unit()) continue;
    ++flips;
    if (!(symbol(pa.primary, pl.primary) == symbol(pl.primary, pa.primary))) ++flip_fail;
  }
  while (supp < 1000) {
    EisensteinInt l = random_element(rng, 500);
    PrimaryDecomposition pl = primary_associate(l);
    if (pl.primary.is_unit()) continue;
    ++supp;
    EisensteinInt lp = pl.primary;
    long long sa = (lp.a - 1) / 3, sb = lp.b / 3;
    CubeRoot zeta_expected = CubeRoot::from_exponent((int)(((-(sa + sb)) % 3 + 3) % 3));
    CubeRoot lam_expected = CubeRoot::from_exponent((int)((sa % 3 + 3) % 3));
    if (!(symbol_factored_oracle({0, 1}, lp) == zeta_expected)) ++supp_fail;
    if (!(symbol_factored_oracle(kLambda, lp) == lam_expected)) ++supp_fail;
    if (!(symbol({0, 1}, lp) == zeta_expected)) ++supp_fail;
    if (!(symbol(kLambda, lp) == lam_expected)) ++supp_fail;
  }
  CriterionResult r;
  r.pass = flip_fail == 0 && supp_fail == 0;
  r.detail = fmt("%d flip pairs (%d bad), %d supplementary moduli (%d bad)", flips, flip_fail,
                 supp, supp_fail);
  return r;
}

// --------------------------------------------------------------------------
// criterion 3: G_r / H_r closed forms vs power-series oracles, and the
// truncated sums vs the analytic generating functions, error < 1e-10.
// --------------------------------------------------------------------------
CriterionResult crit3(Ctx&) {
  using C = std::complex<double>;
  const std::vector<C> us = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}, {1, 1}, {0.5, -0.5}, {0, 2}};
  const std::vector<C> ts = {{0.5, 0}, {-0.5, 0}, {0.3, 0}, {-0.25, 0}, {0.45, 0}, {0, 0.3}};
  const int order = 30;
  double worst = 0.0;
  for (C u : us) {
    auto og = series_exp_ut_over_1mt(u, order);
    auto oh = series_one_minus_t_pow(u, order);
    for (int r = 0; r <= order; ++r) {
      worst = std::max(worst, std::abs(coeff_G(r, u) - og[(size_t)r]) / std::max(1.0, std::abs(og[(size_t)r])));
      worst = std::max(worst, std::abs(coeff_H(r, u) - oh[(size_t)r]) / std::max(1.0, std::abs(oh[(size_t)r])));
    }
    for (C t : ts) {
      C sg = 0.0, sh = 0.0, tg = 0.0, th = 0.0, tp = 1.0;
      for (int r = 0; r <= order; ++r) {
        sg += coeff_G(r, u) * tp;
        sh += coeff_H(r, u) * tp;
        tg += og[(size_t)r] * tp;
        th += oh[(size_t)r] * tp;
        tp *= t;
      }
      worst = std::max(worst, std::abs(sg - tg));
      worst = std::max(worst, std::abs(sh - th));
      // analytic closed forms, with enough extra terms for the tails
      C fg = std::exp(u * t / (1.0 - t));
      C fh = std::exp(-u * std::log(1.0 - t));
      C eg = sg, eh = sh;
      for (int r = order + 1; r <= 140; ++r) {
        eg += coeff_G(r, u) * tp;
        eh += coeff_H(r, u) * tp;
        tp *= t;
      }
      worst = std::max(worst, std::abs(eg - fg));
      worst = std::max(worst, std::abs(eh - fh));
    }
  }
  CriterionResult r;
  r.pass = worst < 1e-10;
  r.detail = fmt("max deviation %.3g (tolerance 1e-10)", worst);
  return r;
}

// --------------------------------------------------------------------------
// criterion 4: Euler-product route vs Dirichlet-series route for phi at
// matched prime support 1e6, sigma in {0.75, 1, 1.5}, y in {0, +-1, +-5}.
// --------------------------------------------------------------------------
CriterionResult crit4(Ctx& ctx) {
  auto norms = unramified_prime_norms(1000000);
  const double sigmas[] = {0.75, 1.0, 1.5};
  const double ys[] = {0.0, 1.0, -1.0, 5.0, -5.0};
  struct Job {
    double sigma, y;
    CaseKind kind;
  };
  std::vector<Job> jobs;
  for (double s : sigmas)
    for (double y : ys)
      for (CaseKind k : {CaseKind::Log, CaseKind::LogDeriv}) jobs.push_back({s, y, k});
  std::vector<double> diffs(jobs.size(), 0.0);
  parallel_for(jobs.size(), ctx.threads, [&](size_t i) {
    const Job& j = jobs[i];
    Complex product = char_fn(Complex{j.sigma, 0.0}, j.y, j.kind, norms).value;
    Complex series = dirichlet_M(j.sigma, j.y, j.kind, 1000000);
    diffs[i] = std::abs(product - series);
  });
  double worst = 0.0;
  for (double d : diffs) worst = std::max(worst, d);
  CriterionResult r;
  r.pass = worst <= 1e-4;
  r.detail = fmt("max |product - series| = %.3g over %zu grid points (tolerance 1e-4)", worst,
                 jobs.size());
  return r;
}

// --------------------------------------------------------------------------
// criterion 5: Euler-product log L_c(2) vs the smoothed double Dirichlet
// series, 50 smallest moduli, tolerance 1e-6.
// --------------------------------------------------------------------------
CriterionResult crit5(Ctx& ctx) {
  auto moduli = enumerate_C(2500);
  if (moduli.size() < 50) throw std::runtime_error("crit5: expected at least 50 moduli");
  moduli.resize(50);
  EvalParams params;
  params.prime_cutoff = 1000000;
  auto primes = enumerate_primes(params.prime_cutoff);
  std::vector<double> diffs(moduli.size(), 0.0);
  parallel_for(moduli.size(), ctx.threads, [&](size_t i) {
    double euler = log_Lc(moduli[i], 2.0, params, primes).value;
    double series = log_Lc_double_series(moduli[i], 2.0, 10000000, 2e8);
    diffs[i] = std::abs(euler - series);
  });
  double worst = 0.0;
  for (double d : diffs) worst = std::max(worst, d);
  CriterionResult r;
  r.pass = worst <= 1e-6;
  r.detail = fmt("max |euler - series| = %.3g over 50 moduli (tolerance 1e-6)", worst);
  return r;
}

// --------------------------------------------------------------------------
// criterion 6: centered difference of log L_c at sigma = 2 vs the direct
// logarithmic derivative, h = 1e-4, relative error <= 1e-3, 50 moduli.
// --------------------------------------------------------------------------
CriterionResult crit6(Ctx& ctx) {
  auto moduli = enumerate_C(2500);
  if (moduli.size() < 50) throw std::runtime_error("crit6: expected at least 50 moduli");
  moduli.resize(50);
  EvalParams params;
  auto primes = enumerate_primes(params.prime_cutoff);
  const double h = 1e-4;
  std::vector<double> rels(moduli.size(), 0.0);
  parallel_for(moduli.size(), ctx.threads, [&](size_t i) {
    double up = log_Lc(moduli[i], 2.0 + h, params, primes).value;
    double dn = log_Lc(moduli[i], 2.0 - h, params, primes).value;
    double fd = (up - dn) / (2.0 * h);
    double ld = logderiv_Lc(moduli[i], 2.0, params, primes).value;
    rels[i] = std::abs(fd - ld) / std::max(1e-12, std::abs(ld));
  });
  double worst = 0.0;
  for (double d : rels) worst = std::max(worst, d);
  CriterionResult r;
  r.pass = worst <= 1e-3;
  r.detail = fmt("max relative error %.3g over 50 moduli (tolerance 1e-3)", worst);
  return r;
}

// --------------------------------------------------------------------------
// criterion 7: density normalization and first-moment duality at sigma in
// {1, 2}, both cases.
// --------------------------------------------------------------------------
CriterionResult crit7(Ctx& ctx) {
  double worst_mass = 0.0, worst_mean = 0.0;
  for (double sigma : {1.0, 2.0}) {
    for (CaseKind k : {CaseKind::Log, CaseKind::LogDeriv}) {
      const DensityGrid* grid;
      DensityGrid local;
      if (sigma == 1.0) {
        grid = &ctx.density1(k);
      } else {
        QuadratureParams q;
        q.prime_cutoff = 20000;
        local = invert(sigma, k, {}, q);
        grid = &local;
      }
      worst_mass = std::max(worst_mass, std::abs(grid->total_mass() - 1.0));
      const double h = 1e-3;
      Complex ph = char_fn(Complex{sigma, 0.0}, h, k, grid->prime_cutoff).value;
      double mean_phi = ph.imag() / h;  // -i phi'(0) by the odd finite difference
      worst_mean = std::max(worst_mean, std::abs(grid->mean() - mean_phi));
    }
  }
  CriterionResult r;
  r.pass = worst_mass <= 1e-3 && worst_mean <= 1e-3;
  r.detail = fmt("max |mass - 1| = %.3g, max |mean - (-i phi'(0))| = %.3g (tolerance 1e-3)",
                 worst_mass, worst_mean);
  return r;
}

// --------------------------------------------------------------------------
// criterion 8: decay of |phi(1, y)|: windowed decrease on [200, 500] and a
// fitted exponent kappa in [0.6, 1.3] (Case 1) / [0.7, 1.3] (Case 2).
// --------------------------------------------------------------------------
CriterionResult crit8(Ctx&) {
  std::vector<double> grid;
  for (double y = 50.0; y <= 500.0; y += 2.5) grid.push_back(y);
  CriterionResult r;
  r.pass = true;
  std::string det;
  for (CaseKind k : {CaseKind::Log, CaseKind::LogDeriv}) {
    DecayReport rep = decay_check(1.0, k, grid, 1000000);
    double lo = (k == CaseKind::Log) ? 0.6 : 0.7;
    // windowed maxima on [200, 500] must decrease bin to bin
    const int nbins = 6;
    double prev = -1.0;
    bool decreasing = true;
    for (int bin = 0; bin < nbins; ++bin) {
      double b0 = 200.0 + 300.0 * bin / nbins, b1 = 200.0 + 300.0 * (bin + 1) / nbins;
      double m = 0.0;
      for (const DecayRow& row : rep.rows)
        if (row.y >= b0 && row.y < b1 + 1e-9) m = std::max(m, row.abs_phi);
      if (prev >= 0.0 && m >= prev) decreasing = false;
      prev = m;
    }
    bool bounds_ok = std::abs(rep.rows.back().abs_phi) <= 1.0 + 1e-12;
    bool kappa_ok = rep.kappa >= lo && rep.kappa <= 1.3;
    r.pass = r.pass && decreasing && kappa_ok && bounds_ok;
    det += fmt("%s: kappa=%.3f decreasing=%d ", case_name(k), rep.kappa, (int)decreasing);
  }
  r.detail = det;
  return r;
}

// --------------------------------------------------------------------------
// criterion 9: tri-lateral agreement at sigma = 1: Monte Carlo vs inverted
// density (KS <= 0.02, 1e6 samples, cutoff 1e5), arithmetic family vs
// inverted density, and a KS trend decreasing in the family norm up to 20%
// slack. The quick gate compares at family norm 1e5 with threshold 0.10 (the
// largest desk-feasible scale; at 1e4 the logderiv family is still far from
// its limit), the full gate at 1e6 with threshold 0.05.
// --------------------------------------------------------------------------
CriterionResult crit9(Ctx& ctx) {
  CriterionResult r;
  r.pass = true;
  std::string det;
  const long long headline_norm = ctx.profile == Profile::kQuick ? 100000 : 1000000;
  const double headline_tol = ctx.profile == Profile::kQuick ? 0.10 : 0.05;
  std::vector<long long> schedule = {1000, 10000, 100000};
  if (ctx.profile == Profile::kFull) schedule.push_back(1000000);

  for (CaseKind k : {CaseKind::Log, CaseKind::LogDeriv}) {
    const DensityGrid& grid = ctx.density1(k);

    ModelConfig mc;
    mc.sigma = 1.0;
    mc.kind = k;
    mc.prime_cutoff = 100000;
    mc.n_samples = 1000000;
    mc.seed = (k == CaseKind::Log) ? 90001 : 90002;
    Ecdf mc_ecdf = make_ecdf(sample_sum(mc, ctx.threads));
    double ks_mc = ks_distance(mc_ecdf, grid);
    if (ks_mc > 0.02) r.pass = false;

    const FamilyEvaluation& fam = ctx.family(k);
    double ks_head = ks_distance(fam.ecdf(headline_norm), grid);
    if (ks_head > headline_tol) r.pass = false;

    std::vector<double> ks_trend;
    for (long long y : schedule) ks_trend.push_back(ks_distance(fam.ecdf(y), grid));
    bool trend_ok = ks_trend.back() < ks_trend.front();
    for (size_t i = 1; i < ks_trend.size(); ++i)
      if (ks_trend[i] > 1.2 * ks_trend[i - 1]) trend_ok = false;
    if (!trend_ok) r.pass = false;

    det += fmt("%s: ks_mc=%.4f ks_arith(%lld)=%.4f trend(", case_name(k), ks_mc, headline_norm,
               ks_head);
    for (double kv : ks_trend) det += fmt("%.3f ", kv);
    det += fmt(")ok=%d  ", (int)trend_ok);
  }
  r.detail = det;
  return r;
}

// --------------------------------------------------------------------------
// criterion 10: counting asymptotics at family norm 1e7: exact and weighted
// counts within 2% of the predicted slope; restricted count for <2> within 2%.
// --------------------------------------------------------------------------
CriterionResult crit10(Ctx& ctx) {
  const long long y = 10000000;
  CountReport rep = count_C(y, ctx.threads);
  double r1 = (double)rep.count / (double)y / rep.predicted_slope;
  double r2 = rep.weighted / (double)y / rep.predicted_slope;
  RestrictedCount rc = restricted_count({2, 0}, y, ctx.threads);
  double r3 = rc.weighted / rc.predicted;
  CriterionResult r;
  r.pass = std::abs(r1 - 1.0) <= 0.02 && std::abs(r2 - 1.0) <= 0.02 && std::abs(r3 - 1.0) <= 0.02;
  r.detail = fmt("count/slope=%.4f weighted/slope=%.4f restricted<2>=%.4f (2%% band), slope=%.6g",
                 r1, r2, r3, rep.predicted_slope);
  return r;
}

// --------------------------------------------------------------------------
// criterion 11: local divisor frequency 1/(N+1) and symbol equidistribution
// (1/3) N/(N+1), within 3 binomial standard deviations at family norm 1e6,
// primes of norm 4, 7, 13.
// --------------------------------------------------------------------------
CriterionResult crit11(Ctx&) {
  auto primes = enumerate_primes(13);
  CriterionResult r;
  r.pass = true;
  std::string det;
  for (long long norm : {4, 7, 13}) {
    const PrimeIdealRec* p = nullptr;
    for (const auto& q : primes)
      if (q.norm == norm) {
        p = &q;
        break;
      }
    LocalCensus census = local_census(*p, 1000000);
    double n = (double)census.n_total;
    double pdiv = 1.0 / ((double)norm + 1.0);
    double sd_div = std::sqrt(pdiv * (1.0 - pdiv) / n);
    double fdiv = (double)census.n_divisible / n;
    double zdiv = std::abs(fdiv - pdiv) / sd_div;
    if (zdiv > 3.0) r.pass = false;
    double qs = (double)norm / (3.0 * ((double)norm + 1.0));
    double sd_s = std::sqrt(qs * (1.0 - qs) / n);
    double zmax = 0.0;
    for (int j = 0; j < 3; ++j) {
      double fj = (double)census.n_symbol[j] / n;
      zmax = std::max(zmax, std::abs(fj - qs) / sd_s);
    }
    if (zmax > 3.0) r.pass = false;
    det += fmt("N=%lld: z_div=%.2f z_sym=%.2f  ", norm, zdiv, zmax);
  }
  r.detail = det + "(3 s.d. bands)";
  return r;
}

// --------------------------------------------------------------------------
// criterion 12: the two corollary transforms of the sigma = 1 data at family
// norm 1e5 match the shifted densities, KS <= 0.07.
// --------------------------------------------------------------------------
CriterionResult crit12(Ctx& ctx) {
  const double bs_const = brauer_siegel_constant();
  ctx.gamma_k_value = gamma_k();

  auto shifted = [](const DensityGrid& g, double shift) {
    DensityGrid out = g;
    for (double& z : out.z_values) z += shift;
    return out;
  };

  // E(c) = log L_c(1) - bs_const: the limiting CDF is F_1 shifted left.
  const FamilyEvaluation& f1 = ctx.family(CaseKind::Log);
  std::vector<double> evals;
  for (const auto& s : f1.samples)
    if (!s.excluded && s.modulus.norm <= 100000) evals.push_back(s.value - bs_const);
  double ks_e = ks_distance(make_ecdf(std::move(evals)), shifted(ctx.density1(CaseKind::Log), -bs_const));

  // gamma_{K_c} = (L'_c/L_c)(1) + gamma_k.
  const FamilyEvaluation& f2 = ctx.family(CaseKind::LogDeriv);
  std::vector<double> gvals;
  for (const auto& s : f2.samples)
    if (!s.excluded && s.modulus.norm <= 100000) gvals.push_back(s.value + ctx.gamma_k_value);
  double ks_g = ks_distance(make_ecdf(std::move(gvals)),
                            shifted(ctx.density1(CaseKind::LogDeriv), ctx.gamma_k_value));

  CriterionResult r;
  r.pass = ks_e <= 0.07 && ks_g <= 0.07;
  r.detail = fmt("ks(brauer-siegel)=%.4f ks(euler-kronecker)=%.4f gamma_k=%.6f (tolerance 0.07)",
                 ks_e, ks_g, ctx.gamma_k_value);
  return r;
}

}  // namespace

std::vector<CriterionResult> run_acceptance(Profile profile, int threads, std::ostream& log) {
  Ctx ctx;
  ctx.profile = profile;
  ctx.threads = resolve_threads(threads);
  ctx.family_norm = profile == Profile::kQuick ? 100000LL : 1000000LL;

  struct Entry {
    int id;
    const char* name;
    CriterionResult (*fn)(Ctx&);
  };
  const Entry entries[] = {
      {1, "symbol-oracle-equivalence", crit1},
      {2, "reciprocity-and-supplementary", crit2},
      {3, "generating-function-identities", crit3},
      {4, "product-series-duality", crit4},
      {5, "lvalue-cross-oracle", crit5},
      {6, "finite-difference-duality", crit6},
      {7, "density-normalization-moments", crit7},
      {8, "charfn-decay", crit8},
      {9, "distribution-agreement", crit9},
      {10, "counting-asymptotics", crit10},
      {11, "local-heuristics", crit11},
      {12, "corollary-pipeline", crit12},
  };

  std::vector<CriterionResult> results;
  for (const Entry& e : entries) {
    auto t0 = Clock::now();
    CriterionResult r;
    try {
      r = e.fn(ctx);
    } catch (const std::exception& ex) {
      r.pass = false;
      r.detail = std::string("exception: ") + ex.what();
    }
    r.id = e.id;
    r.name = e.name;
    r.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    // criterion 1 carries its own runtime budget
    if (e.id == 1 && r.seconds >= 60.0) {
      r.pass = false;
      r.detail += " [exceeded 60 s budget]";
    }
    log << fmt("criterion %02d [%s] %s: %s (%.1fs)", r.id, r.pass ? "PASS" : "FAIL", r.name.c_str(),
               r.detail.c_str(), r.seconds)
        << std::endl;
    results.push_back(std::move(r));
  }
  return results;
}

}  // namespace cubicdist
