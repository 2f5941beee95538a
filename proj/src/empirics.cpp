#include "cubicdist/empirics.hpp"

#include <algorithm>
#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <filesystem>

#include "cubicdist/cubic_symbol.hpp"
#include "cubicdist/dedekind.hpp"
#include "cubicdist/parallel.hpp"

namespace cubicdist {

namespace {

double batch_smoothing(long long max_norm, const EvalParams& params) {
  if (params.smoothing > 0.0) return params.smoothing;
  return std::clamp(0.3 * (double)max_norm, 1e4, 1e5);
}

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

std::string cache_file(const std::string& dir, long long y, double sigma, CaseKind kind,
                       const EvalParams& params, double x_batch) {
  char key[256];
  std::snprintf(key, sizeof key, "v1|%lld|%.17g|%s|%lld|%.17g|%lld|%.17g", y, sigma,
                case_name(kind), params.prime_cutoff, params.smoothing, params.series_cutoff,
                x_batch);
  char name[128];
  std::snprintf(name, sizeof name, "samples_%016" PRIx64 ".csv", fnv1a(key));
  return dir + "/" + name;
}

bool load_cache(const std::string& path, FamilyEvaluation& fam) {
  std::FILE* f = std::fopen(path.c_str(), "r");
  if (!f) return false;
  char line[256];
  if (!std::fgets(line, sizeof line, f)) {  // header
    std::fclose(f);
    return false;
  }
  std::vector<EmpiricalSample> samples;
  while (std::fgets(line, sizeof line, f)) {
    long long norm, a, b;
    int excluded;
    double value = 0.0;
    int got = std::sscanf(line, "%lld,%lld,%lld,%lf,%d", &norm, &a, &b, &value, &excluded);
    if (got != 5) {
      got = std::sscanf(line, "%lld,%lld,%lld,,%d", &norm, &a, &b, &excluded);
      if (got != 4) {
        std::fclose(f);
        return false;
      }
    }
    auto m = ModulusC::make({a, b});  // re-validate the family invariants
    if (!m || m->norm != norm) {
      std::fclose(f);
      return false;
    }
    samples.push_back({*m, value, 0.0, excluded != 0});
  }
  std::fclose(f);
  fam.samples = std::move(samples);
  fam.n_excluded = 0;
  for (const auto& s : fam.samples)
    if (s.excluded) ++fam.n_excluded;
  return true;
}

void store_cache(const std::string& path, const FamilyEvaluation& fam) {
  std::filesystem::create_directories(std::filesystem::path(path).parent_path());
  std::string tmp = path + ".tmp";
  std::FILE* f = std::fopen(tmp.c_str(), "w");
  if (!f) return;
  std::fputs("norm,a,b,value,excluded\n", f);
  for (const auto& s : fam.samples) {
    if (s.excluded) {
      std::fprintf(f, "%lld,%lld,%lld,,1\n", s.modulus.norm, s.modulus.value.a, s.modulus.value.b);
    } else {
      std::fprintf(f, "%lld,%lld,%lld,%.17g,0\n", s.modulus.norm, s.modulus.value.a,
                   s.modulus.value.b, s.value);
    }
  }
  std::fclose(f);
  std::filesystem::rename(tmp, path);
}

}  // namespace

Ecdf make_ecdf(std::vector<double> values) {
  if (values.empty()) throw std::invalid_argument("make_ecdf: empty sample set");
  std::sort(values.begin(), values.end());
  Ecdf e;
  e.cum.resize(values.size());
  double n = (double)values.size();
  for (size_t i = 0; i < values.size(); ++i) e.cum[i] = (double)(i + 1) / n;
  e.values = std::move(values);
  return e;
}

Ecdf make_ecdf(std::vector<std::pair<double, double>> weighted_values) {
  if (weighted_values.empty()) throw std::invalid_argument("make_ecdf: empty sample set");
  std::sort(weighted_values.begin(), weighted_values.end());
  double total = 0.0;
  for (auto& [v, w] : weighted_values) total += w;
  Ecdf e;
  e.values.reserve(weighted_values.size());
  e.cum.reserve(weighted_values.size());
  double run = 0.0;
  for (auto& [v, w] : weighted_values) {
    run += w;
    e.values.push_back(v);
    e.cum.push_back(run / total);
  }
  return e;
}

Ecdf FamilyEvaluation::ecdf(long long restrict_norm) const {
  std::vector<double> vals;
  for (const auto& s : samples) {
    if (restrict_norm > 0 && s.modulus.norm > restrict_norm) continue;
    if (!s.excluded) vals.push_back(s.value);
  }
  return make_ecdf(std::move(vals));
}

Ecdf FamilyEvaluation::ecdf_weighted(long long y_weight) const {
  std::vector<std::pair<double, double>> vals;
  for (const auto& s : samples) {
    if (s.excluded) continue;
    vals.emplace_back(s.value, std::exp(-(double)s.modulus.norm / (double)y_weight));
  }
  return make_ecdf(std::move(vals));
}

FamilyEvaluation empirical_cdf(long long max_norm, double sigma, CaseKind kind,
                               const EvalParams& params, const FamilyOptions& opts) {
  if (max_norm < 73) throw std::invalid_argument("empirical_cdf: max_norm must be >= 73");
  params.validate();

  FamilyEvaluation fam;
  fam.max_norm = max_norm;
  fam.sigma = sigma;
  fam.kind = kind;

  double x_batch = sigma > 1.0 ? 0.0 : batch_smoothing(max_norm, params);
  std::string cpath;
  if (!opts.cache_dir.empty()) {
    cpath = cache_file(opts.cache_dir, max_norm, sigma, kind, params, x_batch);
    if (load_cache(cpath, fam)) return fam;
  }

  std::vector<ModulusC> moduli = enumerate_C(max_norm);
  long long table_norm = sigma > 1.0 ? params.prime_cutoff
                                     : (long long)std::ceil(15.0 * x_batch);
  auto primes = enumerate_primes(std::max<long long>(table_norm, 7));

  fam.samples.assign(moduli.size(), {});
  parallel_for(moduli.size(), opts.threads, [&](size_t i) {
    LResult r = sigma > 1.0
                    ? (kind == CaseKind::Log ? log_Lc(moduli[i], sigma, params, primes)
                                             : logderiv_Lc(moduli[i], sigma, params, primes))
                    : value_smoothed_prime_series(moduli[i], sigma, kind, x_batch, primes);
    fam.samples[i] = {moduli[i], r.value, r.err_est, r.excluded};
  });
  for (const auto& s : fam.samples)
    if (s.excluded) ++fam.n_excluded;

  if (!cpath.empty()) store_cache(cpath, fam);
  return fam;
}

double ks_distance(const Ecdf& empirical, const DensityGrid& predicted) {
  double d = 0.0;
  double prev = 0.0;
  for (size_t i = 0; i < empirical.values.size(); ++i) {
    double fp = cdf_at(predicted, empirical.values[i]);
    d = std::max(d, std::abs(empirical.cum[i] - fp));
    d = std::max(d, std::abs(prev - fp));
    prev = empirical.cum[i];
  }
  return d;
}

double ks_distance(const DensityGrid& f, const DensityGrid& g) {
  double d = 0.0;
  for (double z : f.z_values) d = std::max(d, std::abs(cdf_at(f, z) - cdf_at(g, z)));
  for (double z : g.z_values) d = std::max(d, std::abs(cdf_at(f, z) - cdf_at(g, z)));
  return d;
}

LocalCensus local_census(const PrimeIdealRec& p, long long max_norm) {
  if (p.splitting == Splitting::kRamified)
    throw std::invalid_argument("local_census: prime must be unramified");
  LocalCensus census;
  for (const ModulusC& c : enumerate_C(max_norm)) {
    ++census.n_total;
    CubeRoot chi = symbol(c.value, p.generator);
    if (chi.is_zero()) {
      ++census.n_divisible;
    } else {
      ++census.n_symbol[chi.exponent()];
    }
  }
  return census;
}

double divisor_probability(const PrimeIdealRec& p, long long max_norm) {
  LocalCensus census = local_census(p, max_norm);
  if (census.n_total < 100)
    throw std::invalid_argument("divisor_probability: need at least 100 moduli below max_norm");
  return (double)census.n_divisible / (double)census.n_total;
}

namespace {

// Shared streaming pass over the family up to 12 Y, accumulating the exact
// count below Y and exponentially weighted sums. Parallel over lattice rows
// with per-thread Kahan accumulators merged in thread order.
struct CountAccum {
  long long count = 0;
  double weighted = 0.0, weighted_c = 0.0;      // Kahan sum + compensation
  double restricted = 0.0, restricted_c = 0.0;

  void add_weighted(double v) {
    double t = weighted + v;
    weighted_c += std::abs(weighted) >= std::abs(v) ? (weighted - t) + v : (v - t) + weighted;
    weighted = t;
  }
  void add_restricted(double v) {
    double t = restricted + v;
    restricted_c += std::abs(restricted) >= std::abs(v) ? (restricted - t) + v : (v - t) + restricted;
    restricted = t;
  }
};

CountAccum count_pass(long long max_norm, int threads,
                      const std::vector<PrimeIdealRec>& coprime_to) {
  const long long reach = 12 * max_norm;
  const long long tmax = (long long)(2.0 * std::sqrt((double)reach / 3.0) / 9.0) + 2;
  std::vector<CountAccum> parts((size_t)(2 * tmax + 1));
  parallel_for(parts.size(), threads, [&](size_t ti) {
    long long t = (long long)ti - tmax;
    long long b = 9 * t;
    CountAccum& acc = parts[ti];
    double disc = 4.0 * (double)reach - 3.0 * (double)b * (double)b;
    if (disc < 0) return;
    double root = std::sqrt(disc);
    long long alo = (long long)std::floor(((double)b - root) / 2.0) - 2;
    long long ahi = (long long)std::ceil(((double)b + root) / 2.0) + 2;
    for (long long a = alo + (((1 - alo) % 9 + 9) % 9); a <= ahi; a += 9) {
      EisensteinInt c{a, b};
      if (c == EisensteinInt{1, 0}) continue;
      long long n = c.norm();
      if (n > reach) continue;
      if (!is_squarefree(c)) continue;
      if (n <= max_norm) ++acc.count;
      double w = std::exp(-(double)n / (double)max_norm);
      acc.add_weighted(w);
      if (!coprime_to.empty()) {
        bool coprime = true;
        for (const PrimeIdealRec& p : coprime_to) {
          if (is_divisible(c, p.generator)) {
            coprime = false;
            break;
          }
        }
        if (coprime) acc.add_restricted(w);
      }
    }
  });
  CountAccum total;
  for (const CountAccum& p : parts) {
    total.count += p.count;
    total.add_weighted(p.weighted + p.weighted_c);
    total.add_restricted(p.restricted + p.restricted_c);
  }
  return total;
}

// (3/4) res zeta_k / (|H_<9>| zeta_k(2)), the common slope of the counting
// asymptotics.
double base_slope() {
  static const double v = 0.75 * residue_zeta_k() / (ray_class_order_mod9() * zeta_k_2());
  return v;
}

}  // namespace

CountReport count_C(long long max_norm, int threads) {
  if (max_norm < 1) throw std::invalid_argument("count_C: max_norm must be >= 1");
  CountAccum acc = count_pass(max_norm, threads, {});
  return {max_norm, acc.count, acc.weighted + acc.weighted_c, base_slope()};
}

RestrictedCount restricted_count(const EisensteinInt& ideal_gen, long long max_norm, int threads) {
  if (ideal_gen.is_zero()) throw std::invalid_argument("restricted_count: zero ideal");
  Factorization f = factor(ideal_gen);
  double euler = 1.0;
  std::vector<PrimeIdealRec> ps;
  for (const auto& [p, e] : f.primes) {
    if (p.splitting == Splitting::kRamified)
      throw std::invalid_argument("restricted_count: ideal must be coprime to <3>");
    euler /= 1.0 + 1.0 / (double)p.norm;
    ps.push_back(p);
  }
  CountAccum acc = count_pass(max_norm, threads, ps);
  double weighted = ps.empty() ? acc.weighted + acc.weighted_c : acc.restricted + acc.restricted_c;
  return {weighted, base_slope() * euler * (double)max_norm};
}

}  // namespace cubicdist
