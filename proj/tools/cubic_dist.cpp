// Command-line front end: prime/modulus tables, cubic residue symbols,
// L-values, the predicted characteristic function and density, empirical
// comparisons, Monte Carlo sampling, and the acceptance pipeline.

#include <fstream>
#include <iostream>
#include <memory>

#include "CLI11.hpp"
#include "json.hpp"

#include "cubicdist/charfn.hpp"
#include "cubicdist/csvio.hpp"
#include "cubicdist/cubic_symbol.hpp"
#include "cubicdist/dedekind.hpp"
#include "cubicdist/density.hpp"
#include "cubicdist/empirics.hpp"
#include "cubicdist/lfunction.hpp"
#include "cubicdist/randmodel.hpp"
#include "cubicdist/reproduce.hpp"

namespace cd = cubicdist;
using nlohmann::json;

namespace {

struct GlobalOpts {
  int threads = 0;
  std::string output_path;

  std::ostream& out() {
    if (!output_path.empty()) {
      file = std::make_unique<std::ofstream>(output_path);
      if (!*file) throw std::invalid_argument("cannot open output file: " + output_path);
      return *file;
    }
    return std::cout;
  }
  std::unique_ptr<std::ofstream> file;
};

cd::EisensteinInt parse_eis(const std::string& s) {
  long long a, b;
  if (std::sscanf(s.c_str(), "%lld,%lld", &a, &b) != 2)
    throw std::invalid_argument("expected A,B (meaning A + B*zeta3), got: " + s);
  return {a, b};
}

using Config = std::vector<std::pair<std::string, std::string>>;

int run_primes(GlobalOpts& g, long long max_norm) {
  auto& os = g.out();
  cd::write_csv_header(os, {{"subcommand", "primes"}, {"max_norm", std::to_string(max_norm)}},
                       "norm,gen_a,gen_b,splitting");
  for (const auto& p : cd::enumerate_primes(max_norm)) {
    cd::write_csv_row(os, {std::to_string(p.norm), std::to_string(p.generator.a),
                           std::to_string(p.generator.b), cd::splitting_name(p.splitting)});
  }
  return 0;
}

int run_moduli(GlobalOpts& g, long long max_norm) {
  auto& os = g.out();
  cd::write_csv_header(os, {{"subcommand", "moduli"}, {"max_norm", std::to_string(max_norm)}},
                       "norm,a,b");
  for (const auto& c : cd::enumerate_C(max_norm)) {
    cd::write_csv_row(os, {std::to_string(c.norm), std::to_string(c.value.a),
                           std::to_string(c.value.b)});
  }
  return 0;
}

int run_symbol(GlobalOpts& g, const std::string& alpha, const std::string& lambda) {
  cd::CubeRoot s = cd::symbol(parse_eis(alpha), parse_eis(lambda));
  g.out() << s.label() << "\n";
  return 0;
}

int run_lvalue(GlobalOpts& g, const std::string& cstr, double sigma, const std::string& kind_name,
               cd::EvalParams params, bool as_json) {
  cd::ModulusC c = cd::ModulusC::make_checked(parse_eis(cstr));
  cd::CaseKind kind = cd::case_from_name(kind_name);
  cd::LResult r;
  if (sigma > 1.0) {
    r = kind == cd::CaseKind::Log ? cd::log_Lc(c, sigma, params) : cd::logderiv_Lc(c, sigma, params);
  } else {
    r = cd::value_smoothed(c, sigma, kind, params);
  }
  auto& os = g.out();
  if (as_json) {
    json j{{"tool", cd::kToolVersion},    {"c", {c.value.a, c.value.b}},
           {"norm", c.norm},              {"sigma", sigma},
           {"case", kind_name},           {"value", r.value},
           {"err_est", r.err_est},        {"excluded", r.excluded}};
    os << j.dump(2) << "\n";
  } else {
    cd::write_csv_header(os,
                         {{"subcommand", "lvalue"},
                          {"c", cstr},
                          {"sigma", cd::fmt12(sigma)},
                          {"case", kind_name}},
                         "norm,a,b,value,err_est,excluded");
    cd::write_csv_row(os, {std::to_string(c.norm), std::to_string(c.value.a),
                           std::to_string(c.value.b), cd::fmt12(r.value), cd::fmt12(r.err_est),
                           r.excluded ? "1" : "0"});
  }
  return 0;
}

int run_lvalues(GlobalOpts& g, long long max_norm, double sigma, const std::string& kind_name,
                cd::EvalParams params, const std::string& cache_dir) {
  cd::CaseKind kind = cd::case_from_name(kind_name);
  cd::FamilyOptions opts;
  opts.threads = g.threads;
  opts.cache_dir = cache_dir;
  cd::FamilyEvaluation fam = cd::empirical_cdf(max_norm, sigma, kind, params, opts);
  auto& os = g.out();
  cd::write_csv_header(os,
                       {{"subcommand", "lvalues"},
                        {"max_norm", std::to_string(max_norm)},
                        {"sigma", cd::fmt12(sigma)},
                        {"case", kind_name}},
                       "norm,a,b,value,err_est");
  for (const auto& s : fam.samples) {
    cd::write_csv_row(os, {std::to_string(s.modulus.norm), std::to_string(s.modulus.value.a),
                           std::to_string(s.modulus.value.b), s.excluded ? "" : cd::fmt12(s.value),
                           s.excluded ? "excluded" : cd::fmt12(s.err_est)});
  }
  return 0;
}

int run_charfn(GlobalOpts& g, double sigma, const std::string& kind_name, double y_min,
               double y_max, double y_step, long long cutoff) {
  cd::CaseKind kind = cd::case_from_name(kind_name);
  auto norms = cd::unramified_prime_norms(cutoff);
  auto& os = g.out();
  cd::write_csv_header(os,
                       {{"subcommand", "charfn"},
                        {"sigma", cd::fmt12(sigma)},
                        {"case", kind_name},
                        {"cutoff", std::to_string(cutoff)}},
                       "y,re,im,abs,tail_est");
  for (double y = y_min; y <= y_max + 1e-12; y += y_step) {
    cd::CharFnValue v = cd::char_fn(cd::Complex{sigma, 0.0}, y, kind, norms);
    cd::write_csv_row(os, {cd::fmt12(y), cd::fmt12(v.value.real()), cd::fmt12(v.value.imag()),
                           cd::fmt12(std::abs(v.value)), cd::fmt12(v.tail_est)});
  }
  return 0;
}

int run_density(GlobalOpts& g, double sigma, const std::string& kind_name, double z_min,
                double z_max, double z_step, long long cutoff) {
  cd::CaseKind kind = cd::case_from_name(kind_name);
  std::vector<double> zs;
  if (z_step > 0.0)
    for (double z = z_min; z <= z_max + 1e-12; z += z_step) zs.push_back(z);
  cd::QuadratureParams quad;
  quad.prime_cutoff = cutoff;
  cd::DensityGrid grid = cd::invert(sigma, kind, zs, quad);
  auto& os = g.out();
  cd::write_csv_header(os,
                       {{"subcommand", "density"},
                        {"sigma", cd::fmt12(sigma)},
                        {"case", kind_name},
                        {"cutoff", std::to_string(cutoff)},
                        {"y_max", cd::fmt12(grid.y_max)},
                        {"total_mass", cd::fmt12(grid.total_mass())}},
                       "z,density,cdf");
  for (size_t i = 0; i < grid.z_values.size(); ++i) {
    cd::write_csv_row(os, {cd::fmt12(grid.z_values[i]), cd::fmt12(grid.m_values[i]),
                           cd::fmt12(grid.cdf_values[i])});
  }
  return 0;
}

int run_compare(GlobalOpts& g, double sigma, const std::string& kind_name, long long max_norm,
                cd::EvalParams params, bool weighted, const std::string& cache_dir) {
  cd::CaseKind kind = cd::case_from_name(kind_name);
  cd::FamilyOptions opts;
  opts.threads = g.threads;
  opts.cache_dir = cache_dir;
  cd::FamilyEvaluation fam = cd::empirical_cdf(max_norm, sigma, kind, params, opts);
  cd::QuadratureParams quad;
  quad.prime_cutoff = params.prime_cutoff;
  cd::DensityGrid grid = cd::invert(sigma, kind, {}, quad);
  double ks = cd::ks_distance(fam.ecdf(), grid);
  double ksw = cd::ks_distance(fam.ecdf_weighted(max_norm), grid);
  json j{{"tool", cd::kToolVersion},
         {"sigma", sigma},
         {"case", kind_name},
         {"max_norm", max_norm},
         {"n_samples", fam.samples.size() - (size_t)fam.n_excluded},
         {"n_excluded", fam.n_excluded},
         {"ks", ks},
         {"ks_weighted", ksw},
         {"weighted_requested", weighted}};
  g.out() << j.dump(2) << "\n";
  return 0;
}

int run_count(GlobalOpts& g, long long max_norm, bool as_json) {
  cd::CountReport rep = cd::count_C(max_norm, g.threads);
  if (as_json) {
    json j{{"tool", cd::kToolVersion},
           {"max_norm", rep.max_norm},
           {"count", rep.count},
           {"weighted", rep.weighted},
           {"predicted_slope", rep.predicted_slope},
           {"count_over_Y", (double)rep.count / (double)rep.max_norm},
           {"weighted_over_Y", rep.weighted / (double)rep.max_norm}};
    g.out() << j.dump(2) << "\n";
    return 0;
  }
  auto& os = g.out();
  cd::write_csv_header(os, {{"subcommand", "count"}, {"max_norm", std::to_string(max_norm)}},
                       "max_norm,count,weighted,predicted_slope");
  cd::write_csv_row(os, {std::to_string(rep.max_norm), std::to_string(rep.count),
                         cd::fmt12(rep.weighted), cd::fmt12(rep.predicted_slope)});
  return 0;
}

int run_montecarlo(GlobalOpts& g, double sigma, const std::string& kind_name, long long cutoff,
                   long long n, std::uint64_t seed) {
  cd::ModelConfig cfg;
  cfg.sigma = sigma;
  cfg.kind = cd::case_from_name(kind_name);
  cfg.prime_cutoff = cutoff;
  cfg.n_samples = n;
  cfg.seed = seed;
  std::vector<double> samples = cd::sample_sum(cfg, g.threads);
  auto& os = g.out();
  cd::write_csv_header(os,
                       {{"subcommand", "montecarlo"},
                        {"sigma", cd::fmt12(sigma)},
                        {"case", kind_name},
                        {"cutoff", std::to_string(cutoff)},
                        {"samples", std::to_string(n)},
                        {"seed", std::to_string(seed)}},
                       "sample_index,value");
  for (size_t i = 0; i < samples.size(); ++i)
    cd::write_csv_row(os, {std::to_string(i), cd::fmt12(samples[i])});
  return 0;
}

int run_reproduce(GlobalOpts& g, const std::string& profile_name) {
  cd::Profile profile;
  if (profile_name == "quick") {
    profile = cd::Profile::kQuick;
  } else if (profile_name == "full") {
    profile = cd::Profile::kFull;
  } else {
    throw std::invalid_argument("profile must be quick or full");
  }
  auto results = cd::run_acceptance(profile, g.threads, std::cerr);
  json arr = json::array();
  bool all = true;
  for (const auto& r : results) {
    arr.push_back({{"id", r.id},
                   {"name", r.name},
                   {"pass", r.pass},
                   {"detail", r.detail},
                   {"seconds", r.seconds}});
    all = all && r.pass;
  }
  json j{{"tool", cd::kToolVersion}, {"profile", profile_name}, {"criteria", arr}, {"all_pass", all}};
  g.out() << j.dump(2) << "\n";
  return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"numerical toolkit for the value distribution of cubic Hecke L-functions"};
  app.require_subcommand(1);
  GlobalOpts g;
  app.add_option("--threads", g.threads, "worker threads (0 = all cores)");
  app.add_option("--output", g.output_path, "write to file instead of stdout");

  long long max_norm = 1000;
  double sigma = 1.0;
  std::string kind_name = "log";
  std::string alpha_str, lambda_str, c_str;
  cd::EvalParams params;
  bool as_json = false, weighted = false;
  std::string cache_dir = cd::cache_directory();
  double y_min = 0.0, y_max = 20.0, y_step = 0.1;
  double z_min = 0.0, z_max = 0.0, z_step = 0.0;
  long long cutoff = 100000, mc_samples = 100000;
  std::uint64_t seed = 1;
  std::string profile = "quick";

  auto* sp = app.add_subcommand("primes", "prime ideal table");
  sp->add_option("--max-norm", max_norm, "largest ideal norm")->required();

  auto* sm = app.add_subcommand("moduli", "modulus family table");
  sm->add_option("--max-norm", max_norm, "largest modulus norm")->required();

  auto* ss = app.add_subcommand("symbol", "cubic residue symbol (alpha/lambda)_3");
  ss->add_option("--alpha", alpha_str, "numerator A,B")->required();
  ss->add_option("--lambda", lambda_str, "denominator A,B (not divisible by 1-zeta3)")->required();

  auto* sl = app.add_subcommand("lvalue", "log L_c or L'_c/L_c at real sigma");
  sl->add_option("--c", c_str, "modulus A,B")->required();
  sl->add_option("--sigma", sigma)->required();
  sl->add_option("--case", kind_name, "log|logderiv");
  sl->add_option("--cutoff", params.prime_cutoff, "prime cutoff (sigma > 1)");
  sl->add_option("--smooth", params.smoothing, "smoothing scale X (sigma <= 1)");
  sl->add_flag("--json", as_json);

  std::string lvalues_cache;  // off by default: the cache stores no err_est
  auto* sv = app.add_subcommand("lvalues", "batch L-values over the family");
  sv->add_option("--max-norm", max_norm)->required();
  sv->add_option("--sigma", sigma)->required();
  sv->add_option("--case", kind_name, "log|logderiv");
  sv->add_option("--cutoff", params.prime_cutoff);
  sv->add_option("--smooth", params.smoothing);
  sv->add_option("--cache-dir", lvalues_cache);

  auto* sc = app.add_subcommand("charfn", "predicted characteristic function on a y-grid");
  sc->add_option("--sigma", sigma)->required();
  sc->add_option("--case", kind_name, "log|logderiv");
  sc->add_option("--y-min", y_min);
  sc->add_option("--y-max", y_max);
  sc->add_option("--y-step", y_step);
  sc->add_option("--cutoff", cutoff, "prime cutoff of the product");

  auto* sd = app.add_subcommand("density", "predicted density and CDF by Fourier inversion");
  sd->add_option("--sigma", sigma)->required();
  sd->add_option("--case", kind_name, "log|logderiv");
  sd->add_option("--z-min", z_min);
  sd->add_option("--z-max", z_max);
  sd->add_option("--z-step", z_step);
  sd->add_option("--cutoff", cutoff);

  auto* scomp = app.add_subcommand("compare", "empirical family CDF vs predicted density");
  scomp->add_option("--sigma", sigma)->required();
  scomp->add_option("--case", kind_name, "log|logderiv");
  scomp->add_option("--max-norm", max_norm)->required();
  scomp->add_option("--cutoff", params.prime_cutoff);
  scomp->add_option("--smooth", params.smoothing);
  scomp->add_flag("--weighted", weighted);
  scomp->add_option("--cache-dir", cache_dir);
  scomp->add_flag("--json", as_json);

  auto* scount = app.add_subcommand("count", "family counting and the predicted slope");
  scount->add_option("--max-norm", max_norm)->required();
  scount->add_flag("--json", as_json);

  auto* smc = app.add_subcommand("montecarlo", "sample the independent local model");
  smc->add_option("--sigma", sigma)->required();
  smc->add_option("--case", kind_name, "log|logderiv");
  smc->add_option("--cutoff", cutoff);
  smc->add_option("--samples", mc_samples);
  smc->add_option("--seed", seed);

  auto* srep = app.add_subcommand("reproduce", "run the acceptance pipeline");
  srep->add_option("--profile", profile, "quick|full");

  // global options (--threads, --output) may follow the subcommand
  for (CLI::App* sub : app.get_subcommands(nullptr)) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (sp->parsed()) return run_primes(g, max_norm);
    if (sm->parsed()) return run_moduli(g, max_norm);
    if (ss->parsed()) return run_symbol(g, alpha_str, lambda_str);
    if (sl->parsed()) return run_lvalue(g, c_str, sigma, kind_name, params, as_json);
    if (sv->parsed()) return run_lvalues(g, max_norm, sigma, kind_name, params, lvalues_cache);
    if (sc->parsed()) return run_charfn(g, sigma, kind_name, y_min, y_max, y_step, cutoff);
    if (sd->parsed()) return run_density(g, sigma, kind_name, z_min, z_max, z_step, cutoff);
    if (scomp->parsed()) return run_compare(g, sigma, kind_name, max_norm, params, weighted, cache_dir);
    if (scount->parsed()) return run_count(g, max_norm, as_json);
    if (smc->parsed()) return run_montecarlo(g, sigma, kind_name, cutoff, mc_samples, seed);
    if (srep->parsed()) return run_reproduce(g, profile);
  } catch (const cd::NonConvergence& e) {
    std::cerr << "non-convergence: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
