#include "cubicdist/density.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace cubicdist {

namespace {

// Composite Simpson over samples f[0..n] (n a multiple of 2*stride) spaced h.
double simpson(const std::vector<double>& f, double h, size_t stride) {
  size_t n = (f.size() - 1) / stride;
  double odd = 0.0, even = 0.0;
  for (size_t j = 1; j < n; j += 2) odd += f[j * stride];
  for (size_t j = 2; j < n; j += 2) even += f[j * stride];
  return h * stride / 3.0 * (f[0] + 4.0 * odd + 2.0 * even + f[n * stride]);
}

double window_peak(const std::vector<Complex>& vals) {
  double peak = 0.0;
  for (const Complex& v : vals) peak = std::max(peak, std::abs(v));
  return peak;
}

}  // namespace

double DensityGrid::total_mass() const {
  double s = 0.0;
  for (size_t i = 1; i < z_values.size(); ++i)
    s += 0.5 * (m_values[i] + m_values[i - 1]) * (z_values[i] - z_values[i - 1]);
  return s;
}

double DensityGrid::mean() const {
  double s = 0.0;
  for (size_t i = 1; i < z_values.size(); ++i)
    s += 0.5 * (z_values[i] * m_values[i] + z_values[i - 1] * m_values[i - 1]) *
         (z_values[i] - z_values[i - 1]);
  return s;
}

DensityGrid invert(double sigma, CaseKind kind, std::vector<double> z_grid,
                   const QuadratureParams& quad) {
  if (sigma <= 0.5) throw std::invalid_argument("invert: need sigma > 1/2");
  const Complex s{sigma, 0.0};
  const auto norms = unramified_prime_norms(quad.prime_cutoff);

  // Location and scale probes from phi near 0.
  const double hp = 1e-3;
  Complex p1 = char_fn(s, hp, kind, norms).value;
  double mean = p1.imag() / hp;
  double ex2 = -2.0 * (p1.real() - 1.0) / (hp * hp);
  double sd = std::sqrt(std::max(1e-12, ex2 - mean * mean));

  const bool auto_grid = z_grid.empty();
  double half = std::max(10.0 * sd, 1.0);
  double center = mean;
  if (auto_grid && std::abs(sigma - 1.0) < 1e-12) {
    half = 8.0;
    center = 0.0;
  }
  auto build_grid = [&]() {
    double step = std::min(0.01, sd / 30.0);
    z_grid.clear();
    long long npts = (long long)std::ceil(2.0 * half / step);
    z_grid.reserve((size_t)npts + 1);
    for (long long i = 0; i <= npts; ++i) z_grid.push_back(center - half + step * i);
  };
  if (auto_grid) build_grid();
  for (size_t i = 1; i < z_grid.size(); ++i)
    if (z_grid[i] <= z_grid[i - 1]) throw std::invalid_argument("invert: z_grid must be increasing");

  // Truncation point: double until |phi| stays below the floor on [y/2, y]
  // and on the following octave.
  double y_max = quad.y_max;
  if (y_max <= 0.0) {
    y_max = 50.0;
    while (true) {
      const int probes = 512;
      double step1 = 0.5 * y_max / probes;
      double peak1 = window_peak(char_fn_grid(s, kind, 0.5 * y_max, step1, probes + 1, norms));
      double peak2 = window_peak(char_fn_grid(s, kind, y_max, 2.0 * step1, probes + 1, norms));
      if (std::max(peak1, peak2) < quad.phi_floor) break;
      y_max *= 2.0;
      if (y_max > quad.y_max_cap)
        throw NonConvergence("invert: |phi| did not fall below the floor before the y_max cap");
    }
  }

  DensityGrid grid;
  grid.sigma = sigma;
  grid.kind = kind;
  grid.prime_cutoff = quad.prime_cutoff;

  for (int expand = 0;; ++expand) {
    double zabs = std::max(std::abs(z_grid.front()), std::abs(z_grid.back()));
    double h = quad.y_step > 0.0 ? quad.y_step
                                 : std::min(0.5, std::numbers::pi / (8.0 * (zabs + 1.0)));
    grid.z_values = z_grid;

    const int max_refines = 3;
    for (int attempt = 0;; ++attempt) {
      size_t nseg = (size_t)std::ceil(y_max / h);
      nseg = (nseg + 3) / 4 * 4;
      double hh = y_max / (double)nseg;
      std::vector<Complex> phi = char_fn_grid(s, kind, 0.0, hh, (int)nseg + 1, norms);
      std::vector<double> re(nseg + 1), im(nseg + 1), fine(nseg + 1);
      for (size_t j = 0; j <= nseg; ++j) {
        re[j] = phi[j].real();
        im[j] = phi[j].imag();
      }

      size_t nz = grid.z_values.size();
      grid.m_values.assign(nz, 0.0);
      double worst = 0.0;
      for (size_t zi = 0; zi < nz; ++zi) {
        double z = grid.z_values[zi];
        Complex rot = std::polar(1.0, -z * hh);
        Complex e{1.0, 0.0};
        for (size_t j = 0; j <= nseg; ++j) {
          fine[j] = e.real() * re[j] - e.imag() * im[j];
          e *= rot;
          if ((j & 1023) == 1023) e = std::polar(1.0, -z * hh * (double)(j + 1));
        }
        double m_fine = simpson(fine, hh, 1) / std::numbers::pi;
        double m_coarse = simpson(fine, hh, 2) / std::numbers::pi;
        grid.m_values[zi] = m_fine;
        worst = std::max(worst, std::abs(m_fine - m_coarse));
      }
      grid.y_max = y_max;
      grid.y_step = hh;
      grid.refine_error = worst;
      if (worst <= quad.refine_tol) break;
      if (attempt >= max_refines)
        throw NonConvergence("invert: Simpson refinement kept changing density values");
      h /= 2.0;
    }

    grid.cdf_values.assign(grid.z_values.size(), 0.0);
    for (size_t i = 1; i < grid.z_values.size(); ++i) {
      grid.cdf_values[i] = grid.cdf_values[i - 1] +
                           0.5 * (grid.m_values[i] + grid.m_values[i - 1]) *
                               (grid.z_values[i] - grid.z_values[i - 1]);
    }
    // Widen automatic grids until the edges carry no visible mass.
    if (!auto_grid || expand >= 2 || grid.total_mass() >= 1.0 - 1e-3) break;
    half *= 1.6;
    build_grid();
  }
  return grid;
}

double cdf_at(const DensityGrid& grid, double z) {
  const auto& zs = grid.z_values;
  if (zs.empty()) throw std::invalid_argument("cdf_at: empty grid");
  if (z <= zs.front()) return 0.0;
  if (z >= zs.back()) return 1.0;
  size_t hi = (size_t)(std::upper_bound(zs.begin(), zs.end(), z) - zs.begin());
  size_t lo = hi - 1;
  double t = (z - zs[lo]) / (zs[hi] - zs[lo]);
  double v = grid.cdf_values[lo] + t * (grid.cdf_values[hi] - grid.cdf_values[lo]);
  return std::clamp(v, 0.0, 1.0);
}

}  // namespace cubicdist
