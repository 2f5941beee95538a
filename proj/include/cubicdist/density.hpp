#pragma once

#include <stdexcept>
#include <vector>

#include "cubicdist/case_kind.hpp"
#include "cubicdist/charfn.hpp"

namespace cubicdist {

// Signals a quadrature that failed its own accuracy checks (maps to exit
// code 2 on the CLI).
struct NonConvergence : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Sampled density (M) and CDF (F) of the predicted distribution on a z-grid,
// produced by Fourier inversion M(z) = (1/2pi) int exp(-izy) phi(y) dy.
struct DensityGrid {
  double sigma = 0.0;
  CaseKind kind = CaseKind::Log;
  std::vector<double> z_values;    // increasing
  std::vector<double> m_values;    // density samples
  std::vector<double> cdf_values;  // cumulative trapezoid of m_values

  // quadrature metadata
  double y_max = 0.0;
  double y_step = 0.0;
  long long prime_cutoff = 0;
  double refine_error = 0.0;  // max |M_h - M_{2h}| from the self-test

  double total_mass() const;  // trapezoid integral of m_values
  double mean() const;        // trapezoid integral of z m(z)
};

struct QuadratureParams {
  double y_max = 0.0;            // 0 = doubling search from 50
  double y_step = 0.0;           // 0 = min(0.5, pi / (8 (max|z| + 1)))
  long long prime_cutoff = 100000;
  double phi_floor = 1e-8;       // require |phi| below this at y_max
  double refine_tol = 1e-5;      // Simpson h vs 2h tolerance
  double y_max_cap = 1e5;
};

// Composite-Simpson inversion of Re(e^{-izy} phi(y)) over [0, y_max] (the
// imaginary part cancels by conjugate symmetry). z_grid empty = automatic
// grid from the distribution's mean and standard deviation ([-8, 8] step 0.01
// at sigma = 1). Throws NonConvergence if |phi(y_max)| stays above phi_floor
// or the step-halving self-test fails.
DensityGrid invert(double sigma, CaseKind kind, std::vector<double> z_grid,
                   const QuadratureParams& quad = {});

// Interpolated F(z), clamped to [0, 1] outside the grid.
double cdf_at(const DensityGrid& grid, double z);

}  // namespace cubicdist
