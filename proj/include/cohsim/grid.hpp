#pragma once

#include <span>
#include <vector>

namespace cohsim {

/// Uniform 1D grid over [x_min, x_max) with n points, x_j = x_min + j*dx.
/// `periodic` selects the propagator boundary treatment: wrap-around
/// (default) or hard walls realized by odd extension.
struct Grid1D {
  double x_min = 0.0;
  double x_max = 0.0;
  int n = 0;
  double dx = 0.0;
  bool periodic = true;

  double x(int j) const { return x_min + j * dx; }
  double length() const { return x_max - x_min; }

  std::vector<double> positions() const;

  /// Wavenumbers in DFT order: k_j = 2*pi*f_j/(n*dx), f_j = j for
  /// j < n/2 and j-n otherwise.
  std::vector<double> wavenumbers() const;

  /// Index of the grid point nearest to x (clamped to range).
  int index_near(double xv) const;

  /// Sub-grid keeping every stride-th point; stride must divide n.
  Grid1D decimated(int stride) const;

  bool operator==(const Grid1D&) const = default;
};

/// Validates and builds a grid. Requires x_max > x_min and n >= 8.
Grid1D make_grid(double x_min, double x_max, int n, bool periodic = true);

/// Uniform-weight Riemann quadrature: sum(f_j) * dx. Consistent with the
/// spectral representation of periodic fields.
double integrate(std::span<const double> field, const Grid1D& grid);

/// Smallest stride that divides grid.n and yields at most max_points.
int decimation_stride(const Grid1D& grid, int max_points);

}  // namespace cohsim
