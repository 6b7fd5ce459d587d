#include "cohsim/grid.hpp"

#include <cmath>
#include <numbers>

#include "cohsim/errors.hpp"

namespace cohsim {

Grid1D make_grid(double x_min, double x_max, int n, bool periodic) {
  if (!(x_max > x_min))
    throw ConfigError("make_grid: empty extent, x_max must exceed x_min");
  if (n < 8) throw ConfigError("make_grid: n_points must be at least 8");
  Grid1D g;
  g.x_min = x_min;
  g.x_max = x_max;
  g.n = n;
  g.dx = (x_max - x_min) / n;
  g.periodic = periodic;
  return g;
}

std::vector<double> Grid1D::positions() const {
  std::vector<double> xs(n);
  for (int j = 0; j < n; ++j) xs[j] = x(j);
  return xs;
}

std::vector<double> Grid1D::wavenumbers() const {
  std::vector<double> ks(n);
  const double dk = 2.0 * std::numbers::pi / (n * dx);
  for (int j = 0; j < n; ++j) {
    const int f = (j < (n + 1) / 2) ? j : j - n;
    ks[j] = dk * f;
  }
  return ks;
}

int Grid1D::index_near(double xv) const {
  int j = static_cast<int>(std::lround((xv - x_min) / dx));
  if (j < 0) j = 0;
  if (j >= n) j = n - 1;
  return j;
}

Grid1D Grid1D::decimated(int stride) const {
  if (stride < 1 || n % stride != 0)
    throw ConfigError("Grid1D::decimated: stride must divide n_points");
  Grid1D g = *this;
  g.n = n / stride;
  g.dx = dx * stride;
  return g;
}

double integrate(std::span<const double> field, const Grid1D& grid) {
  double s = 0.0;
  for (double v : field) s += v;
  return s * grid.dx;
}

int decimation_stride(const Grid1D& grid, int max_points) {
  if (max_points < 8) throw ConfigError("decimation: max_points too small");
  int stride = 1;
  while (grid.n / stride > max_points || grid.n % stride != 0) {
    ++stride;
    if (stride > grid.n) return grid.n;  // degenerate, single point
  }
  return stride;
}

}  // namespace cohsim
