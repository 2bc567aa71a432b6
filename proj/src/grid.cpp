#include "grid.hpp"

#include <cmath>
#include <string>

#include "errors.hpp"

namespace rdaopt {

Grid1D Grid1D::make(int nx, int nt, double T) {
  if (nx < 3) throw ValidationError("grid: nx must be >= 3, got " + std::to_string(nx));
  if (nt < 2) throw ValidationError("grid: nt must be >= 2, got " + std::to_string(nt));
  if (!(T > 0.0) || !std::isfinite(T))
    throw ValidationError("grid: T must be positive and finite");
  Grid1D g;
  g.nx = nx;
  g.nt = nt;
  g.T = T;
  g.dx = 1.0 / (nx - 1);
  g.dt = T / (nt - 1);
  return g;
}

Field::Field(const Grid1D& grid, double fill)
    : grid_(grid),
      values_(static_cast<std::size_t>(grid.nx) * static_cast<std::size_t>(grid.nt), fill) {
  if (grid.nx < 3 || grid.nt < 2)
    throw ValidationError("field: grid is not initialized");
}

double integrate_space(std::span<const double> level, double dx) {
  const std::size_t n = level.size();
  double sum = 0.5 * (level.front() + level.back());
  for (std::size_t i = 1; i + 1 < n; ++i) sum += level[i];
  return sum * dx;
}

double integrate_space(const SpaceProfile& profile) {
  return integrate_space(profile.values, profile.grid.dx);
}

double integrate_spacetime(const Field& field) {
  const Grid1D& g = field.grid();
  double sum = 0.0;
  for (int n = 0; n < g.nt; ++n) {
    const double w = (n == 0 || n == g.nt - 1) ? 0.5 : 1.0;
    sum += w * integrate_space(field.level(n), g.dx);
  }
  return sum * g.dt;
}

double linf_norm(const Field& field) {
  double m = 0.0;
  for (double v : field.values()) m = std::max(m, std::abs(v));
  return m;
}

double l2_norm(const Field& field) {
  const Grid1D& g = field.grid();
  double sum = 0.0;
  for (int n = 0; n < g.nt; ++n) {
    const double wt = (n == 0 || n == g.nt - 1) ? 0.5 : 1.0;
    auto level = field.level(n);
    double s = 0.5 * (level.front() * level.front() + level.back() * level.back());
    for (int i = 1; i + 1 < g.nx; ++i) s += level[i] * level[i];
    sum += wt * s;
  }
  return std::sqrt(sum * g.dx * g.dt);
}

double min_value(const Field& field) {
  double m = field.values().front();
  for (double v : field.values()) m = std::min(m, v);
  return m;
}

double max_value(const Field& field) {
  double m = field.values().front();
  for (double v : field.values()) m = std::max(m, v);
  return m;
}

double max_abs(const Field& field) { return linf_norm(field); }

double stable_dt(double mu, double dx, double h_max, double safety) {
  if (!(mu > 0.0)) throw ValidationError("stable_dt: mu must be positive");
  if (!(dx > 0.0)) throw ValidationError("stable_dt: dx must be positive");
  if (h_max < 0.0) throw ValidationError("stable_dt: h_max must be non-negative");
  if (!(safety > 0.0) || safety > 1.0)
    throw ValidationError("stable_dt: safety must be in (0,1]");
  return safety * dx * dx / (2.0 * mu + h_max * dx);
}

}  // namespace rdaopt
