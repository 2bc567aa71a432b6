#pragma once

#include <span>
#include <vector>

namespace rdaopt {

// Uniform node-centered grid on [0,1] x [0,T]. Boundary nodes are included:
// x_i = i*dx for i = 0..nx-1, t_n = n*dt for n = 0..nt-1.
struct Grid1D {
  int nx = 0;
  int nt = 0;
  double dx = 0.0;
  double dt = 0.0;
  double T = 0.0;

  // Validates nx >= 3, nt >= 2, T > 0 and derives the step sizes.
  static Grid1D make(int nx, int nt, double T);

  double x(int i) const { return i * dx; }
  double t(int n) const { return n * dt; }

  bool operator==(const Grid1D&) const = default;
};

// Real-valued function sampled on a Grid1D, stored time-major: the nx values
// of one time level are contiguous.
class Field {
 public:
  Field() = default;
  Field(const Grid1D& grid, double fill = 0.0);

  const Grid1D& grid() const { return grid_; }
  int nx() const { return grid_.nx; }
  int nt() const { return grid_.nt; }

  double at(int i, int n) const { return values_[idx(i, n)]; }
  double& at(int i, int n) { return values_[idx(i, n)]; }

  std::span<const double> level(int n) const {
    return {values_.data() + static_cast<std::size_t>(n) * grid_.nx,
            static_cast<std::size_t>(grid_.nx)};
  }
  std::span<double> level(int n) {
    return {values_.data() + static_cast<std::size_t>(n) * grid_.nx,
            static_cast<std::size_t>(grid_.nx)};
  }

  std::span<const double> values() const { return values_; }
  std::span<double> values() { return values_; }

 private:
  std::size_t idx(int i, int n) const {
    return static_cast<std::size_t>(n) * grid_.nx + i;
  }
  Grid1D grid_;
  std::vector<double> values_;
};

// One time slice: nx samples of a function of x alone.
struct SpaceProfile {
  Grid1D grid;
  std::vector<double> values;

  SpaceProfile() = default;
  SpaceProfile(const Grid1D& g, double fill = 0.0)
      : grid(g), values(static_cast<std::size_t>(g.nx), fill) {}
};

// Trapezoid rule over [0,1]; exact for affine profiles.
double integrate_space(std::span<const double> level, double dx);
double integrate_space(const SpaceProfile& profile);

// Trapezoid rule in both x and t over [0,1] x [0,T].
double integrate_spacetime(const Field& field);

double linf_norm(const Field& field);

// Quadrature-weighted L2 norm over [0,1] x [0,T].
double l2_norm(const Field& field);

double min_value(const Field& field);
double max_value(const Field& field);
double max_abs(const Field& field);

// Largest stable explicit step for the advection-diffusion stencil:
// safety * dx^2 / (2*mu + h_max*dx). Callers must keep dt at or below this.
double stable_dt(double mu, double dx, double h_max, double safety);

}  // namespace rdaopt
