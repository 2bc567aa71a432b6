#pragma once

#include <span>

#include "state.hpp"

namespace rdaopt::detail {

// Divergence term of the conservative stencil shared by the nonlinear state
// solve and its linearization: out[i] = -(F_{i+1/2} - F_{i-1/2}) / w_i with
//   F_{i+1/2} = -mu*(u_{i+1}-u_i)/dx + h_{i+1/2} * (u_i if h_{i+1/2} >= 0 else u_{i+1}),
//   h_{i+1/2} = (h_i + h_{i+1})/2.
// NoFlux zeroes the outer half-fluxes; the boundary cells have width dx/2
// (vertex-centered finite volume), which makes trapezoid mass telescope
// exactly. For DirichletZero the endpoint entries are set to zero; callers
// pin those nodes.
inline void flux_divergence(std::span<const double> u, std::span<const double> h,
                            double mu, double dx, BoundaryKind bc,
                            std::span<double> out) {
  const int nx = static_cast<int>(u.size());
  const double inv_dx = 1.0 / dx;

  auto face_flux = [&](int i) {
    const double hf = 0.5 * (h[i] + h[i + 1]);
    const double advect = hf >= 0.0 ? hf * u[i] : hf * u[i + 1];
    return -mu * (u[i + 1] - u[i]) * inv_dx + advect;
  };

  double left = face_flux(0);
  if (bc == BoundaryKind::NoFlux) {
    out[0] = -(left - 0.0) * (2.0 * inv_dx);
  } else {
    out[0] = 0.0;
  }
  for (int i = 1; i < nx - 1; ++i) {
    const double right = face_flux(i);
    out[i] = -(right - left) * inv_dx;
    left = right;
  }
  if (bc == BoundaryKind::NoFlux) {
    out[nx - 1] = -(0.0 - left) * (2.0 * inv_dx);
  } else {
    out[nx - 1] = 0.0;
  }
}

}  // namespace rdaopt::detail
