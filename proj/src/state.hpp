#pragma once

#include <utility>
#include <vector>

#include "grid.hpp"

namespace rdaopt {

// NoFlux imposes zero total flux mu*du/dn - u*h.n on both endpoints;
// DirichletZero pins u = 0 there (the hostile-boundary case).
enum class BoundaryKind { NoFlux, DirichletZero };

// Forward problem u_t - d/dx[mu u_x - u h] = u const(m - u) + source on [0,1]x[0,T].
struct StateProblem {
  double mu = 0.2;
  Grid1D grid;
  const Field* h = nullptr;       // advection, signed
  const Field* m = nullptr;       // resource rate
  SpaceProfile u0;                // non-negative initial density
  BoundaryKind boundary = BoundaryKind::NoFlux;
  const Field* source = nullptr;  // optional manufactured source
};

// Explicit conservative scheme: centered diffusive flux, first-order upwind
// advective flux on face-averaged h, forward Euler in time. Throws
// SolverError on stability violations, non-finite values, or densities
// below -1e-10 (the scheme preserves non-negativity under the step bounds).
Field solve_state(const StateProblem& problem);

// (t_n, integral of u(.,t_n) over [0,1]) per time level.
std::vector<std::pair<double, double>> mass_history(const Field& u);

}  // namespace rdaopt
