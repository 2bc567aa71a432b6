#pragma once

#include "grid.hpp"
#include "state.hpp"

namespace rdaopt {

// Backward problem -p_t - mu p_xx - h p_x - (m - 2u) p = 1 with p(.,T) = 0.
// NoFlux state runs pair with dp/dn = 0; DirichletZero runs pin p = 0.
struct AdjointProblem {
  double mu = 0.2;
  Grid1D grid;
  const Field* h = nullptr;
  const Field* m = nullptr;
  const Field* u = nullptr;  // state produced by solve_state
  BoundaryKind boundary = BoundaryKind::NoFlux;
};

// Substitutes q(x,s) = p(x,T-s) and steps q forward explicitly:
//   q <- q + dt*(mu*D2 q - b*D1 q - c*q + 1),
// b = -h(x,T-s), c = 2u(x,T-s) - m(x,T-s), centered D2, upwind D1 on the
// sign of b, mirror ghost nodes for the Neumann condition.
Field solve_adjoint(const AdjointProblem& problem);

}  // namespace rdaopt
