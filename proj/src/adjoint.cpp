#include "adjoint.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "errors.hpp"

namespace rdaopt {

namespace {

void check_shared_grid(const Grid1D& grid, const Field* f, const char* name) {
  if (!f) throw ValidationError(std::string("adjoint: missing field '") + name + "'");
  if (!(f->grid() == grid))
    throw ValidationError(std::string("adjoint: field '") + name + "' is on a different grid");
}

}  // namespace

Field solve_adjoint(const AdjointProblem& problem) {
  const Grid1D& g = problem.grid;
  check_shared_grid(g, problem.h, "h");
  check_shared_grid(g, problem.m, "m");
  check_shared_grid(g, problem.u, "u");

  const double h_max = max_abs(*problem.h);
  const double dt_cap = stable_dt(problem.mu, g.dx, h_max, 1.0);
  if (g.dt > dt_cap * (1.0 + 1e-9))
    throw SolverError("adjoint: dt=" + std::to_string(g.dt) +
                      " violates the advection-diffusion bound " + std::to_string(dt_cap));

  // Reaction coefficient c = 2u - m must satisfy dt*max|c| <= 0.5.
  double c_max = 0.0;
  {
    auto uv = problem.u->values();
    auto mv = problem.m->values();
    for (std::size_t k = 0; k < uv.size(); ++k)
      c_max = std::max(c_max, std::abs(2.0 * uv[k] - mv[k]));
  }
  if (g.dt * c_max > 0.5)
    throw SolverError("adjoint: reaction bound dt*max|2u-m| <= 0.5 violated (max|c|=" +
                      std::to_string(c_max) + ")");

  const bool dirichlet = problem.boundary == BoundaryKind::DirichletZero;
  const double inv_dx = 1.0 / g.dx;
  const double inv_dx2 = inv_dx * inv_dx;

  Field p(g);
  // q is marched forward from q(.,0) = 0; level s of q is level nt-1-s of p.
  std::vector<double> cur(static_cast<std::size_t>(g.nx), 0.0);
  std::vector<double> nxt(static_cast<std::size_t>(g.nx), 0.0);

  for (int s = 0; s + 1 < g.nt; ++s) {
    const int k = g.nt - 1 - s;  // time level of the coefficients in p-time
    auto h_k = problem.h->level(k);
    auto m_k = problem.m->level(k);
    auto u_k = problem.u->level(k);

    for (int i = 0; i < g.nx; ++i) {
      if (dirichlet && (i == 0 || i == g.nx - 1)) {
        nxt[i] = 0.0;
        continue;
      }
      // Mirror ghosts q_{-1} = q_1 and q_{nx} = q_{nx-2} carry dq/dx = 0.
      const double q_l = (i == 0) ? cur[1] : cur[i - 1];
      const double q_r = (i == g.nx - 1) ? cur[g.nx - 2] : cur[i + 1];
      const double d2 = (q_r - 2.0 * cur[i] + q_l) * inv_dx2;
      const double b = -h_k[i];
      const double d1 = b >= 0.0 ? (cur[i] - q_l) * inv_dx : (q_r - cur[i]) * inv_dx;
      const double c = 2.0 * u_k[i] - m_k[i];
      const double v = cur[i] + g.dt * (problem.mu * d2 - b * d1 - c * cur[i] + 1.0);
      if (!std::isfinite(v))
        throw SolverError("adjoint: non-finite value at backward step " + std::to_string(s) +
                          ", node " + std::to_string(i));
      nxt[i] = v;
    }
    cur.swap(nxt);
    auto dest = p.level(k - 1);
    for (int i = 0; i < g.nx; ++i) dest[i] = cur[i];
  }
  return p;
}

}  // namespace rdaopt
