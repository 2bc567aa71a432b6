#include "state.hpp"

#include <cmath>
#include <string>

#include "errors.hpp"
#include "fluxform.hpp"

namespace rdaopt {

namespace {

void check_shared_grid(const Grid1D& grid, const Field* f, const char* name) {
  if (!f) throw ValidationError(std::string("state: missing field '") + name + "'");
  if (!(f->grid() == grid))
    throw ValidationError(std::string("state: field '") + name + "' is on a different grid");
}

}  // namespace

Field solve_state(const StateProblem& problem) {
  const Grid1D& g = problem.grid;
  check_shared_grid(g, problem.h, "h");
  check_shared_grid(g, problem.m, "m");
  if (problem.source) check_shared_grid(g, problem.source, "source");
  if (static_cast<int>(problem.u0.values.size()) != g.nx)
    throw ValidationError("state: u0 length does not match grid");
  for (int i = 0; i < g.nx; ++i) {
    const double v = problem.u0.values[i];
    if (!std::isfinite(v) || v < 0.0)
      throw ValidationError("state: u0 must be finite and non-negative (node " +
                            std::to_string(i) + " is " + std::to_string(v) + ")");
  }

  const double h_max = max_abs(*problem.h);
  const double dt_cap = stable_dt(problem.mu, g.dx, h_max, 1.0);
  if (g.dt > dt_cap * (1.0 + 1e-9))
    throw SolverError("state: dt=" + std::to_string(g.dt) +
                      " violates the advection-diffusion bound " + std::to_string(dt_cap));

  const double m_max = max_abs(*problem.m);
  const bool dirichlet = problem.boundary == BoundaryKind::DirichletZero;

  Field u(g);
  auto first = u.level(0);
  double u_cap = 0.0;
  for (int i = 0; i < g.nx; ++i) {
    first[i] = problem.u0.values[i];
    u_cap = std::max(u_cap, first[i]);
  }

  std::vector<double> div(static_cast<std::size_t>(g.nx));
  for (int n = 0; n + 1 < g.nt; ++n) {
    // Reaction stiffness guard; u_cap tracks the running solution maximum.
    if (g.dt * (m_max + 2.0 * u_cap) > 0.5)
      throw SolverError("state: reaction bound dt*(max|m|+2*max u) <= 0.5 violated at time level " +
                        std::to_string(n));

    auto cur = u.level(n);
    auto nxt = u.level(n + 1);
    auto h_n = problem.h->level(n);
    auto m_n = problem.m->level(n);
    detail::flux_divergence(cur, h_n, problem.mu, g.dx, problem.boundary, div);

    double level_max = 0.0;
    for (int i = 0; i < g.nx; ++i) {
      double v = cur[i] + g.dt * (div[i] + cur[i] * (m_n[i] - cur[i]));
      if (problem.source) v += g.dt * problem.source->at(i, n);
      nxt[i] = v;
    }
    if (dirichlet) {
      nxt[0] = 0.0;
      nxt[g.nx - 1] = 0.0;
    }
    for (int i = 0; i < g.nx; ++i) {
      const double v = nxt[i];
      if (!std::isfinite(v))
        throw SolverError("state: non-finite value at time level " + std::to_string(n + 1) +
                          ", node " + std::to_string(i));
      if (v < -1e-10)
        throw SolverError("state: negative density " + std::to_string(v) + " at time level " +
                          std::to_string(n + 1) + ", node " + std::to_string(i));
      level_max = std::max(level_max, v);
    }
    u_cap = std::max(u_cap, level_max);
  }
  return u;
}

std::vector<std::pair<double, double>> mass_history(const Field& u) {
  const Grid1D& g = u.grid();
  std::vector<std::pair<double, double>> out;
  out.reserve(static_cast<std::size_t>(g.nt));
  for (int n = 0; n < g.nt; ++n)
    out.emplace_back(g.t(n), integrate_space(u.level(n), g.dx));
  return out;
}

}  // namespace rdaopt
