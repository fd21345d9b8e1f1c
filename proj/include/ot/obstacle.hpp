#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "ot/grid.hpp"
#include "ot/surface.hpp"
#include "ot/tridiag.hpp"

namespace ot {

enum class Scheme { Implicit, CrankNicolson };

/// Side of the obstacle the solution must stay on.
///   ValueAboveObstacle: u >= psi (sup-type problems, e.g. American exercise)
///   ValueBelowObstacle: u <= psi (inf-type problems, e.g. cost minimization)
enum class ObstacleSense { ValueAboveObstacle, ValueBelowObstacle };

struct BoundaryCondition {
    enum class Kind { Dirichlet, GammaZero };
    Kind kind = Kind::GammaZero;
    std::function<double(double)> value;  // Dirichlet value as a function of t

    static BoundaryCondition dirichlet(std::function<double(double)> v) {
        return {Kind::Dirichlet, std::move(v)};
    }
    static BoundaryCondition dirichlet_const(double v) {
        return {Kind::Dirichlet, [v](double) { return v; }};
    }
    static BoundaryCondition gamma_zero() { return {Kind::GammaZero, {}}; }
};

/// Fills per-node coefficients of the generator
///   L u = diffusion * u_ss + drift * u_s - discount * u
/// plus the inhomogeneous source, at time t.
using CoefficientFn = std::function<void(double t, std::span<const double> s,
                                         std::span<double> diffusion, std::span<double> drift,
                                         std::span<double> discount, std::span<double> source)>;

/// One backward-parabolic problem on [0,T]:
///   du/dt + L u + source  (=, <=, >=)  0   with terminal data and an
/// optional node-wise obstacle. The PDE relation is "=" where the obstacle is
/// absent or slack.
struct ObstacleProblem {
    std::shared_ptr<const Grid1D> grid;
    CoefficientFn coefficients;
    std::vector<double> terminal;
    std::optional<Surface> obstacle;  // node-wise; absent -> pure PDE
    ObstacleSense sense = ObstacleSense::ValueAboveObstacle;
    std::function<bool(int)> obstacle_window;  // per target time index; default: always on
    BoundaryCondition lower_bc = BoundaryCondition::dirichlet_const(0.0);
    BoundaryCondition upper_bc = BoundaryCondition::gamma_zero();
    double region_abs_tol = 1e-7;
    double region_rel_tol = 1e-6;

    bool obstacle_on(int k) const { return !obstacle_window || obstacle_window(k); }
};

struct SolverOptions {
    Scheme scheme = Scheme::CrankNicolson;
    double omega = 1.5;
    double tol = 1e-8;
    int max_iter = 10000;
};

struct AssembledStep {
    LinearOperatorBand matrix;
    std::vector<double> rhs;
};

/// Assembles the system for the backward step from slice `time_index` onto
/// slice `time_index - 1`. Dirichlet rows are exact identity rows.
AssembledStep assemble_step(const ObstacleProblem& p, int time_index, Scheme scheme,
                            std::span<const double> known_slice);

struct PsorResult {
    std::vector<double> solution;
    std::vector<uint8_t> active;
    int iterations = 0;
    double comp_residual = 0.0;
};

/// Projected SOR on a tridiagonal LCP. Stops when the complementarity
/// residual falls below tol; throws MaxIterExceeded otherwise (carrying the
/// last iterate and its residual).
PsorResult psor_step(const LinearOperatorBand& m, std::span<const double> rhs,
                     std::span<const double> obstacle, ObstacleSense sense,
                     std::span<const double> warm_start, double omega, double tol, int max_iter);

struct MarchStats {
    long total_psor_iterations = 0;
    double max_comp_residual = 0.0;
    int nondominant_steps = 0;
    bool diagonally_dominant() const { return nondominant_steps == 0; }
};

struct MarchResult {
    Surface surface;
    RegionSet region;  // active set of the obstacle; empty for pure PDE
    MarchStats stats;
};

/// Backward time-marching over the whole grid. Crank-Nicolson runs the first
/// two steps after the terminal condition fully implicit.
MarchResult march(const ObstacleProblem& p, const SolverOptions& opts = {},
                  const std::string& label = {});

}  // namespace ot
