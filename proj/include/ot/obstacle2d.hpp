#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "ot/grid.hpp"
#include "ot/obstacle.hpp"
#include "ot/surface.hpp"

namespace ot {

/// Fills per-node coefficients (arrays indexed is*ny + iy) of the generator
///   L u = a_ss u_ss + a_yy u_yy + a_sy u_sy + b_s u_s + b_y u_y - discount u
/// plus the source, at time t.
using CoefficientFn2D = std::function<void(double t, const Grid2D& g, std::span<double> a_ss,
                                           std::span<double> a_yy, std::span<double> a_sy,
                                           std::span<double> b_s, std::span<double> b_y,
                                           std::span<double> discount, std::span<double> source)>;

struct BoundaryCondition2D {
    enum class Kind { Dirichlet, GammaZero };
    Kind kind = Kind::GammaZero;
    // Dirichlet value as a function of (t, along-edge coordinate)
    std::function<double(double, double)> value;

    static BoundaryCondition2D dirichlet(std::function<double(double, double)> v) {
        return {Kind::Dirichlet, std::move(v)};
    }
    static BoundaryCondition2D gamma_zero() { return {Kind::GammaZero, {}}; }
};

struct ObstacleProblem2D {
    std::shared_ptr<const Grid2D> grid;
    CoefficientFn2D coefficients;
    std::vector<double> terminal;        // node-major (is*ny + iy)
    std::optional<Surface2D> obstacle;   // absent -> pure PDE
    ObstacleSense sense = ObstacleSense::ValueAboveObstacle;
    BoundaryCondition2D s_lower_bc = BoundaryCondition2D::gamma_zero();
    BoundaryCondition2D s_upper_bc = BoundaryCondition2D::gamma_zero();
    BoundaryCondition2D y_lower_bc = BoundaryCondition2D::gamma_zero();
    BoundaryCondition2D y_upper_bc = BoundaryCondition2D::gamma_zero();
    double region_abs_tol = 1e-7;
    double region_rel_tol = 1e-6;
};

struct MarchResult2D {
    Surface2D surface;
    RegionSet2D region;
    MarchStats stats;
};

/// Backward march, fully implicit in time, PSOR over the 9-point system.
MarchResult2D march_2d(const ObstacleProblem2D& p, const SolverOptions& opts = {},
                       const std::string& label = {});

}  // namespace ot
