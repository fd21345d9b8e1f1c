#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "ot/grid.hpp"

namespace ot {

/// A value function sampled on a Grid1D, row-major over (time, space).
struct Surface {
    std::shared_ptr<const Grid1D> grid;
    std::vector<double> values;
    std::string label;
    std::string measure;  // tag: "market", "buyer", ...

    Surface() = default;
    Surface(std::shared_ptr<const Grid1D> g, std::string lbl = {}, std::string meas = {});

    double& at(int k, int i) { return values[static_cast<size_t>(k) * ns_ + static_cast<size_t>(i)]; }
    double at(int k, int i) const { return values[static_cast<size_t>(k) * ns_ + static_cast<size_t>(i)]; }
    std::span<double> slice(int k) { return {values.data() + static_cast<size_t>(k) * ns_, ns_}; }
    std::span<const double> slice(int k) const { return {values.data() + static_cast<size_t>(k) * ns_, ns_}; }

    /// Value at (t_k, s) with linear interpolation in s.
    double interp_s(int k, double s) const;

    void check_finite() const;

private:
    size_t ns_ = 0;
};

/// Space derivative dV/ds. Fourth-order central differences in the interior
/// (uniform spacing), second-order fallback near and at the edges.
Surface surface_ds(const Surface& f);

struct IndexInterval {
    int lo = 0;
    int hi = 0;  // inclusive
};

/// Per-time-step active set of a constraint, as sorted disjoint index
/// intervals, plus a critical-level curve when each slice has at most one
/// interior boundary crossing.
struct RegionSet {
    std::shared_ptr<const Grid1D> grid;
    std::vector<std::vector<IndexInterval>> intervals;  // per time index
    std::vector<double> curve;                          // s*(t), NaN when undefined
    std::vector<int8_t> active_below;                   // 1: active side is low s; 0: high s; -1: n/a
    bool curve_valid = false;

    bool active(int k, int i) const;
    /// Number of active nodes in slice k.
    int active_count(int k) const;
};

/// Active set {|A - B| <= max(abs_tol, rel_tol * max(1, |B|))} with the
/// critical curve interpolated from the sign change of |A-B| - tol.
RegionSet extract_region(const Surface& a, const Surface& b, double abs_tol, double rel_tol);

/// Region from per-node activity masks produced by an LCP march. The optional
/// gap function (|value - obstacle| - tol, negative on the active side) is
/// used to interpolate the critical curve between nodes.
RegionSet region_from_masks(std::shared_ptr<const Grid1D> grid,
                            const std::vector<std::vector<uint8_t>>& masks,
                            const std::vector<std::vector<double>>* gaps = nullptr);

/// A value function on a Grid2D, row-major over (time, s, y).
struct Surface2D {
    std::shared_ptr<const Grid2D> grid;
    std::vector<double> values;
    std::string label;
    std::string measure;

    Surface2D() = default;
    Surface2D(std::shared_ptr<const Grid2D> g, std::string lbl = {}, std::string meas = {});

    size_t node_index(int is, int iy) const {
        return static_cast<size_t>(is) * ny_ + static_cast<size_t>(iy);
    }
    double& at(int k, int is, int iy) { return values[static_cast<size_t>(k) * nn_ + node_index(is, iy)]; }
    double at(int k, int is, int iy) const { return values[static_cast<size_t>(k) * nn_ + node_index(is, iy)]; }
    std::span<double> slice(int k) { return {values.data() + static_cast<size_t>(k) * nn_, nn_}; }
    std::span<const double> slice(int k) const { return {values.data() + static_cast<size_t>(k) * nn_, nn_}; }

private:
    size_t ny_ = 0;
    size_t nn_ = 0;
};

/// dV/dy, central in the interior and one-sided at the y-edges.
Surface2D surface_dy(const Surface2D& f);

/// Active sets over a 2-D grid, stored as per-time node masks.
struct RegionSet2D {
    std::shared_ptr<const Grid2D> grid;
    std::vector<std::vector<uint8_t>> masks;  // [time][is*ny + iy]

    bool active(int k, int is, int iy) const;
    int active_count(int k) const;
    std::vector<IndexInterval> s_intervals(int k, int iy) const;
};

}  // namespace ot
