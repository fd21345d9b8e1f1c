#include "ot/surface.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "ot/errors.hpp"

namespace ot {

namespace {
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
}

Surface::Surface(std::shared_ptr<const Grid1D> g, std::string lbl, std::string meas)
    : grid(std::move(g)), label(std::move(lbl)), measure(std::move(meas)) {
    ns_ = static_cast<size_t>(grid->num_space());
    values.assign(static_cast<size_t>(grid->num_time()) * ns_, 0.0);
}

double Surface::interp_s(int k, double s) const {
    const auto& sn = grid->s_nodes;
    if (s <= sn.front()) return at(k, 0);
    if (s >= sn.back()) return at(k, grid->num_space() - 1);
    const auto it = std::upper_bound(sn.begin(), sn.end(), s);
    const int i = static_cast<int>(it - sn.begin()) - 1;
    const double w = (s - sn[i]) / (sn[i + 1] - sn[i]);
    return (1.0 - w) * at(k, i) + w * at(k, i + 1);
}

void Surface::check_finite() const {
    for (double v : values) {
        if (!std::isfinite(v)) throw SolverError("Surface '" + label + "' contains non-finite values");
    }
}

Surface surface_ds(const Surface& f) {
    const auto& s = f.grid->s_nodes;
    const int m = f.grid->num_space();
    const int nt = f.grid->num_time();
    Surface d(f.grid, f.label + "_ds", f.measure);

    // uniform spacing enables the 4th-order stencil
    const double h = s[1] - s[0];
    bool uniform = true;
    for (int i = 1; i + 1 < m; ++i) {
        if (std::fabs((s[i + 1] - s[i]) - h) > 1e-10 * h) { uniform = false; break; }
    }

    for (int k = 0; k < nt; ++k) {
        auto u = f.slice(k);
        auto out = d.slice(k);
        out[0] = (u[1] - u[0]) / (s[1] - s[0]);
        out[m - 1] = (u[m - 1] - u[m - 2]) / (s[m - 1] - s[m - 2]);
        for (int i = 1; i + 1 < m; ++i) {
            if (uniform && i >= 2 && i + 2 < m) {
                out[i] = (u[i - 2] - 8.0 * u[i - 1] + 8.0 * u[i + 1] - u[i + 2]) / (12.0 * h);
            } else {
                const double hm = s[i] - s[i - 1];
                const double hp = s[i + 1] - s[i];
                out[i] = (-hp / (hm * (hm + hp))) * u[i - 1] +
                         ((hp - hm) / (hm * hp)) * u[i] +
                         (hm / (hp * (hm + hp))) * u[i + 1];
            }
        }
    }
    return d;
}

bool RegionSet::active(int k, int i) const {
    for (const auto& iv : intervals[static_cast<size_t>(k)]) {
        if (i >= iv.lo && i <= iv.hi) return true;
    }
    return false;
}

int RegionSet::active_count(int k) const {
    int n = 0;
    for (const auto& iv : intervals[static_cast<size_t>(k)]) n += iv.hi - iv.lo + 1;
    return n;
}

namespace {

std::vector<IndexInterval> mask_to_intervals(const std::vector<uint8_t>& mask) {
    std::vector<IndexInterval> out;
    const int m = static_cast<int>(mask.size());
    int i = 0;
    while (i < m) {
        if (mask[static_cast<size_t>(i)]) {
            int j = i;
            while (j + 1 < m && mask[static_cast<size_t>(j + 1)]) ++j;
            out.push_back({i, j});
            i = j + 1;
        } else {
            ++i;
        }
    }
    return out;
}

// Builds curve/orientation data given per-slice masks and an optional gap
// function (|A-B| - tol, negative on the active side) for interpolation.
void finalize_region(RegionSet& r, const std::vector<std::vector<uint8_t>>& masks,
                     const std::vector<std::vector<double>>* gaps) {
    const auto& s = r.grid->s_nodes;
    const int m = r.grid->num_space();
    const int nt = r.grid->num_time();
    r.intervals.resize(static_cast<size_t>(nt));
    r.curve.assign(static_cast<size_t>(nt), kNaN);
    r.active_below.assign(static_cast<size_t>(nt), -1);
    r.curve_valid = true;

    for (int k = 0; k < nt; ++k) {
        const auto& mask = masks[static_cast<size_t>(k)];
        auto ivs = mask_to_intervals(mask);
        r.intervals[static_cast<size_t>(k)] = ivs;

        // Single-node intervals pinned to a grid edge (e.g. a Dirichlet row that
        // trivially touches the obstacle) do not count as boundary crossings.
        std::vector<IndexInterval> core;
        for (const auto& iv : ivs) {
            const bool edge_singleton = (iv.lo == iv.hi) && (iv.lo == 0 || iv.hi == m - 1);
            if (!edge_singleton) core.push_back(iv);
        }
        if (core.empty() || (core.size() == 1 && core[0].lo == 0 && core[0].hi == m - 1)) {
            continue;  // empty or full slice: no crossing, curve undefined
        }
        if (core.size() > 1) {
            r.curve_valid = false;
            continue;
        }
        const auto& iv = core[0];
        const bool below = (iv.lo == 0);
        const bool above = (iv.hi == m - 1);
        if (below == above) {  // interior island: two crossings
            r.curve_valid = false;
            continue;
        }
        r.active_below[static_cast<size_t>(k)] = below ? 1 : 0;
        const int ia = below ? iv.hi : iv.lo;            // last active node
        const int ib = below ? iv.hi + 1 : iv.lo - 1;    // first inactive node
        double x = s[static_cast<size_t>(ia)];
        if (gaps) {
            const double ga = (*gaps)[static_cast<size_t>(k)][static_cast<size_t>(ia)];
            const double gb = (*gaps)[static_cast<size_t>(k)][static_cast<size_t>(ib)];
            if (gb > ga) {
                const double w = std::clamp((0.0 - ga) / (gb - ga), 0.0, 1.0);
                x = s[static_cast<size_t>(ia)] + w * (s[static_cast<size_t>(ib)] - s[static_cast<size_t>(ia)]);
            } else {
                x = 0.5 * (s[static_cast<size_t>(ia)] + s[static_cast<size_t>(ib)]);
            }
        }
        r.curve[static_cast<size_t>(k)] = x;
    }
}

}  // namespace

RegionSet extract_region(const Surface& a, const Surface& b, double abs_tol, double rel_tol) {
    if (!a.grid || !b.grid || !same_grid(*a.grid, *b.grid)) {
        throw GridMismatch("extract_region: surfaces live on different grids");
    }
    const int nt = a.grid->num_time();
    const int m = a.grid->num_space();
    std::vector<std::vector<uint8_t>> masks(static_cast<size_t>(nt));
    std::vector<std::vector<double>> gaps(static_cast<size_t>(nt));
    for (int k = 0; k < nt; ++k) {
        auto& mask = masks[static_cast<size_t>(k)];
        auto& gap = gaps[static_cast<size_t>(k)];
        mask.resize(static_cast<size_t>(m));
        gap.resize(static_cast<size_t>(m));
        for (int i = 0; i < m; ++i) {
            const double tol = std::max(abs_tol, rel_tol * std::max(1.0, std::fabs(b.at(k, i))));
            const double g = std::fabs(a.at(k, i) - b.at(k, i)) - tol;
            gap[static_cast<size_t>(i)] = g;
            mask[static_cast<size_t>(i)] = g <= 0.0 ? 1 : 0;
        }
    }
    RegionSet r;
    r.grid = a.grid;
    finalize_region(r, masks, &gaps);
    return r;
}

RegionSet region_from_masks(std::shared_ptr<const Grid1D> grid,
                            const std::vector<std::vector<uint8_t>>& masks,
                            const std::vector<std::vector<double>>* gaps) {
    RegionSet r;
    r.grid = std::move(grid);
    finalize_region(r, masks, gaps);
    return r;
}

Surface2D::Surface2D(std::shared_ptr<const Grid2D> g, std::string lbl, std::string meas)
    : grid(std::move(g)), label(std::move(lbl)), measure(std::move(meas)) {
    ny_ = static_cast<size_t>(grid->num_y());
    nn_ = static_cast<size_t>(grid->num_s()) * ny_;
    values.assign(static_cast<size_t>(grid->num_time()) * nn_, 0.0);
}

Surface2D surface_dy(const Surface2D& f) {
    const auto& y = f.grid->y_nodes;
    const int ns = f.grid->num_s();
    const int ny = f.grid->num_y();
    const int nt = f.grid->num_time();
    Surface2D d(f.grid, f.label + "_dy", f.measure);
    for (int k = 0; k < nt; ++k) {
        for (int is = 0; is < ns; ++is) {
            for (int iy = 0; iy < ny; ++iy) {
                double v;
                if (iy == 0) {
                    v = (f.at(k, is, 1) - f.at(k, is, 0)) / (y[1] - y[0]);
                } else if (iy == ny - 1) {
                    v = (f.at(k, is, ny - 1) - f.at(k, is, ny - 2)) / (y[ny - 1] - y[ny - 2]);
                } else {
                    v = (f.at(k, is, iy + 1) - f.at(k, is, iy - 1)) / (y[iy + 1] - y[iy - 1]);
                }
                d.at(k, is, iy) = v;
            }
        }
    }
    return d;
}

bool RegionSet2D::active(int k, int is, int iy) const {
    const int ny = grid->num_y();
    return masks[static_cast<size_t>(k)][static_cast<size_t>(is) * ny + static_cast<size_t>(iy)] != 0;
}

int RegionSet2D::active_count(int k) const {
    int n = 0;
    for (auto v : masks[static_cast<size_t>(k)]) n += v ? 1 : 0;
    return n;
}

std::vector<IndexInterval> RegionSet2D::s_intervals(int k, int iy) const {
    const int ns = grid->num_s();
    const int ny = grid->num_y();
    std::vector<uint8_t> row(static_cast<size_t>(ns));
    for (int is = 0; is < ns; ++is) {
        row[static_cast<size_t>(is)] =
            masks[static_cast<size_t>(k)][static_cast<size_t>(is) * ny + static_cast<size_t>(iy)];
    }
    return mask_to_intervals(row);
}

}  // namespace ot
