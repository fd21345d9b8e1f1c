#include "ot/grid.hpp"

#include <cmath>
#include <stdexcept>

namespace ot {

namespace {

void check_ascending(const std::vector<double>& v, const char* name) {
    for (size_t i = 1; i < v.size(); ++i) {
        if (!(v[i] > v[i - 1])) {
            throw std::invalid_argument(std::string(name) + " nodes must be strictly increasing");
        }
    }
}

std::vector<double> linspace(double lo, double hi, int n) {
    std::vector<double> v(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) v[static_cast<size_t>(i)] = lo + (hi - lo) * i / (n - 1);
    v.front() = lo;
    v.back() = hi;
    return v;
}

}  // namespace

void Grid1D::validate() const {
    if (s_nodes.size() < 3) throw std::invalid_argument("Grid1D: need at least 3 space nodes");
    if (t_nodes.size() < 2) throw std::invalid_argument("Grid1D: need at least 2 time nodes");
    if (s_nodes.front() != 0.0) throw std::invalid_argument("Grid1D: s_nodes[0] must be exactly 0");
    check_ascending(s_nodes, "Grid1D space");
    check_ascending(t_nodes, "Grid1D time");
}

std::shared_ptr<const Grid1D> Grid1D::uniform(double s_max, int space_intervals,
                                              double maturity, int time_steps) {
    if (space_intervals < 2 || time_steps < 1) {
        throw std::invalid_argument("Grid1D::uniform: too few intervals");
    }
    auto g = std::make_shared<Grid1D>();
    g->s_nodes = linspace(0.0, s_max, space_intervals + 1);
    g->t_nodes = linspace(0.0, maturity, time_steps + 1);
    g->validate();
    return g;
}

void Grid2D::validate() const {
    if (s_nodes.size() < 3 || y_nodes.size() < 3) {
        throw std::invalid_argument("Grid2D: need at least 3 nodes per space axis");
    }
    if (t_nodes.size() < 2) throw std::invalid_argument("Grid2D: need at least 2 time nodes");
    if (s_nodes.front() < 0.0) throw std::invalid_argument("Grid2D: s_nodes must be nonnegative");
    check_ascending(s_nodes, "Grid2D s");
    check_ascending(y_nodes, "Grid2D y");
    check_ascending(t_nodes, "Grid2D time");
}

std::shared_ptr<const Grid2D> Grid2D::uniform(double s_min, double s_max, int s_intervals,
                                              double y_min, double y_max, int y_intervals,
                                              double maturity, int time_steps) {
    auto g = std::make_shared<Grid2D>();
    g->s_nodes = linspace(s_min, s_max, s_intervals + 1);
    g->y_nodes = linspace(y_min, y_max, y_intervals + 1);
    g->t_nodes = linspace(0.0, maturity, time_steps + 1);
    g->validate();
    return g;
}

namespace {
bool same_nodes(const std::vector<double>& a, const std::vector<double>& b) {
    if (a.size() != b.size()) return false;
    for (size_t i = 0; i < a.size(); ++i) {
        if (std::fabs(a[i] - b[i]) > 1e-12 * (1.0 + std::fabs(a[i]))) return false;
    }
    return true;
}
}  // namespace

bool same_grid(const Grid1D& a, const Grid1D& b) {
    return &a == &b || (same_nodes(a.s_nodes, b.s_nodes) && same_nodes(a.t_nodes, b.t_nodes));
}

bool same_grid(const Grid2D& a, const Grid2D& b) {
    return &a == &b || (same_nodes(a.s_nodes, b.s_nodes) && same_nodes(a.y_nodes, b.y_nodes) &&
                        same_nodes(a.t_nodes, b.t_nodes));
}

}  // namespace ot
