#pragma once

#include <memory>
#include <vector>

namespace ot {

/// Discretization of (t,s) space. Space nodes start at s=0 exactly so the
/// absorbing default state lives on the grid.
struct Grid1D {
    std::vector<double> s_nodes;  // ascending, s_nodes[0] == 0
    std::vector<double> t_nodes;  // ascending, t_nodes[0] == 0, back() == T

    int num_space() const { return static_cast<int>(s_nodes.size()); }
    int num_time() const { return static_cast<int>(t_nodes.size()); }
    double s_max() const { return s_nodes.back(); }
    double maturity() const { return t_nodes.back(); }

    void validate() const;

    /// Uniform grid with M space intervals on [0, s_max] and N time steps on [0, T].
    static std::shared_ptr<const Grid1D> uniform(double s_max, int space_intervals,
                                                 double maturity, int time_steps);
};

/// Discretization of (t,s,y) space. s_nodes[0] may be positive (no default
/// state required).
struct Grid2D {
    std::vector<double> s_nodes;
    std::vector<double> y_nodes;
    std::vector<double> t_nodes;

    int num_s() const { return static_cast<int>(s_nodes.size()); }
    int num_y() const { return static_cast<int>(y_nodes.size()); }
    int num_time() const { return static_cast<int>(t_nodes.size()); }

    void validate() const;

    static std::shared_ptr<const Grid2D> uniform(double s_min, double s_max, int s_intervals,
                                                 double y_min, double y_max, int y_intervals,
                                                 double maturity, int time_steps);
};

bool same_grid(const Grid1D& a, const Grid1D& b);
bool same_grid(const Grid2D& a, const Grid2D& b);

}  // namespace ot
