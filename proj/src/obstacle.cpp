#include "ot/obstacle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "ot/errors.hpp"

namespace ot {

namespace {

struct Stencil {
    double lo, mid, hi;
};

// first/second derivative weights on a possibly nonuniform 3-point stencil
Stencil d1_weights(double hm, double hp) {
    return {-hp / (hm * (hm + hp)), (hp - hm) / (hm * hp), hm / (hp * (hm + hp))};
}
Stencil d2_weights(double hm, double hp) {
    return {2.0 / (hm * (hm + hp)), -2.0 / (hm * hp), 2.0 / (hp * (hm + hp))};
}

// Generator row weights for node i at the given coefficients. Edge rows use
// the gamma-zero reduction: zero second derivative, one-sided first
// derivative into the domain.
void generator_row(const std::vector<double>& s, int i, double diff, double drift, double disc,
                   double& w_lo, double& w_mid, double& w_hi) {
    const int m = static_cast<int>(s.size());
    if (i == 0) {
        const double h = s[1] - s[0];
        w_lo = 0.0;
        w_mid = -drift / h - disc;
        w_hi = drift / h;
    } else if (i == m - 1) {
        const double h = s[m - 1] - s[m - 2];
        w_lo = -drift / h;
        w_mid = drift / h - disc;
        w_hi = 0.0;
    } else {
        const double hm = s[i] - s[i - 1];
        const double hp = s[i + 1] - s[i];
        const Stencil s1 = d1_weights(hm, hp);
        const Stencil s2 = d2_weights(hm, hp);
        w_lo = diff * s2.lo + drift * s1.lo;
        w_mid = diff * s2.mid + drift * s1.mid - disc;
        w_hi = diff * s2.hi + drift * s1.hi;
    }
}

}  // namespace

AssembledStep assemble_step(const ObstacleProblem& p, int time_index, Scheme scheme,
                            std::span<const double> known_slice) {
    const auto& g = *p.grid;
    const int m = g.num_space();
    const int nt = g.num_time();
    if (time_index < 1 || time_index > nt - 1) {
        throw std::invalid_argument("assemble_step: time_index out of range");
    }
    const double t_new = g.t_nodes[static_cast<size_t>(time_index - 1)];
    const double t_old = g.t_nodes[static_cast<size_t>(time_index)];
    const double dt = t_old - t_new;
    const double theta = scheme == Scheme::Implicit ? 1.0 : 0.5;

    std::vector<double> diff1(m), drift1(m), disc1(m), src1(m);
    p.coefficients(t_new, g.s_nodes, diff1, drift1, disc1, src1);

    AssembledStep out;
    auto& mat = out.matrix;
    mat.lower.assign(static_cast<size_t>(m), 0.0);
    mat.diag.assign(static_cast<size_t>(m), 1.0);
    mat.upper.assign(static_cast<size_t>(m), 0.0);
    mat.source = src1;
    mat.discount = disc1;
    out.rhs.assign(known_slice.begin(), known_slice.end());

    // explicit part (Crank-Nicolson)
    if (theta < 1.0) {
        std::vector<double> diff0(m), drift0(m), disc0(m), src0(m);
        p.coefficients(t_old, g.s_nodes, diff0, drift0, disc0, src0);
        const double w = (1.0 - theta) * dt;
        for (int i = 0; i < m; ++i) {
            double lo, mid, hi;
            generator_row(g.s_nodes, i, diff0[i], drift0[i], disc0[i], lo, mid, hi);
            double v = mid * known_slice[i];
            if (i > 0) v += lo * known_slice[i - 1];
            if (i < m - 1) v += hi * known_slice[i + 1];
            out.rhs[static_cast<size_t>(i)] += w * (v + src0[static_cast<size_t>(i)]);
        }
        for (int i = 0; i < m; ++i) out.rhs[static_cast<size_t>(i)] += theta * dt * src1[static_cast<size_t>(i)];
    } else {
        for (int i = 0; i < m; ++i) out.rhs[static_cast<size_t>(i)] += dt * src1[static_cast<size_t>(i)];
    }

    // implicit matrix A = I - theta*dt*L
    for (int i = 0; i < m; ++i) {
        double lo, mid, hi;
        generator_row(g.s_nodes, i, diff1[i], drift1[i], disc1[i], lo, mid, hi);
        mat.lower[static_cast<size_t>(i)] = -theta * dt * lo;
        mat.diag[static_cast<size_t>(i)] = 1.0 - theta * dt * mid;
        mat.upper[static_cast<size_t>(i)] = -theta * dt * hi;
    }

    // Dirichlet rows
    auto pin = [&](int i, const BoundaryCondition& bc) {
        if (bc.kind != BoundaryCondition::Kind::Dirichlet) return;
        mat.lower[static_cast<size_t>(i)] = 0.0;
        mat.diag[static_cast<size_t>(i)] = 1.0;
        mat.upper[static_cast<size_t>(i)] = 0.0;
        out.rhs[static_cast<size_t>(i)] = bc.value(t_new);
    };
    pin(0, p.lower_bc);
    pin(m - 1, p.upper_bc);

    mat.diagonally_dominant = true;
    for (int i = 0; i < m; ++i) {
        const double margin = std::fabs(mat.diag[static_cast<size_t>(i)]) -
                              std::fabs(mat.lower[static_cast<size_t>(i)]) -
                              std::fabs(mat.upper[static_cast<size_t>(i)]);
        if (margin < -1e-12) {
            mat.diagonally_dominant = false;
            break;
        }
    }
    return out;
}

namespace {

double comp_residual_pass(const LinearOperatorBand& m, std::span<const double> rhs,
                          std::span<const double> psi, ObstacleSense sense,
                          std::span<const double> u) {
    const int n = m.size();
    double worst = 0.0;
    for (int i = 0; i < n; ++i) {
        double r = m.diag[static_cast<size_t>(i)] * u[static_cast<size_t>(i)] -
                   rhs[static_cast<size_t>(i)];
        if (i > 0) r += m.lower[static_cast<size_t>(i)] * u[static_cast<size_t>(i) - 1];
        if (i < n - 1) r += m.upper[static_cast<size_t>(i)] * u[static_cast<size_t>(i) + 1];
        double res;
        if (sense == ObstacleSense::ValueAboveObstacle) {
            const double slack = u[static_cast<size_t>(i)] - psi[static_cast<size_t>(i)];
            res = std::max(std::max(-r, -slack), std::min(r, slack));
        } else {
            const double slack = psi[static_cast<size_t>(i)] - u[static_cast<size_t>(i)];
            res = std::max(std::max(r, -slack), std::min(-r, slack));
        }
        worst = std::max(worst, res);
    }
    return worst;
}

}  // namespace

PsorResult psor_step(const LinearOperatorBand& m, std::span<const double> rhs,
                     std::span<const double> obstacle, ObstacleSense sense,
                     std::span<const double> warm_start, double omega, double tol, int max_iter) {
    if (!(omega > 0.0 && omega < 2.0)) throw std::invalid_argument("psor_step: omega must be in (0,2)");
    const int n = m.size();
    PsorResult res;
    res.solution.assign(warm_start.begin(), warm_start.end());
    auto& u = res.solution;

    const bool above = sense == ObstacleSense::ValueAboveObstacle;
    const bool no_obstacle = obstacle.empty();

    // identity rows (Dirichlet pins) are solved exactly and never projected
    std::vector<uint8_t> pinned(static_cast<size_t>(n), 0);
    for (int i = 0; i < n; ++i) {
        if (m.diag[static_cast<size_t>(i)] == 1.0 && m.lower[static_cast<size_t>(i)] == 0.0 &&
            m.upper[static_cast<size_t>(i)] == 0.0) {
            pinned[static_cast<size_t>(i)] = 1;
        }
    }

    for (int iter = 1; iter <= max_iter; ++iter) {
        for (int i = 0; i < n; ++i) {
            double acc = rhs[static_cast<size_t>(i)];
            if (i > 0) acc -= m.lower[static_cast<size_t>(i)] * u[static_cast<size_t>(i) - 1];
            if (i < n - 1) acc -= m.upper[static_cast<size_t>(i)] * u[static_cast<size_t>(i) + 1];
            const double gs = acc / m.diag[static_cast<size_t>(i)];
            double v = pinned[static_cast<size_t>(i)]
                           ? gs
                           : u[static_cast<size_t>(i)] + omega * (gs - u[static_cast<size_t>(i)]);
            if (!no_obstacle && !pinned[static_cast<size_t>(i)]) {
                v = above ? std::max(v, obstacle[static_cast<size_t>(i)])
                          : std::min(v, obstacle[static_cast<size_t>(i)]);
            }
            u[static_cast<size_t>(i)] = v;
        }
        double resid;
        if (no_obstacle) {
            resid = 0.0;
            for (int i = 0; i < n; ++i) {
                double r = m.diag[static_cast<size_t>(i)] * u[static_cast<size_t>(i)] -
                           rhs[static_cast<size_t>(i)];
                if (i > 0) r += m.lower[static_cast<size_t>(i)] * u[static_cast<size_t>(i) - 1];
                if (i < n - 1) r += m.upper[static_cast<size_t>(i)] * u[static_cast<size_t>(i) + 1];
                resid = std::max(resid, std::fabs(r));
            }
        } else {
            resid = comp_residual_pass(m, rhs, obstacle, sense, u);
        }
        if (resid <= tol) {
            res.iterations = iter;
            res.comp_residual = resid;
            res.active.assign(static_cast<size_t>(n), 0);
            if (!no_obstacle) {
                for (int i = 0; i < n; ++i) {
                    res.active[static_cast<size_t>(i)] =
                        u[static_cast<size_t>(i)] == obstacle[static_cast<size_t>(i)] ? 1 : 0;
                }
            }
            return res;
        }
        if (iter == max_iter) {
            throw MaxIterExceeded("psor_step: no convergence in " + std::to_string(max_iter) +
                                      " iterations (residual " + std::to_string(resid) + ")",
                                  u, resid);
        }
    }
    return res;  // unreachable
}

MarchResult march(const ObstacleProblem& p, const SolverOptions& opts, const std::string& label) {
    const auto& g = *p.grid;
    g.validate();
    const int m = g.num_space();
    const int nt = g.num_time();
    if (static_cast<int>(p.terminal.size()) != m) {
        throw std::invalid_argument("march: terminal slice size does not match grid");
    }
    if (p.obstacle && !same_grid(*p.obstacle->grid, g)) {
        throw GridMismatch("march: obstacle surface grid differs from problem grid");
    }

    MarchResult out;
    out.surface = Surface(p.grid, label);
    std::copy(p.terminal.begin(), p.terminal.end(), out.surface.slice(nt - 1).begin());

    std::vector<std::vector<uint8_t>> masks;
    std::vector<std::vector<double>> gaps;
    const bool constrained = p.obstacle.has_value();
    if (constrained) {
        masks.assign(static_cast<size_t>(nt), std::vector<uint8_t>(static_cast<size_t>(m), 0));
        gaps.assign(static_cast<size_t>(nt), std::vector<double>(static_cast<size_t>(m), 1.0));
    }

    auto record_mask = [&](int k) {
        if (!constrained || !p.obstacle_on(k)) return;
        for (int i = 0; i < m; ++i) {
            const double psi = p.obstacle->at(k, i);
            const double tol =
                std::max(p.region_abs_tol, p.region_rel_tol * std::max(1.0, std::fabs(psi)));
            const double gap = std::fabs(out.surface.at(k, i) - psi) - tol;
            gaps[static_cast<size_t>(k)][static_cast<size_t>(i)] = gap;
            masks[static_cast<size_t>(k)][static_cast<size_t>(i)] = gap <= 0.0 ? 1 : 0;
        }
    };
    record_mask(nt - 1);

    for (int k = nt - 2; k >= 0; --k) {
        const int step_from = k + 1;
        Scheme scheme = opts.scheme;
        if (scheme == Scheme::CrankNicolson && step_from >= nt - 2) {
            scheme = Scheme::Implicit;  // Rannacher start-up
        }
        auto sys = assemble_step(p, step_from, scheme, out.surface.slice(step_from));
        if (!sys.matrix.diagonally_dominant) ++out.stats.nondominant_steps;

        auto target = out.surface.slice(k);
        if (constrained && p.obstacle_on(k)) {
            auto psi = p.obstacle->slice(k);
            auto r = psor_step(sys.matrix, sys.rhs, psi, p.sense, out.surface.slice(step_from),
                               opts.omega, opts.tol, opts.max_iter);
            std::copy(r.solution.begin(), r.solution.end(), target.begin());
            out.stats.total_psor_iterations += r.iterations;
            out.stats.max_comp_residual = std::max(out.stats.max_comp_residual, r.comp_residual);
        } else {
            auto x = thomas_solve(sys.matrix, sys.rhs);
            std::copy(x.begin(), x.end(), target.begin());
        }
        record_mask(k);
    }

    out.surface.check_finite();
    if (constrained) {
        out.region = region_from_masks(p.grid, masks, &gaps);
    } else {
        out.region.grid = p.grid;
        out.region.intervals.assign(static_cast<size_t>(nt), {});
        out.region.curve.assign(static_cast<size_t>(nt), std::numeric_limits<double>::quiet_NaN());
        out.region.active_below.assign(static_cast<size_t>(nt), -1);
        out.region.curve_valid = false;
    }
    return out;
}

}  // namespace ot
