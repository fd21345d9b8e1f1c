#pragma once

#include <span>
#include <vector>

namespace ot {

/// Assembled banded system for one backward step: matrix bands (Dirichlet
/// rows are identity rows) plus the per-node source and zeroth-order
/// (discount) coefficients used to build it.
struct LinearOperatorBand {
    std::vector<double> lower;  // size n, lower[0] unused
    std::vector<double> diag;   // size n
    std::vector<double> upper;  // size n, upper[n-1] unused
    std::vector<double> source;    // per-node source at assembly time
    std::vector<double> discount;  // per-node zeroth-order coefficient
    bool diagonally_dominant = true;

    int size() const { return static_cast<int>(diag.size()); }
};

/// Thomas algorithm. Residual infinity-norm <= 1e-10 * ||rhs|| for
/// nonsingular systems; throws SingularPivot otherwise.
std::vector<double> thomas_solve(std::span<const double> lower, std::span<const double> diag,
                                 std::span<const double> upper, std::span<const double> rhs);

std::vector<double> thomas_solve(const LinearOperatorBand& m, std::span<const double> rhs);

}  // namespace ot
