#include "ot/tridiag.hpp"

#include <cmath>

#include "ot/errors.hpp"

namespace ot {

std::vector<double> thomas_solve(std::span<const double> lower, std::span<const double> diag,
                                 std::span<const double> upper, std::span<const double> rhs) {
    const size_t n = diag.size();
    std::vector<double> c(n), d(n), x(n);

    double piv = diag[0];
    if (std::fabs(piv) < 1e-300) throw SingularPivot("thomas_solve: zero pivot at row 0");
    c[0] = upper[0] / piv;
    d[0] = rhs[0] / piv;
    for (size_t i = 1; i < n; ++i) {
        piv = diag[i] - lower[i] * c[i - 1];
        if (std::fabs(piv) < 1e-300) {
            throw SingularPivot("thomas_solve: vanishing pivot at row " + std::to_string(i));
        }
        c[i] = (i + 1 < n) ? upper[i] / piv : 0.0;
        d[i] = (rhs[i] - lower[i] * d[i - 1]) / piv;
    }
    x[n - 1] = d[n - 1];
    for (size_t i = n - 1; i-- > 0;) x[i] = d[i] - c[i] * x[i + 1];
    return x;
}

std::vector<double> thomas_solve(const LinearOperatorBand& m, std::span<const double> rhs) {
    return thomas_solve(m.lower, m.diag, m.upper, rhs);
}

}  // namespace ot
