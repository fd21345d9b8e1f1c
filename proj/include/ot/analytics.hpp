#pragma once

#include <functional>

namespace ot {

/// Standard Gaussian cdf. Rational approximation built on exp only;
/// max absolute error below 1e-12 over the real line.
double norm_cdf(double x);

/// Standard Gaussian density.
double norm_pdf(double x);

enum class OptionKind { Call, Put, DigitalCall };

/// Inputs for the lognormal closed forms. `rate` is the full discount/drift
/// rate of the pricing measure (models with a default intensity pass r+lambda).
struct BSParams {
    double spot = 0.0;    // > 0
    double strike = 0.0;  // > 0
    double rate = 0.0;    // per year
    double vol = 0.0;     // per sqrt-year, > 0
    double tau = 0.0;     // years to maturity, >= 0

    void validate() const;
};

/// Lognormal closed forms. tau == 0 returns the exact payoff.
double bs_price(const BSParams& p, OptionKind kind);

/// Bracketing root finder (Brent). Requires f(lo)*f(hi) <= 0.
/// Returns a root with bracket width <= tol; throws NoBracket / MaxIterExceeded.
double brent_root(const std::function<double(double)>& f, double lo, double hi,
                  double tol = 1e-12, int max_iter = 200);

}  // namespace ot
