#include "ot/analytics.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "ot/errors.hpp"

namespace ot {

namespace {
constexpr double kInvSqrt2Pi = 0.39894228040143267794;
constexpr double kSqrt2Pi = 2.50662827463100050242;
}  // namespace

double norm_pdf(double x) { return kInvSqrt2Pi * std::exp(-0.5 * x * x); }

// Hart-type rational approximation of the Gaussian tail (double precision
// variant popularized by G. West). Uses exp only.
double norm_cdf(double x) {
    const double z = std::fabs(x);
    double c = 0.0;
    if (z <= 37.0) {
        const double e = std::exp(-z * z / 2.0);
        if (z < 7.07106781186547) {
            double num = 3.52624965998911e-02 * z + 0.700383064443688;
            num = num * z + 6.37396220353165;
            num = num * z + 33.912866078383;
            num = num * z + 112.079291497871;
            num = num * z + 221.213596169931;
            num = num * z + 220.206867912376;
            double den = 8.83883476483184e-02 * z + 1.75566716318264;
            den = den * z + 16.064177579207;
            den = den * z + 86.7807322029461;
            den = den * z + 296.564248779674;
            den = den * z + 637.333633378831;
            den = den * z + 793.826512519948;
            den = den * z + 440.413735824752;
            c = e * num / den;
        } else {
            double b = z + 0.65;
            b = z + 4.0 / b;
            b = z + 3.0 / b;
            b = z + 2.0 / b;
            b = z + 1.0 / b;
            c = e / (b * kSqrt2Pi);
        }
    }
    return x > 0.0 ? 1.0 - c : c;
}

void BSParams::validate() const {
    if (!(spot > 0.0)) throw std::invalid_argument("BSParams: spot must be positive");
    if (!(strike > 0.0)) throw std::invalid_argument("BSParams: strike must be positive");
    if (!(vol > 0.0)) throw std::invalid_argument("BSParams: vol must be positive");
    if (!(tau >= 0.0)) throw std::invalid_argument("BSParams: tau must be nonnegative");
}

double bs_price(const BSParams& p, OptionKind kind) {
    p.validate();
    if (p.tau == 0.0) {
        switch (kind) {
            case OptionKind::Call: return std::max(p.spot - p.strike, 0.0);
            case OptionKind::Put: return std::max(p.strike - p.spot, 0.0);
            case OptionKind::DigitalCall: return p.spot > p.strike ? 1.0 : 0.0;
        }
    }
    const double sig_rt = p.vol * std::sqrt(p.tau);
    const double d1 = (std::log(p.spot / p.strike) + (p.rate + 0.5 * p.vol * p.vol) * p.tau) / sig_rt;
    const double d2 = d1 - sig_rt;
    const double disc = std::exp(-p.rate * p.tau);
    switch (kind) {
        case OptionKind::Call: return p.spot * norm_cdf(d1) - p.strike * disc * norm_cdf(d2);
        case OptionKind::Put: return p.strike * disc * norm_cdf(-d2) - p.spot * norm_cdf(-d1);
        case OptionKind::DigitalCall: return disc * norm_cdf(d2);
    }
    return 0.0;  // unreachable
}

double brent_root(const std::function<double(double)>& f, double lo, double hi,
                  double tol, int max_iter) {
    double a = lo, b = hi;
    double fa = f(a), fb = f(b);
    if (fa == 0.0) return a;
    if (fb == 0.0) return b;
    if (fa * fb > 0.0) {
        throw NoBracket("brent_root: f(lo) and f(hi) have the same sign");
    }
    double c = a, fc = fa;
    double d = b - a, e = d;
    for (int iter = 0; iter < max_iter; ++iter) {
        if (std::fabs(fc) < std::fabs(fb)) {
            a = b; b = c; c = a;
            fa = fb; fb = fc; fc = fa;
        }
        const double tol1 = 2.0 * 2.220446049250313e-16 * std::fabs(b) + 0.5 * tol;
        const double xm = 0.5 * (c - b);
        if (std::fabs(xm) <= tol1 || fb == 0.0) return b;
        if (std::fabs(e) >= tol1 && std::fabs(fa) > std::fabs(fb)) {
            // inverse quadratic interpolation / secant
            const double s = fb / fa;
            double p, q;
            if (a == c) {
                p = 2.0 * xm * s;
                q = 1.0 - s;
            } else {
                const double qq = fa / fc;
                const double rr = fb / fc;
                p = s * (2.0 * xm * qq * (qq - rr) - (b - a) * (rr - 1.0));
                q = (qq - 1.0) * (rr - 1.0) * (s - 1.0);
            }
            if (p > 0.0) q = -q;
            p = std::fabs(p);
            const double min1 = 3.0 * xm * q - std::fabs(tol1 * q);
            const double min2 = std::fabs(e * q);
            if (2.0 * p < std::min(min1, min2)) {
                e = d;
                d = p / q;
            } else {
                d = xm;
                e = d;
            }
        } else {
            d = xm;
            e = d;
        }
        a = b;
        fa = fb;
        b += (std::fabs(d) > tol1) ? d : (xm > 0.0 ? tol1 : -tol1);
        fb = f(b);
        if ((fb > 0.0) == (fc > 0.0)) {
            c = a;
            fc = fa;
            d = b - a;
            e = d;
        }
    }
    throw MaxIterExceeded("brent_root: no convergence in " + std::to_string(max_iter) +
                              " iterations",
                          {b}, std::fabs(fb));
}

}  // namespace ot
