#pragma once

#include <cmath>
#include <functional>

namespace mogir {

struct GoldenResult {
    double xmin = 0.0;
    double fmin = 0.0;
    int evaluations = 0;
    bool at_boundary = false;  ///< converged onto an endpoint (bad bracket)
};

/// Golden-section minimization of a unimodal f on [a, b], run until the
/// interval is narrower than xtol. at_boundary reports convergence onto
/// an endpoint, which means the true optimum was not bracketed.
inline GoldenResult golden_section_minimize(const std::function<double(double)>& f, double a,
                                            double b, double xtol, int max_iterations = 300) {
    const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
    const double a0 = a;
    const double b0 = b;

    double c = b - invphi * (b - a);
    double d = a + invphi * (b - a);
    double fc = f(c);
    double fd = f(d);
    int evals = 2;

    for (int k = 0; k < max_iterations && (b - a) > xtol; ++k) {
        if (fc < fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - invphi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + invphi * (b - a);
            fd = f(d);
        }
        ++evals;
    }

    GoldenResult res;
    res.xmin = 0.5 * (a + b);
    res.fmin = f(res.xmin);
    res.evaluations = evals + 1;
    const double edge = 1e-6 * (b0 - a0);
    res.at_boundary = (res.xmin - a0 < edge) || (b0 - res.xmin < edge);
    return res;
}

}  // namespace mogir
