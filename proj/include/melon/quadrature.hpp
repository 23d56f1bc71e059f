#pragma once

#include <functional>

namespace melon {

struct QuadResult {
    double value = 0.0;
    double err = 0.0; // accumulated error estimate
};

// Adaptive Gauss-Legendre (16 vs 8 point) bisection on [a, b].
QuadResult integrate(const std::function<double(double)>& f, double a, double b,
                     double abs_tol, int max_depth = 24);

// Integral over [a, infinity) of an exponentially decaying integrand:
// unit-width panels (doubling after t = a+8), stopping once two consecutive
// panels contribute less than abs_tol/100.
QuadResult integrate_decaying(const std::function<double(double)>& f, double a, double abs_tol);

} // namespace melon
