#include "melon/quadrature.hpp"

#include <cmath>

#include "melon/errors.hpp"

namespace melon {

namespace {

// Gauss-Legendre nodes (positive half) and weights on [-1, 1].
constexpr double gl8_x[] = {0.1834346424956498, 0.5255324099163290,
                            0.7966664774136267, 0.9602898564975363};
constexpr double gl8_w[] = {0.3626837833783620, 0.3137066458778873,
                            0.2223810344533745, 0.1012285362903763};

constexpr double gl16_x[] = {0.0950125098376374, 0.2816035507792589, 0.4580167776572274,
                             0.6178762444026438, 0.7554044083550030, 0.8656312023878318,
                             0.9445750230732326, 0.9894009349916499};
constexpr double gl16_w[] = {0.1894506104550685, 0.1826034150449236, 0.1691565193950025,
                             0.1495959888165767, 0.1246289712555339, 0.0951585116824928,
                             0.0622535239386479, 0.0271524594117541};

double gl8(const std::function<double(double)>& f, double a, double b) {
    const double c = 0.5 * (a + b), h = 0.5 * (b - a);
    double s = 0.0;
    for (int i = 0; i < 4; ++i)
        s += gl8_w[i] * (f(c + h * gl8_x[i]) + f(c - h * gl8_x[i]));
    return s * h;
}

double gl16(const std::function<double(double)>& f, double a, double b) {
    const double c = 0.5 * (a + b), h = 0.5 * (b - a);
    double s = 0.0;
    for (int i = 0; i < 8; ++i)
        s += gl16_w[i] * (f(c + h * gl16_x[i]) + f(c - h * gl16_x[i]));
    return s * h;
}

void adapt(const std::function<double(double)>& f, double a, double b, double tol,
           int depth, QuadResult& out) {
    const double coarse = gl8(f, a, b);
    const double fine = gl16(f, a, b);
    const double err = std::abs(fine - coarse);
    if (err <= tol || depth <= 0) {
        out.value += fine;
        out.err += err;
        return;
    }
    const double mid = 0.5 * (a + b);
    adapt(f, a, mid, tol / 2, depth - 1, out);
    adapt(f, mid, b, tol / 2, depth - 1, out);
}

} // namespace

QuadResult integrate(const std::function<double(double)>& f, double a, double b,
                     double abs_tol, int max_depth) {
    QuadResult out;
    adapt(f, a, b, abs_tol, max_depth, out);
    return out;
}

QuadResult integrate_decaying(const std::function<double(double)>& f, double a, double abs_tol) {
    QuadResult out;
    double lo = a;
    double width = 1.0;
    int small_panels = 0;
    for (int panel = 0; panel < 400; ++panel) {
        const double hi = lo + width;
        QuadResult part = integrate(f, lo, hi, abs_tol / 8, 18);
        out.value += part.value;
        out.err += part.err;
        if (std::abs(part.value) < abs_tol / 100) {
            if (++small_panels >= 2)
                return out;
        } else {
            small_panels = 0;
        }
        lo = hi;
        if (lo >= a + 8.0)
            width = 2.0;
    }
    throw ConvergenceError("integrate_decaying: integrand does not decay");
}

} // namespace melon
