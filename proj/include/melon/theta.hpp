#pragma once

// Derivatives of Jacobi's theta function on the imaginary axis, the
// generalized reciprocity law (as residual checks), the Hermite-type phi_k
// polynomials, Bernoulli numbers, Riemann zeta and the real gamma function.

#include <complex>

#include "melon/bigint.hpp"

namespace melon {

struct SeriesTolerance {
    double rel_tol = 1e-15;
    long max_terms = 1'000'000;
};

// Euler-Mascheroni constant, 30-digit literal.
inline constexpr double euler_gamma = 0.577215664901532860606512090082;

// vartheta_a(t) = theta_a(0, it) = sum_n (2 pi i n)^a exp(-pi n^2 t).
// Exactly 0 for odd a. For t < 1 the series is evaluated through the
// reciprocity relation at argument 1/t.
double theta_deriv(int a, double t, SeriesTolerance tol = {});

// Same value by direct summation only (no reciprocity). Used by the residual
// checks below, which must evaluate both sides of the identity independently.
double theta_deriv_direct(int a, double t, SeriesTolerance tol = {});

// theta_0(0, it) - 1, summed without the leading 1.
double theta0_deficit(double t, SeriesTolerance tol = {});

// theta_a(x, it) for complex first argument.
std::complex<double> theta_general(int a, std::complex<double> x, double t,
                                   SeriesTolerance tol = {});

// |lhs - rhs| of the vartheta reciprocity identity at (a, y), both sides
// summed directly.
double reciprocity_residual_corollary(int a, double y, SeriesTolerance tol = {});

// |lhs - rhs| of the theta-derivative reciprocity at (a, x, y = it).
double reciprocity_residual_proposition(int a, double x, double t, SeriesTolerance tol = {});

// phi_k(w) = sum_m (-1)^m/m! C(m, k-m) (2w)^{2m-k}; (-1)^k k! phi_k is the
// k-th Hermite polynomial.
double phi(int k, double w);

// Exact Bernoulli number B_k (B_1 = -1/2).
Rat bernoulli(int k);

// Riemann zeta for real sigma != 1. Non-positive integers are exact via
// Bernoulli numbers; sigma >= 1/2 uses the accelerated alternating series;
// the rest goes through the functional equation.
double zeta(double sigma, SeriesTolerance tol = {});

double gamma_real(double x);

// 1/Gamma(x); exactly 0 at the poles.
double inv_gamma(double x);

} // namespace melon
