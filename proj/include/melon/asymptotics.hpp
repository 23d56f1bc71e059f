#pragma once

// Headline asymptotic quantities: M_p, the theta-derivative determinant
// T_p(t), the moment constants kappa_s^(p) by quadrature, the finite
// lambda_k sums over the continuation route, the three-term moment
// expansion, and the limiting height CDF in determinant / ordered-sum /
// one-branch form.

#include "melon/bigint.hpp"

namespace melon {

// M_p = 2^{p^2} prod_{i<p} (2i+1)!
Int m_const(int p);

// T_p(t) = det_{0<=i,j<p} vartheta_{2i+2j+2}(t). For t < 1 the entries are
// evaluated through the reciprocity relation, which keeps the p^2 + p/2
// powers of 1/t explicit and the determinant well conditioned.
double t_det(int p, double t, double tol = 1e-13);

struct KappaResult {
    int p = 1;
    double s = 1.0;
    double value = 0.0;
    double err_estimate = 0.0;
};

// kappa_s^(p) = (pi^{s/2}/2) int_0^inf t^{-1-s/2}
//               (1 - t^{p^2+p/2} T_p(t) / ((-pi)^{p^2} M_p)) dt,  s > 0.
KappaResult kappa(int p, double s, double tol = 1e-10);

// lambda_k = -sum_a (-4)^{|a|} det((2i+2j+2)!/((i+j+1-a_i)!(2a_i)!))
//            omega_{k-1,a} for k >= 1 (a finite sum); lambda_0 = -3/2 M_p.
double lambda_sum(int p, int k, double tol = 1e-12);

// s kappa_s n^{s/2} - 3 C(s,2) kappa_{s-1} n^{(s-1)/2} - 3/2, with the
// kappa_0 := 0 convention (its coefficient C(1,2) vanishes anyway).
double moment_asymptotic(int p, double n, int s, double tol = 1e-10);

// P{(H+2)/sqrt(n) <= t} in the n -> infinity limit, via the theta
// determinant at pi/t^2.
double limit_cdf_det(int p, double t, double tol = 1e-12);

// Same limit as the ordered multiple sum over 1 <= n_0 < ... < n_{p-1}.
double limit_cdf_schehr(int p, double t, double tol = 1e-12);

// One-branch limit law (unshifted variable H/sqrt(n)):
// sum_{m in Z} (1 - 2(mt)^2) e^{-(mt)^2}.
double limit_cdf_p1(double t, double tol = 1e-12);

} // namespace melon
