#include "melon/asymptotics.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include "melon/dirichlet.hpp"
#include "melon/errors.hpp"
#include "melon/exact.hpp"
#include "melon/quadrature.hpp"
#include "melon/theta.hpp"

namespace melon {

namespace {

constexpr double pi = std::numbers::pi;

double det_lu(std::vector<std::vector<double>> a) {
    const std::size_t n = a.size();
    double det = 1.0;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        for (std::size_t i = k + 1; i < n; ++i)
            if (std::abs(a[i][k]) > std::abs(a[piv][k]))
                piv = i;
        if (a[piv][k] == 0.0)
            return 0.0;
        if (piv != k) {
            std::swap(a[piv], a[k]);
            det = -det;
        }
        det *= a[k][k];
        for (std::size_t i = k + 1; i < n; ++i) {
            const double f = a[i][k] / a[k][k];
            for (std::size_t j = k; j < n; ++j)
                a[i][j] -= f * a[k][j];
        }
    }
    return det;
}

// Reciprocity-transformed entry matrix at u = 1/t, normalized so that
// det theta(t) = (-1)^{p^2} pi^{p^2} u^{p^2+p/2} det M.
// M_ij = (2b)!/b! theta_0(u) + sum_{j'>=1} C(2b,2j')(2(b-j'))!/(b-j')!
//        pi^{-j'} u^{j'} theta_{2j'}(u),  b = i+j+1.
std::vector<std::vector<double>> recip_matrix(int p, double u, const SeriesTolerance& st) {
    const double th0 = 1.0 + theta0_deficit(u, st);
    std::vector<double> theta_at_u(static_cast<std::size_t>(2 * p), 0.0);
    for (int jp = 1; jp < 2 * p; ++jp)
        theta_at_u[static_cast<std::size_t>(jp)] = theta_deriv_direct(2 * jp, u, st);
    std::vector<std::vector<double>> m(static_cast<std::size_t>(p),
                                       std::vector<double>(static_cast<std::size_t>(p)));
    for (int i = 0; i < p; ++i) {
        for (int j = 0; j < p; ++j) {
            const int b = i + j + 1;
            double e = to_double(factorial(2 * b)) / to_double(factorial(b)) * th0;
            for (int jp = 1; jp <= b; ++jp) {
                e += to_double(binomial(2 * b, 2 * jp)) * to_double(factorial(2 * (b - jp))) /
                     to_double(factorial(b - jp)) * std::pow(pi, -jp) * std::pow(u, jp) *
                     theta_at_u[static_cast<std::size_t>(jp)];
            }
            m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = e;
        }
    }
    return m;
}

// sum over 1 <= n_0 < ... < n_{p-1} of (prod_{i<j} (n_j^2-n_i^2))^2
// (prod n_j^2) e^{-beta sum n_j^2}; the expansion of the theta determinant
// into ordered tuples.
double ordered_tuple_sum(int p, double beta, double tol) {
    std::vector<long> tup(static_cast<std::size_t>(p));
    double total = 0.0;

    // tuples grouped by their maximum N; stop after two negligible shells
    auto shell = [&](long N) {
        double s = 0.0;
        tup[static_cast<std::size_t>(p - 1)] = N;
        std::vector<long> idx(static_cast<std::size_t>(p - 1));
        // iterate (p-1)-subsets of {1..N-1}
        for (int i = 0; i < p - 1; ++i)
            idx[static_cast<std::size_t>(i)] = i + 1;
        if (p == 1) {
            const double nn = static_cast<double>(N) * N;
            return nn * std::exp(-beta * nn);
        }
        while (true) {
            for (int i = 0; i < p - 1; ++i)
                tup[static_cast<std::size_t>(i)] = idx[static_cast<std::size_t>(i)];
            double vdm = 1.0, prod = 1.0, esum = 0.0;
            for (int i = 0; i < p; ++i) {
                const double ni2 = static_cast<double>(tup[static_cast<std::size_t>(i)]) *
                                   tup[static_cast<std::size_t>(i)];
                prod *= ni2;
                esum += ni2;
                for (int j = i + 1; j < p; ++j) {
                    const double nj2 = static_cast<double>(tup[static_cast<std::size_t>(j)]) *
                                       tup[static_cast<std::size_t>(j)];
                    vdm *= nj2 - ni2;
                }
            }
            s += vdm * vdm * prod * std::exp(-beta * esum);
            int i = p - 2;
            while (i >= 0 && idx[static_cast<std::size_t>(i)] == N - (p - 1 - i))
                --i;
            if (i < 0)
                break;
            ++idx[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < p - 1; ++j)
                idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
        }
        return s;
    };

    int negligible = 0;
    for (long N = p; N < 4000; ++N) {
        const double s = shell(N);
        total += s;
        if (std::abs(s) < tol * std::max(1.0, std::abs(total))) {
            if (++negligible >= 2)
                return total;
        } else {
            negligible = 0;
        }
    }
    throw ConvergenceError("ordered_tuple_sum: no convergence");
}

void check_p(int p) {
    if (p < 1)
        throw DomainError("p must be >= 1");
}

// 1 - t^{p^2+p/2} T_p(t) / ((-pi)^{p^2} M_p), stable on both sides of t = 1
double kappa_integrand(int p, double t, double mp, const SeriesTolerance& st) {
    if (t < 1.0) {
        return 1.0 - det_lu(recip_matrix(p, 1.0 / t, st)) / mp;
    }
    const double corr = std::pow(t, p * p + 0.5 * p) * std::pow(pi, p * p) *
                        std::ldexp(1.0, 2 * p * p + p) * ordered_tuple_sum(p, pi * t, 1e-16) / mp;
    return 1.0 - corr;
}

} // namespace

Int m_const(int p) {
    check_p(p);
    Int r = 1;
    for (int i = 0; i < p; ++i)
        r *= factorial(2 * i + 1);
    Int two_pow;
    mpz_ui_pow_ui(two_pow.get_mpz_t(), 2, static_cast<unsigned long>(p) * p);
    return r * two_pow;
}

double t_det(int p, double t, double tol) {
    check_p(p);
    if (!(t > 0.0))
        throw DomainError("t_det: t must be positive");
    SeriesTolerance st{tol, 1'000'000};
    if (t < 1.0) {
        const double u = 1.0 / t;
        const double d = det_lu(recip_matrix(p, u, st));
        const double sgn = (p % 2 == 0) ? 1.0 : -1.0; // (-1)^{p^2}
        return sgn * std::pow(pi, p * p) * std::pow(u, p * p + 0.5 * p) * d;
    }
    std::vector<std::vector<double>> m(static_cast<std::size_t>(p),
                                       std::vector<double>(static_cast<std::size_t>(p)));
    for (int i = 0; i < p; ++i)
        for (int j = 0; j < p; ++j)
            m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                theta_deriv_direct(2 * i + 2 * j + 2, t, st);
    return det_lu(std::move(m));
}

KappaResult kappa(int p, double s, double tol) {
    check_p(p);
    if (!(s > 0.0))
        throw DomainError("kappa: s must be positive");
    const double mp = to_double(m_const(p));
    SeriesTolerance st;

    const double t0 = 0.05;
    const double t_max = 14.0;
    auto f = [&](double t) {
        return std::pow(t, -1.0 - 0.5 * s) * kappa_integrand(p, t, mp, st);
    };
    QuadResult quad;
    const double edges[] = {t0, 0.1, 0.2, 0.35, 0.6, 1.0, 1.6, 2.5, 4.0, 7.0, t_max};
    for (std::size_t i = 0; i + 1 < std::size(edges); ++i) {
        QuadResult part = integrate(f, edges[i], edges[i + 1], tol / 40.0);
        quad.value += part.value;
        quad.err += part.err;
    }
    // analytic tail: integrand -> t^{-1-s/2} beyond t_max
    const double tail = (2.0 / s) * std::pow(t_max, -0.5 * s);
    const double tail_err = std::abs(1.0 - kappa_integrand(p, t_max, mp, st)) * tail;
    // below t0 the integrand is exponentially small; bound it by its value at
    // t0 times the remaining weight
    const double below = (std::abs(kappa_integrand(p, t0, mp, st)) + 1e-15) *
                         std::pow(1.0 / t0, 0.5 * s) * t0 / pi;

    KappaResult r;
    r.p = p;
    r.s = s;
    const double pref = 0.5 * std::pow(pi, 0.5 * s);
    r.value = pref * (quad.value + tail);
    r.err_estimate = pref * (quad.err + tail_err + below) + 1e-15 * std::abs(r.value);
    return r;
}

double lambda_sum(int p, int k, double tol) {
    check_p(p);
    if (k < 0)
        throw DomainError("lambda_sum: k must be non-negative");
    if (k == 0)
        return -1.5 * to_double(m_const(p));

    // a_i ranges over 0..i+p; beyond that row i of the determinant vanishes
    std::vector<int> a(static_cast<std::size_t>(p), 0);
    double total = 0.0;
    while (true) {
        int asum = 0;
        for (int ai : a)
            asum += ai;
        std::vector<std::vector<Rat>> m(static_cast<std::size_t>(p),
                                        std::vector<Rat>(static_cast<std::size_t>(p)));
        bool zero_row = false;
        for (int i = 0; i < p && !zero_row; ++i) {
            bool row_nonzero = false;
            for (int j = 0; j < p; ++j) {
                const int d = i + j + 1 - a[static_cast<std::size_t>(i)];
                if (d < 0) {
                    m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = 0;
                } else {
                    Rat e(factorial(2 * i + 2 * j + 2),
                          factorial(d) * factorial(2 * a[static_cast<std::size_t>(i)]));
                    e.canonicalize();
                    m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = e;
                    row_nonzero = true;
                }
            }
            zero_row = !row_nonzero;
        }
        if (!zero_row) {
            const Rat d = det_exact(std::move(m));
            if (d != 0) {
                const double sgn = (asum % 2 == 0) ? 1.0 : -1.0;
                total += sgn * std::ldexp(to_double(d), 2 * asum) * omega(k - 1, a, tol);
            }
        }
        int i = 0;
        while (i < p && a[static_cast<std::size_t>(i)] == i + p)
            a[static_cast<std::size_t>(i++)] = 0;
        if (i == p)
            break;
        ++a[static_cast<std::size_t>(i)];
    }
    return -total;
}

double moment_asymptotic(int p, double n, int s, double tol) {
    check_p(p);
    if (s < 1)
        throw DomainError("moment_asymptotic: s must be >= 1");
    if (!(n > 0.0))
        throw DomainError("moment_asymptotic: n must be positive");
    const double ks = kappa(p, s, tol).value;
    const double ksm1 = (s >= 2) ? kappa(p, s - 1, tol).value : 0.0; // kappa_0 := 0
    const double choose2 = 0.5 * s * (s - 1);
    return s * ks * std::pow(n, 0.5 * s) - 3.0 * choose2 * ksm1 * std::pow(n, 0.5 * (s - 1)) - 1.5;
}

double limit_cdf_det(int p, double t, double tol) {
    check_p(p);
    if (!(t > 0.0))
        throw DomainError("limit_cdf_det: t must be positive");
    SeriesTolerance st{tol, 1'000'000};
    const double tau = pi / (t * t);
    const double mp = to_double(m_const(p));
    if (tau < 1.0)
        return det_lu(recip_matrix(p, 1.0 / tau, st)) / mp;
    std::vector<std::vector<double>> m(static_cast<std::size_t>(p),
                                       std::vector<double>(static_cast<std::size_t>(p)));
    for (int i = 0; i < p; ++i)
        for (int j = 0; j < p; ++j)
            m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                theta_deriv_direct(2 * i + 2 * j + 2, tau, st);
    const double sgn = (p % 2 == 0) ? 1.0 : -1.0; // 1/(-1)^{p^2}
    return sgn * std::pow(pi, 0.5 * p) * std::pow(t, -(2.0 * p * p + p)) * det_lu(std::move(m)) /
           mp;
}

double limit_cdf_schehr(int p, double t, double tol) {
    check_p(p);
    if (!(t > 0.0))
        throw DomainError("limit_cdf_schehr: t must be positive");
    const double beta = (pi / t) * (pi / t);
    const double mp = to_double(m_const(p));
    const double pref = std::ldexp(1.0, 2 * p * p + p) *
                        std::pow(pi, 2.0 * p * p + 0.5 * p) *
                        std::pow(t, -(2.0 * p * p + p)) / mp;
    return pref * ordered_tuple_sum(p, beta, tol * 1e-2);
}

double limit_cdf_p1(double t, double tol) {
    if (!(t > 0.0))
        throw DomainError("limit_cdf_p1: t must be positive");
    double sum = 1.0;
    int small = 0;
    for (long m = 1; m < 100000; ++m) {
        const double mt2 = (m * t) * (m * t);
        const double term = 2.0 * (1.0 - 2.0 * mt2) * std::exp(-mt2);
        sum += term;
        if (std::abs(term) < tol * 0.1 && mt2 > 2.0) {
            if (++small >= 2)
                return sum;
        } else {
            small = 0;
        }
    }
    throw ConvergenceError("limit_cdf_p1: no convergence");
}

} // namespace melon
