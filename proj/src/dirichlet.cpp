#include "melon/dirichlet.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "melon/errors.hpp"
#include "melon/quadrature.hpp"

namespace melon {

namespace {

constexpr double pi = std::numbers::pi;

double neg4_pow(int k) {
    const double v = std::ldexp(1.0, 2 * k);
    return (k % 2 == 0) ? v : -v;
}

int abs_sum(const std::vector<int>& a) {
    int s = 0;
    for (int v : a) {
        if (v < 0)
            throw DomainError("exponent vector entries must be non-negative");
        s += v;
    }
    return s;
}

bool all_zero(const std::vector<int>& a) {
    return std::all_of(a.begin(), a.end(), [](int v) { return v == 0; });
}

// C-infinity cutoff: 1 on [0,1/2], 0 on [1,inf).
double bump(double u) {
    if (u <= 0.5)
        return 1.0;
    if (u >= 1.0)
        return 0.0;
    const double s = 2.0 * u - 1.0;
    const double g1 = std::exp(-1.0 / (1.0 - s));
    const double g0 = std::exp(-1.0 / s);
    return g1 / (g0 + g1);
}

double ipow_d(long base, int e) {
    double r = 1.0, b = static_cast<double>(base);
    for (int i = 0; i < e; ++i)
        r *= b;
    return r;
}

// pi^b (2b)!/b!
double c_factor(int b) { return std::pow(pi, b) * to_double(factorial(2 * b)) / to_double(factorial(b)); }

double comb_d(int n, int k) { return to_double(binomial(n, k)); }

// D_b(t) = sum_{j'=1}^{b} C(2b,2j') (2(b-j'))!/(b-j')! pi^{b-j'} t^{j'} theta_{2j'}(t)
double d_term(int b, double t, const SeriesTolerance& st) {
    double s = 0.0;
    for (int jp = 1; jp <= b; ++jp) {
        s += comb_d(2 * b, 2 * jp) * to_double(factorial(2 * (b - jp))) /
             to_double(factorial(b - jp)) * std::pow(pi, b - jp) * std::pow(t, jp) *
             theta_deriv_direct(2 * jp, t, st);
    }
    return s;
}

// theta-product integrand of the entire integral over [1, inf):
// t^{z-1} (prod_j theta_{2a_j}(t) - [a=0])
double i1_integrand(const std::vector<int>& a, double z, double t, const SeriesTolerance& st) {
    if (all_zero(a)) {
        const double d = theta0_deficit(t, st);
        double P = 0.0;
        for (std::size_t j = 0; j < a.size(); ++j)
            P = P + d + P * d; // (1+d)^p - 1 without cancellation
        return std::pow(t, z - 1.0) * P;
    }
    double prod = 1.0;
    for (int aj : a)
        prod *= theta_deriv_direct(2 * aj, t, st);
    return std::pow(t, z - 1.0) * prod;
}

// second entire integral: t^{-z-1} (prod_j theta_{2a_j}(1/t)
//   - (-pi)^{|a|} prod((2a_j)!/a_j!) t^{p/2+|a|}).
// Written through the reciprocity-transformed entries so the two huge terms
// cancel analytically:  (-1)^{|a|} t^{|a|+p/2} [prod(c_j theta_0 + D_j) - prod c_j].
double i2_integrand(const std::vector<int>& a, double z, double t, const SeriesTolerance& st) {
    const int p = static_cast<int>(a.size());
    const int asum = abs_sum(a);
    const double d = theta0_deficit(t, st);
    double P = 0.0;
    for (int j = 0; j < p; ++j)
        P = P + d + P * d;
    double x = 0.0;
    double cprod = 1.0;
    for (int aj : a) {
        const double cj = c_factor(aj);
        cprod *= cj;
        const double dt = d_term(aj, t, st) / (cj * (1.0 + d));
        x = x + dt + x * dt;
    }
    const double bracket = cprod * (P + (1.0 + P) * x);
    const double sgn = (asum % 2 == 0) ? 1.0 : -1.0;
    return std::pow(t, -z - 1.0 + asum + 0.5 * p) * sgn * bracket;
}

struct EntireParts {
    double i1 = 0.0;
    double i2 = 0.0;
};

EntireParts entire_integrals(const std::vector<int>& a, double z, double tol) {
    SeriesTolerance st;
    EntireParts e;
    e.i1 = integrate_decaying([&](double t) { return i1_integrand(a, z, t, st); }, 1.0, tol).value;
    e.i2 = integrate_decaying([&](double t) { return i2_integrand(a, z, t, st); }, 1.0, tol).value;
    return e;
}

} // namespace

double gaussian_moment_product(const std::vector<int>& a) {
    double r = 1.0;
    for (int ai : a)
        r *= to_double(factorial(2 * ai)) / (std::ldexp(1.0, 2 * ai) * to_double(factorial(ai)));
    return r;
}

double z_lattice_sum(const std::vector<int>& exponents, double z, double tol) {
    const int p = static_cast<int>(exponents.size());
    if (p < 1)
        throw DomainError("z_lattice_sum: empty exponent vector");
    int esum = 0;
    for (int e : exponents) {
        if (e < 0)
            throw DomainError("z_lattice_sum: exponents must be non-negative");
        if (e % 2 == 1)
            return 0.0; // odd power: terms cancel in pairs
        esum += e;
    }
    if (!(z > 0.5 * (p + esum)))
        throw DomainError("z_lattice_sum: z is outside the convergence region");

    const long R = (tol < 1e-9) ? 64 : 48;
    const double R2 = static_cast<double>(R) * R;

    // q^{-z} cache over attained squared norms
    std::vector<double> powq(static_cast<std::size_t>(p) * R * R + 1, -1.0);
    auto q_pow = [&](long q) {
        double& slot = powq[static_cast<std::size_t>(q)];
        if (slot < 0.0)
            slot = std::pow(static_cast<double>(q), -z);
        return slot;
    };

    double sum = 0.0;
    std::vector<long> m(static_cast<std::size_t>(p), 0);
    // odometer over 0 <= m_i <= R; each nonzero coordinate contributes a
    // factor 2 by the m_i -> -m_i symmetry
    while (true) {
        long q = 0;
        int nonzero = 0;
        for (long mi : m) {
            q += mi * mi;
            nonzero += (mi != 0);
        }
        if (q != 0 && q <= R2) {
            const double u = std::sqrt(static_cast<double>(q)) / R;
            const double w = bump(u);
            if (w > 0.0) {
                double num = 1.0;
                for (int i = 0; i < p; ++i)
                    num *= ipow_d(m[static_cast<std::size_t>(i)], exponents[static_cast<std::size_t>(i)]);
                sum += std::ldexp(w * num * q_pow(q), nonzero);
            }
        }
        int i = 0;
        while (i < p && m[static_cast<std::size_t>(i)] == R)
            m[static_cast<std::size_t>(i++)] = 0;
        if (i == p)
            break;
        ++m[static_cast<std::size_t>(i)];
    }

    // replace the cut tail by its radial integral: the angular factor is
    // 2 prod Gamma((e_i+1)/2) / Gamma((p+|e|)/2)
    double angular = 2.0;
    for (int e : exponents)
        angular *= gamma_real(0.5 * (e + 1));
    angular /= gamma_real(0.5 * (p + esum));
    const double decay = esum + p - 1 - 2.0 * z;
    const double j_bump =
        integrate([&](double u) { return (1.0 - bump(u)) * std::pow(u, decay); }, 0.5, 1.0,
                  tol * 1e-3)
            .value;
    const double j_tail = 1.0 / (2.0 * z - esum - p);
    sum += angular * std::pow(static_cast<double>(R), esum + p - 2.0 * z) * (j_bump + j_tail);
    return sum;
}

double z_series_direct(const DirichletQuery& q, double tol) {
    std::vector<int> exponents(q.a.size());
    for (std::size_t i = 0; i < q.a.size(); ++i)
        exponents[i] = 2 * q.a[i];
    return z_lattice_sum(exponents, q.z, tol);
}

double z_continued(const DirichletQuery& q, double tol) {
    const int p = static_cast<int>(q.a.size());
    if (p < 1)
        throw DomainError("z_continued: empty exponent vector");
    const int asum = abs_sum(q.a);
    const double pole = 0.5 * p + asum;
    const double z = q.z;
    if (z == pole)
        throw PoleError("z_continued: argument is the pole z = p/2 + |a|");

    const EntireParts e = entire_integrals(q.a, z, tol);
    double r = 0.0;
    if (all_zero(q.a))
        r -= std::pow(pi, z) * inv_gamma(z + 1.0);
    r += std::pow(pi, z - asum) * inv_gamma(z) * gaussian_moment_product(q.a) / (z - pole);
    r += std::pow(pi, z - 2.0 * asum) * inv_gamma(z) / neg4_pow(asum) * (e.i1 + e.i2);
    return r;
}

double z_residue(int p, const std::vector<int>& a) {
    if (p < 1 || static_cast<int>(a.size()) != p)
        throw DomainError("z_residue: a must have p entries");
    return std::pow(pi, 0.5 * p) * inv_gamma(0.5 * p + abs_sum(a)) * gaussian_moment_product(a);
}

double omega(int k, const std::vector<int>& a, double tol) {
    const int p = static_cast<int>(a.size());
    if (k < 0)
        throw DomainError("omega: k must be non-negative");
    const int asum = abs_sum(a);
    if (p != k + 1) {
        const double w = 0.5 * (k + 1) + asum;
        return 0.5 * gamma_real(w) * z_continued({a, w}, tol);
    }
    // finite part of Z_{2a}(z+|a|) Gamma(z+|a|) at z = p/2: the pole term of
    // the representation leaves the Laurent constant C_A pi^{p/2} log pi,
    // everything else is entire at w0 = p/2 + |a|.
    const double w0 = 0.5 * p + asum;
    const EntireParts e = entire_integrals(a, w0, tol);
    double val = gaussian_moment_product(a) * std::pow(pi, 0.5 * p) * std::log(pi);
    if (all_zero(a))
        val -= std::pow(pi, w0) / w0;
    val += std::pow(pi, w0 - 2.0 * asum) / neg4_pow(asum) * (e.i1 + e.i2);
    return 0.5 * val;
}

namespace {

// inner lattice sum over m in (h+1)Z^p at scale q = (h+1)^2/n:
// q^{|a|} (prod_i sigma_{a_i}(q) - [a=0]) with sigma_b(q) = sum_l l^{2b} e^{-q l^2}
double inner_sum(const std::vector<int>& a, double q, const SeriesTolerance& st) {
    const int asum = abs_sum(a);
    double inner;
    if (all_zero(a)) {
        double d; // sigma_0(q) - 1
        const double t = q / pi;
        if (t >= 1.0) {
            d = theta0_deficit(t, st);
        } else {
            d = std::sqrt(1.0 / t) * (1.0 + theta0_deficit(1.0 / t, st)) - 1.0;
        }
        double P = 0.0;
        for (std::size_t j = 0; j < a.size(); ++j)
            P = P + d + P * d;
        inner = P;
    } else {
        inner = 1.0;
        for (int ai : a)
            inner *= theta_deriv(2 * ai, q / pi, st) / std::pow(-4.0 * pi * pi, ai);
    }
    return std::pow(q, asum) * inner;
}

double h_weighted_sum(int k_or_s, bool moment_weight, const std::vector<int>& a, double n,
                      double tol) {
    if (!(n > 0.0))
        throw DomainError("g/G: n must be positive");
    const int p = static_cast<int>(a.size());
    SeriesTolerance st;
    // (h+1)^2 cutoff: n (log(p n / tol) + 8); the +8 covers the polynomial
    // factors in front of the gaussian decay
    const double cutoff = n * (std::log(std::max(4.0, p * n / std::max(tol, 1e-14))) + 8.0);
    double total = 0.0;
    for (long h = 1;; ++h) {
        const double hp1 = static_cast<double>(h + 1);
        const double q = hp1 * hp1 / n;
        const double inner = inner_sum(a, q, st);
        double weight;
        if (moment_weight) { // (h-1)^s - h^s
            weight = std::pow(static_cast<double>(h - 1), k_or_s) -
                     std::pow(static_cast<double>(h), k_or_s);
        } else { // (h+1)^k
            weight = std::pow(hp1, k_or_s);
        }
        total += weight * inner;
        if (hp1 * hp1 > cutoff)
            break;
    }
    return total;
}

} // namespace

double g_exact(int k, const std::vector<int>& a, double n, double tol) {
    if (k < 0)
        throw DomainError("g_exact: k must be non-negative");
    return h_weighted_sum(k, false, a, n, tol);
}

double g_asymptotic(int k, const std::vector<int>& a, double n, double tol) {
    if (k < 0)
        throw DomainError("g_asymptotic: k must be non-negative");
    if (!(n > 0.0))
        throw DomainError("g_asymptotic: n must be positive");
    const int p = static_cast<int>(a.size());
    const double ca = gaussian_moment_product(a);
    const double om =
        (p == k + 1) ? (euler_gamma - 1.0 + std::log(std::sqrt(n))) : (zeta(p - k) - 1.0);
    double r = ca * std::pow(n * pi, 0.5 * p) * om;
    r += omega(k, a, tol) * std::pow(n, 0.5 * (k + 1));
    if (all_zero(a)) {
        const double bk = to_double(bernoulli(k + 1));
        const double sgn = (k % 2 == 0) ? 1.0 : -1.0;
        r += 1.0 - bk * sgn / (k + 1);
    }
    return r;
}

double G_exact(int s, const std::vector<int>& a, double n, double tol) {
    if (s < 1)
        throw DomainError("G_exact: s must be >= 1");
    return h_weighted_sum(s, true, a, n, tol);
}

} // namespace melon
