#pragma once

// The multidimensional Dirichlet series Z_{2a}(z) over Z^p \ {0}: direct
// lattice summation inside the convergence region, the meromorphic
// continuation built from theta-product integrals, its residue, the harmonic
// sum constants omega_{k,a}, and the lattice sums g_{k,a}(n), G_{s,a}(n).

#include <vector>

#include "melon/theta.hpp"

namespace melon {

// Half-exponent convention: the series numerator is m^{2a}.
struct DirichletQuery {
    std::vector<int> a;
    double z = 0.0;
};

// Lattice sum with the full exponent vector (odd exponents give exactly 0):
// sum_{m != 0} prod m_i^{e_i} / |m|^{2z}, for z > (p + |e|)/2. A smoothly
// truncated sum with a closed-form correction integral; no use of the
// analytic continuation machinery.
double z_lattice_sum(const std::vector<int>& exponents, double z, double tol = 1e-10);

double z_series_direct(const DirichletQuery& q, double tol = 1e-10);

// Meromorphic continuation of Z_{2a}(z), valid for every real z except the
// single pole at z = p/2 + |a|_1.
double z_continued(const DirichletQuery& q, double tol = 1e-12);

// Residue at the pole: pi^{p/2} / Gamma(p/2 + |a|_1) prod (2a_i)!/(4^{a_i} a_i!).
double z_residue(int p, const std::vector<int>& a);

// omega_{k,a}: (1/2) Gamma((k+1)/2 + |a|) Z_{2a}((k+1)/2 + |a|) when
// p != k+1, and the finite part of Z_{2a}(z+|a|) Gamma(z+|a|) at z = p/2
// otherwise, evaluated in closed form from the continuation representation.
double omega(int k, const std::vector<int>& a, double tol = 1e-12);

// g_{k,a}(n) = sum_{h>=1} (h+1)^k sum_{m in (h+1)Z^p, m != 0}
//              e^{-|m|^2/n} (m/sqrt n)^{2a}, by direct summation.
double g_exact(int k, const std::vector<int>& a, double n, double tol = 1e-12);

// Asymptotic form: prod((2a_j)!/(4^{a_j} a_j!)) Omega_k(n)
// + omega_{k,a} n^{(k+1)/2} + (1 - B_{k+1} (-1)^k/(k+1)) [a = 0].
double g_asymptotic(int k, const std::vector<int>& a, double n, double tol = 1e-12);

// G_{s,a}(n) = sum_{h>=1} ((h-1)^s - h^s) (inner lattice sum).
double G_exact(int s, const std::vector<int>& a, double n, double tol = 1e-12);

// prod (2a_i)!/(4^{a_i} a_i!)
double gaussian_moment_product(const std::vector<int>& a);

} // namespace melon
