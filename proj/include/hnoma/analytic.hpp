#ifndef HNOMA_ANALYTIC_HPP
#define HNOMA_ANALYTIC_HPP

// Exact closed-form evaluation of the probabilities that FSIC, HSIC-NPA and
// HSIC-PA underperform OMA over IID unit-mean exponential channel gains, the
// part-wise decompositions used as independent cross-checks, and the special
// functions they need.
//
// All exponential products are evaluated as a single std::exp of a summed
// argument; quantities like e^{1/(beta rho_n)} are never materialized alone.

#include <functional>
#include <vector>

#include "hnoma/params.hpp"

namespace hnoma {

// First-kind Chebyshev nodes cos((2k-1)pi/(2 n_c)), k = 1..n_c, stored in
// decreasing order; exactly antisymmetric by construction.
struct QuadratureSpec {
    int n_c;
    std::vector<double> nodes;

    static QuadratureSpec chebyshev(int n_c);
};

/// Error function with enforced odd symmetry; saturates to +-1 for |x| > 6.
double erf(double x);

/// n_c-node Gauss-Chebyshev rule with sqrt(1-t^2) compensation weights:
/// (pi/n_c) * (b-a)/2 * sum f(mid + half*t_k) sqrt(1-t_k^2).
/// Positive orientation (requires a < b). Accuracy is O(n_c^-2).
double gauss_chebyshev_integrate(const std::function<double(double)>& f,
                                 double a, double b, int n_c);

// Four-part decomposition of the HSIC-NPA probability; sums to
// p_hsic_npa_exact.
struct NpaParts {
    double p_i1;   // Type I, alpha_m < g_m < z3
    double p_i2;   // Type I, g_m > z3
    double p_ii1;  // Type II, g_m > alpha_m
    double p_ii2;  // Type II, g_m < alpha_m
};

// Five-part decomposition of the HSIC-PA probability plus the quadratic-root
// and erf-prefactor constants of the derivation; sums to p_hsic_pa_exact
// (the three erf-based G contributions cancel).
struct PaParts {
    double p_i;
    double p_b1;
    double p_b21;
    double p_b221;
    double p_b222;
    double x1;      // negative root of f(x) = x^2 + (1/rho_m - alpha_m/beta) x
    double x2;      //   - (1-beta) alpha_m / (beta rho_m); x1 < alpha_m < x2
    double a_coef;  // A = alpha_m^{-1} rho_m / (beta rho_n)
    double b_coef;  // B = 1 + (alpha_m^{-1} - rho_m) / (beta rho_n)
};

/// FSIC: 1 - e^{-z2} / z1.
double p_fsic_exact(const SystemParams& p);

/// HSIC-NPA: V for epsilon_m >= beta/(1-beta) (the boundary uses the
/// continuous limit of the second branch, which equals V), otherwise
/// V - (1/z4) e^{1/(beta rho_n) - z4 z5} + (1/z1) e^{-(z2 + z1 z5)}.
double p_hsic_npa_exact(const SystemParams& p);

NpaParts p_hsic_npa_parts(const SystemParams& p);

/// HSIC-PA: 1 - e^{-(z2+z3)} + (1/z1) e^{-z2}(e^{-z1 x2} - 1) plus the
/// integral of e^{-x - Theta(x)} over [z3, x2], evaluated with an n_c-node
/// Gauss-Legendre rule (converged to machine precision by n_c ~ 50).
double p_hsic_pa_exact(const SystemParams& p, const QuadratureSpec& q);

PaParts p_hsic_pa_parts(const SystemParams& p, const QuadratureSpec& q);

/// erf-based closed form of int_y^x e^{-u - Omega(u)} du (the G terms of the
/// HSIC-PA part decomposition); G(x, x) = 0 and the three occurrences cancel
/// in the part sum. Requires x >= y.
double pa_region_g(const SystemParams& p, double x, double y);

}  // namespace hnoma

#endif
