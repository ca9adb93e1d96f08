#include "hnoma/analytic.hpp"

#include <cmath>
#include <initializer_list>
#include <stdexcept>

namespace hnoma {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

// Neumaier-compensated sum. The closed forms subtract terms of size ~1 that
// differ by O(1/rho); compensation keeps the small residual exact so the
// part-wise identities hold to ~1e-15 relative even at high SNR.
double neumaier_sum(std::initializer_list<double> xs) {
    double sum = 0.0;
    double comp = 0.0;
    for (double x : xs) {
        const double t = sum + x;
        if (std::abs(sum) >= std::abs(x))
            comp += (sum - t) + x;
        else
            comp += (x - t) + sum;
        sum = t;
    }
    return sum + comp;
}

// Fused-exponential terms shared by the exact evaluators and their part-wise
// decompositions; algebraically cancelling terms are then bitwise equal.
struct ExpTerms {
    double e_alpha;  // e^{-alpha_m}
    double e_z3;     // e^{-z3}
    double e_z2z3;   // e^{-(z2+z3)}
    double t34;      // (1/z4) e^{1/(beta rho_n) - z4 z3}
    double t44;      // (1/z4) e^{1/(beta rho_n) - z4 alpha_m}
    double t21;      // (1/z1) e^{-z2}
    double t21a;     // (1/z1) e^{-(z2 + z1 alpha_m)}
    double t45;      // (1/z4) e^{1/(beta rho_n) - z4 z5}  (valid-z5 branch)
    double t215;     // (1/z1) e^{-(z2 + z1 z5)}           (valid-z5 branch)
};

ExpTerms exp_terms(const SystemParams& p, const ZConstants& z) {
    const double c = 1.0 / (p.beta * p.rho_n);
    ExpTerms t;
    t.e_alpha = std::exp(-p.alpha_m);
    t.e_z3 = std::exp(-z.z3);
    t.e_z2z3 = std::exp(-(z.z2 + z.z3));
    t.t34 = std::exp(c - z.z4 * z.z3) / z.z4;
    t.t44 = std::exp(c - z.z4 * p.alpha_m) / z.z4;
    t.t21 = std::exp(-z.z2) / z.z1;
    t.t21a = std::exp(-(z.z2 + z.z1 * p.alpha_m)) / z.z1;
    if (z.z5_valid) {
        t.t45 = std::exp(c - z.z4 * z.z5) / z.z4;
        t.t215 = std::exp(-(z.z2 + z.z1 * z.z5)) / z.z1;
    } else {
        t.t45 = 0.0;
        t.t215 = 0.0;
    }
    return t;
}

struct QuadraticRoots {
    double x1;
    double x2;
};

// Roots of f(x) = x^2 + (1/rho_m - alpha_m/beta) x - (1-beta) alpha_m /
// (beta rho_m); always x1 < 0 < alpha_m < x2 for valid parameters.
QuadraticRoots pa_roots(const SystemParams& p) {
    const double q = p.epsilon_m / p.beta - 1.0;
    const double d =
        std::sqrt(q * q + 4.0 * p.epsilon_m * (1.0 - p.beta) / p.beta);
    return QuadraticRoots{(q - d) / (2.0 * p.rho_m), (q + d) / (2.0 * p.rho_m)};
}

// Integrand of the Theorem-2 residual term: e^{-x - Theta(x)} with
// Theta(x) = (x/alpha_m - 1) / ((1 - beta x/alpha_m) rho_n), written as one
// fused exponent.
double pa_integrand(const SystemParams& p, double x) {
    const double ax = x / p.alpha_m;
    return std::exp((1.0 - ax) / (1.0 - p.beta * ax) / p.rho_n - x);
}

// Gauss-Legendre nodes/weights on [-1, 1] by Newton iteration on P_n.
void gauss_legendre(int n, std::vector<double>& x, std::vector<double>& w) {
    x.assign(n, 0.0);
    w.assign(n, 0.0);
    const int m = (n + 1) / 2;
    for (int i = 0; i < m; ++i) {
        double t = std::cos(kPi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = 0.0;
            for (int j = 0; j < n; ++j) {
                const double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * j + 1.0) * t * p1 - j * p2) / (j + 1.0);
            }
            dp = n * (t * p0 - p1) / (t * t - 1.0);
            const double dt = p0 / dp;
            t -= dt;
            if (std::abs(dt) < 1e-15) break;
        }
        x[i] = -t;
        x[n - 1 - i] = t;
        w[i] = 2.0 / ((1.0 - t * t) * dp * dp);
        w[n - 1 - i] = w[i];
    }
}

double pa_integral(const SystemParams& p, double z3, double x2, int n_c) {
    std::vector<double> x, w;
    gauss_legendre(n_c, x, w);
    const double u = (x2 - z3) / 2.0;
    const double v = (x2 + z3) / 2.0;
    double sum = 0.0;
    for (int i = 0; i < n_c; ++i) sum += w[i] * pa_integrand(p, v + u * x[i]);
    return u * sum;
}

// G(x, y) = int_y^x e^{-u - Omega(u)} du
//         = e^{1/(beta rho_n) + B^2/(4A)} (sqrt(pi)/(2 sqrt(A)))
//           [erf(sqrt(A)(x + B/2A)) - erf(sqrt(A)(y + B/2A))].
// Combined in log space so the prefactor cannot overflow while the erf
// difference underflows.
double g_integral(const SystemParams& p, double A, double B, double x, double y) {
    const double sa = std::sqrt(A);
    const double shift = B / (2.0 * A);
    const double d = erf(sa * (x + shift)) - erf(sa * (y + shift));
    if (d <= 0.0) return 0.0;
    const double c = 1.0 / (p.beta * p.rho_n);
    return std::exp(c + B * B / (4.0 * A) + std::log(d)) * std::sqrt(kPi) /
           (2.0 * sa);
}

}  // namespace

QuadratureSpec QuadratureSpec::chebyshev(int n_c) {
    if (n_c < 1) throw std::invalid_argument("QuadratureSpec: n_c must be >= 1");
    QuadratureSpec q;
    q.n_c = n_c;
    q.nodes.assign(n_c, 0.0);
    for (int k = 1; k <= n_c / 2; ++k) {
        const double c = std::cos((2.0 * k - 1.0) * kPi / (2.0 * n_c));
        q.nodes[k - 1] = c;
        q.nodes[n_c - k] = -c;
    }
    if (n_c % 2 == 1) q.nodes[n_c / 2] = 0.0;
    return q;
}

double erf(double x) {
    if (std::abs(x) > 6.0) return std::copysign(1.0, x);
    return std::copysign(std::erf(std::abs(x)), x);
}

double gauss_chebyshev_integrate(const std::function<double(double)>& f,
                                 double a, double b, int n_c) {
    if (!(a < b))
        throw std::invalid_argument("gauss_chebyshev_integrate: need a < b");
    const QuadratureSpec q = QuadratureSpec::chebyshev(n_c);
    const double u = (b - a) / 2.0;
    const double v = (a + b) / 2.0;
    double sum = 0.0;
    for (double t : q.nodes) sum += f(v + u * t) * std::sqrt(1.0 - t * t);
    return kPi / n_c * u * sum;
}

double p_fsic_exact(const SystemParams& p) {
    const ZConstants z = z_constants(p);
    return 1.0 - std::exp(-z.z2) / z.z1;
}

double p_hsic_npa_exact(const SystemParams& p) {
    const ZConstants z = z_constants(p);
    const ExpTerms t = exp_terms(p, z);
    if (!z.z5_valid)  // includes the epsilon_m = beta/(1-beta) boundary: the
                      // branch-2 correction terms vanish in the limit z5->inf
        return neumaier_sum({1.0, -t.e_z2z3, t.t34, -t.t21});
    return neumaier_sum({1.0, -t.e_z2z3, t.t34, -t.t21, -t.t45, t.t215});
}

NpaParts p_hsic_npa_parts(const SystemParams& p) {
    const ZConstants z = z_constants(p);
    const ExpTerms t = exp_terms(p, z);
    NpaParts parts;
    parts.p_i1 = neumaier_sum({t.e_alpha, -t.e_z3, t.t34, -t.t44});
    parts.p_i2 = neumaier_sum({t.e_z3, -t.e_z2z3});
    parts.p_ii1 = z.z5_valid
                      ? neumaier_sum({t.t44, -t.t45, -t.t21a, t.t215})
                      : neumaier_sum({t.t44, -t.t21a});
    parts.p_ii2 = neumaier_sum({1.0, -t.e_alpha, t.t21a, -t.t21});
    return parts;
}

double p_hsic_pa_exact(const SystemParams& p, const QuadratureSpec& q) {
    const ZConstants z = z_constants(p);
    const ExpTerms t = exp_terms(p, z);
    const QuadraticRoots r = pa_roots(p);
    if (!(p.beta * r.x2 / p.alpha_m < 1.0))
        throw std::domain_error(
            "p_hsic_pa_exact: integrand denominator not positive on [z3, x2]");
    const double t21x2 = std::exp(-(z.z2 + z.z1 * r.x2)) / z.z1;
    const double integral = pa_integral(p, z.z3, r.x2, q.n_c);
    return neumaier_sum({1.0, -t.e_z2z3, t21x2, -t.t21, integral});
}

double pa_region_g(const SystemParams& p, double x, double y) {
    const double c = 1.0 / (p.beta * p.rho_n);
    const double a_coef = (1.0 / p.alpha_m) * p.rho_m * c;
    const double b_coef = 1.0 + (1.0 / p.alpha_m - p.rho_m) * c;
    return g_integral(p, a_coef, b_coef, x, y);
}

PaParts p_hsic_pa_parts(const SystemParams& p, const QuadratureSpec& q) {
    const ZConstants z = z_constants(p);
    const ExpTerms t = exp_terms(p, z);
    const QuadraticRoots r = pa_roots(p);
    if (!(p.beta * r.x2 / p.alpha_m < 1.0))
        throw std::domain_error(
            "p_hsic_pa_parts: integrand denominator not positive on [z3, x2]");
    const double c = 1.0 / (p.beta * p.rho_n);
    PaParts parts;
    parts.x1 = r.x1;
    parts.x2 = r.x2;
    parts.a_coef = (1.0 / p.alpha_m) * p.rho_m * c;
    parts.b_coef = 1.0 + (1.0 / p.alpha_m - p.rho_m) * c;

    const double t21x2 = std::exp(-(z.z2 + z.z1 * r.x2)) / z.z1;
    const double g_x2_alpha =
        g_integral(p, parts.a_coef, parts.b_coef, r.x2, p.alpha_m);
    const double g_z3_alpha =
        g_integral(p, parts.a_coef, parts.b_coef, z.z3, p.alpha_m);
    const double g_x2_z3 = g_integral(p, parts.a_coef, parts.b_coef, r.x2, z.z3);
    const double integral = pa_integral(p, z.z3, r.x2, q.n_c);

    parts.p_i = neumaier_sum({-t.e_z2z3, t.e_alpha, t.t34, -t.t44});
    parts.p_b1 = neumaier_sum({1.0, -t.e_alpha, t.t21a, -t.t21});
    parts.p_b21 = neumaier_sum({g_x2_alpha, -t.t21a, t21x2});
    parts.p_b221 = neumaier_sum({t.t44, -t.t34, -g_z3_alpha});
    parts.p_b222 = integral - g_x2_z3;
    return parts;
}

}  // namespace hnoma
