#include "hnoma/asymptotic.hpp"

#include <cmath>
#include <stdexcept>

namespace hnoma {

namespace {

// G(x) of the HSIC-NPA approximation. The second term keeps its printed
// 1/(beta rho_n) factor inside the 1/rho_m^2 prefactor, which makes it third
// order; it is negligible wherever the approximation is used.
double g_npa(const SystemParams& p, const AsymptoticConstants& a, double x) {
    const double rm = p.rho_m;
    const double b = p.beta;
    return 1.0 / (rm * rm) * (a.zbar3 * a.zbar3 - x * x) /
               (2.0 * b * p.epsilon_m * p.eta)
           - 1.0 / (rm * rm) * (a.zbar3 - x) / (b * p.rho_n)
           + a.zbar2 / rm * (1.0 + x / rm - a.zbar3 / rm)
           + 1.0 / (rm * rm) * (1.0 - b) * x * x / (2.0 * b * b * p.eta);
}

}  // namespace

double p_fsic_asymptotic(const SystemParams& p) {
    const double b = p.beta;
    return (1.0 - b) / (b * b * p.eta + (1.0 - b));
}

double p_hsic_npa_asymptotic(const SystemParams& p) {
    const AsymptoticConstants a = asymptotic_constants(p);
    const double threshold = p.beta / (1.0 - p.beta);
    if (p.epsilon_m > threshold) return g_npa(p, a, p.epsilon_m) + a.e_r;
    if (p.epsilon_m > threshold - 1e-9)
        throw std::domain_error(
            "p_hsic_npa_asymptotic: numerically unstable within 1e-9 of the "
            "branch threshold epsilon_m = beta/(1-beta) (zbar5 diverges)");
    return g_npa(p, a, a.zbar5);
}

double p_hsic_pa_asymptotic(const SystemParams& p) {
    const AsymptoticConstants a = asymptotic_constants(p);
    const double b = p.beta;
    const double rm = p.rho_m;
    const double log_arg = 1.0 / b - a.xbar2 / p.epsilon_m;
    if (!(log_arg > 0.0))
        throw std::domain_error(
            "p_hsic_pa_asymptotic: log argument 1/beta - xbar2/epsilon_m not "
            "positive");
    return a.zbar2 / rm
           + (a.zbar2 + 1.0 / (b * p.eta)) * (a.xbar2 - a.zbar3) / (rm * rm)
           + (1.0 - b) / (b * b * p.eta) *
                 (a.xbar2 * a.xbar2 / 2.0 + p.epsilon_m * std::log(log_arg)) /
                 (rm * rm);
}

FloorReport floors(const SystemParams& p) {
    const AsymptoticConstants a = asymptotic_constants(p);
    FloorReport f;
    f.fsic_floor = p_fsic_asymptotic(p);
    f.npa_floor =
        branch_condition(p) == Branch::AboveThreshold ? a.e_r : 0.0;
    f.pa_floor = 0.0;
    return f;
}

}  // namespace hnoma
