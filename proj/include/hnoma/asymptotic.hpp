#ifndef HNOMA_ASYMPTOTIC_HPP
#define HNOMA_ASYMPTOTIC_HPP

// High-SNR approximations and floor constants, evaluated under the convention
// rho_m = rho_n / eta with rho_n the independent variable.

#include "hnoma/params.hpp"

namespace hnoma {

struct FloorReport {
    double fsic_floor;  // (1-beta) / (beta^2 eta + (1-beta)), always > 0
    double npa_floor;   // E_r when epsilon_m > beta/(1-beta), else 0
    double pa_floor;    // always 0
};

/// FSIC limit (1-beta)/(beta^2 eta + (1-beta)); depends only on (beta, eta).
double p_fsic_asymptotic(const SystemParams& p);

/// HSIC-NPA approximation: G(epsilon_m) + E_r above the branch threshold,
/// G(zbar5) strictly below it. Throws std::domain_error when epsilon_m is
/// within 1e-9 of beta/(1-beta) from below (zbar5 diverges there; the value
/// is not extrapolated).
double p_hsic_npa_asymptotic(const SystemParams& p);

/// HSIC-PA approximation; decays as 1/rho_m with no floor.
double p_hsic_pa_asymptotic(const SystemParams& p);

FloorReport floors(const SystemParams& p);

}  // namespace hnoma

#endif
