#ifndef HNOMA_PARAMS_HPP
#define HNOMA_PARAMS_HPP

// System parameters of the two-user hybrid-NOMA uplink (one legacy user U_m,
// one opportunistic user U_n, noise normalized to 1) and the derived constants
// used by the closed-form and asymptotic evaluators.

#include <cmath>

namespace hnoma {

// High-SNR behaviour splits on epsilon_m vs beta/(1-beta); the boundary
// belongs to BelowOrEqual.
enum class Branch { AboveThreshold, BelowOrEqual };

struct SystemParams {
    double rho_n;      // transmit power of U_n (linear, noise-normalized)
    double rho_m;      // transmit power of U_m
    double beta;       // power reduction coefficient, 0 < beta < 1/2
    double r_m;        // legacy target rate R_m [BPCU]
    double epsilon_m;  // 2^R_m - 1
    double alpha_m;    // epsilon_m / rho_m
    double eta;        // rho_n / rho_m
};

/// Validates raw inputs and populates every derived field.
/// Throws std::invalid_argument naming the offending field.
SystemParams derive_params(double rho_n, double rho_m, double beta, double r_m);

// z-constants of the exact closed forms. z5 is finite and positive only when
// epsilon_m < beta/(1-beta); z5_valid reflects that strict inequality and z5
// must not be read otherwise.
struct ZConstants {
    double z1;  // 1 + (1-beta) rho_m / (beta^2 rho_n)
    double z2;  // (1-2beta) / (beta^2 rho_n)
    double z3;  // ((1-beta)/beta) alpha_m
    double z4;  // 1 + alpha_m^{-1} / (beta rho_n)
    double z5;  // (1-beta) / (beta alpha_m^{-1} - (1-beta) rho_m)
    bool z5_valid;
};
ZConstants z_constants(const SystemParams& p);

// SNR-free counterparts (rho_m-independent) used by the high-SNR
// approximations, plus the scaled quadratic root and the floor constant.
struct AsymptoticConstants {
    double zbar1;  // 1 + (1-beta)/(beta^2 eta)
    double zbar2;  // (1-2beta)/(beta^2 eta)
    double zbar3;  // ((1-beta)/beta) epsilon_m
    double zbar4;  // 1 + 1/(beta epsilon_m eta)
    double zbar5;  // (1-beta) epsilon_m / (beta - (1-beta) epsilon_m); NaN when
                   // epsilon_m >= beta/(1-beta)
    double xbar2;  // positive root scale: x2 * rho_m
    double e_r;    // 1/zbar4 - 1/zbar1
};
AsymptoticConstants asymptotic_constants(const SystemParams& p);

Branch branch_condition(const SystemParams& p);

/// Interference threshold tau_m = max{0, g_m / alpha_m - 1}.
inline double tau_m(const SystemParams& p, double g_m) {
    const double t = g_m / p.alpha_m - 1.0;
    return t > 0.0 ? t : 0.0;
}

/// CLI convention: noise is 1, so SNR [dB] maps to rho_n = 10^(dB/10).
inline double snr_db_to_rho(double snr_db) {
    return std::pow(10.0, snr_db / 10.0);
}

}  // namespace hnoma

#endif
