#include "hnoma/params.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace hnoma {

namespace {

[[noreturn]] void fail(const char* field, const char* requirement, double got) {
    std::ostringstream os;
    os << "invalid parameter " << field << ": must be " << requirement
       << ", got " << got;
    throw std::invalid_argument(os.str());
}

void require_positive_finite(const char* field, double v) {
    if (!std::isfinite(v) || v <= 0.0) fail(field, "finite and > 0", v);
}

}  // namespace

SystemParams derive_params(double rho_n, double rho_m, double beta, double r_m) {
    require_positive_finite("rho_n", rho_n);
    require_positive_finite("rho_m", rho_m);
    if (!std::isfinite(beta) || beta <= 0.0 || beta >= 0.5)
        fail("beta", "in the open interval (0, 1/2)", beta);
    require_positive_finite("r_m", r_m);

    SystemParams p;
    p.rho_n = rho_n;
    p.rho_m = rho_m;
    p.beta = beta;
    p.r_m = r_m;
    p.epsilon_m = std::exp2(r_m) - 1.0;
    p.alpha_m = p.epsilon_m / rho_m;
    p.eta = rho_n / rho_m;
    return p;
}

ZConstants z_constants(const SystemParams& p) {
    const double b = p.beta;
    ZConstants z;
    z.z1 = 1.0 + (1.0 - b) * p.rho_m / (b * b * p.rho_n);
    z.z2 = (1.0 - 2.0 * b) / (b * b * p.rho_n);
    z.z3 = (1.0 - b) / b * p.alpha_m;
    z.z4 = 1.0 + (1.0 / p.alpha_m) / (b * p.rho_n);
    // Same comparison as branch_condition so the two can never disagree.
    z.z5_valid = p.epsilon_m < b / (1.0 - b);
    z.z5 = z.z5_valid
               ? (1.0 - b) / (b / p.alpha_m - (1.0 - b) * p.rho_m)
               : std::numeric_limits<double>::quiet_NaN();
    return z;
}

AsymptoticConstants asymptotic_constants(const SystemParams& p) {
    const double b = p.beta;
    const double e = p.epsilon_m;
    const double eta = p.eta;
    AsymptoticConstants a;
    a.zbar1 = 1.0 + (1.0 - b) / (b * b * eta);
    a.zbar2 = (1.0 - 2.0 * b) / (b * b * eta);
    a.zbar3 = (1.0 - b) / b * e;
    a.zbar4 = 1.0 + 1.0 / (b * e * eta);
    a.zbar5 = e < b / (1.0 - b)
                  ? (1.0 - b) * e / (b - (1.0 - b) * e)
                  : std::numeric_limits<double>::quiet_NaN();
    const double q = e / b - 1.0;
    a.xbar2 = (q + std::sqrt(q * q + 4.0 * e * (1.0 - b) / b)) / 2.0;
    a.e_r = 1.0 / a.zbar4 - 1.0 / a.zbar1;
    return a;
}

Branch branch_condition(const SystemParams& p) {
    return p.epsilon_m > p.beta / (1.0 - p.beta) ? Branch::AboveThreshold
                                                 : Branch::BelowOrEqual;
}

}  // namespace hnoma
