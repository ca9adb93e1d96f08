#include "hnoma/rates.hpp"

#include <cmath>
#include <stdexcept>

namespace hnoma {

double rate_oma(const SystemParams& p, double g_n) {
    return std::log2(1.0 + p.rho_n * g_n);
}

double rate_hnoma_oma_slot(const SystemParams& p, double g_n) {
    return std::log2(1.0 + p.beta * p.rho_n * g_n);
}

double rate_fsic_noma(const SystemParams& p, const ChannelRealization& ch) {
    return std::log2(1.0 + p.beta * p.rho_n * ch.g_n / (p.rho_m * ch.g_m + 1.0));
}

NpaRate rate_hsic_npa_noma(const SystemParams& p, const ChannelRealization& ch) {
    const double s_own = p.beta * p.rho_n * ch.g_n;
    if (s_own <= tau_m(p, ch.g_m))
        return NpaRate{std::log2(1.0 + s_own), SicType::TypeI};
    return NpaRate{rate_fsic_noma(p, ch), SicType::TypeII};
}

PaRate rate_hsic_pa_noma(const SystemParams& p, const ChannelRealization& ch) {
    const double s_own = p.beta * p.rho_n * ch.g_n;
    const double tau = tau_m(p, ch.g_m);
    if (s_own <= tau)
        return PaRate{std::log2(1.0 + s_own), SicType::TypeI,
                      PaCase::NotApplicable, 1.0};
    const double s_fsic = s_own / (p.rho_m * ch.g_m + 1.0);
    if (s_fsic > tau)
        return PaRate{std::log2(1.0 + s_fsic), SicType::TypeII, PaCase::Case1,
                      1.0};
    // Case 2: back the NOMA-slot power off to gamma*beta*rho_n so that the
    // received power equals tau_m and U_n decodes in the second SIC stage.
    return PaRate{std::log2(1.0 + tau), SicType::TypeII, PaCase::Case2,
                  tau / s_own};
}

bool underperforms_oma(const SystemParams& p, const ChannelRealization& ch,
                       Scheme scheme) {
    const CoupledIndicators ind = coupled_indicators(p, ch);
    switch (scheme) {
        case Scheme::Fsic:
            return ind.fail_fsic;
        case Scheme::HsicNpa:
            return ind.fail_npa;
        case Scheme::HsicPa:
            return ind.fail_pa;
        case Scheme::Oma:
            break;
    }
    throw std::invalid_argument("underperforms_oma: scheme must not be OMA");
}

double frame_energy(const SystemParams& p, Scheme scheme, double gamma) {
    switch (scheme) {
        case Scheme::Oma:
            return p.rho_n;
        case Scheme::Fsic:
        case Scheme::HsicNpa:
            return 2.0 * p.beta * p.rho_n;
        case Scheme::HsicPa:
            return (1.0 + gamma) * p.beta * p.rho_n;
    }
    throw std::invalid_argument("frame_energy: unknown scheme");
}

RateBreakdown evaluate_scheme(const SystemParams& p, const ChannelRealization& ch,
                              Scheme scheme) {
    RateBreakdown b;
    b.tau = tau_m(p, ch.g_m);
    b.gamma = 1.0;
    b.sic_type = SicType::NotApplicable;
    b.pa_case = PaCase::NotApplicable;
    switch (scheme) {
        case Scheme::Oma:
            b.r_oma_slot = 0.0;
            b.r_noma_slot = 0.0;
            break;
        case Scheme::Fsic:
            b.r_oma_slot = rate_hnoma_oma_slot(p, ch.g_n);
            b.r_noma_slot = rate_fsic_noma(p, ch);
            break;
        case Scheme::HsicNpa: {
            const NpaRate r = rate_hsic_npa_noma(p, ch);
            b.r_oma_slot = rate_hnoma_oma_slot(p, ch.g_n);
            b.r_noma_slot = r.rate;
            b.sic_type = r.sic_type;
            break;
        }
        case Scheme::HsicPa: {
            const PaRate r = rate_hsic_pa_noma(p, ch);
            b.r_oma_slot = rate_hnoma_oma_slot(p, ch.g_n);
            b.r_noma_slot = r.rate;
            b.sic_type = r.sic_type;
            b.pa_case = r.pa_case;
            b.gamma = r.gamma;
            break;
        }
    }
    b.energy = frame_energy(p, scheme, b.gamma);
    return b;
}

const char* scheme_name(Scheme s) {
    switch (s) {
        case Scheme::Oma:
            return "oma";
        case Scheme::Fsic:
            return "fsic";
        case Scheme::HsicNpa:
            return "hsic_npa";
        case Scheme::HsicPa:
            return "hsic_pa";
    }
    return "unknown";
}

}  // namespace hnoma
