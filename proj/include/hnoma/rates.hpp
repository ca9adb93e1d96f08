#ifndef HNOMA_RATES_HPP
#define HNOMA_RATES_HPP

// Per-realization achievable rates, SIC classification, power adaptation and
// frame-energy accounting for OMA and the three hybrid-NOMA schemes.
//
// The OMA-vs-NOMA comparison is always evaluated in the linear SNR domain,
// as products of (1+x) terms, never by summing logarithms.

#include "hnoma/channel.hpp"
#include "hnoma/params.hpp"

namespace hnoma {

enum class Scheme { Oma, Fsic, HsicNpa, HsicPa };

enum class SicType { TypeI, TypeII, NotApplicable };
enum class PaCase { Case1, Case2, NotApplicable };

struct RateBreakdown {
    double r_oma_slot;   // own-slot rate at power beta*rho_n; 0 for pure OMA
    double r_noma_slot;  // NOMA-slot rate; 0 for pure OMA
    SicType sic_type;
    PaCase pa_case;
    double gamma;        // power adaptation factor; 1 unless HSIC-PA Case 2
    double tau;          // interference threshold tau_m
    double energy;       // per frame, slot duration T = 1
};

double rate_oma(const SystemParams& p, double g_n);
double rate_hnoma_oma_slot(const SystemParams& p, double g_n);
double rate_fsic_noma(const SystemParams& p, const ChannelRealization& ch);

struct NpaRate {
    double rate;
    SicType sic_type;
};
NpaRate rate_hsic_npa_noma(const SystemParams& p, const ChannelRealization& ch);

struct PaRate {
    double rate;
    SicType sic_type;
    PaCase pa_case;
    double gamma;
};
PaRate rate_hsic_pa_noma(const SystemParams& p, const ChannelRealization& ch);

/// True iff the scheme's NOMA-slot + own-slot rates fail to beat the pure-OMA
/// rate for this realization. scheme must not be Oma.
bool underperforms_oma(const SystemParams& p, const ChannelRealization& ch,
                       Scheme scheme);

/// OMA: rho_n. FSIC / HSIC-NPA: 2*beta*rho_n. HSIC-PA: (1+gamma)*beta*rho_n.
double frame_energy(const SystemParams& p, Scheme scheme, double gamma = 1.0);

RateBreakdown evaluate_scheme(const SystemParams& p, const ChannelRealization& ch,
                              Scheme scheme);

// One coupled evaluation of the three underperformance indicators on a shared
// draw; this is the Monte Carlo hot path. Pointwise the NOMA-slot SINRs obey
// PA >= NPA >= FSIC, so fail_pa <= fail_npa <= fail_fsic on every draw.
struct CoupledIndicators {
    bool fail_fsic;
    bool fail_npa;
    bool fail_pa;
    double gamma_pa;
};

inline CoupledIndicators coupled_indicators(const SystemParams& p,
                                            const ChannelRealization& ch) {
    const double s_own = p.beta * p.rho_n * ch.g_n;  // received power of U_n
    const double rhs = 1.0 + p.rho_n * ch.g_n;
    const double own_slot = 1.0 + s_own;
    const double s_fsic = s_own / (p.rho_m * ch.g_m + 1.0);
    const double tau = tau_m(p, ch.g_m);
    const bool type1 = s_own <= tau;

    const double s_npa = type1 ? s_own : s_fsic;
    double s_pa;
    double gamma = 1.0;
    if (type1) {
        s_pa = s_own;
    } else if (s_fsic > tau) {  // Case 1; ties go to Case 2 (lower energy)
        s_pa = s_fsic;
    } else {
        s_pa = tau;
        gamma = tau / s_own;
    }
    return CoupledIndicators{
        (1.0 + s_fsic) * own_slot <= rhs,
        (1.0 + s_npa) * own_slot <= rhs,
        (1.0 + s_pa) * own_slot <= rhs,
        gamma,
    };
}

const char* scheme_name(Scheme s);

}  // namespace hnoma

#endif
