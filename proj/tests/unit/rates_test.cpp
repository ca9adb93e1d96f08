#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "hnoma/channel.hpp"
#include "hnoma/params.hpp"
#include "hnoma/rates.hpp"

using namespace hnoma;

namespace {
const SystemParams kRef = derive_params(1000.0, 200.0, 0.25, 1.0);  // alpha=0.005
}

TEST_CASE("rate_oma") {
    CHECK(rate_oma(kRef, 0.0) == 0.0);
    CHECK(rate_oma(kRef, 0.001) == doctest::Approx(1.0).epsilon(1e-14));
    const SystemParams p = derive_params(100.0, 20.0, 0.25, 1.0);
    CHECK(rate_oma(p, 0.07) == doctest::Approx(3.0).epsilon(1e-14));
}

TEST_CASE("rate_hnoma_oma_slot") {
    CHECK(rate_hnoma_oma_slot(kRef, 0.0) == 0.0);
    const SystemParams p = derive_params(4.0, 1.0, 0.25, 1.0);
    CHECK(rate_hnoma_oma_slot(p, 1.0) == doctest::Approx(1.0).epsilon(1e-14));
    for (double g : {1e-3, 0.1, 1.0, 5.0})
        CHECK(rate_hnoma_oma_slot(kRef, g) < rate_oma(kRef, g));
}

TEST_CASE("rate_fsic_noma") {
    CHECK(rate_fsic_noma(kRef, {1.0, 0.0}) == 0.0);
    CHECK(rate_fsic_noma(kRef, {0.0, 0.3}) ==
          rate_hnoma_oma_slot(kRef, 0.3));
    const SystemParams p = derive_params(8.0, 1.0, 0.25, 1.0);
    CHECK(rate_fsic_noma(p, {1.0, 1.0}) == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("rate_hsic_npa_noma classification") {
    // tau = 0 when g_m < alpha_m: any g_n > 0 is Type II at the FSIC rate
    const NpaRate hinge = rate_hsic_npa_noma(kRef, {0.001, 0.5});
    CHECK(hinge.sic_type == SicType::TypeII);
    CHECK(hinge.rate == rate_fsic_noma(kRef, {0.001, 0.5}));

    // boundary beta rho_n g_n == tau uses Type I: alpha=1, g_m=3 -> tau=2,
    // beta rho_n g_n = 0.25*8*1 = 2
    const SystemParams p = derive_params(8.0, 1.0, 0.25, 1.0);
    const NpaRate boundary = rate_hsic_npa_noma(p, {3.0, 1.0});
    CHECK(boundary.sic_type == SicType::TypeI);
    CHECK(boundary.rate == doctest::Approx(std::log2(3.0)).epsilon(1e-14));

    // worked Type-I example: tau=3, received power 2.5 -> log2(3.5)
    const NpaRate t1 = rate_hsic_npa_noma(kRef, {0.02, 0.01});
    CHECK(t1.sic_type == SicType::TypeI);
    CHECK(t1.rate == doctest::Approx(std::log2(3.5)).epsilon(1e-12));
}

TEST_CASE("rate_hsic_pa_noma cases") {
    // tau = 0, g_n > 0: Type II Case 1 with gamma 1 at the FSIC rate
    const PaRate c1 = rate_hsic_pa_noma(kRef, {0.001, 0.5});
    CHECK(c1.sic_type == SicType::TypeII);
    CHECK(c1.pa_case == PaCase::Case1);
    CHECK(c1.gamma == 1.0);
    CHECK(c1.rate == rate_fsic_noma(kRef, {0.001, 0.5}));

    // boundary: Type I, rate log2(1+tau), gamma 1
    const SystemParams p = derive_params(8.0, 1.0, 0.25, 1.0);
    const PaRate b = rate_hsic_pa_noma(p, {3.0, 1.0});
    CHECK(b.sic_type == SicType::TypeI);
    CHECK(b.gamma == 1.0);
    CHECK(b.rate == doctest::Approx(std::log2(3.0)).epsilon(1e-14));

    // Type II with the interference-limited rate below log2(1+tau): power
    // adaptation wins (Case 2). g_m=0.01 -> tau=1; s_own = 250*0.008 = 2 > 1,
    // s_fsic = 2/3 <= 1, so gamma = 1/2 and the rate is log2(2).
    const PaRate c2 = rate_hsic_pa_noma(kRef, {0.01, 0.008});
    REQUIRE(c2.sic_type == SicType::TypeII);
    REQUIRE(c2.pa_case == PaCase::Case2);
    CHECK(c2.gamma == doctest::Approx(0.5).epsilon(1e-12));
    const double tau = tau_m(kRef, 0.01);
    CHECK(c2.rate == doctest::Approx(std::log2(1.0 + tau)).epsilon(1e-12));
}

TEST_CASE("per-draw dominance and type agreement over random draws") {
    RandomStream s = split_stream(99, 0);
    int case2_seen = 0;
    for (int i = 0; i < 100000; ++i) {
        const ChannelRealization ch = sample_channel(s);
        const double fsic = rate_fsic_noma(kRef, ch);
        const NpaRate npa = rate_hsic_npa_noma(kRef, ch);
        const PaRate pa = rate_hsic_pa_noma(kRef, ch);
        REQUIRE(npa.rate >= fsic);
        REQUIRE(pa.rate >= npa.rate);
        REQUIRE(pa.sic_type == npa.sic_type);
        if (pa.pa_case == PaCase::Case2) {
            ++case2_seen;
            // gamma * beta rho_n g_n reconstructs tau to a few ulps
            const double lhs = pa.gamma * (kRef.beta * kRef.rho_n * ch.g_n);
            const double tau = tau_m(kRef, ch.g_m);
            REQUIRE(lhs == doctest::Approx(tau).epsilon(4e-16));
        }
        const CoupledIndicators ind = coupled_indicators(kRef, ch);
        REQUIRE(ind.fail_pa <= ind.fail_npa);
        REQUIRE(ind.fail_npa <= ind.fail_fsic);
    }
    CHECK(case2_seen > 0);
}

TEST_CASE("underperforms_oma linear-domain boundary") {
    // beta=1/4, rho_n=16, rho_m=1, g_m=1: the FSIC boundary g_n value is
    // exactly representable and the products are exact, so the non-strict
    // inequality holds with equality.
    const SystemParams p = derive_params(16.0, 1.0, 0.25, 1.0);
    const double boundary = (0.75 * 2.0 - 0.25) / (0.0625 * 16.0);  // 1.25
    CHECK(underperforms_oma(p, {1.0, boundary}, Scheme::Fsic));
    CHECK_FALSE(underperforms_oma(p, {1.0, 10.0 * boundary}, Scheme::Fsic));

    // g_n = 0: equality case for every scheme
    for (Scheme s : {Scheme::Fsic, Scheme::HsicNpa, Scheme::HsicPa})
        CHECK(underperforms_oma(p, {0.7, 0.0}, s));

    CHECK_THROWS_AS(underperforms_oma(p, {1.0, 1.0}, Scheme::Oma),
                    std::invalid_argument);
}

TEST_CASE("underperforms_oma monotone in g_n for FSIC") {
    const SystemParams p = derive_params(100.0, 20.0, 0.25, 0.2);
    bool prev = true;
    for (int i = 0; i <= 200; ++i) {
        const bool now = underperforms_oma(p, {0.8, i * 0.01}, Scheme::Fsic);
        CHECK(prev >= now);  // once false, stays false
        prev = now;
    }
}

TEST_CASE("frame_energy") {
    const SystemParams p = derive_params(100.0, 20.0, 0.25, 1.0);
    CHECK(frame_energy(p, Scheme::Fsic) == 50.0);
    CHECK(frame_energy(p, Scheme::HsicNpa) == 50.0);
    CHECK(frame_energy(p, Scheme::HsicPa, 1.0) == 50.0);
    CHECK(frame_energy(p, Scheme::HsicPa, 0.2) == doctest::Approx(30.0));
    CHECK(frame_energy(p, Scheme::Oma) == 100.0);
}

TEST_CASE("evaluate_scheme breakdown invariants") {
    const SystemParams p = derive_params(100.0, 20.0, 0.25, 1.0);
    RandomStream s = split_stream(5, 0);
    for (int i = 0; i < 2000; ++i) {
        const ChannelRealization ch = sample_channel(s);
        const RateBreakdown pa = evaluate_scheme(p, ch, Scheme::HsicPa);
        REQUIRE(pa.r_noma_slot >= 0.0);
        REQUIRE(pa.energy <= 2.0 * p.beta * p.rho_n);
        REQUIRE(pa.energy == frame_energy(p, Scheme::HsicPa, pa.gamma));
        const RateBreakdown fsic = evaluate_scheme(p, ch, Scheme::Fsic);
        REQUIRE(fsic.energy == 2.0 * p.beta * p.rho_n);
        REQUIRE(fsic.gamma == 1.0);
    }
    const RateBreakdown oma = evaluate_scheme(p, {1.0, 1.0}, Scheme::Oma);
    CHECK(oma.r_oma_slot == 0.0);
    CHECK(oma.r_noma_slot == 0.0);
    CHECK(oma.energy == p.rho_n);
    CHECK(oma.sic_type == SicType::NotApplicable);
}
