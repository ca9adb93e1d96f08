#ifndef HNOMA_MONTECARLO_HPP
#define HNOMA_MONTECARLO_HPP

// Coupled Monte Carlo estimation of the three underperformance probabilities
// and the mean HSIC-PA power-adaptation factor / frame energy.
//
// One channel draw is evaluated under all three schemes, so the per-draw
// indicator ordering PA <= NPA <= FSIC carries over to the estimates exactly,
// and scheme comparisons are variance-reduced.
//
// Draws are partitioned into fixed chunks of kChunkDraws; chunk c always uses
// substream c and accumulates in draw order, chunks merge in index order, so
// results are bitwise identical for a fixed (seed, n_samples) regardless of
// worker count.

#include <cstdint>

#include "hnoma/params.hpp"
#include "hnoma/rates.hpp"

namespace hnoma {

inline constexpr std::uint64_t kChunkDraws = std::uint64_t{1} << 16;

struct ProbabilityEstimate {
    double p_hat;       // in [0, 1]
    double std_error;   // sqrt(p_hat (1 - p_hat) / samples)
    std::uint64_t samples;
    Scheme scheme;
};

struct McReport {
    ProbabilityEstimate fsic;
    ProbabilityEstimate npa;
    ProbabilityEstimate pa;
    double mean_gamma;      // mean HSIC-PA gamma over all draws
    double mean_pa_energy;  // (1 + mean_gamma) * beta * rho_n, always <= 2 beta rho_n
};

/// n_threads = 0 picks the hardware concurrency. The estimate does not depend
/// on n_threads in any bit.
McReport estimate(const SystemParams& p, std::uint64_t n_samples,
                  std::uint64_t seed, unsigned n_threads = 0);

/// Single-scheme convenience; equals the corresponding field of estimate()
/// for identical (seed, n_samples).
ProbabilityEstimate estimate_event(const SystemParams& p, Scheme scheme,
                                   std::uint64_t n_samples, std::uint64_t seed,
                                   unsigned n_threads = 0);

}  // namespace hnoma

#endif
