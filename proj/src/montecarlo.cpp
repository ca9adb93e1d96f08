#include "hnoma/montecarlo.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <stdexcept>
#include <thread>
#include <vector>

#include "hnoma/channel.hpp"

namespace hnoma {

namespace {

struct ChunkAccum {
    std::uint64_t fsic = 0;
    std::uint64_t npa = 0;
    std::uint64_t pa = 0;
    double gamma_sum = 0.0;
};

ChunkAccum run_chunk(const SystemParams& p, std::uint64_t seed,
                     std::uint64_t chunk, std::uint64_t n_draws) {
    RandomStream stream = split_stream(seed, chunk);
    ChunkAccum acc;
    for (std::uint64_t i = 0; i < n_draws; ++i) {
        const ChannelRealization ch = sample_channel(stream);
        const CoupledIndicators ind = coupled_indicators(p, ch);
        acc.fsic += ind.fail_fsic;
        acc.npa += ind.fail_npa;
        acc.pa += ind.fail_pa;
        acc.gamma_sum += ind.gamma_pa;
    }
    return acc;
}

ProbabilityEstimate make_estimate(std::uint64_t hits, std::uint64_t n,
                                  Scheme scheme) {
    const double p_hat = static_cast<double>(hits) / static_cast<double>(n);
    return ProbabilityEstimate{
        p_hat, std::sqrt(p_hat * (1.0 - p_hat) / static_cast<double>(n)), n,
        scheme};
}

}  // namespace

McReport estimate(const SystemParams& p, std::uint64_t n_samples,
                  std::uint64_t seed, unsigned n_threads) {
    if (n_samples < 1)
        throw std::invalid_argument("estimate: n_samples must be >= 1");

    const std::uint64_t n_chunks = (n_samples + kChunkDraws - 1) / kChunkDraws;
    std::vector<ChunkAccum> chunks(n_chunks);

    auto chunk_len = [&](std::uint64_t c) {
        const std::uint64_t lo = c * kChunkDraws;
        const std::uint64_t hi = std::min(n_samples, lo + kChunkDraws);
        return hi - lo;
    };

    unsigned workers = n_threads != 0 ? n_threads
                                      : std::max(1u, std::thread::hardware_concurrency());
    workers = static_cast<unsigned>(
        std::min<std::uint64_t>(workers, n_chunks));

    if (workers <= 1) {
        for (std::uint64_t c = 0; c < n_chunks; ++c)
            chunks[c] = run_chunk(p, seed, c, chunk_len(c));
    } else {
        std::atomic<std::uint64_t> next{0};
        auto work = [&] {
            for (;;) {
                const std::uint64_t c = next.fetch_add(1);
                if (c >= n_chunks) return;
                chunks[c] = run_chunk(p, seed, c, chunk_len(c));
            }
        };
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (unsigned t = 0; t < workers; ++t) pool.emplace_back(work);
        for (auto& t : pool) t.join();
    }

    // Ordered merge: integer counts are exact, the gamma sum is added in
    // chunk-index order.
    std::uint64_t fsic = 0, npa = 0, pa = 0;
    double gamma_sum = 0.0;
    for (const ChunkAccum& a : chunks) {
        fsic += a.fsic;
        npa += a.npa;
        pa += a.pa;
        gamma_sum += a.gamma_sum;
    }

    McReport r;
    r.fsic = make_estimate(fsic, n_samples, Scheme::Fsic);
    r.npa = make_estimate(npa, n_samples, Scheme::HsicNpa);
    r.pa = make_estimate(pa, n_samples, Scheme::HsicPa);
    r.mean_gamma = gamma_sum / static_cast<double>(n_samples);
    r.mean_pa_energy = (1.0 + r.mean_gamma) * p.beta * p.rho_n;
    return r;
}

ProbabilityEstimate estimate_event(const SystemParams& p, Scheme scheme,
                                   std::uint64_t n_samples, std::uint64_t seed,
                                   unsigned n_threads) {
    const McReport r = estimate(p, n_samples, seed, n_threads);
    switch (scheme) {
        case Scheme::Fsic:
            return r.fsic;
        case Scheme::HsicNpa:
            return r.npa;
        case Scheme::HsicPa:
            return r.pa;
        case Scheme::Oma:
            break;
    }
    throw std::invalid_argument("estimate_event: scheme must not be OMA");
}

}  // namespace hnoma
