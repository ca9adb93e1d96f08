#ifndef HNOMA_CHANNEL_HPP
#define HNOMA_CHANNEL_HPP

// IID Rayleigh channel sampling: the squared magnitudes |h_m|^2, |h_n|^2 of
// normalized circularly-symmetric Gaussians are unit-mean exponentials.
// Sampling is counter-based (Philox4x32-10) so that any substream is an O(1)
// jump and parallel Monte Carlo is reproducible independent of worker count.

#include <cmath>
#include <cstdint>

namespace hnoma {

struct ChannelRealization {
    double g_m;  // |h_m|^2
    double g_n;  // |h_n|^2
};

// Value type; one block of the counter space per (stream_index, position).
struct RandomStream {
    std::uint64_t seed = 0;
    std::uint64_t stream_index = 0;
    std::uint64_t position = 0;
};

/// k-th substream for a seed. Substreams own disjoint counter blocks, so they
/// never overlap; construction is O(1) for any k.
inline RandomStream split_stream(std::uint64_t seed, std::uint64_t k) {
    return RandomStream{seed, k, 0};
}

/// One coupled draw (g_m, g_n) via inverse CDF g = -ln(1-U); advances the
/// stream by one counter position. Exactly one block is consumed per draw.
ChannelRealization sample_channel(RandomStream& stream);

namespace rng {

struct PhiloxBlock {
    std::uint32_t x[4];
};

/// Philox4x32-10 keyed counter permutation (Salmon et al., Random123).
PhiloxBlock philox4x32_10(const std::uint32_t ctr[4], const std::uint32_t key[2]);

/// Top 53 bits of w mapped to [0, 1).
inline double uniform_from_bits(std::uint64_t w) {
    return static_cast<double>(w >> 11) * 0x1.0p-53;
}

/// Exp(1) by inverse CDF; u = 0 maps to exactly 0.
inline double exp1_from_uniform(double u) {
    return -std::log1p(-u);
}

}  // namespace rng
}  // namespace hnoma

#endif
