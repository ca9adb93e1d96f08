#include "hnoma/channel.hpp"

namespace hnoma {
namespace rng {

namespace {
constexpr std::uint32_t kMul0 = 0xD2511F53u;
constexpr std::uint32_t kMul1 = 0xCD9E8D57u;
constexpr std::uint32_t kWeyl0 = 0x9E3779B9u;
constexpr std::uint32_t kWeyl1 = 0xBB67AE85u;
}  // namespace

PhiloxBlock philox4x32_10(const std::uint32_t ctr[4], const std::uint32_t key[2]) {
    std::uint32_t x0 = ctr[0], x1 = ctr[1], x2 = ctr[2], x3 = ctr[3];
    std::uint32_t k0 = key[0], k1 = key[1];
    for (int round = 0; round < 10; ++round) {
        const std::uint64_t p0 = static_cast<std::uint64_t>(kMul0) * x0;
        const std::uint64_t p1 = static_cast<std::uint64_t>(kMul1) * x2;
        const std::uint32_t hi0 = static_cast<std::uint32_t>(p0 >> 32);
        const std::uint32_t lo0 = static_cast<std::uint32_t>(p0);
        const std::uint32_t hi1 = static_cast<std::uint32_t>(p1 >> 32);
        const std::uint32_t lo1 = static_cast<std::uint32_t>(p1);
        const std::uint32_t y0 = hi1 ^ x1 ^ k0;
        const std::uint32_t y2 = hi0 ^ x3 ^ k1;
        x0 = y0;
        x1 = lo1;
        x2 = y2;
        x3 = lo0;
        k0 += kWeyl0;
        k1 += kWeyl1;
    }
    return PhiloxBlock{{x0, x1, x2, x3}};
}

}  // namespace rng

ChannelRealization sample_channel(RandomStream& stream) {
    const std::uint32_t ctr[4] = {
        static_cast<std::uint32_t>(stream.position),
        static_cast<std::uint32_t>(stream.position >> 32),
        static_cast<std::uint32_t>(stream.stream_index),
        static_cast<std::uint32_t>(stream.stream_index >> 32),
    };
    const std::uint32_t key[2] = {
        static_cast<std::uint32_t>(stream.seed),
        static_cast<std::uint32_t>(stream.seed >> 32),
    };
    const rng::PhiloxBlock b = rng::philox4x32_10(ctr, key);
    const std::uint64_t wa =
        (static_cast<std::uint64_t>(b.x[0]) << 32) | b.x[1];
    const std::uint64_t wb =
        (static_cast<std::uint64_t>(b.x[2]) << 32) | b.x[3];
    ++stream.position;
    return ChannelRealization{
        rng::exp1_from_uniform(rng::uniform_from_bits(wa)),
        rng::exp1_from_uniform(rng::uniform_from_bits(wb)),
    };
}

}  // namespace hnoma
