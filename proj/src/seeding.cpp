#include "irg/seeding.hpp"

namespace irg::seeding {

std::uint64_t mix64(std::uint64_t z) {
    z ^= z >> 30;
    z *= 0xBF58476D1CE4E5B9ULL;
    z ^= z >> 27;
    z *= 0x94D049BB133111EBULL;
    z ^= z >> 31;
    return z;
}

std::uint64_t derive_substream(std::uint64_t master_seed, std::uint64_t replica_id,
                               StreamPurpose purpose) {
    std::uint64_t base = mix64(master_seed ^ static_cast<std::uint64_t>(purpose));
    return mix64(base + 0x9E3779B97F4A7C15ULL * replica_id);
}

}  // namespace irg::seeding
