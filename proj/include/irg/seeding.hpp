#pragma once

#include <cstdint>

// Reproducible substream derivation. Replicas and purposes map to
// independent 64-bit seeds through a stateless integer mix, identical on
// every platform.

namespace irg {

enum class StreamPurpose : std::uint64_t {
    weights = 0x5745494748545331ULL,
    graph = 0x4752415048535431ULL,
};

namespace seeding {

// SplitMix64 finalizer; a bijection on 64-bit words.
std::uint64_t mix64(std::uint64_t z);

// seed = mix64( mix64(master ^ purpose) + replica * odd-constant ).
// For a fixed (master, purpose) this is injective in the replica id, and
// the two purposes can never collide for the same (master, replica).
std::uint64_t derive_substream(std::uint64_t master_seed, std::uint64_t replica_id,
                               StreamPurpose purpose);

}  // namespace seeding
}  // namespace irg
