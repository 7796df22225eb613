#pragma once

#include <cstdint>
#include <random>

namespace hyperbandit {

using RngEngine = std::mt19937_64;

/// Engine for an independent substream identified by (seed, stream).
/// std::seed_seq scrambling is fully specified by the standard, so equal
/// inputs give equal streams everywhere.
inline RngEngine seeded_engine(uint64_t seed, uint64_t stream = 0) {
    std::seed_seq seq{static_cast<uint32_t>(seed), static_cast<uint32_t>(seed >> 32),
                      static_cast<uint32_t>(stream), static_cast<uint32_t>(stream >> 32)};
    return RngEngine(seq);
}

}  // namespace hyperbandit
