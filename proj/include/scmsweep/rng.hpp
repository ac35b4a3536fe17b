#pragma once

#include <cstdint>

namespace scmsweep {

/// Derives an independent 64-bit seed from a parent seed and a stream index
/// (splitmix64 finalizer). The harness uses mix_seed(master, trial) for
/// per-trial streams and mix_seed(trial_seed, beam) for per-beam snapshot
/// draws, so thread scheduling never affects the values drawn.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream);

}  // namespace scmsweep
