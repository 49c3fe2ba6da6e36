#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace qfano {

// Outcome of one randomized property. slack is tolerance-inclusive: a trial
// passes iff its slack is >= 0, and worst_slack is the minimum over trials.
// worst_seed is the derived sub-seed of the worst trial, for replay.
struct PropertyResult {
    std::string name;
    int trials;
    double worst_slack;
    uint64_t worst_seed;
    bool passed;
};

// Runs every randomized invariant of the library (linear algebra, states
// and channels, entropies, bounds, optimizers) with deterministic per-trial
// sub-seeds split from `seed`. Each property caps its trial count at the
// smaller of `trials` and its natural ensemble size.
std::vector<PropertyResult> run_verification(uint64_t seed, int trials,
                                             const std::vector<int>& dims);

}  // namespace qfano
