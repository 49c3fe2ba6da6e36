#pragma once

#include <complex>
#include <cstdint>
#include <random>

namespace qfano {

uint64_t splitmix64(uint64_t x);

// Seeded generator with named sub-streams. The engine is std::mt19937_64,
// whose raw output sequence is fixed by the C++ standard, so any trial is
// replayable from its printed seed on any platform. Sub-stream k of seed s
// is seeded with splitmix64(splitmix64(s) ^ (k+1)*0x9E3779B97F4A7C15).
class Rng {
public:
    explicit Rng(uint64_t seed);

    Rng stream(uint64_t k) const;
    uint64_t seed() const { return seed_; }

    uint64_t next_u64();
    double uniform();   // [0, 1), 53-bit resolution
    double gaussian();  // standard normal via Box-Muller, two uniforms per call
    std::complex<double> cgaussian();

private:
    uint64_t seed_;
    std::mt19937_64 engine_;
};

}  // namespace qfano
