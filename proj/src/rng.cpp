#include "qfano/rng.hpp"

#include <cmath>

namespace qfano {

uint64_t splitmix64(uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

Rng::Rng(uint64_t seed) : seed_(seed), engine_(seed) {}

Rng Rng::stream(uint64_t k) const {
    return Rng(splitmix64(splitmix64(seed_) ^ ((k + 1) * 0x9E3779B97F4A7C15ULL)));
}

uint64_t Rng::next_u64() { return engine_(); }

double Rng::uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double Rng::gaussian() {
    double u1 = uniform();
    double u2 = uniform();
    if (u1 <= 0.0) u1 = 0x1.0p-53;
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
}

std::complex<double> Rng::cgaussian() {
    double re = gaussian();
    double im = gaussian();
    return {re, im};
}

}  // namespace qfano
