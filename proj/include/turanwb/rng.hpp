#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace turan {

// mt19937_64 has a standard-specified output sequence; we avoid
// std::uniform_int_distribution (implementation-defined) so that seeded
// runs emit identical bytes everywhere.
using Rng = std::mt19937_64;

inline std::uint64_t rand_below(Rng& rng, std::uint64_t n) {
    if (n <= 1) return 0;
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t v;
    do {
        v = rng();
    } while (v >= limit);
    return v % n;
}

template <typename T>
void shuffle_vec(std::vector<T>& v, Rng& rng) {
    for (std::size_t i = v.size(); i > 1; --i) {
        std::size_t j = static_cast<std::size_t>(rand_below(rng, i));
        std::swap(v[i - 1], v[j]);
    }
}

}  // namespace turan
