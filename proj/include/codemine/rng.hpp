#ifndef CODEMINE_RNG_HPP
#define CODEMINE_RNG_HPP

#include <cstdint>
#include <random>
#include <string_view>

#include "codemine/text.hpp"

namespace codemine {

// splitmix64 finalizer; decorrelates seed/salt pairs into engine seeds.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (salt + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

inline std::uint64_t mix_seed(std::uint64_t seed, std::string_view tag) {
    return mix_seed(seed, fnv1a64(tag));
}

inline std::mt19937_64 make_engine(std::uint64_t seed, std::uint64_t salt) {
    return std::mt19937_64(mix_seed(seed, salt));
}

} // namespace codemine

#endif
