#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace rirformer {

using Rng = std::mt19937_64;

// Seeds are derived as splitmix64(master ⊕ fnv1a(component) ⊕ index·golden)
// so every consumer gets an independent, order-free stream.
std::uint64_t fnv1a64(std::string_view text);
std::uint64_t splitmix64(std::uint64_t x);
std::uint64_t derive_seed(std::uint64_t master, std::string_view component,
                          std::uint64_t index = 0);
Rng derive_rng(std::uint64_t master, std::string_view component,
               std::uint64_t index = 0);

double uniform(Rng& rng, double lo, double hi);

}  // namespace rirformer
