#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace drp {

// Stateless mixer used to derive independent sub-seeds from one root seed.
std::uint64_t splitmix64(std::uint64_t x);

// Deterministic per-component seed: mixes the root seed with a tag string.
std::uint64_t derive_seed(std::uint64_t root, std::string_view tag);

// Uniform double in [0, 1) built from the top 53 bits of the stream, so the
// mapping does not depend on the standard library's distribution internals.
inline double canonical_unit(std::mt19937_64& gen) {
  return static_cast<double>(gen() >> 11) * 0x1.0p-53;
}

inline double uniform_real(std::mt19937_64& gen, double lo, double hi) {
  return lo + (hi - lo) * canonical_unit(gen);
}

}  // namespace drp
