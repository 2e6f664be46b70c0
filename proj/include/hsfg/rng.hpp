#pragma once

#include <cstdint>
#include <string_view>

namespace hsfg {

// Generator pinned by the artifact: splitmix64 streams with digits taken by
// a 128-bit multiply-high. Reproducible across platforms; substreams come
// from hashing (seed, index) so work can be split without coordination.
inline constexpr std::string_view kGeneratorId = "splitmix64-mulhi/1";

inline uint64_t mix64(uint64_t z) {
	z += 0x9E3779B97F4A7C15ULL;
	z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
	z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
	return z ^ (z >> 31);
}

struct SplitMix64 {
	uint64_t state = 0;
	explicit SplitMix64(uint64_t seed) : state(seed) {}
	uint64_t next() {
		state += 0x9E3779B97F4A7C15ULL;
		uint64_t z = state;
		z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
		z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
		return z ^ (z >> 31);
	}
};

inline uint64_t substream_seed(uint64_t master, uint64_t index) {
	return mix64(master ^ mix64(index + 1));
}

// Uniform digit in {0..n-1} without rejection (multiply-high range map).
inline int uniform_digit(SplitMix64& rng, int n) {
	return static_cast<int>((static_cast<unsigned __int128>(rng.next()) *
	                         static_cast<unsigned __int128>(n)) >> 64);
}

}  // namespace hsfg
