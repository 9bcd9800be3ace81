#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace revdetect {

// SHA-256 of `data`, lowercase hex.
std::string sha256_hex(std::string_view data);

// First 16 hex chars of sha256; used for compact fingerprints and cache keys.
std::string short_hash(std::string_view data);

// SplitMix64 step; the project-wide way to derive independent RNG streams
// from a user seed. stream k of seed s is mt19937_64(splitmix64(splitmix64(s) + k)).
std::uint64_t splitmix64(std::uint64_t x);

}  // namespace revdetect
