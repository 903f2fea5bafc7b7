#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>

namespace pcr {

// Stable 64-bit FNV-1a. Used for artifact fingerprints, per-user seed
// derivation and split assignment; std::hash is not stable across runs
// or standard library implementations.
class Fnv1a {
public:
    static constexpr uint64_t kOffset = 0xcbf29ce484222325ull;
    static constexpr uint64_t kPrime = 0x100000001b3ull;

    void update(std::string_view bytes) {
        for (unsigned char c : bytes) {
            hash_ ^= static_cast<uint64_t>(c);
            hash_ *= kPrime;
        }
    }

    void update_u64(uint64_t v) {
        for (int i = 0; i < 8; ++i) {
            hash_ ^= (v >> (8 * i)) & 0xffull;
            hash_ *= kPrime;
        }
    }

    uint64_t digest() const { return hash_; }

private:
    uint64_t hash_ = kOffset;
};

inline uint64_t stable_hash(std::string_view bytes) {
    Fnv1a h;
    h.update(bytes);
    return h.digest();
}

inline uint64_t seed_for(uint64_t global_seed, std::string_view key) {
    Fnv1a h;
    h.update_u64(global_seed);
    h.update(key);
    return h.digest();
}

// Lowercase hex, fixed 16 chars.
std::string hex64(uint64_t v);

// FNV-1a over the whole file contents. Throws std::runtime_error if the
// file cannot be read.
uint64_t file_fingerprint(const std::filesystem::path& path);

}  // namespace pcr
