#pragma once

#include <cstdint>
#include <string>

namespace modunits {

// Persistent frontier of a verification sweep. The file format is four
// lines; `started_at` is in-memory bookkeeping and never persisted.
struct verification_checkpoint {
    std::uint64_t verified_upto = 0;  // every even 2m in [4, verified_upto] confirmed
    std::uint64_t min_pairs = 0;      // smallest pair count seen so far
    std::uint64_t min_pairs_at = 0;   // the 2m attaining it
    std::string started_at;
    std::string updated;              // ISO-8601 UTC, refreshed on save
    int schema_version = 1;
};

// Strict parser; refuses unknown schema versions and malformed lines.
verification_checkpoint load_checkpoint(const std::string& path);

// Stamps `updated`, writes to a temp file beside `path`, then renames.
void save_checkpoint(verification_checkpoint& c, const std::string& path);

struct sweep_result {
    std::uint64_t verified_upto = 0;
    std::uint64_t min_pairs = 0;
    std::uint64_t min_pairs_at = 0;
    std::uint64_t counterexample = 0;  // 0 when every target decomposed
};

inline constexpr std::uint64_t default_stride = std::uint64_t{1} << 16;

// Confirms every even 2m in [from, to] has a prime pair, or stops at the
// first counterexample. Pass an empty checkpoint path to run in memory.
// Results are identical for any worker count and stride.
sweep_result verify_range(std::uint64_t from, std::uint64_t to,
                          const std::string& checkpoint_path = std::string(),
                          unsigned workers = 1,
                          std::uint64_t stride = default_stride);

}  // namespace modunits
