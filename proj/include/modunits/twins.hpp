#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace modunits {

struct twin_pair {
    std::uint64_t p = 0;
    std::uint64_t q = 0;  // q = p + 2, both prime

    friend bool operator==(const twin_pair&, const twin_pair&) = default;
};

// All twin pairs with p + 2 <= n, ascending.
std::vector<twin_pair> twin_pairs_upto(std::uint64_t n);

// Consecutive coprimes to 2m at distance exactly 2 where at least one
// member is composite; the distance-2 pairs that are not twin primes.
std::vector<std::pair<std::uint64_t, std::uint64_t>> near_miss_pairs(std::uint64_t two_m);

}  // namespace modunits
