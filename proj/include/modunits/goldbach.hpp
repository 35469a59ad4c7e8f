#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace modunits {

// Decomposition data for one even target 2m.
struct goldbach_report {
    std::uint64_t even_target = 0;
    // (x, 2m-x) with gcd(x, 2m) = 1 and 1 <= x <= m, ascending in x.
    std::vector<std::pair<std::uint64_t, std::uint64_t>> candidate_pairs;
    // (p, q) with p + q = 2m, both prime, p <= q, ascending in p.
    std::vector<std::pair<std::uint64_t, std::uint64_t>> prime_pairs;
};

goldbach_report goldbach_pairs(std::uint64_t two_m);

// True when the totient-based primality criterion selects exactly the
// prime pairs found by the sieve path. Test oracle, quadratic cost.
bool phi_primality_crosscheck(std::uint64_t two_m);

// Smallest prime strictly between m and 2m, or nullopt if none exists.
std::optional<std::uint64_t> bertrand_check(std::uint64_t m);

}  // namespace modunits
