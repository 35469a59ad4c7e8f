#include "modunits/twins.hpp"

#include "modunits/arith.hpp"
#include "modunits/unit_group.hpp"

#include <stdexcept>
#include <string>

namespace modunits {

std::vector<twin_pair> twin_pairs_upto(std::uint64_t n) {
    if (n < 3) throw std::domain_error("twin pair bound must be at least 3");
    std::vector<twin_pair> out;
    if (n < 5) return out;
    prime_set primes = sieve_range(0, n);
    for (std::uint64_t p = 3; p + 2 <= n; p += 2)
        if (primes.contains(p) && primes.contains(p + 2)) out.push_back({p, p + 2});
    return out;
}

std::vector<std::pair<std::uint64_t, std::uint64_t>> near_miss_pairs(std::uint64_t two_m) {
    if (two_m < 6 || two_m % 2 != 0)
        throw std::domain_error("near-miss scan needs an even number >= 6, got " +
                                std::to_string(two_m));

    unit_group g = build_group(two_m);
    prime_set primes = sieve_range(0, two_m);
    auto composite = [&](std::uint64_t v) { return v > 1 && !primes.contains(v); };

    std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
    for (std::size_t i = 0; i + 1 < g.elements.size(); i++) {
        std::uint64_t a = g.elements[i], b = g.elements[i + 1];
        if (b - a == 2 && (composite(a) || composite(b))) out.emplace_back(a, b);
    }
    return out;
}

}  // namespace modunits
