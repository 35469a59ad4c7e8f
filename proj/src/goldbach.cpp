#include "modunits/goldbach.hpp"

#include "modunits/arith.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace modunits {

namespace {

void require_even_target(std::uint64_t two_m) {
    if (two_m < 4 || two_m % 2 != 0)
        throw std::domain_error("goldbach target must be an even number >= 4, got " +
                                std::to_string(two_m));
}

}  // namespace

goldbach_report goldbach_pairs(std::uint64_t two_m) {
    require_even_target(two_m);
    std::uint64_t m = two_m / 2;

    goldbach_report report;
    report.even_target = two_m;

    prime_set primes = sieve_range(0, two_m);
    for (std::uint64_t x = 1; x <= m; x++) {
        if (std::gcd(x, two_m) == 1) report.candidate_pairs.emplace_back(x, two_m - x);
        if (primes.contains(x) && primes.contains(two_m - x))
            report.prime_pairs.emplace_back(x, two_m - x);
    }
    return report;
}

bool phi_primality_crosscheck(std::uint64_t two_m) {
    require_even_target(two_m);
    std::uint64_t m = two_m / 2;

    // Select pairs by phi(q) = q - 1 instead of sieving q; totient goes
    // through the factorization formula, so the two paths are independent.
    std::vector<std::pair<std::uint64_t, std::uint64_t>> selected;
    for (std::uint64_t p = 2; p <= m; p++) {
        if (!is_prime(p)) continue;
        std::uint64_t q = two_m - p;
        if (totient(q) == q - 1) selected.emplace_back(p, q);
    }
    return selected == goldbach_pairs(two_m).prime_pairs;
}

std::optional<std::uint64_t> bertrand_check(std::uint64_t m) {
    if (m <= 2) throw std::domain_error("bertrand witness needs m > 2");
    if (m > (std::uint64_t{1} << 39))
        throw std::domain_error("bertrand witness search above 2^39 is out of scope");
    prime_set window = sieve_range(m + 1, 2 * m - 1);
    for (std::uint64_t n = m + 1; n < 2 * m; n++)
        if (window.contains(n)) return n;
    return std::nullopt;
}

}  // namespace modunits
