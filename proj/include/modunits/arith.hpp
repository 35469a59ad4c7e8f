#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace modunits {

// Certificate for x*s + y*t = d with d = gcd(x, y) > 0.
struct bezout_certificate {
    std::int64_t x = 0;
    std::int64_t y = 0;
    std::int64_t s = 0;
    std::int64_t t = 0;
    std::int64_t d = 0;
};

// Throws std::domain_error when both arguments are zero and
// std::overflow_error when the result (2^63) does not fit.
std::int64_t gcd(std::int64_t x, std::int64_t y);

bezout_certificate ext_gcd(std::int64_t x, std::int64_t y);

struct factor_entry {
    std::uint64_t prime = 0;
    std::uint32_t exponent = 0;
};

// Prime-power decomposition; primes strictly increasing, empty for 1.
struct factorization {
    std::uint64_t value = 0;
    std::vector<factor_entry> factors;
};

factorization factorize(std::uint64_t n);

// phi(n) by the product formula over the factorization; phi(1) = 1.
std::uint64_t totient(std::uint64_t n);

bool is_prime(std::uint64_t n);

// Exact primality over an inclusive window [lo, hi], one bit per value.
class prime_set {
public:
    prime_set(std::uint64_t lo, std::uint64_t hi, std::vector<std::uint64_t> bits)
        : lo_(lo), hi_(hi), bits_(std::move(bits)) {}

    std::uint64_t lo() const { return lo_; }
    std::uint64_t hi() const { return hi_; }

    bool contains(std::uint64_t n) const {
        if (n < lo_ || n > hi_) return false;
        std::uint64_t i = n - lo_;
        return (bits_[i >> 6] >> (i & 63)) & 1u;
    }

    std::uint64_t count() const;
    std::vector<std::uint64_t> to_vector() const;

private:
    std::uint64_t lo_;
    std::uint64_t hi_;
    std::vector<std::uint64_t> bits_;
};

// Segmented sieve; memory stays proportional to the window plus sqrt(hi).
prime_set sieve_range(std::uint64_t lo, std::uint64_t hi);

// Splits [lo, hi] into (coprime to m, non-coprime to m).
std::pair<std::vector<std::int64_t>, std::vector<std::int64_t>>
coprime_partition(std::uint64_t m, std::int64_t lo, std::int64_t hi);

}  // namespace modunits
