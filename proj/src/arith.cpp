#include "modunits/arith.hpp"

#include <bit>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace modunits {

namespace {

std::uint64_t magnitude(std::int64_t v) {
    std::uint64_t u = static_cast<std::uint64_t>(v);
    return v < 0 ? 0 - u : u;
}

std::uint64_t isqrt(std::uint64_t n) {
    std::uint64_t r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && r > n / r) r--;
    while (r + 1 <= n / (r + 1)) r++;
    return r;
}

}  // namespace

std::int64_t gcd(std::int64_t x, std::int64_t y) {
    if (x == 0 && y == 0) throw std::domain_error("gcd(0, 0) is undefined");
    std::uint64_t d = std::gcd(magnitude(x), magnitude(y));
    if (d > static_cast<std::uint64_t>(INT64_MAX))
        throw std::overflow_error("gcd result does not fit a signed 64-bit integer");
    return static_cast<std::int64_t>(d);
}

bezout_certificate ext_gcd(std::int64_t x, std::int64_t y) {
    if (x == 0 && y == 0) throw std::domain_error("ext_gcd(0, 0) is undefined");

    // Euclid on magnitudes, coefficients tracked wide; signs restored at the end.
    std::uint64_t r0 = magnitude(x), r1 = magnitude(y);
    __int128 s0 = 1, s1 = 0, t0 = 0, t1 = 1;
    while (r1 != 0) {
        std::uint64_t q = r0 / r1;
        std::uint64_t r2 = r0 - q * r1;
        r0 = r1;
        r1 = r2;
        __int128 s2 = s0 - static_cast<__int128>(q) * s1;
        s0 = s1;
        s1 = s2;
        __int128 t2 = t0 - static_cast<__int128>(q) * t1;
        t0 = t1;
        t1 = t2;
    }
    if (x < 0) s0 = -s0;
    if (y < 0) t0 = -t0;

    if (r0 > static_cast<std::uint64_t>(INT64_MAX))
        throw std::overflow_error("gcd result does not fit a signed 64-bit integer");
    if (s0 > INT64_MAX || s0 < INT64_MIN || t0 > INT64_MAX || t0 < INT64_MIN)
        throw std::overflow_error("bezout coefficient does not fit a signed 64-bit integer");

    bezout_certificate c;
    c.x = x;
    c.y = y;
    c.s = static_cast<std::int64_t>(s0);
    c.t = static_cast<std::int64_t>(t0);
    c.d = static_cast<std::int64_t>(r0);
    return c;
}

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    if (n < 4) return true;
    if (n % 2 == 0 || n % 3 == 0) return false;
    for (std::uint64_t f = 5; f <= n / f; f += 6) {
        if (n % f == 0 || n % (f + 2) == 0) return false;
    }
    return true;
}

factorization factorize(std::uint64_t n) {
    if (n == 0) throw std::domain_error("factorize(0) is undefined");
    factorization result;
    result.value = n;

    auto strip = [&](std::uint64_t p) {
        if (n % p != 0) return;
        std::uint32_t e = 0;
        while (n % p == 0) {
            n /= p;
            e++;
        }
        result.factors.push_back({p, e});
    };

    strip(2);
    strip(3);
    for (std::uint64_t f = 5; f <= n / f; f += 6) {
        strip(f);
        strip(f + 2);
    }
    if (n > 1) result.factors.push_back({n, 1});
    return result;
}

std::uint64_t totient(std::uint64_t n) {
    if (n == 0) throw std::domain_error("totient(0) is undefined");
    std::uint64_t phi = 1;
    for (const auto& [p, e] : factorize(n).factors) {
        std::uint64_t pk = p - 1;
        for (std::uint32_t i = 1; i < e; i++) pk *= p;
        phi *= pk;
    }
    return phi;
}

std::uint64_t prime_set::count() const {
    std::uint64_t c = 0;
    for (std::uint64_t w : bits_) c += static_cast<std::uint64_t>(std::popcount(w));
    return c;
}

std::vector<std::uint64_t> prime_set::to_vector() const {
    std::vector<std::uint64_t> out;
    for (std::uint64_t n = lo_;; n++) {
        if (contains(n)) out.push_back(n);
        if (n == hi_) break;
    }
    return out;
}

prime_set sieve_range(std::uint64_t lo, std::uint64_t hi) {
    if (lo > hi) throw std::domain_error("sieve_range: lo > hi");
    if (hi > (std::uint64_t{1} << 40))
        throw std::domain_error("sieve_range: bound above 2^40 is out of scope");
    std::uint64_t span = hi - lo + 1;
    if (span > (std::uint64_t{1} << 32))
        throw std::domain_error("sieve_range: window wider than 2^32");

    std::vector<char> composite(span, 0);
    if (lo == 0) composite[0] = 1;
    if (lo <= 1 && hi >= 1) composite[1 - lo] = 1;

    // Base primes up to sqrt(hi) by a plain sieve.
    std::uint64_t root = isqrt(hi);
    std::vector<char> base(root + 1, 1);
    base[0] = 0;
    if (root >= 1) base[1] = 0;
    for (std::uint64_t i = 2; i * i <= root; i++)
        if (base[i])
            for (std::uint64_t j = i * i; j <= root; j += i) base[j] = 0;

    for (std::uint64_t p = 2; p <= root; p++) {
        if (!base[p]) continue;
        std::uint64_t start = (lo + p - 1) / p * p;
        if (start < p * p) start = p * p;
        for (std::uint64_t j = start; j <= hi; j += p) composite[j - lo] = 1;
    }

    std::vector<std::uint64_t> bits((span + 63) / 64, 0);
    for (std::uint64_t i = 0; i < span; i++) {
        if (!composite[i] && lo + i >= 2) bits[i >> 6] |= std::uint64_t{1} << (i & 63);
    }
    return prime_set(lo, hi, std::move(bits));
}

std::pair<std::vector<std::int64_t>, std::vector<std::int64_t>>
coprime_partition(std::uint64_t m, std::int64_t lo, std::int64_t hi) {
    if (m == 0) throw std::domain_error("coprime_partition: modulus must be positive");
    if (lo > hi) throw std::domain_error("coprime_partition: lo > hi");

    std::vector<std::int64_t> coprime, rest;
    for (std::int64_t n = lo;; n++) {
        if (std::gcd(magnitude(n), m) == 1)
            coprime.push_back(n);
        else
            rest.push_back(n);
        if (n == hi) break;
    }
    return {std::move(coprime), std::move(rest)};
}

}  // namespace modunits
