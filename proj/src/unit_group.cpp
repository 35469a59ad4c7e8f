#include "modunits/unit_group.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace modunits {

namespace {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t magnitude(std::int64_t v) {
    std::uint64_t u = static_cast<std::uint64_t>(v);
    return v < 0 ? 0 - u : u;
}

void require_same_modulus(const unit_class& a, const unit_class& b) {
    if (a.modulus != b.modulus)
        throw std::domain_error("unit classes have different moduli (" +
                                std::to_string(a.modulus) + " vs " +
                                std::to_string(b.modulus) + ")");
}

}  // namespace

unit_class make_class(std::uint64_t m, std::uint64_t value) {
    if (m < 2) throw std::domain_error("unit class modulus must be at least 2");
    std::uint64_t rep = value % m;
    if (std::gcd(rep, m) != 1)
        throw std::domain_error(std::to_string(value) + " is not coprime to " +
                                std::to_string(m));
    return unit_class{m, rep};
}

unit_group build_group(std::uint64_t m) {
    if (m < 2) throw std::domain_error("unit group modulus must be at least 2");
    unit_group g;
    g.modulus = m;
    for (std::uint64_t s = 1; s < m; s++)
        if (std::gcd(s, m) == 1) g.elements.push_back(s);
    return g;
}

unit_class mul(const unit_class& a, const unit_class& b) {
    require_same_modulus(a, b);
    return unit_class{a.modulus, mul_mod(a.rep, b.rep, a.modulus)};
}

unit_class inverse(const unit_class& a) {
    // Bezout on (rep, m); rep is coprime to m, so r ends at 1.
    std::uint64_t r0 = a.rep, r1 = a.modulus;
    __int128 s0 = 1, s1 = 0;
    while (r1 != 0) {
        std::uint64_t q = r0 / r1;
        std::uint64_t r2 = r0 - q * r1;
        r0 = r1;
        r1 = r2;
        __int128 s2 = s0 - static_cast<__int128>(q) * s1;
        s0 = s1;
        s1 = s2;
    }
    __int128 m = a.modulus;
    __int128 v = s0 % m;
    if (v < 0) v += m;
    return unit_class{a.modulus, static_cast<std::uint64_t>(v)};
}

unit_class co_opposite(const unit_class& a) {
    return unit_class{a.modulus, a.modulus - a.rep};
}

bool order_leq(const unit_class& a, const unit_class& b) {
    require_same_modulus(a, b);
    return a.rep <= b.rep;
}

std::uint64_t element_order(const unit_class& a) {
    std::uint64_t k = 1;
    unit_class x = a;
    while (x.rep != 1) {
        x = mul(x, a);
        k++;
    }
    return k;
}

orbit cyclic_subgroup(const unit_class& g) {
    orbit o;
    o.generator = g;
    unit_class x = g;
    o.members.push_back(x.rep);
    while (x.rep != 1) {
        x = mul(x, g);
        o.members.push_back(x.rep);
    }
    o.order = o.members.size();
    return o;
}

bool congruent(std::int64_t x, std::int64_t y, std::uint64_t m) {
    if (m == 0) throw std::domain_error("congruence modulus must be positive");
    if (std::gcd(magnitude(x), m) != 1)
        throw std::domain_error(std::to_string(x) + " is not coprime to " +
                                std::to_string(m));
    if (std::gcd(magnitude(y), m) != 1)
        throw std::domain_error(std::to_string(y) + " is not coprime to " +
                                std::to_string(m));
    __int128 diff = static_cast<__int128>(x) - y;
    return diff % static_cast<__int128>(m) == 0;
}

}  // namespace modunits
