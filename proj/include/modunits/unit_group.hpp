#pragma once

#include <cstdint>
#include <vector>

namespace modunits {

// Canonical coprime residue class: rep in [1, m-1] with gcd(rep, m) = 1.
struct unit_class {
    std::uint64_t modulus = 0;
    std::uint64_t rep = 0;

    friend bool operator==(const unit_class&, const unit_class&) = default;
};

// Reduces value mod m and validates coprimality.
unit_class make_class(std::uint64_t m, std::uint64_t value);

// The multiplicative group of units mod m, elements as ascending canonical reps.
struct unit_group {
    std::uint64_t modulus = 0;
    std::vector<std::uint64_t> elements;

    friend bool operator==(const unit_group&, const unit_group&) = default;
};

unit_group build_group(std::uint64_t m);

unit_class mul(const unit_class& a, const unit_class& b);
unit_class inverse(const unit_class& a);

// x -> m - x, equivalently multiplication by the class of m-1.
unit_class co_opposite(const unit_class& a);

// Total order by comparing canonical reps.
bool order_leq(const unit_class& a, const unit_class& b);

// Least k >= 1 with a^k = 1.
std::uint64_t element_order(const unit_class& a);

struct orbit {
    unit_class generator;
    std::vector<std::uint64_t> members;  // reps of g^1, g^2, ..., g^k = 1
    std::uint64_t order = 0;
};

orbit cyclic_subgroup(const unit_class& g);

// Congruence mod m, defined only on arguments coprime to m.
bool congruent(std::int64_t x, std::int64_t y, std::uint64_t m);

}  // namespace modunits
