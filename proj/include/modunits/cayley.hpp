#pragma once

#include "modunits/unit_group.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace modunits {

enum class cell_kind : std::uint8_t { plain, identity, co_opposite };

// Full multiplication grid of a unit group, row-major over the element list.
struct cayley_table {
    unit_group group;
    std::vector<std::uint64_t> cells;
    std::vector<cell_kind> kinds;

    std::size_t size() const { return group.elements.size(); }
    std::uint64_t at(std::size_t row, std::size_t col) const {
        return cells[row * size() + col];
    }
};

cayley_table build_table(const unit_group& g);

// Plain-text PPM (P3). Identity cells are green, co-opposite cells orange,
// the rest a grayscale ramp by representative. Bit-identical across runs.
std::string render_table_ppm(const cayley_table& t, std::uint64_t cell_px);

// CSV with a header row and column of element reps and an empty corner cell.
std::string export_table_csv(const cayley_table& t);

// Strict inverse of export_table_csv; rejects anything it would not emit.
cayley_table parse_table_csv(const std::string& text);

// Marks the cells whose value lies in the generator's orbit.
struct orbit_mask {
    unit_group group;
    unit_class generator;
    std::vector<char> grid;  // row-major
};

orbit_mask build_orbit_mask(const cayley_table& t, const unit_class& generator);

// Two-color PPM: orbit cells black on white.
std::string render_orbit_mask(const orbit_mask& mask, std::uint64_t cell_px);

}  // namespace modunits
