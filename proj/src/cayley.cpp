#include "modunits/cayley.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace modunits {

namespace {

constexpr std::uint64_t max_image_side = 16384;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

cell_kind classify(std::uint64_t value, std::uint64_t m) {
    if (value == 1) return cell_kind::identity;
    if (value == m - 1) return cell_kind::co_opposite;
    return cell_kind::plain;
}

void append_triplet(std::string& out, const cayley_table& t, std::size_t idx) {
    switch (t.kinds[idx]) {
        case cell_kind::identity:
            out += "0 170 0";
            return;
        case cell_kind::co_opposite:
            out += "255 140 0";
            return;
        case cell_kind::plain: {
            std::uint64_t m = t.group.modulus;
            std::uint64_t ramp = static_cast<std::uint64_t>(
                static_cast<unsigned __int128>(255) * t.cells[idx] / m);
            std::string g = std::to_string(255 - ramp);
            out += g;
            out += ' ';
            out += g;
            out += ' ';
            out += g;
            return;
        }
    }
}

// Strict unsigned decimal: digits only, no sign, no leading zeros.
std::uint64_t parse_u64(const std::string& field) {
    if (field.empty()) throw std::runtime_error("csv parse: empty numeric field");
    std::uint64_t value = 0;
    for (char c : field) {
        if (c < '0' || c > '9')
            throw std::runtime_error("csv parse: non-decimal character in '" + field + "'");
        std::uint64_t digit = static_cast<std::uint64_t>(c - '0');
        if (value > (UINT64_MAX - digit) / 10)
            throw std::runtime_error("csv parse: value out of range in '" + field + "'");
        value = value * 10 + digit;
    }
    if (field.size() > 1 && field[0] == '0')
        throw std::runtime_error("csv parse: leading zero in '" + field + "'");
    return value;
}

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> fields;
    std::size_t start = 0;
    while (true) {
        std::size_t comma = line.find(',', start);
        if (comma == std::string::npos) {
            fields.push_back(line.substr(start));
            return fields;
        }
        fields.push_back(line.substr(start, comma - start));
        start = comma + 1;
    }
}

}  // namespace

cayley_table build_table(const unit_group& g) {
    cayley_table t;
    t.group = g;
    std::size_t n = g.elements.size();
    t.cells.resize(n * n);
    t.kinds.resize(n * n);
    for (std::size_t r = 0; r < n; r++) {
        for (std::size_t c = 0; c < n; c++) {
            std::uint64_t v = mul_mod(g.elements[r], g.elements[c], g.modulus);
            t.cells[r * n + c] = v;
            t.kinds[r * n + c] = classify(v, g.modulus);
        }
    }
    return t;
}

std::string render_table_ppm(const cayley_table& t, std::uint64_t cell_px) {
    if (cell_px == 0) throw std::domain_error("cell size must be at least 1 pixel");
    std::size_t n = t.size();
    if (cell_px > max_image_side / n)
        throw std::domain_error("image dimension overflow: side would exceed " +
                                std::to_string(max_image_side) + " pixels");
    std::uint64_t side = n * cell_px;

    std::string out = "P3\n" + std::to_string(side) + " " + std::to_string(side) + "\n255\n";
    for (std::size_t r = 0; r < n; r++) {
        std::string row;
        for (std::size_t c = 0; c < n; c++) {
            for (std::uint64_t k = 0; k < cell_px; k++) {
                if (!row.empty()) row += ' ';
                append_triplet(row, t, r * n + c);
            }
        }
        row += '\n';
        for (std::uint64_t k = 0; k < cell_px; k++) out += row;
    }
    return out;
}

std::string export_table_csv(const cayley_table& t) {
    std::size_t n = t.size();
    std::string out;
    for (std::uint64_t e : t.group.elements) {
        out += ',';
        out += std::to_string(e);
    }
    out += '\n';
    for (std::size_t r = 0; r < n; r++) {
        out += std::to_string(t.group.elements[r]);
        for (std::size_t c = 0; c < n; c++) {
            out += ',';
            out += std::to_string(t.at(r, c));
        }
        out += '\n';
    }
    return out;
}

cayley_table parse_table_csv(const std::string& text) {
    if (text.empty() || text.back() != '\n')
        throw std::runtime_error("csv parse: missing trailing newline");
    if (text.find('\r') != std::string::npos)
        throw std::runtime_error("csv parse: carriage return not allowed");

    std::vector<std::string> lines;
    std::size_t start = 0;
    while (start < text.size()) {
        std::size_t nl = text.find('\n', start);
        lines.push_back(text.substr(start, nl - start));
        start = nl + 1;
    }
    if (lines.size() < 2) throw std::runtime_error("csv parse: no data rows");

    std::vector<std::string> header = split_fields(lines[0]);
    if (header.size() < 2 || !header[0].empty())
        throw std::runtime_error("csv parse: header must start with an empty corner cell");

    std::vector<std::uint64_t> elements;
    for (std::size_t i = 1; i < header.size(); i++) elements.push_back(parse_u64(header[i]));
    for (std::size_t i = 1; i < elements.size(); i++)
        if (elements[i - 1] >= elements[i])
            throw std::runtime_error("csv parse: header elements not strictly increasing");

    // The largest unit mod m is always m-1, so the modulus is recoverable.
    std::uint64_t m = elements.back() + 1;
    unit_group expected = build_group(m);
    if (elements != expected.elements)
        throw std::runtime_error("csv parse: header is not the unit group of modulus " +
                                 std::to_string(m));

    std::size_t n = elements.size();
    if (lines.size() != n + 1)
        throw std::runtime_error("csv parse: expected " + std::to_string(n) +
                                 " data rows, got " + std::to_string(lines.size() - 1));

    cayley_table t;
    t.group = expected;
    t.cells.reserve(n * n);
    for (std::size_t r = 0; r < n; r++) {
        std::vector<std::string> fields = split_fields(lines[r + 1]);
        if (fields.size() != n + 1)
            throw std::runtime_error("csv parse: row " + std::to_string(r + 1) +
                                     " has " + std::to_string(fields.size()) + " fields");
        if (parse_u64(fields[0]) != elements[r])
            throw std::runtime_error("csv parse: row label mismatch at row " +
                                     std::to_string(r + 1));
        for (std::size_t c = 0; c < n; c++) {
            std::uint64_t v = parse_u64(fields[c + 1]);
            if (v != mul_mod(elements[r], elements[c], m))
                throw std::runtime_error("csv parse: cell value " + std::to_string(v) +
                                         " is not the product of its row and column");
            t.cells.push_back(v);
        }
    }
    t.kinds.reserve(n * n);
    for (std::uint64_t v : t.cells) t.kinds.push_back(classify(v, m));
    return t;
}

orbit_mask build_orbit_mask(const cayley_table& t, const unit_class& generator) {
    if (generator.modulus != t.group.modulus)
        throw std::domain_error("generator modulus does not match the table");

    std::vector<std::uint64_t> members = cyclic_subgroup(generator).members;
    std::sort(members.begin(), members.end());

    orbit_mask mask;
    mask.group = t.group;
    mask.generator = generator;
    mask.grid.reserve(t.cells.size());
    for (std::uint64_t v : t.cells)
        mask.grid.push_back(std::binary_search(members.begin(), members.end(), v) ? 1 : 0);
    return mask;
}

std::string render_orbit_mask(const orbit_mask& mask, std::uint64_t cell_px) {
    if (cell_px == 0) throw std::domain_error("cell size must be at least 1 pixel");
    std::size_t n = mask.group.elements.size();
    if (cell_px > max_image_side / n)
        throw std::domain_error("image dimension overflow: side would exceed " +
                                std::to_string(max_image_side) + " pixels");
    std::uint64_t side = n * cell_px;

    std::string out = "P3\n" + std::to_string(side) + " " + std::to_string(side) + "\n255\n";
    for (std::size_t r = 0; r < n; r++) {
        std::string row;
        for (std::size_t c = 0; c < n; c++) {
            for (std::uint64_t k = 0; k < cell_px; k++) {
                if (!row.empty()) row += ' ';
                row += mask.grid[r * n + c] ? "0 0 0" : "255 255 255";
            }
        }
        row += '\n';
        for (std::uint64_t k = 0; k < cell_px; k++) out += row;
    }
    return out;
}

}  // namespace modunits
