#include "modunits/arith.hpp"
#include "modunits/cayley.hpp"
#include "modunits/goldbach.hpp"
#include "modunits/sweep.hpp"
#include "modunits/twins.hpp"
#include "modunits/unit_group.hpp"

#include "CLI11.hpp"

#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>

namespace {

using namespace modunits;

// Numbers are decimal only; hex and other bases are rejected up front.
const CLI::Validator decimal_only(
    [](std::string& s) -> std::string {
        if (s.empty()) return std::string("number is empty");
        for (char c : s)
            if (c < '0' || c > '9')
                return "only decimal digits are accepted, got '" + s + "'";
        return std::string();
    },
    "DECIMAL");

void write_output(const std::string& data, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << data;
        std::cout.flush();
        if (!std::cout) throw std::runtime_error("failed writing to standard output");
        return;
    }
    std::ofstream out(out_path, std::ios::binary | std::ios::trunc);
    out << data;
    out.flush();
    if (!out) throw std::runtime_error("cannot write " + out_path);
}

struct cli_state {
    std::uint64_t m = 0;
    std::uint64_t cell_px = 1;
    std::uint64_t from = 0;
    std::uint64_t to = 0;
    std::uint64_t upto = 0;
    std::uint64_t generator = 0;
    std::uint64_t workers = 1;
    std::uint64_t stride = default_stride;
    std::string format;
    std::string out_path;
    std::string checkpoint;
    std::string render_path;
    bool list_elements = false;
    bool show_candidates = false;
    CLI::Option* generator_opt = nullptr;
};

int run_totient(const cli_state& s) {
    std::cout << totient(s.m) << "\n";
    return 0;
}

int run_group(const cli_state& s) {
    unit_group g = build_group(s.m);
    if (s.list_elements) {
        std::string line;
        for (std::uint64_t e : g.elements) {
            if (!line.empty()) line += ' ';
            line += std::to_string(e);
        }
        std::cout << line << "\n";
    } else {
        std::cout << g.elements.size() << "\n";
    }
    return 0;
}

int run_cayley(const cli_state& s) {
    cayley_table t = build_table(build_group(s.m));
    std::string data =
        s.format == "csv" ? export_table_csv(t) : render_table_ppm(t, s.cell_px);
    write_output(data, s.out_path);
    return 0;
}

int run_goldbach(const cli_state& s) {
    goldbach_report report = goldbach_pairs(s.m);
    for (const auto& [p, q] : report.prime_pairs) std::cout << p << " " << q << "\n";
    if (s.show_candidates) {
        for (const auto& [x, y] : report.candidate_pairs) {
            bool qualifies = false;
            for (const auto& [p, q] : report.prime_pairs)
                if (p == x) {
                    qualifies = true;
                    break;
                }
            if (!qualifies) std::cout << "candidate " << x << " " << y << "\n";
        }
    }
    return 0;
}

int run_verify(const cli_state& s) {
    sweep_result r = verify_range(s.from, s.to, s.checkpoint,
                                  static_cast<unsigned>(s.workers), s.stride);
    if (r.counterexample != 0) {
        std::cout << "counterexample=" << r.counterexample << "\n";
        std::cerr << "ERROR 3: even number " << r.counterexample
                  << " has no prime pair\n";
        return 3;
    }
    std::cout << "verified_upto=" << r.verified_upto << "\n"
              << "min_pairs=" << r.min_pairs << "@" << r.min_pairs_at << "\n";
    return 0;
}

int run_twins(const cli_state& s) {
    for (const twin_pair& t : twin_pairs_upto(s.upto))
        std::cout << t.p << " " << t.q << "\n";
    return 0;
}

int run_orbits(const cli_state& s) {
    unit_group g = build_group(s.m);
    if (s.generator_opt->count() == 0) {
        for (std::uint64_t e : g.elements)
            std::cout << e << " " << element_order(unit_class{s.m, e}) << "\n";
        return 0;
    }
    unit_class gen = make_class(s.m, s.generator);
    orbit o = cyclic_subgroup(gen);
    std::string line;
    for (std::uint64_t e : o.members) {
        if (!line.empty()) line += ' ';
        line += std::to_string(e);
    }
    std::cout << line << "\n";
    if (!s.render_path.empty()) {
        orbit_mask mask = build_orbit_mask(build_table(g), gen);
        write_output(render_orbit_mask(mask, s.cell_px), s.render_path);
    }
    return 0;
}

int run_bertrand(const cli_state& s) {
    if (auto witness = bertrand_check(s.m)) {
        std::cout << *witness << "\n";
        return 0;
    }
    std::cout << "counterexample=" << s.m << "\n";
    std::cerr << "ERROR 3: no prime strictly between " << s.m << " and " << 2 * s.m
              << "\n";
    return 3;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"toolkit for the multiplicative group of units mod m: group and "
                 "orbit inspection, Cayley table rendering, prime pair and twin "
                 "prime enumeration, checkpointed range verification"};
    app.require_subcommand(1);
    cli_state s;

    CLI::App* totient_cmd = app.add_subcommand("totient", "Euler phi of m");
    totient_cmd->add_option("m", s.m, "positive integer")
        ->required()
        ->check(decimal_only);

    CLI::App* group_cmd = app.add_subcommand("group", "order or elements of the unit group mod m");
    group_cmd->add_option("m", s.m, "modulus, at least 2")->required()->check(decimal_only);
    group_cmd->add_flag("--list", s.list_elements, "print the elements instead of the order");

    CLI::App* cayley_cmd = app.add_subcommand("cayley", "multiplication table of the unit group mod m");
    cayley_cmd->add_option("m", s.m, "modulus, at least 2")->required()->check(decimal_only);
    cayley_cmd->add_option("--format", s.format, "output format")
        ->required()
        ->check(CLI::IsMember({"csv", "ppm"}));
    cayley_cmd->add_option("--out", s.out_path, "output file (default: standard output)");
    cayley_cmd->add_option("--cell-px", s.cell_px, "pixels per cell for ppm output")
        ->check(decimal_only)
        ->default_val(std::uint64_t{1});

    CLI::App* goldbach_cmd = app.add_subcommand("goldbach", "prime pairs summing to an even number");
    goldbach_cmd->add_option("target", s.m, "even number, at least 4")
        ->required()
        ->check(decimal_only);
    goldbach_cmd->add_flag("--candidates", s.show_candidates,
                           "also list coprime pairs that are not prime pairs");

    CLI::App* verify_cmd = app.add_subcommand(
        "verify", "confirm every even number in a range has a prime pair");
    verify_cmd->add_option("--from", s.from, "even start, at least 4")
        ->required()
        ->check(decimal_only);
    verify_cmd->add_option("--to", s.to, "even end")->required()->check(decimal_only);
    verify_cmd->add_option("--checkpoint", s.checkpoint,
                           "checkpoint file to create or resume from");
    verify_cmd->add_option("--workers", s.workers, "worker thread count")
        ->check(decimal_only)
        ->default_val(std::uint64_t{1});
    verify_cmd->add_option("--stride", s.stride, "even targets per checkpoint interval")
        ->check(decimal_only)
        ->default_val(default_stride);

    CLI::App* twins_cmd = app.add_subcommand("twins", "prime pairs at distance two");
    twins_cmd->add_option("--upto", s.upto, "inclusive bound for the larger prime")
        ->required()
        ->check(decimal_only);

    CLI::App* orbits_cmd = app.add_subcommand("orbits", "element orders, or one cyclic orbit");
    orbits_cmd->add_option("m", s.m, "modulus, at least 2")->required()->check(decimal_only);
    s.generator_opt = orbits_cmd->add_option("--generator", s.generator,
                                             "list the orbit of this element")
                          ->check(decimal_only);
    orbits_cmd->add_option("--render", s.render_path, "write the orbit mask image here")
        ->needs(s.generator_opt);

    CLI::App* bertrand_cmd = app.add_subcommand("bertrand", "smallest prime strictly between m and 2m");
    bertrand_cmd->add_option("m", s.m, "integer greater than 2")
        ->required()
        ->check(decimal_only);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "ERROR 2: " << e.what() << "\n";
        return 2;
    }

    try {
        if (app.got_subcommand(totient_cmd)) return run_totient(s);
        if (app.got_subcommand(group_cmd)) return run_group(s);
        if (app.got_subcommand(cayley_cmd)) return run_cayley(s);
        if (app.got_subcommand(goldbach_cmd)) return run_goldbach(s);
        if (app.got_subcommand(verify_cmd)) return run_verify(s);
        if (app.got_subcommand(twins_cmd)) return run_twins(s);
        if (app.got_subcommand(orbits_cmd)) return run_orbits(s);
        if (app.got_subcommand(bertrand_cmd)) return run_bertrand(s);
        std::cerr << "ERROR 2: no subcommand selected\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "ERROR 2: " << e.what() << "\n";
        return 2;
    } catch (const std::overflow_error& e) {
        std::cerr << "ERROR 2: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "ERROR 4: " << e.what() << "\n";
        return 4;
    }
}
