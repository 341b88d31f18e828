#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <optional>
#include <regex>
#include <string>
#include <vector>

#include "pmdlab/cli.hpp"

namespace {

pmdlab::GeometryKind parse_geometry(const std::string& s) {
    return s == "pg" ? pmdlab::GeometryKind::pg : pmdlab::GeometryKind::ag;
}

pmdlab::Target parse_target(const std::string& s) {
    return s == "hyperplanes" ? pmdlab::Target::hyperplanes : pmdlab::Target::circuits;
}

pmdlab::Algorithm parse_algorithm(const std::string& s) {
    if (s == "constructive") return pmdlab::Algorithm::constructive;
    if (s == "brute") return pmdlab::Algorithm::brute;
    return pmdlab::Algorithm::both;
}

pmdlab::OutputFormat parse_format(const std::string& s) {
    if (s == "json") return pmdlab::OutputFormat::json;
    if (s == "csv") return pmdlab::OutputFormat::csv;
    return pmdlab::OutputFormat::text;
}

/// "q=2..5 r=2..4" (one or two tokens, either order).
pmdlab::SweepRange parse_sweep(const std::vector<std::string>& tokens) {
    std::string text;
    for (const auto& t : tokens) text += t + " ";
    pmdlab::SweepRange range;
    static const std::regex part(R"(([qr])=(\d+)\.\.(\d+))");
    bool have_q = false, have_r = false;
    for (auto it = std::sregex_iterator(text.begin(), text.end(), part);
         it != std::sregex_iterator(); ++it) {
        int lo = std::stoi((*it)[2].str());
        int hi = std::stoi((*it)[3].str());
        if ((*it)[1].str() == "q") {
            range.q_lo = lo;
            range.q_hi = hi;
            have_q = true;
        } else {
            range.r_lo = lo;
            range.r_hi = hi;
            have_r = true;
        }
    }
    if (!have_q || !have_r)
        throw CLI::ValidationError("--sweep", "expected the form q=LO..HI r=LO..HI");
    return range;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact enumeration toolkit for finite projective and affine geometries"};
    app.require_subcommand(1);

    std::string geometry, target, basis = "canonical", format = "text";
    std::string algorithm = "constructive";
    int q = 0, r = 0;
    std::uint64_t seed = 0;
    std::vector<int> permutation;
    std::vector<std::string> sweep_tokens;
    std::string permutations_mode, builtin, profile_file;

    auto* count = app.add_subcommand("count", "count a target family and cross-check the formulas");
    count->add_option("--geometry", geometry, "pg or ag")
        ->required()
        ->check(CLI::IsMember({"pg", "ag"}));
    count->add_option("--q", q, "field order")->required();
    count->add_option("--r", r, "matroid rank")->required();
    count->add_option("--target", target, "hyperplanes or circuits")
        ->required()
        ->check(CLI::IsMember({"hyperplanes", "circuits"}));
    count->add_option("--algorithm", algorithm, "constructive, brute, or both")
        ->check(CLI::IsMember({"constructive", "brute", "both"}));
    count->add_option("--basis", basis, "canonical, random, or a JSON coordinate list");
    count->add_option("--seed", seed, "seed for --basis random");
    count->add_option("--format", format, "text, json, or csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));

    auto* enumerate = app.add_subcommand("enumerate", "list the target family member by member");
    enumerate->add_option("--geometry", geometry, "pg or ag")
        ->required()
        ->check(CLI::IsMember({"pg", "ag"}));
    enumerate->add_option("--q", q, "field order")->required();
    enumerate->add_option("--r", r, "matroid rank")->required();
    enumerate->add_option("--target", target, "hyperplanes or circuits")
        ->required()
        ->check(CLI::IsMember({"hyperplanes", "circuits"}));
    enumerate->add_option("--algorithm", algorithm, "constructive or brute")
        ->check(CLI::IsMember({"constructive", "brute"}));
    enumerate->add_option("--basis", basis, "canonical, random, or a JSON coordinate list");
    enumerate->add_option("--seed", seed, "seed for --basis random");
    enumerate->add_option("--permutation", permutation, "basis reordering, e.g. 2,0,1")
        ->delimiter(',');
    enumerate->add_option("--format", format, "text, json, or csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));

    auto* verify = app.add_subcommand(
        "verify", "run constructive, brute-force, and formula routes and compare");
    verify->add_option("--geometry", geometry, "pg or ag (default: both)")
        ->check(CLI::IsMember({"pg", "ag"}));
    verify->add_option("--q", q, "field order");
    verify->add_option("--r", r, "matroid rank");
    verify->add_option("--target", target, "hyperplanes or circuits (default: both)")
        ->check(CLI::IsMember({"hyperplanes", "circuits"}));
    verify->add_option("--sweep", sweep_tokens, "grid of cells, e.g. q=2..5 r=2..4")
        ->expected(1, 2);
    verify->add_option("--permutations", permutations_mode,
                       "all: check every basis order yields the same set")
        ->check(CLI::IsMember({"all"}));
    verify->add_option("--basis", basis, "canonical, random, or a JSON coordinate list");
    verify->add_option("--seed", seed, "seed for --basis random");
    verify->add_option("--format", format, "text, json, or csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));

    auto* profile = app.add_subcommand("profile", "print and validate a counting profile");
    profile->add_option("--builtin", builtin, "pg, ag, or free")
        ->check(CLI::IsMember({"pg", "ag", "free"}));
    profile->add_option("--q", q, "field order (pg and ag)");
    profile->add_option("--r", r, "matroid rank");
    profile->add_option("--file", profile_file, "JSON profile file");
    profile->add_option("--format", format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    pmdlab::RunConfig config;
    if (app.got_subcommand(count)) config.command = pmdlab::Command::count;
    if (app.got_subcommand(enumerate)) config.command = pmdlab::Command::enumerate;
    if (app.got_subcommand(verify)) config.command = pmdlab::Command::verify;
    if (app.got_subcommand(profile)) config.command = pmdlab::Command::profile;

    if (!geometry.empty()) config.geometry = parse_geometry(geometry);
    if (!target.empty()) config.target = parse_target(target);
    config.q = q;
    config.r = r;
    config.algorithm = parse_algorithm(algorithm);
    config.format = parse_format(format);
    config.seed = seed;
    if (!permutation.empty()) config.permutation = permutation;
    config.all_permutations = permutations_mode == "all";
    config.builtin = builtin;
    config.profile_file = profile_file;

    if (basis == "canonical") {
        config.basis_source = pmdlab::BasisSource::canonical;
    } else if (basis == "random") {
        config.basis_source = pmdlab::BasisSource::random_seeded;
    } else {
        config.basis_source = pmdlab::BasisSource::explicit_list;
        config.explicit_basis = basis;
    }

    if (!sweep_tokens.empty()) {
        try {
            config.sweep = parse_sweep(sweep_tokens);
        } catch (const CLI::ParseError& e) {
            int code = app.exit(e);
            return code == 0 ? 0 : 2;
        }
    }

    if (const char* cap_text = std::getenv("PMDLAB_ORACLE_CAP")) {
        char* end = nullptr;
        long long cap = std::strtoll(cap_text, &end, 10);
        if (end == cap_text || *end != '\0' || cap <= 0) {
            std::cerr << "error: PMDLAB_ORACLE_CAP must be a positive integer\n";
            return 2;
        }
        config.oracle_cap = cap;
    }

    return pmdlab::run(config, std::cout, std::cerr);
}
