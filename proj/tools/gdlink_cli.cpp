// gdlink: command-line front end for the Gauss-diagram invariant library.
//
// Subcommands:
//   compute  invariant report (JSON) for Gauss codes from files/catalog/stdin
//   fuzz     random-move invariance fuzzing with minimized counterexamples
//   solve    sample move relations and print the invariant-coefficient basis
//   search   scan random diagrams for family-I / mu123 independence witnesses
//   ingest   convert 3D polylines or PD codes to Gauss codes
//
// Exit codes: 0 ok, 2 unparsable input, 3 invariance violation, 4 internal error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "gdl/diagram.hpp"
#include "gdl/ingest.hpp"
#include "gdl/invariants.hpp"
#include "gdl/links.hpp"
#include "gdl/moves.hpp"
#include "gdl/pattern.hpp"
#include "gdl/relations.hpp"

using json = nlohmann::ordered_json;
using namespace gdl;

namespace {

constexpr int kExitParse = 2;
constexpr int kExitViolation = 3;
constexpr int kExitInternal = 4;

std::string read_file(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open file: " + path, std::string::npos);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::uint64_t default_seed() {
    if (const char* env = std::getenv("GDLINK_SEED")) {
        return std::strtoull(env, nullptr, 10);
    }
    return 1;
}

// Integers beyond the 53-bit double-safe range are emitted as decimal strings.
json safe_int(long long v) {
    constexpr long long kSafe = (1ll << 53) - 1;
    if (v > kSafe || v < -kSafe) return std::to_string(v);
    return v;
}

// mu123 entry for a diagram; diagrams whose f(2,2,1,1) is not divisible by
// 6 (possible for non-realizable inputs) get an explicit "undefined"
// marker instead of an error: undefinedness is itself move-invariant.
json mu_json(const GaussDiagram& g) {
    try {
        const Residue m = milnor_mu123(g);
        return {{"value", safe_int(m.value)}, {"mod", safe_int(m.modulus)}};
    } catch (const InvariantError&) {
        return {{"undefined", true}};
    }
}

json report_json(const GaussDiagram& g) {
    json j;
    j["lk"] = {safe_int(linking_number(g, 0, 1)), safe_int(linking_number(g, 0, 2)),
               safe_int(linking_number(g, 1, 2))};
    j["familyI"] = safe_int(family_I(g));
    j["familyJ"] = safe_int(family_J(g));
    j["f2211"] = safe_int(eval_combination(fact_coefficients(), g));
    j["mu123"] = mu_json(g);
    return j;
}

GaussDiagram load_diagram(const std::string& source) {
    // "catalog:name[,p1,p2,...]" pulls from the built-in catalog; anything
    // else is a path (or "-") holding Gauss-code text.
    if (source.rfind("catalog:", 0) == 0) {
        std::string rest = source.substr(8);
        std::vector<long long> params;
        std::string name = rest;
        if (auto comma = rest.find(','); comma != std::string::npos) {
            name = rest.substr(0, comma);
            std::istringstream ps(rest.substr(comma + 1));
            std::string tok;
            while (std::getline(ps, tok, ',')) params.push_back(std::stoll(tok));
        }
        try {
            return catalog(name, params);
        } catch (const InvariantError& e) {
            // A bad catalog name or parameter list is an input error.
            throw ParseError(e.what(), std::string::npos);
        }
    }
    const std::string text = read_file(source);
    if (!text.empty() && text.front() == '{') return parse_gauss_json(text);
    return parse_gauss_code(text);
}

// --- compute -----------------------------------------------------------------

int run_compute(const std::vector<std::string>& inputs, const std::string& coeff_path,
                std::uint64_t seed) {
    json out;
    out["config"] = {{"subcommand", "compute"},
                     {"inputs", inputs},
                     {"coeffs", coeff_path},
                     {"seed", seed}};
    std::optional<CoefficientVector> coeffs;
    if (!coeff_path.empty()) coeffs = parse_coefficients(read_file(coeff_path));
    json reports = json::array();
    for (const auto& src : inputs) {
        const GaussDiagram g = load_diagram(src);
        if (g.component_count() != 3) {
            throw InvariantError("input '" + src + "' does not have 3 components");
        }
        json r = report_json(g);
        r["input"] = src;
        r["crossings"] = g.arrow_count();
        if (coeffs) r["f"] = safe_int(f_general(*coeffs, g));
        reports.push_back(std::move(r));
    }
    out["reports"] = std::move(reports);
    std::cout << out.dump(2) << "\n";
    return 0;
}

// --- fuzz --------------------------------------------------------------------

struct Tracked {
    std::string name;
    bool check_I, check_J, check_mu, check_lk;
};

json snapshot(const GaussDiagram& g, const Tracked& t) {
    json j;
    if (t.check_lk) {
        j["lk"] = {safe_int(linking_number(g, 0, 1)), safe_int(linking_number(g, 0, 2)),
                   safe_int(linking_number(g, 1, 2))};
    }
    if (t.check_I) j["familyI"] = safe_int(family_I(g));
    if (t.check_J) j["familyJ"] = safe_int(family_J(g));
    if (t.check_mu) j["mu123"] = mu_json(g);
    return j;
}

int run_fuzz(int walks, int steps, std::uint64_t seed, int max_crossings,
             const std::string& invariant, const std::vector<std::string>& starts) {
    Tracked t{invariant,
              invariant == "familyI" || invariant == "all",
              invariant == "familyJ" || invariant == "all",
              invariant == "mu123" || invariant == "all",
              invariant == "lk" || invariant == "all"};
    std::vector<GaussDiagram> bases;
    if (starts.empty()) {
        for (const auto& [name, g] : catalog_corpus()) {
            (void)name;
            if (g.component_count() == 3) bases.push_back(g);
        }
    } else {
        for (const auto& s : starts) bases.push_back(load_diagram(s));
    }
    WalkOptions opts;
    opts.max_crossings = max_crossings;
    SplitMix64 seeder(seed);
    for (int w = 0; w < walks; ++w) {
        GaussDiagram g =
            w % 3 == 2
                ? random_link_diagram(3, max_crossings, seeder.next(), DiagramMode::Spliced)
                : bases[w % bases.size()];
        SplitMix64 rng(seeder.next());
        json ref = snapshot(g, t);
        for (int s = 0; s < steps; ++s) {
            auto site = random_move(g, rng, opts);
            if (!site) break;
            GaussDiagram h = apply_move(g, *site);
            json now = snapshot(h, t);
            if (now != ref) {
                // The violating step alone is the minimized counterexample.
                std::cerr << "invariance violation at walk " << w << " step " << s
                          << " (" << describe(*site) << ")\n"
                          << "# before (" << ref.dump() << ")\n"
                          << serialize(g) << "# after (" << now.dump() << ")\n"
                          << serialize(h);
                return kExitViolation;
            }
            g = std::move(h);
        }
    }
    json out;
    out["config"] = {{"subcommand", "fuzz"},   {"walks", walks},
                     {"steps", steps},         {"seed", seed},
                     {"maxCrossings", max_crossings}, {"invariant", invariant}};
    out["violations"] = 0;
    std::cout << out.dump(2) << "\n";
    return 0;
}

// --- solve -------------------------------------------------------------------

int run_solve(int samples, std::uint64_t seed, const std::vector<int>& mix) {
    SampleOptions opts;
    if (!mix.empty()) {
        if (mix.size() != 6) throw ParseError("--mix needs 6 weights", std::string::npos);
        for (int i = 0; i < 6; ++i) opts.mix[i] = mix[i];
    }
    const auto rows = sample_relations(seed, samples, opts);
    std::array<int, 6> per_kind{};
    for (const auto& r : rows) per_kind[static_cast<int>(r.kind)]++;
    const auto basis = integer_nullspace(rows);

    std::cout << "# rows: " << rows.size() << "\n";
    for (int k = 0; k < 6; ++k) {
        std::cout << "# rows[" << tag_name(static_cast<MoveTag>(k)) << "]: " << per_kind[k]
                  << "\n";
    }
    std::cout << "# nullspace dimension: " << basis.size() << "\n";
    for (std::size_t b = 0; b < basis.size(); ++b) {
        std::cout << "# basis vector " << b + 1 << "\n";
        for (int f = 0; f < kFamilyCount; ++f) {
            for (int s = 0; s < 6; ++s) {
                const BigInt& v = basis[b][cell_index(static_cast<Family>(f), s)];
                if (v == 0) continue;
                std::cout << family_name(static_cast<Family>(f)) << " "
                          << Perm3::all()[s].to_digits() << " " << v << "\n";
            }
        }
    }
    const bool has_I = check_membership(family_I_coefficients(), basis);
    const bool has_J = check_membership(family_J_coefficients(), basis);
    std::cout << "# familyI in span: " << (has_I ? "yes" : "no") << "\n";
    std::cout << "# familyJ in span: " << (has_J ? "yes" : "no") << "\n";
    return 0;
}

// --- search ------------------------------------------------------------------

int run_search(int bound, long budget, std::uint64_t seed, int max_hits) {
    const auto hits = search_independent(bound, budget, seed, max_hits);
    json out;
    out["config"] = {{"subcommand", "search"},
                     {"bound", bound},
                     {"budget", budget},
                     {"seed", seed},
                     {"maxHits", max_hits}};
    json arr = json::array();
    for (const auto& h : hits) {
        arr.push_back({{"gauss", serialize(h.diagram)},
                       {"familyI", safe_int(h.family_I)},
                       {"mu123",
                        {{"value", safe_int(h.mu123.value)}, {"mod", safe_int(h.mu123.modulus)}}}});
    }
    out["hits"] = std::move(arr);
    std::cout << out.dump(2) << "\n";
    return 0;
}

// --- ingest ------------------------------------------------------------------

int run_ingest(const std::string& input, const std::string& format,
               const std::vector<double>& direction, std::uint64_t seed) {
    const std::string text = read_file(input);
    GaussDiagram g;
    if (format == "pd") {
        g = pd_to_gauss(parse_pd(text));
    } else {
        Polyline3 p = format == "json" ? parse_polyline_json(text) : parse_polyline_xyz(text);
        if (!direction.empty()) {
            if (direction.size() != 3) {
                throw ParseError("--direction needs 3 numbers", std::string::npos);
            }
            g = project(p, Vec3{direction[0], direction[1], direction[2]}, seed);
        } else {
            g = project(p, seed);
        }
    }
    std::cout << serialize(g);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Gauss-diagram invariants for ordered 3-component links"};
    app.require_subcommand(1);
    std::uint64_t seed = default_seed();
    app.add_option("--seed", seed, "RNG seed (default from GDLINK_SEED env var, else 1)")
        ->capture_default_str();

    auto* compute = app.add_subcommand("compute", "Invariant reports for input diagrams");
    std::vector<std::string> inputs;
    std::string coeff_path;
    compute->add_option("inputs", inputs,
                        "Gauss-code files, '-' for stdin, or catalog:NAME[,p...]")
        ->required();
    compute->add_option("--coeffs", coeff_path, "coefficient file for an extra f value");

    auto* fuzz = app.add_subcommand("fuzz", "Random-move invariance fuzzing");
    int walks = 100, steps = 50, max_crossings = 30;
    std::string invariant = "all";
    std::vector<std::string> starts;
    fuzz->add_option("--walks", walks)->capture_default_str();
    fuzz->add_option("--steps", steps)->capture_default_str();
    fuzz->add_option("--max-crossings", max_crossings)->capture_default_str();
    fuzz->add_option("--invariant", invariant, "familyI|familyJ|mu123|lk|all")
        ->check(CLI::IsMember({"familyI", "familyJ", "mu123", "lk", "all"}))
        ->capture_default_str();
    fuzz->add_option("--input", starts, "starting diagrams (default: built-in corpus)");

    auto* solve = app.add_subcommand("solve", "Move-relation nullspace basis");
    int samples = 500;
    std::vector<int> mix;
    solve->add_option("--samples", samples)->capture_default_str();
    solve->add_option("--mix", mix, "6 per-move-kind sampling weights");

    auto* search = app.add_subcommand("search", "Independence witness search");
    int bound = 20, max_hits = 16;
    long budget = 100000;
    search->add_option("--bound", bound, "max crossings")->capture_default_str();
    search->add_option("--budget", budget, "candidate count")->capture_default_str();
    search->add_option("--max-hits", max_hits)->capture_default_str();

    auto* ingest = app.add_subcommand("ingest", "Polylines / PD codes to Gauss codes");
    std::string in_path, format = "xyz";
    std::vector<double> direction;
    ingest->add_option("--input", in_path)->required();
    ingest->add_option("--format", format, "xyz|json|pd")
        ->check(CLI::IsMember({"xyz", "json", "pd"}))
        ->capture_default_str();
    ingest->add_option("--direction", direction, "projection direction (3 numbers)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*compute) return run_compute(inputs, coeff_path, seed);
        if (*fuzz) return run_fuzz(walks, steps, seed, max_crossings, invariant, starts);
        if (*solve) return run_solve(samples, seed, mix);
        if (*search) return run_search(bound, budget, seed, max_hits);
        if (*ingest) return run_ingest(in_path, format, direction, seed);
    } catch (const ParseError& e) {
        std::cerr << "parse error";
        if (e.position != std::string::npos) std::cerr << " at byte " << e.position;
        std::cerr << ": " << e.what() << "\n";
        return kExitParse;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const InvariantError& e) {
        std::cerr << "internal contract breach: " << e.what() << "\n";
        return kExitInternal;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInternal;
    }
    return 0;
}
