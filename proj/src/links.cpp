#include "gdl/links.hpp"

#include <algorithm>

#include "gdl/moves.hpp"
#include "gdl/pattern.hpp"

namespace gdl {

namespace {

// The (2, 2a) torus-style clasp band between two circles: |a| pairs of
// equal-sign crossings, lk = a.
void append_band(std::vector<std::string>& comps, int x, int y, long long a,
                 int& next_label) {
    const char sign = a >= 0 ? '+' : '-';
    const long long n = 2 * std::abs(a);
    std::string cx, cy;
    for (long long i = 0; i < n; ++i) {
        const int label = next_label++;
        const bool x_over = i % 2 == 0;
        cx += (x_over ? "O" : "U") + std::to_string(label) + sign + " ";
        cy += (x_over ? "U" : "O") + std::to_string(label) + sign + " ";
    }
    comps[x] += cx;
    comps[y] += cy;
}

GaussDiagram from_component_strings(const std::vector<std::string>& comps) {
    std::string code;
    for (const auto& c : comps) code += c + "\n";
    return parse_gauss_code(code);
}

}  // namespace

GaussDiagram catalog(const std::string& name, const std::vector<long long>& params) {
    if (name == "unlink") {
        const long long m = params.empty() ? 3 : params[0];
        if (m < 1) throw InvariantError("unlink needs at least one component");
        return GaussDiagram(std::vector<std::vector<Endpoint>>(m), {});
    }
    if (name == "hopf" || name == "hopf_unknot") {
        const long long s = params.empty() ? 1 : params[0];
        if (s != 1 && s != -1) throw InvariantError("hopf sign must be +1 or -1");
        std::vector<std::string> comps(name == "hopf" ? 2 : 3);
        int next_label = 1;
        append_band(comps, 0, 1, s, next_label);
        return from_component_strings(comps);
    }
    if (name == "chain") {
        if (params.size() != 3)
            throw InvariantError("chain needs parameters (lk12, lk13, lk23)");
        std::vector<std::string> comps(3);
        int next_label = 1;
        append_band(comps, 0, 1, params[0], next_label);
        append_band(comps, 0, 2, params[1], next_label);
        append_band(comps, 1, 2, params[2], next_label);
        return from_component_strings(comps);
    }
    if (name == "borromean") {
        // Closure of the 3-braid (s1 s2^-1)^3; all pairwise linking numbers
        // vanish by sign cancellation and mu123 = +-1.
        return parse_gauss_code(
            "O1+ U2- O4- U5+\n"
            "U1+ O3+ U4- O6-\n"
            "O2- U3+ O5+ U6-\n");
    }
    if (name == "L2m+" || name == "L2m-") {
        throw InvariantError(
            "catalog entry " + name +
            " is unavailable: its defining diagrams could not be transcribed");
    }
    throw InvariantError("unknown catalog name: " + name);
}

std::vector<std::pair<std::string, GaussDiagram>> catalog_corpus() {
    std::vector<std::pair<std::string, GaussDiagram>> out;
    out.emplace_back("unlink3", catalog("unlink", {3}));
    out.emplace_back("hopf_unknot+", catalog("hopf_unknot", {1}));
    out.emplace_back("hopf_unknot-", catalog("hopf_unknot", {-1}));
    out.emplace_back("chain_1_0_0", catalog("chain", {1, 0, 0}));
    out.emplace_back("chain_2_4_6", catalog("chain", {2, 4, 6}));
    out.emplace_back("chain_1_1_1", catalog("chain", {1, 1, 1}));
    out.emplace_back("borromean", catalog("borromean"));
    out.emplace_back("borromean_mirror", mirror(catalog("borromean")));
    for (int c = 0; c < 3; ++c)
        out.emplace_back("borromean_rev" + std::to_string(c + 1),
                         reverse_component(catalog("borromean"), c));
    return out;
}

namespace {

// Three-component splice pieces with all pairwise linking numbers zero.
const std::vector<GaussDiagram>& splice_pieces() {
    static const std::vector<GaussDiagram> pieces = [] {
        std::vector<GaussDiagram> out;
        const GaussDiagram b = catalog("borromean");
        out.push_back(b);
        out.push_back(mirror(b));
        for (int c = 0; c < 3; ++c) {
            out.push_back(reverse_component(b, c));
            out.push_back(mirror(reverse_component(b, c)));
        }
        for (const Perm3& p : Perm3::all())
            if (!(p == Perm3())) out.push_back(permute_components(b, p));
        return out;
    }();
    return pieces;
}

}  // namespace

GaussDiagram random_link_diagram(int components, int crossings, std::uint64_t seed,
                                 DiagramMode mode) {
    if (components < 1) throw InvariantError("need at least one component");
    if (crossings < 0) throw InvariantError("crossings must be >= 0");
    SplitMix64 rng(seed ^ 0x5bd1e995ULL);
    GaussDiagram g(std::vector<std::vector<Endpoint>>(components), {});
    if (mode == DiagramMode::Spliced && components == 3 && crossings >= 6) {
        const auto& pieces = splice_pieces();
        const int max_pieces = crossings / 6;
        const int count = 1 + static_cast<int>(rng.below(
                                  static_cast<std::uint64_t>(max_pieces)));
        for (int i = 0; i < count; ++i)
            g = splice(g, pieces[rng.below(pieces.size())]);
    }
    if (crossings == 0) return g;
    WalkOptions opts;
    opts.max_crossings = crossings;
    opts.mix = {2, 1, 3, 1, 3, 2};
    const int steps =
        2 + static_cast<int>(rng.below(static_cast<std::uint64_t>(2 * crossings + 2)));
    auto walk = random_walk(g, steps, rng.next(), opts);
    return walk.back();
}

namespace {

// Random general Gauss diagram (not necessarily realizable) on three
// circles with n arrows: uniform endpoint components, uniform slot
// shuffle, uniform signs. family_I vanishes identically on realizable
// diagrams and on every diagram whose pairwise linking numbers are all
// zero, so independence witnesses have to be drawn from this wider class.
GaussDiagram random_general_diagram(int n, SplitMix64& rng) {
    std::vector<std::vector<std::pair<int, bool>>> slots(3);
    std::vector<int> signs;
    for (int a = 0; a < n; ++a) {
        slots[rng.below(3)].push_back({a, false});
        slots[rng.below(3)].push_back({a, true});
        signs.push_back(rng.below(2) ? 1 : -1);
    }
    for (auto& s : slots)
        for (std::size_t i = s.size(); i > 1; --i) std::swap(s[i - 1], s[rng.below(i)]);
    std::vector<std::vector<Endpoint>> comps(3);
    for (int c = 0; c < 3; ++c)
        for (const auto& [a, h] : slots[c]) comps[c].push_back(Endpoint{a, h});
    return GaussDiagram(std::move(comps), std::move(signs));
}

}  // namespace

std::vector<SearchHit> search_independent(int bound, long budget, std::uint64_t seed,
                                          std::size_t max_hits) {
    if (bound < 1) throw InvariantError("search bound must be >= 1");
    std::vector<SearchHit> hits;
    if (budget <= 0) return hits;
    SplitMix64 rng(seed ^ 0x2545f4914f6cdd1dULL);
    const auto& ps = default_patterns();
    const CoefficientVector fi = family_I_coefficients();
    const CoefficientVector fj = family_J_coefficients();
    const CoefficientVector fact = fact_coefficients();
    for (long i = 0; i < budget && hits.size() < max_hits; ++i) {
        const int n = std::min(bound, 5 + static_cast<int>(rng.below(9)));
        GaussDiagram g = random_general_diagram(n, rng);
        try {
            const long long gcd = linking_gcd(g);
            const auto profile = pairing_profile(ps, g);
            const long long f2211 = eval_combination(fact, profile);
            if (f2211 % 6 != 0) continue;  // mu123 undefined here
            if (Residue::make(f2211 / 6, gcd).value != 0) continue;
            const long long f1 = eval_combination(fi, profile);
            if (f1 == 0) continue;
            // Keep only hits whose predicate is stable under 100 further
            // random moves (mu123 can become undefined along general-
            // diagram walks; family_I and family_J never change).
            const long long j0 = eval_combination(fj, profile);
            SplitMix64 walk_rng(rng.next());
            GaussDiagram h = g;
            WalkOptions opts;
            opts.max_crossings = std::max(bound, n + 10);
            bool stable = true;
            for (int s = 0; s < 100 && stable; ++s) {
                auto site = random_move(h, walk_rng, opts);
                if (!site) { stable = false; break; }
                h = apply_move(h, *site);
                const auto ph = pairing_profile(ps, h);
                const long long fh = eval_combination(fact, ph);
                stable = eval_combination(fi, ph) == f1 &&
                         eval_combination(fj, ph) == j0 && linking_gcd(h) == gcd &&
                         fh % 6 == 0 && Residue::make(fh / 6, gcd).value == 0;
            }
            if (!stable) continue;
            hits.push_back(SearchHit{g, f1, Residue::make(f2211 / 6, gcd)});
        } catch (const InvariantError&) {
            continue;  // odd pairwise crossing sum etc.; not a candidate
        }
    }
    return hits;
}

}  // namespace gdl
