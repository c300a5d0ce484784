#include "doctest.h"

#include <fstream>
#include <sstream>

#include "gdl/invariants.hpp"
#include "gdl/links.hpp"
#include "gdl/moves.hpp"
#include "gdl/pattern.hpp"

using namespace gdl;

namespace {

// The diagram that IS the first RR template with both signs positive:
// circle 1 carries endpoints "3 1" (heads of both arrows), circle 2 the
// tail of arrow 2->1, circle 3 the tail of arrow 4->3.
GaussDiagram rr_picture(int sign_a = 1, int sign_b = 1, bool reverse_first = false) {
    // arrow 0: endpoints 1 (head on comp 0, slot 1) and 2 (tail on comp 1)
    // arrow 1: endpoints 3 (head on comp 0, slot 0) and 4 (tail on comp 2)
    std::vector<std::vector<Endpoint>> comps(3);
    comps[0] = {Endpoint{1, true}, Endpoint{0, !reverse_first}};
    comps[1] = {Endpoint{0, reverse_first}};
    comps[2] = {Endpoint{1, false}};
    return GaussDiagram(comps, {sign_a, sign_b});
}

GaussDiagram random_diagram(int n, SplitMix64& rng) {
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

TEST_CASE("built-in pattern set parses and has all four families") {
    const PatternSet& ps = default_patterns();
    for (int f = 0; f < kFamilyCount; ++f) {
        CHECK(!ps.patterns[f].empty());
        for (const ArrowPattern& t : ps.patterns[f]) CHECK(t.arrows().size() == 2);
    }
    CHECK(ps.terms(Family::RR).size() == 3);
    CHECK(ps.terms(Family::LL).size() == 3);
    CHECK(ps.terms(Family::RL).size() == 3);
    CHECK(ps.terms(Family::LR).size() == 2);
}

TEST_CASE("shipped pattern data file is identical to the built-in text") {
    std::ifstream in(std::string(GDL_SOURCE_DIR) + "/data/patterns-v1.txt",
                     std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream ss;
    ss << in.rdbuf();
    CHECK(ss.str() == std::string(default_patterns_text()));
    // And it parses to a usable pattern set.
    const PatternSet ps = parse_patterns(ss.str());
    CHECK(eval_combination(fact_coefficients(), catalog("borromean"), ps) == 6);
}

TEST_CASE("pattern file errors are reported") {
    CHECK_THROWS_AS(parse_patterns(""), InvariantError);
    CHECK_THROWS_AS(parse_patterns("pattern RR\ncircle i: 1 2\n"), InvariantError);
    CHECK_THROWS_AS(parse_patterns("garbage line\n"), InvariantError);
}

TEST_CASE("subdiagram enumeration counts C(n,k)") {
    const GaussDiagram u3 = catalog("unlink", {3});
    // size is bounded by the arrow count (0 here).
    CHECK_THROWS_AS(enumerate_subdiagrams(u3, 2), InvariantError);
    CHECK(enumerate_subdiagrams(u3, 0).size() == 1);
    CHECK(enumerate_pairs(u3).empty());

    const GaussDiagram b = catalog("borromean");
    CHECK(enumerate_subdiagrams(b, 2).size() == 15);
    CHECK(enumerate_pairs(b).size() == 15);
    CHECK(enumerate_subdiagrams(b, 3).size() == 20);
    CHECK_THROWS_AS(enumerate_subdiagrams(b, -1), InvariantError);
    CHECK_THROWS_AS(enumerate_subdiagrams(b, 7), InvariantError);

    SplitMix64 rng(5);
    for (int n : {4, 9, 13}) {
        const GaussDiagram g = random_diagram(n, rng);
        CHECK(static_cast<int>(enumerate_pairs(g).size()) == n * (n - 1) / 2);
    }
}

TEST_CASE("match_pattern recognizes the RR picture") {
    const ArrowPattern& rr = default_patterns().terms(Family::RR)[0];
    const GaussDiagram pic = rr_picture();
    const SubdiagramSelection sel{0, 1};
    CHECK(match_pattern(rr, sel, pic, Perm3()));
    // Reversing one arrow breaks the match.
    CHECK(!match_pattern(rr, sel, rr_picture(1, 1, true), Perm3()));
    // Two arrows joining only two components match no pattern.
    const GaussDiagram two = parse_gauss_code("O1+ O2+\nU1+ U2+\n\n");
    for (int f = 0; f < kFamilyCount; ++f)
        for (const ArrowPattern& t : default_patterns().patterns[f])
            for (const Perm3& p : Perm3::all())
                CHECK(!match_pattern(t, SubdiagramSelection{0, 1}, two, p));
}

TEST_CASE("pairing multiplies crossing signs") {
    const ArrowPattern& rr = default_patterns().terms(Family::RR)[0];
    CHECK(pairing(rr, Perm3(), rr_picture(1, 1)) == 1);
    CHECK(pairing(rr, Perm3(), rr_picture(-1, 1)) == -1);
    CHECK(pairing(rr, Perm3(), rr_picture(-1, -1)) == 1);
    for (const Perm3& p : Perm3::all())
        CHECK(pairing(rr, p, catalog("unlink", {3})) == 0);
}

TEST_CASE("pairing is independent of arrow enumeration order") {
    // Same diagram with the two arrow indices swapped.
    std::vector<std::vector<Endpoint>> comps(3);
    comps[0] = {Endpoint{0, true}, Endpoint{1, true}};
    comps[1] = {Endpoint{0, false}};
    comps[2] = {Endpoint{1, false}};
    const GaussDiagram a(comps, {1, -1});
    std::vector<std::vector<Endpoint>> swapped(3);
    swapped[0] = {Endpoint{1, true}, Endpoint{0, true}};
    swapped[1] = {Endpoint{1, false}};
    swapped[2] = {Endpoint{0, false}};
    const GaussDiagram b(swapped, {-1, 1});
    CHECK(pairing_profile(default_patterns(), a) ==
          pairing_profile(default_patterns(), b));
}

TEST_CASE("coefficient file round-trips") {
    CoefficientVector c;
    c.at(Family::RR, 0) = 2;
    c.at(Family::LR, 5) = -7;
    c.lambda = 3;
    const CoefficientVector back = parse_coefficients(serialize_coefficients(c));
    CHECK(back.entries == c.entries);
    CHECK(back.lambda == c.lambda);

    const CoefficientVector p = parse_coefficients("# comment\nRR 123 2\nlambda 4\n");
    CHECK(p.at(Family::RR, 0) == 2);
    CHECK(p.lambda == 4);
    CHECK_THROWS_AS(parse_coefficients("RR 124 1\n"), InvariantError);
    CHECK_THROWS_AS(parse_coefficients("XX 123 1\n"), InvariantError);
}

TEST_CASE("eval_combination is linear in the coefficient vector") {
    SplitMix64 rng(31);
    for (int trial = 0; trial < 20; ++trial) {
        const GaussDiagram g = random_diagram(4 + int(rng.below(8)), rng);
        CoefficientVector c1, c2, sum;
        for (int i = 0; i < kCellCount; ++i) {
            c1.entries[i] = static_cast<long long>(rng.below(7)) - 3;
            c2.entries[i] = static_cast<long long>(rng.below(7)) - 3;
            sum.entries[i] = c1.entries[i] + c2.entries[i];
        }
        CHECK(eval_combination(sum, g) ==
              eval_combination(c1, g) + eval_combination(c2, g));
        CoefficientVector scaled = c1;
        scaled.lambda = 5;
        CHECK(eval_combination(scaled, g) == 5 * eval_combination(c1, g));
        CoefficientVector zero;
        CHECK(eval_combination(zero, g) == 0);
    }
}

TEST_CASE("eval_combination agrees with the profile-based overload") {
    SplitMix64 rng(77);
    const GaussDiagram g = random_diagram(10, rng);
    const auto prof = pairing_profile(default_patterns(), g);
    for (const CoefficientVector& c :
         {family_I_coefficients(), family_J_coefficients(), fact_coefficients()})
        CHECK(eval_combination(c, g) == eval_combination(c, prof));
}
