#include "doctest.h"

#include "gdl/diagram.hpp"
#include "gdl/invariants.hpp"
#include "gdl/links.hpp"
#include "gdl/moves.hpp"

using namespace gdl;

namespace {

long long lk_sum(const GaussDiagram& g) {
    long long s = 0;
    for (int a = 0; a < g.component_count(); ++a)
        for (int b = a + 1; b < g.component_count(); ++b)
            s = s * 10007 + linking_number(g, a, b);
    return s;
}

}  // namespace

TEST_CASE("R1 add then remove round-trips") {
    const GaussDiagram g = catalog("borromean");
    for (int comp = 0; comp < 3; ++comp) {
        for (int sign : {+1, -1}) {
            for (bool hf : {false, true}) {
                const GaussDiagram h = apply_move(g, R1Add{comp, 1, sign, hf});
                CHECK(h.arrow_count() == g.arrow_count() + 1);
                // Find the new kink and remove it.
                bool removed = false;
                for (const MoveSite& s : applicable_moves(h)) {
                    if (tag_of(s) != MoveTag::R1Remove) continue;
                    const GaussDiagram back = apply_move(h, s);
                    if (back == g) removed = true;
                }
                CHECK(removed);
            }
        }
    }
}

TEST_CASE("R2 add then remove round-trips") {
    const GaussDiagram g = catalog("borromean");
    const GaussDiagram h =
        apply_move(g, R2Add{0, 1, 1, 2, /*a_over=*/true, /*parallel=*/false, +1});
    CHECK(h.arrow_count() == g.arrow_count() + 2);
    bool removed = false;
    for (const MoveSite& s : applicable_moves(h)) {
        if (tag_of(s) != MoveTag::R2Remove) continue;
        if (apply_move(h, s) == g) removed = true;
    }
    CHECK(removed);
}

TEST_CASE("moves preserve linking numbers and realizability parity") {
    SplitMix64 rng(99);
    GaussDiagram g = catalog("borromean");
    const long long lk0 = lk_sum(g);
    WalkOptions opts;
    opts.max_crossings = 24;
    for (int step = 0; step < 160; ++step) {
        auto site = random_move(g, rng, opts);
        REQUIRE(site.has_value());
        g = apply_move(g, *site);
        CHECK(lk_sum(g) == lk0);
    }
}

TEST_CASE("random_walk is deterministic in the seed and stepwise-adjacent") {
    const GaussDiagram g = catalog("chain", {1, 0, 0});
    const auto w1 = random_walk(g, 25, 1234);
    const auto w2 = random_walk(g, 25, 1234);
    REQUIRE(w1.size() == 26);
    CHECK(w1.front() == g);
    for (std::size_t i = 0; i < w1.size(); ++i) CHECK(w1[i] == w2[i]);
    const auto w3 = random_walk(g, 25, 1235);
    bool differs = false;
    for (std::size_t i = 0; i < w3.size(); ++i) differs = differs || !(w1[i] == w3[i]);
    CHECK(differs);
}

TEST_CASE("every applicable site applies and is reported applicable") {
    SplitMix64 rng(5);
    GaussDiagram g = catalog("borromean");
    g = random_walk(g, 12, 777, {})[12];
    const auto sites = applicable_moves(g);
    CHECK(!sites.empty());
    for (const MoveSite& s : sites) {
        CHECK(site_applicable(g, s));
        const GaussDiagram h = apply_move(g, s);
        // Applying a move yields a valid diagram with the same components.
        CHECK(h.component_count() == g.component_count());
        // Round-trip parse/serialize stays intact mid-walk.
        CHECK(parse_gauss_code(serialize(h)) == h);
    }
}

TEST_CASE("stale sites are rejected") {
    const GaussDiagram g = catalog("borromean");
    const GaussDiagram h = apply_move(g, R1Add{0, 0, 1, false});
    // A site recorded on h may go stale on g.
    CHECK_THROWS_AS(apply_move(g, R1Remove{g.arrow_count() + 5}), InvariantError);
}

TEST_CASE("base point move rotates one component") {
    const GaussDiagram g = catalog("borromean");
    const GaussDiagram h = apply_move(g, BasePointMove{0, true});
    CHECK(h.arrow_count() == g.arrow_count());
    const GaussDiagram back = apply_move(h, BasePointMove{0, false});
    CHECK(back == g);
    // Full rotation returns to the start.
    GaussDiagram r = g;
    for (std::size_t i = 0; i < g.component(0).size(); ++i)
        r = apply_move(r, BasePointMove{0, true});
    CHECK(r == g);
}

TEST_CASE("tag names are stable") {
    CHECK(tag_name(MoveTag::R1Add) == "R1_add");
    CHECK(tag_name(MoveTag::R3) == "R3");
    CHECK(tag_name(MoveTag::BasePoint) == "base_point");
}
