#include "doctest.h"

#include <algorithm>

#include "gdl/invariants.hpp"
#include "gdl/links.hpp"
#include "gdl/moves.hpp"
#include "gdl/relations.hpp"

using namespace gdl;

namespace {

bool all_zero(const RelationRow& r) {
    return std::all_of(r.delta.begin(), r.delta.end(),
                       [](long long v) { return v == 0; });
}

long long dot(const CoefficientVector& c, const RelationRow& r) {
    long long d = 0;
    for (int i = 0; i < kCellCount; ++i) d += c.entries[i] * r.delta[i];
    return d;
}

}  // namespace

TEST_CASE("R1 kinks never change any pairing") {
    // The kink arrow is intra-component; every pattern spans three circles.
    GaussDiagram g = catalog("borromean");
    for (const MoveSite& site : applicable_moves(g)) {
        if (tag_of(site) != MoveTag::R1Add) continue;
        const RelationRow row = relation_row(g, apply_move(g, site), MoveTag::R1Add);
        CHECK(all_zero(row));
    }
}

TEST_CASE("base-point move on an arrow-free component gives a zero row") {
    const GaussDiagram g = catalog("hopf_unknot");
    const BasePointMove site{2, true};
    const RelationRow row =
        relation_row(g, apply_move(g, MoveSite{site}), MoveTag::BasePoint);
    CHECK(all_zero(row));
}

TEST_CASE("sampling is deterministic and returns the requested count") {
    const auto a = sample_relations(2024, 120);
    const auto b = sample_relations(2024, 120);
    CHECK(a == b);
    CHECK(static_cast<int>(a.size()) == 120);
    bool some_nonzero = false;
    for (const RelationRow& r : a) some_nonzero = some_nonzero || !all_zero(r);
    CHECK(some_nonzero);
}

TEST_CASE("nullspace of nothing is everything; of everything is nothing") {
    CHECK(integer_nullspace({}).size() == kCellCount);
    std::vector<RelationRow> units;
    for (int i = 0; i < kCellCount; ++i) {
        RelationRow r;
        r.delta[i] = 1;
        units.push_back(r);
    }
    CHECK(integer_nullspace(units).empty());
}

TEST_CASE("sampled nullspace contains the invariant vectors") {
    const auto rows = sample_relations(7, 300);
    const auto basis = integer_nullspace(rows);
    CHECK(!basis.empty());
    CHECK(check_membership(family_I_coefficients(), basis));
    CHECK(check_membership(family_J_coefficients(), basis));

    CoefficientVector rr_only;
    rr_only.at(Family::RR, 0) = 1;
    CHECK(!check_membership(rr_only, basis));
    CHECK(check_membership(CoefficientVector{}, basis));

    // Soundness: every basis vector annihilates every sampled row.
    for (const auto& v : basis)
        for (const RelationRow& r : rows) {
            BigInt d = 0;
            for (int i = 0; i < kCellCount; ++i) d += v[i] * r.delta[i];
            CHECK(d == 0);
        }

    // The invariant vectors annihilate the rows directly as well.
    for (const RelationRow& r : rows) {
        CHECK(dot(family_I_coefficients(), r) == 0);
        CHECK(dot(family_J_coefficients(), r) == 0);
    }
}

TEST_CASE("adding rows never enlarges the nullspace") {
    const auto rows = sample_relations(99, 200);
    std::vector<RelationRow> half(rows.begin(), rows.begin() + 100);
    const auto small = integer_nullspace(rows);
    const auto big = integer_nullspace(half);
    CHECK(small.size() <= big.size());
    // Everything invariant for all rows is invariant for the first half.
    for (const auto& v : small) {
        CoefficientVector c;
        for (int i = 0; i < kCellCount; ++i)
            c.entries[i] = static_cast<long long>(v[i]);
        CHECK(check_membership(c, big));
    }
}
