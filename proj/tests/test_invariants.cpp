#include "doctest.h"

#include "gdl/invariants.hpp"
#include "gdl/links.hpp"
#include "gdl/moves.hpp"
#include "gdl/pattern.hpp"

using namespace gdl;

TEST_CASE("linking numbers on elementary codes") {
    const GaussDiagram hopf = parse_gauss_code("O1+ U2+\nU1+ O2+\n");
    CHECK(linking_number(hopf, 0, 1) == 1);
    CHECK(linking_number(hopf, 1, 0) == 1);

    const GaussDiagram neg = parse_gauss_code("O1- U2-\nU1- O2-\n");
    CHECK(linking_number(neg, 0, 1) == -1);

    const GaussDiagram u3 = catalog("unlink", {3});
    CHECK(linking_number(u3, 0, 1) == 0);
    CHECK(linking_number(u3, 1, 2) == 0);

    CHECK_THROWS_AS(linking_number(u3, 1, 1), InvariantError);
    CHECK_THROWS_AS(linking_number(u3, 0, 5), InvariantError);

    // A single inter-component arrow has an odd signed sum: non-realizable,
    // reported rather than rounded.
    const GaussDiagram odd = parse_gauss_code("O1+\nU1+\n\n");
    CHECK_THROWS_AS(linking_number(odd, 0, 1), InvariantError);
}

TEST_CASE("linking gcd") {
    CHECK(linking_gcd(catalog("borromean")) == 0);
    CHECK(linking_gcd(catalog("chain", {2, 4, 6})) == 2);
    CHECK(linking_gcd(catalog("chain", {-3, 6, 0})) == 3);
    CHECK(linking_gcd(catalog("unlink", {3})) == 0);
    CHECK_THROWS_AS(linking_gcd(catalog("unlink", {4})), InvariantError);
}

TEST_CASE("residue canonical form") {
    const Residue r = Residue::make(-1, 3);
    CHECK(r.value == 2);
    CHECK(r.modulus == 3);
    const Residue plain = Residue::make(-7, 0);
    CHECK(plain.value == -7);
    CHECK(plain.modulus == 0);
    CHECK_THROWS_AS(Residue::make(1, -2), InvariantError);
}

TEST_CASE("families vanish on split configurations") {
    const GaussDiagram u3 = catalog("unlink", {3});
    CHECK(family_I(u3) == 0);
    CHECK(family_J(u3) == 0);
    CHECK(eval_combination(fact_coefficients(), u3) == 0);

    // No arrow touches the third circle: every pattern needs all three.
    const GaussDiagram hu = catalog("hopf_unknot");
    CHECK(family_I(hu) == 0);
    CHECK(family_J(hu) == 0);
    CHECK(eval_combination(fact_coefficients(), hu) == 0);
    CHECK(milnor_mu123(hu).value == 0);
}

TEST_CASE("f_general is definitionally eval_combination") {
    SplitMix64 rng(123);
    for (int trial = 0; trial < 25; ++trial) {
        const GaussDiagram g = random_link_diagram(3, 14, rng.next(),
                                                   trial % 2 ? DiagramMode::Spliced
                                                             : DiagramMode::Trivial);
        CHECK(f_general(family_I_coefficients(), g) == family_I(g));
        CHECK(f_general(family_J_coefficients(), g) == family_J(g));
    }
}

TEST_CASE("milnor mu123 on reference links") {
    CHECK(milnor_mu123(catalog("unlink", {3})) == Residue{0, 0});

    const GaussDiagram b = catalog("borromean");
    const Residue mb = milnor_mu123(b);
    CHECK(mb.modulus == 0);
    CHECK(mb.value == 1);  // +1 for the shipped orientation convention

    // Reversing one component negates the value.
    for (int c = 0; c < 3; ++c) {
        const Residue mr = milnor_mu123(reverse_component(b, c));
        CHECK(mr.modulus == 0);
        CHECK(mr.value == -1);
    }
    // The Borromean rings are amphichiral: the mirror diagram keeps mu = +1.
    CHECK(milnor_mu123(mirror(b)).value == 1);
}

TEST_CASE("non-divisibility by 6 is an error, not a rounding") {
    // chain(1,1,1) has f(2,2,1,1) = -3: the 6-divisibility guarantee is
    // specific to zero-linking diagrams, and mu123 refuses to truncate.
    const GaussDiagram g = catalog("chain", {1, 1, 1});
    CHECK(eval_combination(fact_coefficients(), g) == -3);
    CHECK_THROWS_AS(milnor_mu123(g), InvariantError);
    CHECK_THROWS_AS(compute_invariants(g), InvariantError);
}

TEST_CASE("compute_invariants bundles the full report") {
    const InvariantReport r = compute_invariants(catalog("chain", {2, 4, 6}));
    CHECK(r.lk12 == 2);
    CHECK(r.lk13 == 4);
    CHECK(r.lk23 == 6);
    CHECK(r.family_I == 0);
    CHECK(r.family_J == 2 * 4 + 2 * 6 + 4 * 6);
    CHECK(r.f2211 % 6 == 0);
    CHECK(r.mu123.modulus == 2);
}

TEST_CASE("invariants are constant along random move walks") {
    const GaussDiagram b = catalog("borromean");
    const long long i0 = family_I(b);
    const long long j0 = family_J(b);
    const Residue m0 = milnor_mu123(b);
    WalkOptions opts;
    opts.max_crossings = 18;
    const auto walk = random_walk(b, 50, 4242, opts);
    for (const GaussDiagram& g : walk) {
        CHECK(family_I(g) == i0);
        CHECK(family_J(g) == j0);
        CHECK(milnor_mu123(g) == m0);
    }
}

TEST_CASE("family_J recovers the symmetric linking form on chains") {
    for (long long a = -2; a <= 2; ++a)
        for (long long b = -2; b <= 2; ++b)
            for (long long c = -2; c <= 2; ++c) {
                const GaussDiagram g = catalog("chain", {a, b, c});
                CHECK(family_J(g) == a * b + a * c + b * c);
                CHECK(family_I(g) == 0);
            }
}
