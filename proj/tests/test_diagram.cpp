#include "doctest.h"

#include "gdl/diagram.hpp"
#include "gdl/links.hpp"

using namespace gdl;

TEST_CASE("Perm3 enumeration, parity, composition") {
    const auto& all = Perm3::all();
    CHECK(all.size() == 6);
    int even = 0;
    for (const auto& p : all) {
        CHECK(p.inverse().then(p) == Perm3{});
        CHECK(p.then(p.inverse()) == Perm3{});
        CHECK(p.parity() * p.parity() == 1);
        if (p.parity() == 1) ++even;
        CHECK(Perm3::from_digits(p.to_digits()) == p);
    }
    CHECK(even == 3);
    CHECK(Perm3::from_digits("123") == Perm3{});
    CHECK(Perm3::from_digits("132").parity() == -1);
    CHECK(Perm3::from_digits("231").parity() == 1);
    CHECK_THROWS_AS(Perm3::from_digits("124"), InvariantError);
    CHECK_THROWS_AS(Perm3::from_digits("112"), InvariantError);
}

TEST_CASE("parse / serialize round trip on a hand-written code") {
    const std::string code =
        "O1+ U2+\n"
        "U1+ O3-\n"
        "O2+ U3-\n";
    const GaussDiagram g = parse_gauss_code(code);
    CHECK(g.component_count() == 3);
    CHECK(g.arrow_count() == 3);
    CHECK(serialize(g) == code);
    CHECK(parse_gauss_code(serialize(g)) == g);
}

TEST_CASE("canonical serialization relabels by first occurrence") {
    const GaussDiagram g = parse_gauss_code("O7- U9+\nU7- O9+\n\n");
    CHECK(serialize(g) == "O1- U2+\nU1- O2+\n\n");
    // A label first seen as U keeps its traversal position.
    const GaussDiagram h = parse_gauss_code("U5+ O7-\nO5+ U7-\n");
    CHECK(serialize(h) == "U1+ O2-\nO1+ U2-\n");
    CHECK(parse_gauss_code(serialize(h)) == h);
}

TEST_CASE("parse errors carry a position") {
    CHECK_THROWS_AS(parse_gauss_code("O1+ U1-"), ParseError);  // sign mismatch
    CHECK_THROWS_AS(parse_gauss_code("O1+\n"), ParseError);    // dangling label
    CHECK_THROWS_AS(parse_gauss_code("O1+ O1+\n"), ParseError);
    CHECK_THROWS_AS(parse_gauss_code("X1+ U1+\n"), ParseError);
    try {
        parse_gauss_code("O1+ q\n");
        CHECK(false);
    } catch (const ParseError& e) {
        CHECK(e.position == 4);
    }
}

TEST_CASE("semicolon separates components like newline") {
    CHECK(parse_gauss_code("O1+ U2+; U1+ O2+") ==
          parse_gauss_code("O1+ U2+\nU1+ O2+\n"));
}

TEST_CASE("JSON round trip matches text form") {
    const GaussDiagram g = catalog("borromean");
    CHECK(parse_gauss_json(serialize_json(g)) == g);
}

TEST_CASE("next/prev are cyclic inverses") {
    const GaussDiagram g = catalog("borromean");
    for (int c = 0; c < g.component_count(); ++c) {
        for (int s = 0; s < static_cast<int>(g.component(c).size()); ++s) {
            const EndpointRef r{c, s};
            CHECK(g.prev(g.next(r)) == r);
            CHECK(g.next(g.prev(r)) == r);
        }
    }
}

TEST_CASE("permute_components round trips and acts on endpoints") {
    const GaussDiagram g = catalog("borromean");
    for (const auto& p : Perm3::all()) {
        const GaussDiagram h = permute_components(g, p);
        CHECK(permute_components(h, p.inverse()) == g);
        CHECK(h.arrow_count() == g.arrow_count());
    }
    CHECK(permute_components(g, Perm3{}) == g);
}

TEST_CASE("reverse_component is an involution and flips inter-component signs") {
    const GaussDiagram g = catalog("borromean");
    const GaussDiagram h = reverse_component(g, 1);
    CHECK(reverse_component(h, 1) == g);
    // Arrow indices are preserved, so signs compare pointwise: exactly the
    // arrows with one endpoint on component 1 flip.
    for (int a = 0; a < g.arrow_count(); ++a) {
        const bool crosses = (g.tail_of(a).component == 1) !=
                             (g.head_of(a).component == 1);
        CHECK(h.sign(a) == (crosses ? -g.sign(a) : g.sign(a)));
    }
}

TEST_CASE("mirror is an involution") {
    const GaussDiagram g = catalog("borromean");
    CHECK(mirror(mirror(g)) == g);
    for (int a = 0; a < g.arrow_count(); ++a)
        CHECK(mirror(g).arrow_count() == g.arrow_count());
}

TEST_CASE("splice concatenates component-wise") {
    const GaussDiagram a = catalog("borromean");
    const GaussDiagram b = catalog("unlink", {3});
    const GaussDiagram s = splice(a, b);
    CHECK(s == a);  // splicing with the unlink is the identity
    const GaussDiagram s2 = splice(a, a);
    CHECK(s2.arrow_count() == 2 * a.arrow_count());
    for (int c = 0; c < 3; ++c)
        CHECK(s2.component(c).size() == 2 * a.component(c).size());
}

TEST_CASE("construction validates structure") {
    // Sign mismatch between stored arrow sign list and endpoints is caught
    // at the parse layer; here: component index out of range.
    std::vector<std::vector<Endpoint>> comps(1);
    comps[0].push_back({0, false});
    CHECK_THROWS(GaussDiagram(comps, {1}));  // missing head endpoint
}
