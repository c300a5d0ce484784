#include "doctest.h"

#include <fstream>
#include <sstream>
#include <string>

#include "gdl/invariants.hpp"
#include "gdl/links.hpp"

using namespace gdl;

TEST_CASE("unlink catalog") {
    const GaussDiagram u3 = catalog("unlink", {3});
    CHECK(u3.component_count() == 3);
    CHECK(u3.arrow_count() == 0);
    CHECK(catalog("unlink", {5}).component_count() == 5);
}

TEST_CASE("hopf link has linking number +-1") {
    CHECK(linking_number(catalog("hopf"), 0, 1) == 1);
    CHECK(linking_number(catalog("hopf", {-1}), 0, 1) == -1);
    const GaussDiagram hu = catalog("hopf_unknot");
    CHECK(hu.component_count() == 3);
    CHECK(linking_number(hu, 0, 1) == 1);
    CHECK(linking_number(hu, 0, 2) == 0);
    CHECK(linking_number(hu, 1, 2) == 0);
}

TEST_CASE("chain catalog realizes requested linking numbers") {
    for (const auto& [a, b, c] :
         {std::array<long long, 3>{1, 0, 0}, {2, -1, 3}, {0, 0, 0}, {-2, 5, 1}}) {
        const GaussDiagram g = catalog("chain", {a, b, c});
        CHECK(linking_number(g, 0, 1) == a);
        CHECK(linking_number(g, 0, 2) == b);
        CHECK(linking_number(g, 1, 2) == c);
    }
}

TEST_CASE("borromean rings: 6 crossings, all linking numbers zero") {
    const GaussDiagram g = catalog("borromean");
    CHECK(g.component_count() == 3);
    CHECK(g.arrow_count() == 6);
    CHECK(linking_number(g, 0, 1) == 0);
    CHECK(linking_number(g, 0, 2) == 0);
    CHECK(linking_number(g, 1, 2) == 0);
    CHECK(linking_gcd(g) == 0);
}

TEST_CASE("the clasp-band family is reported unavailable") {
    CHECK_THROWS_AS(catalog("L2m", {1}), InvariantError);
    CHECK_THROWS_AS(catalog("no_such_link"), InvariantError);
}

TEST_CASE("catalog corpus entries are consistent") {
    const auto corpus = catalog_corpus();
    CHECK(corpus.size() >= 5);
    for (const auto& [name, g] : corpus) {
        CHECK(!name.empty());
        CHECK(g.component_count() >= 2);
    }
}

TEST_CASE("random_link_diagram is deterministic and respects bounds") {
    for (auto mode : {DiagramMode::Trivial, DiagramMode::Spliced}) {
        const GaussDiagram a = random_link_diagram(3, 20, 42, mode);
        const GaussDiagram b = random_link_diagram(3, 20, 42, mode);
        CHECK(a == b);
        CHECK(a.component_count() == 3);
        CHECK(a.arrow_count() <= 20);
    }
    // Different seeds give different diagrams (overwhelmingly).
    bool differs = false;
    for (std::uint64_t s = 0; s < 5 && !differs; ++s)
        differs = !(random_link_diagram(3, 20, s, DiagramMode::Trivial) ==
                    random_link_diagram(3, 20, s + 100, DiagramMode::Trivial));
    CHECK(differs);
}

TEST_CASE("trivial-mode diagrams have zero linking numbers") {
    for (std::uint64_t s = 0; s < 10; ++s) {
        const GaussDiagram g = random_link_diagram(3, 16, s, DiagramMode::Trivial);
        CHECK(linking_gcd(g) == 0);
    }
}

TEST_CASE("search: zero budget is a legal empty outcome") {
    CHECK(search_independent(20, 0, 7).empty());
    CHECK_THROWS_AS(search_independent(0, 10, 7), InvariantError);
}

TEST_CASE("search is deterministic in the seed") {
    const auto a = search_independent(20, 4000, 99, 4);
    const auto b = search_independent(20, 4000, 99, 4);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].diagram == b[i].diagram);
        CHECK(a[i].family_I == b[i].family_I);
    }
}

TEST_CASE("search hits satisfy the independence predicate") {
    const auto hits = search_independent(20, 30000, 1, 3);
    REQUIRE(!hits.empty());
    for (const auto& h : hits) {
        CHECK(h.family_I != 0);
        CHECK(h.family_I == family_I(h.diagram));
        CHECK(h.mu123.value == 0);
        CHECK(h.mu123.modulus == linking_gcd(h.diagram));
        // family_I vanishes wherever all pairwise linking numbers do, so a
        // witness necessarily has a nonzero linking gcd.
        CHECK(h.mu123.modulus != 0);
        CHECK(milnor_mu123(h.diagram).value == 0);
    }
}

TEST_CASE("shipped catalog data file re-verifies against the generator") {
    std::ifstream in(std::string(GDL_SOURCE_DIR) + "/data/catalog-v1.txt");
    REQUIRE(in.good());

    struct Entry {
        std::string name;
        std::vector<long long> params;
        std::string code;
        std::vector<std::string> expects;
    };
    std::vector<Entry> entries;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        std::string word;
        ls >> word;
        if (word == "link") {
            Entry e;
            ls >> e.name;
            long long p;
            while (ls >> p) e.params.push_back(p);
            entries.push_back(std::move(e));
        } else if (word == "code") {
            REQUIRE(!entries.empty());
            std::string rest;
            std::getline(ls, rest);
            if (!rest.empty() && rest.front() == ' ') rest.erase(rest.begin());
            entries.back().code += rest + "\n";
        } else if (word == "expect:") {
            std::string rest;
            std::getline(ls, rest);
            REQUIRE(!entries.empty());
            entries.back().expects.push_back(rest);
        } else {
            FAIL("unrecognized catalog file line: " << line);
        }
    }
    CHECK(entries.size() >= 6);

    for (const Entry& e : entries) {
        INFO("entry " << e.name);
        const GaussDiagram g = parse_gauss_code(e.code);
        CHECK(g == catalog(e.name, e.params));
        for (const std::string& ex : e.expects) {
            std::istringstream es(ex);
            std::string key;
            es >> key;
            if (key == "crossings") {
                int n;
                es >> n;
                CHECK(g.arrow_count() == n);
            } else if (key == "lk") {
                long long a, b, c;
                es >> a >> b >> c;
                CHECK(linking_number(g, 0, 1) == a);
                CHECK(linking_number(g, 0, 2) == b);
                CHECK(linking_number(g, 1, 2) == c);
            } else if (key == "lk12") {
                long long a;
                es >> a;
                CHECK(linking_number(g, 0, 1) == a);
            } else if (key == "familyI") {
                long long v;
                es >> v;
                CHECK(family_I(g) == v);
            } else if (key == "familyJ") {
                long long v;
                es >> v;
                CHECK(family_J(g) == v);
            } else if (key == "f2211") {
                long long v;
                es >> v;
                CHECK(eval_combination(fact_coefficients(), g) == v);
            } else if (key == "mu123") {
                std::string first;
                es >> first;
                if (first == "undefined") {
                    CHECK_THROWS_AS(milnor_mu123(g), InvariantError);
                } else {
                    std::string modword;
                    long long m;
                    es >> modword >> m;
                    CHECK(milnor_mu123(g) == Residue{std::stoll(first), m});
                }
            } else {
                FAIL("unknown expect key: " << key);
            }
        }
    }
}
