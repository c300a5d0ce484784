#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gdl/diagram.hpp"
#include "gdl/invariants.hpp"

namespace gdl {

// Named reference diagrams.
//   unlink        params: {m}           m-component unlink
//   hopf          params: {} or {sign}  2-component Hopf link (sign +-1)
//   hopf_unknot   params: {} or {sign}  Hopf link plus a split unknot
//   chain         params: {a, b, c}     pairwise clasp bands with
//                                       lk(1,2)=a, lk(1,3)=b, lk(2,3)=c
//   borromean     params: {}            the 6-crossing Borromean rings
// The parameterized L2m+/L2m- families are not available: their defining
// figures could not be transcribed; catalog() reports them as such.
GaussDiagram catalog(const std::string& name, const std::vector<long long>& params = {});

// All catalog names with fixed small parameters, for corpus building.
std::vector<std::pair<std::string, GaussDiagram>> catalog_corpus();

enum class DiagramMode {
    Trivial,  // random moves from the unlink: link-homotopy trivial
    Spliced,  // random catalog connected sums, then random moves
};

// Deterministic-in-seed random realizable diagram with `components` circles
// and at most `crossings` arrows.
GaussDiagram random_link_diagram(int components, int crossings, std::uint64_t seed,
                                 DiagramMode mode = DiagramMode::Trivial);

struct SearchHit {
    GaussDiagram diagram;
    long long family_I = 0;
    Residue mu123;
};

// Scans `budget` random general Gauss diagrams with at most `bound`
// crossings for independence witnesses: mu123 defined with residue value 0
// (modulus = linking gcd) while family_I != 0. Every returned hit has been
// re-verified to keep its predicate under 100 further random moves.
//
// family_I provably vanishes on every diagram whose pairwise linking
// numbers are all zero (and on every realizable diagram), so witnesses
// necessarily carry a nonzero linking gcd; the hit's mu123 Residue records
// that modulus.
std::vector<SearchHit> search_independent(int bound, long budget, std::uint64_t seed,
                                          std::size_t max_hits = 16);

}  // namespace gdl
