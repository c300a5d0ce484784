#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include "gdl/diagram.hpp"
#include "gdl/moves.hpp"
#include "gdl/pattern.hpp"

namespace gdl {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

// One sampled move pair (G, G'), recorded as the 24 pairing differences
// with the sgn(sigma) weight folded in: a coefficient vector c is invariant
// across the pair iff sum_cell c[cell] * delta[cell] == 0.
struct RelationRow {
    MoveTag kind{};
    std::array<long long, kCellCount> delta{};
    friend bool operator==(const RelationRow&, const RelationRow&) = default;
};

RelationRow relation_row(const GaussDiagram& before, const GaussDiagram& after,
                         MoveTag kind, const PatternSet& ps = default_patterns());

struct SampleOptions {
    int max_crossings = 16;
    int walk_steps = 6;             // burn-in moves before recording
    std::array<int, 6> mix{2, 1, 3, 1, 4, 3};  // per MoveTag recording weights
};

// `count` rows from random 3-component diagrams x random applicable moves,
// deterministic in seed. Rows are raw move instances: zero rows (satisfied
// relations) and repeats of the same difference vector are kept.
std::vector<RelationRow> sample_relations(std::uint64_t seed, int count,
                                          const SampleOptions& opts = {},
                                          const PatternSet& ps = default_patterns());

// A basis of primitive integer vectors spanning the rational nullspace of
// the row matrix. Exact arithmetic throughout.
std::vector<std::array<BigInt, kCellCount>> integer_nullspace(
    const std::vector<RelationRow>& rows);

// True iff c (its 24 entries; lambda ignored) lies in the rational span of
// the basis.
bool check_membership(const CoefficientVector& c,
                      const std::vector<std::array<BigInt, kCellCount>>& basis);

}  // namespace gdl
