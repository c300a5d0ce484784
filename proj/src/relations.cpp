#include "gdl/relations.hpp"

#include <algorithm>

#include "gdl/links.hpp"

namespace gdl {

RelationRow relation_row(const GaussDiagram& before, const GaussDiagram& after,
                         MoveTag kind, const PatternSet& ps) {
    const auto pb = pairing_profile(ps, before);
    const auto pa = pairing_profile(ps, after);
    RelationRow row;
    row.kind = kind;
    for (int fi = 0; fi < kFamilyCount; ++fi)
        for (int si = 0; si < 6; ++si) {
            const int cell = fi * 6 + si;
            row.delta[cell] = Perm3::all()[si].parity() * (pa[cell] - pb[cell]);
        }
    return row;
}

std::vector<RelationRow> sample_relations(std::uint64_t seed, int count,
                                          const SampleOptions& opts,
                                          const PatternSet& ps) {
    if (count < 1) throw InvariantError("sample_relations: count must be >= 1");
    SplitMix64 rng(seed ^ 0x9d2c5680cafef00dULL);

    std::vector<RelationRow> rows;
    const long attempts_cap = 60L * count;
    for (long attempt = 0; attempt < attempts_cap &&
                           static_cast<int>(rows.size()) < count;
         ++attempt) {
        // A fresh random diagram, then one recorded move on it. Spliced
        // diagrams carry many three-circle subdiagrams and therefore yield
        // far more informative (nonzero) rows than unlink-grown ones, so
        // they get the larger share.
        const DiagramMode mode =
            attempt % 3 ? DiagramMode::Spliced : DiagramMode::Trivial;
        const GaussDiagram g =
            random_link_diagram(3, opts.max_crossings, rng.next(), mode);

        WalkOptions record;
        record.max_crossings = opts.max_crossings + 2;
        record.mix = opts.mix;
        auto site = random_move(g, rng, record);
        if (!site) continue;
        const GaussDiagram moved = apply_move(g, *site);
        rows.push_back(relation_row(g, moved, tag_of(*site), ps));
    }
    return rows;
}

// --- exact linear algebra ----------------------------------------------------

std::vector<std::array<BigInt, kCellCount>> integer_nullspace(
    const std::vector<RelationRow>& rows) {
    constexpr int n = kCellCount;
    // Fraction-free Gaussian elimination to reduced row echelon form over Q.
    std::vector<std::array<BigRat, n>> m;
    for (const RelationRow& r : rows) {
        std::array<BigRat, n> v;
        bool nonzero = false;
        for (int i = 0; i < n; ++i) {
            v[i] = r.delta[i];
            nonzero = nonzero || r.delta[i] != 0;
        }
        if (nonzero) m.push_back(std::move(v));
    }
    std::vector<int> pivot_col;
    int rank = 0;
    for (int col = 0; col < n && rank < static_cast<int>(m.size()); ++col) {
        int pivot = -1;
        for (int r = rank; r < static_cast<int>(m.size()); ++r)
            if (m[r][col] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        std::swap(m[rank], m[pivot]);
        const BigRat p = m[rank][col];
        for (int i = col; i < n; ++i) m[rank][i] /= p;
        for (int r = 0; r < static_cast<int>(m.size()); ++r) {
            if (r == rank || m[r][col] == 0) continue;
            const BigRat factor = m[r][col];
            for (int i = col; i < n; ++i) m[r][i] -= factor * m[rank][i];
        }
        pivot_col.push_back(col);
        ++rank;
    }

    // Free columns parameterize the nullspace.
    std::vector<bool> is_pivot(n, false);
    for (int c : pivot_col) is_pivot[c] = true;
    std::vector<std::array<BigInt, n>> basis;
    for (int free = 0; free < n; ++free) {
        if (is_pivot[free]) continue;
        std::array<BigRat, n> v{};
        v[free] = 1;
        for (int r = 0; r < rank; ++r) v[pivot_col[r]] = -m[r][free];
        // Scale to a primitive integer vector.
        BigInt lcm = 1;
        for (int i = 0; i < n; ++i)
            lcm = boost::multiprecision::lcm(lcm, BigInt(denominator(v[i])));
        std::array<BigInt, n> iv;
        BigInt g = 0;
        for (int i = 0; i < n; ++i) {
            iv[i] = BigInt(numerator(v[i])) * (lcm / BigInt(denominator(v[i])));
            g = boost::multiprecision::gcd(g, iv[i]);
        }
        if (g > 1)
            for (int i = 0; i < n; ++i) iv[i] /= g;
        basis.push_back(std::move(iv));
    }
    return basis;
}

bool check_membership(const CoefficientVector& c,
                      const std::vector<std::array<BigInt, kCellCount>>& basis) {
    constexpr int n = kCellCount;
    // Rank comparison: c is in the span iff appending it leaves rank unchanged.
    std::vector<std::array<BigRat, n>> m;
    for (const auto& b : basis) {
        std::array<BigRat, n> v;
        for (int i = 0; i < n; ++i) v[i] = b[i];
        m.push_back(std::move(v));
    }
    std::array<BigRat, n> target;
    for (int i = 0; i < n; ++i) target[i] = c.entries[i];

    auto rank_of = [](std::vector<std::array<BigRat, n>> mat) {
        int rank = 0;
        for (int col = 0; col < n && rank < static_cast<int>(mat.size()); ++col) {
            int pivot = -1;
            for (int r = rank; r < static_cast<int>(mat.size()); ++r)
                if (mat[r][col] != 0) {
                    pivot = r;
                    break;
                }
            if (pivot < 0) continue;
            std::swap(mat[rank], mat[pivot]);
            for (int r = rank + 1; r < static_cast<int>(mat.size()); ++r) {
                if (mat[r][col] == 0) continue;
                const BigRat f = mat[r][col] / mat[rank][col];
                for (int i = col; i < n; ++i) mat[r][i] -= f * mat[rank][i];
            }
            ++rank;
        }
        return rank;
    };

    const int base_rank = rank_of(m);
    m.push_back(target);
    return rank_of(m) == base_rank;
}

}  // namespace gdl
