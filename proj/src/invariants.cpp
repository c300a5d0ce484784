#include "gdl/invariants.hpp"

#include <algorithm>
#include <numeric>

namespace gdl {

Residue Residue::make(long long raw, long long modulus) {
    if (modulus < 0) throw InvariantError("Residue modulus must be nonnegative");
    if (modulus == 0) return Residue{raw, 0};
    long long v = raw % modulus;
    if (v < 0) v += modulus;
    return Residue{v, modulus};
}

long long linking_number(const GaussDiagram& g, int a, int b) {
    if (a == b) throw InvariantError("linking_number: components must differ");
    if (a < 0 || b < 0 || a >= g.component_count() || b >= g.component_count())
        throw InvariantError("linking_number: bad component index");
    long long sum = 0;
    for (int arr = 0; arr < g.arrow_count(); ++arr) {
        const int ct = g.tail_of(arr).component;
        const int ch = g.head_of(arr).component;
        if ((ct == a && ch == b) || (ct == b && ch == a)) sum += g.sign(arr);
    }
    if (sum % 2 != 0)
        throw InvariantError("linking_number: odd signed crossing sum (non-realizable diagram)");
    return sum / 2;
}

long long linking_gcd(const GaussDiagram& g) {
    if (g.component_count() != 3)
        throw InvariantError("linking_gcd requires a 3-component diagram");
    const long long l23 = std::abs(linking_number(g, 1, 2));
    const long long l13 = std::abs(linking_number(g, 0, 2));
    const long long l12 = std::abs(linking_number(g, 0, 1));
    return std::gcd(std::gcd(l23, l13), l12);
}

CoefficientVector family_I_coefficients() {
    // Parity-signed RR sum minus parity-signed LL sum: reindexing the LL
    // term at the reversed permutation (k,j,i) flips its parity weight, so
    // the combination carries +1 on every RR cell and -1 on every LL cell
    // (the evaluation folds in sgn(sigma) itself).
    CoefficientVector c;
    for (int si = 0; si < 6; ++si) {
        c.at(Family::RR, si) = 1;
        c.at(Family::LL, si) = -1;
    }
    return c;
}

CoefficientVector family_J_coefficients() {
    // Unsigned RL sum minus unsigned LR sum over all six permutations: the
    // three even-permutation chains RL@ijk - LR@jki + RL@kji - LR@ikj
    // together cover each permutation once for both families. Since the
    // evaluation folds in sgn(sigma), storing sgn(sigma) here makes the
    // effective weight +1 on every RL cell and -1 on every LR cell.
    CoefficientVector c;
    const auto& all = Perm3::all();
    for (int si = 0; si < 6; ++si) {
        c.at(Family::RL, si) = all[si].parity();
        c.at(Family::LR, si) = -all[si].parity();
    }
    return c;
}

CoefficientVector fact_coefficients() {
    CoefficientVector c;
    for (int si = 0; si < 6; ++si) {
        c.at(Family::RR, si) = 2;
        c.at(Family::LL, si) = 2;
        c.at(Family::RL, si) = 1;
        c.at(Family::LR, si) = 1;
    }
    return c;
}

long long family_I(const GaussDiagram& g, const PatternSet& ps) {
    return eval_combination(family_I_coefficients(), g, ps);
}

long long family_J(const GaussDiagram& g, const PatternSet& ps) {
    return eval_combination(family_J_coefficients(), g, ps);
}

long long f_general(const CoefficientVector& c, const GaussDiagram& g,
                    const PatternSet& ps) {
    return eval_combination(c, g, ps);
}

Residue milnor_mu123(const GaussDiagram& g, const PatternSet& ps) {
    const long long f = eval_combination(fact_coefficients(), g, ps);
    if (f % 6 != 0)
        throw InvariantError("f(2,2,1,1) = " + std::to_string(f) +
                             " is not divisible by 6 (bad transcription or "
                             "non-realizable diagram)");
    return Residue::make(f / 6, linking_gcd(g));
}

InvariantReport compute_invariants(const GaussDiagram& g, const PatternSet& ps) {
    InvariantReport r;
    r.lk12 = linking_number(g, 0, 1);
    r.lk13 = linking_number(g, 0, 2);
    r.lk23 = linking_number(g, 1, 2);
    const auto profile = pairing_profile(ps, g);
    r.family_I = eval_combination(family_I_coefficients(), profile);
    r.family_J = eval_combination(family_J_coefficients(), profile);
    r.f2211 = eval_combination(fact_coefficients(), profile);
    if (r.f2211 % 6 != 0)
        throw InvariantError("f(2,2,1,1) = " + std::to_string(r.f2211) +
                             " is not divisible by 6 (bad transcription or "
                             "non-realizable diagram)");
    const long long gcd = std::gcd(std::gcd(std::abs(r.lk23), std::abs(r.lk13)),
                                   std::abs(r.lk12));
    r.mu123 = Residue::make(r.f2211 / 6, gcd);
    return r;
}

}  // namespace gdl
