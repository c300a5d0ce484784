#pragma once

#include "gdl/diagram.hpp"
#include "gdl/pattern.hpp"

namespace gdl {

// An integer modulo a nonnegative modulus; modulus 0 means a plain integer.
struct Residue {
    long long value = 0;
    long long modulus = 0;

    static Residue make(long long raw, long long modulus);
    friend bool operator==(const Residue&, const Residue&) = default;
};

// Half the signed count of crossings between components a and b. Errors on
// a == b and on an odd signed sum (non-realizable input).
long long linking_number(const GaussDiagram& g, int a, int b);

// gcd(|lk(2,3)|, |lk(1,3)|, |lk(1,2)|); gcd of all zeros is 0.
long long linking_gcd(const GaussDiagram& g);

// Coefficient vectors of the named invariants (lambda = 1).
CoefficientVector family_I_coefficients();
CoefficientVector family_J_coefficients();
CoefficientVector fact_coefficients();  // the (2,2,1,1) generating vector

long long family_I(const GaussDiagram& g, const PatternSet& ps = default_patterns());
long long family_J(const GaussDiagram& g, const PatternSet& ps = default_patterns());
long long f_general(const CoefficientVector& c, const GaussDiagram& g,
                    const PatternSet& ps = default_patterns());

// (1/6) f(2,2,1,1) reduced modulo the linking gcd. Errors when f(2,2,1,1)
// is not divisible by 6.
Residue milnor_mu123(const GaussDiagram& g, const PatternSet& ps = default_patterns());

// All of the above from one pairing profile (for batch evaluation).
struct InvariantReport {
    long long lk12 = 0, lk13 = 0, lk23 = 0;
    long long family_I = 0;
    long long family_J = 0;
    long long f2211 = 0;
    Residue mu123;
};
InvariantReport compute_invariants(const GaussDiagram& g,
                                   const PatternSet& ps = default_patterns());

}  // namespace gdl
