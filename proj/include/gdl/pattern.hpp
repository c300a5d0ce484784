#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "gdl/diagram.hpp"

namespace gdl {

// The four pattern families of the generating function, in file order.
enum class Family { RR = 0, LL = 1, RL = 2, LR = 3 };
constexpr int kFamilyCount = 4;
constexpr int kCellCount = 24;  // 4 families x 6 permutations

Family family_from_name(std::string_view name);
std::string family_name(Family f);

// Index of the (family, sigma) cell; sigma indexed by its position in
// Perm3::all().
int cell_index(Family f, int sigma_index);

// A 2-arrow template on three labeled circles. Roles 0,1,2 are the circle
// placeholders i,j,k; a Perm3 binds them to concrete components at
// evaluation time. Endpoint ids are small integers local to the pattern.
class ArrowPattern {
  public:
    struct TemplateArrow {
        int tail_endpoint = -1;
        int head_endpoint = -1;
    };

    // circles[r] lists that role's endpoint ids in base-point order.
    ArrowPattern(std::array<std::vector<int>, 3> circles,
                 std::array<TemplateArrow, 2> arrows);

    const std::array<std::vector<int>, 3>& circles() const { return circles_; }
    const std::array<TemplateArrow, 2>& arrows() const { return arrows_; }
    int role_of_endpoint(int id) const { return role_of_.at(id); }
    int order_of_endpoint(int id) const { return order_of_.at(id); }

  private:
    std::array<std::vector<int>, 3> circles_;
    std::array<TemplateArrow, 2> arrows_;
    std::vector<int> role_of_;   // endpoint id -> role
    std::vector<int> order_of_;  // endpoint id -> position within its circle list
};

// A choice of two arrows of the target diagram.
struct SubdiagramSelection {
    int arrow_a = 0;
    int arrow_b = 0;  // arrow_a < arrow_b
};

// The 24 coefficients of the generating function plus an integer scale.
struct CoefficientVector {
    std::array<long long, kCellCount> entries{};
    long long lambda = 1;

    long long& at(Family f, int sigma_index) { return entries[cell_index(f, sigma_index)]; }
    long long at(Family f, int sigma_index) const { return entries[cell_index(f, sigma_index)]; }
};

// Parses the coefficient file format: one "family perm coeff" record per
// line ('#' comments), e.g. "RR 123 2"; an optional "lambda <n>" line.
CoefficientVector parse_coefficients(std::string_view text);
std::string serialize_coefficients(const CoefficientVector& c);

// --- pattern set -------------------------------------------------------------

// The shipped transcription of the four counting figures. Each family's
// figure is a sum of one or more 2-arrow templates; its pairing against a
// diagram is the sum of the template pairings.
struct PatternSet {
    std::array<std::vector<ArrowPattern>, kFamilyCount> patterns;
    const std::vector<ArrowPattern>& terms(Family f) const {
        return patterns.at(static_cast<int>(f));
    }
};

// Pattern file: blocks starting "pattern <family>", then "circle <role>: ids"
// lines (role in i,j,k) and "arrow <id> -> <id>" lines. Repeated blocks for
// one family accumulate as additional terms of that figure.
PatternSet parse_patterns(std::string_view text);

// The built-in transcription (identical to the shipped data file).
const PatternSet& default_patterns();
std::string_view default_patterns_text();

// --- operations --------------------------------------------------------------

// All C(n, size) selections of `size` arrows, in deterministic order. Only
// size <= 2 selections are representable as SubdiagramSelection; the
// size-generic enumerator returns index vectors.
std::vector<std::vector<int>> enumerate_subdiagrams(const GaussDiagram& g, int size);
std::vector<SubdiagramSelection> enumerate_pairs(const GaussDiagram& g);

// True iff the selected arrows match A with roles bound through `binding`
// (role r -> component binding(r)). Signs are not constrained.
bool match_pattern(const ArrowPattern& a, const SubdiagramSelection& sel,
                   const GaussDiagram& g, const Perm3& binding);

// Signed count of matching 2-arrow subdiagrams: sum of sign products.
long long pairing(const ArrowPattern& a, const Perm3& binding, const GaussDiagram& g);

// All 24 pairings in one pass: profile[cell_index(f, s)].
std::array<long long, kCellCount> pairing_profile(const PatternSet& ps,
                                                  const GaussDiagram& g);

// lambda * sum_sigma sgn(sigma) * sum_family c[f,sigma] * pairing(f, sigma, G).
long long eval_combination(const CoefficientVector& c, const GaussDiagram& g,
                           const PatternSet& ps = default_patterns());
long long eval_combination(const CoefficientVector& c,
                           const std::array<long long, kCellCount>& profile);

}  // namespace gdl
