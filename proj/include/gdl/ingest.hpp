#pragma once

#include <array>
#include <string_view>
#include <vector>

#include "gdl/diagram.hpp"

namespace gdl {

using Vec3 = std::array<double, 3>;

// Closed 3D polyline loops, one per link component.
struct Polyline3 {
    std::vector<std::vector<Vec3>> loops;
};

// xyz-per-line text with blank-line component separators ('#' comments).
Polyline3 parse_polyline_xyz(std::string_view text);
// {"components":[[[x,y,z],...],...]}
Polyline3 parse_polyline_json(std::string_view text);

// Orthogonal projection along `direction`: crossings from 2D segment
// intersections, over/under from depth, sign from the orientation
// determinant. Degenerate configurations retry with a deterministically
// perturbed direction (seeded), up to `max_retries`.
GaussDiagram project(const Polyline3& p, Vec3 direction, std::uint64_t seed,
                     int max_retries = 64);

// A generic direction chosen from the seed alone.
GaussDiagram project(const Polyline3& p, std::uint64_t seed);

// --- PD codes ----------------------------------------------------------------

// One PD crossing X[a,b,c,d]: edge labels counterclockwise starting from the
// incoming under-strand edge a (under runs a -> c).
struct PdCrossing {
    std::array<long, 4> edges{};
};

struct PdCode {
    std::vector<PdCrossing> crossings;
    int extra_unknots = 0;  // crossing-free components
};

// Text format: lines "X a b c d" and optionally "unknots N".
PdCode parse_pd(std::string_view text);

GaussDiagram pd_to_gauss(const PdCode& pd);

}  // namespace gdl
