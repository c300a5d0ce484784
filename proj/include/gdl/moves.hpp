#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "gdl/diagram.hpp"

namespace gdl {

// --- move sites --------------------------------------------------------------
//
// Each site carries enough data to make application deterministic. Gaps are
// insertion positions: gap g on a component of length n (0 <= g <= n) means
// "between slot g-1 and slot g" (gap 0 is right after the base point).

struct R1Add {
    int comp = 0;
    int gap = 0;
    int sign = 1;
    bool head_first = false;  // order of the kink's two endpoints
};

struct R1Remove {
    int arrow = 0;  // kink arrow: head and tail cyclically adjacent on one circle
};

struct R2Add {
    int comp_a = 0;
    int gap_a = 0;
    int comp_b = 0;
    int gap_b = 0;        // if comp_a == comp_b, must differ from gap_a
    bool a_over = true;   // which strand carries the two tails
    bool parallel = true; // endpoint interleaving of the two new arrows
    int first_sign = 1;   // sign of the first inserted arrow (other is opposite)
};

struct R2Remove {
    int arrow_x = 0;
    int arrow_y = 0;
};

// A triangle of three arrows whose endpoints form three disjoint adjacent
// pairs; application swaps the two slots of every pair.
struct R3Move {
    std::array<int, 3> arrows{};                    // sorted ascending
    std::array<std::array<EndpointRef, 2>, 3> pairs{};  // (slot, its cyclic successor)
};

struct BasePointMove {
    int comp = 0;
    bool forward = true;  // slide the base point past the endpoint at slot 0
};

using MoveSite =
    std::variant<R1Add, R1Remove, R2Add, R2Remove, R3Move, BasePointMove>;

enum class MoveTag { R1Add, R1Remove, R2Add, R2Remove, R3, BasePoint };

MoveTag tag_of(const MoveSite& site);
std::string tag_name(MoveTag t);
std::string describe(const MoveSite& site);

// --- operations --------------------------------------------------------------

// All sites where some move's local pattern occurs on g.
std::vector<MoveSite> applicable_moves(const GaussDiagram& g);

// True iff the site's local pattern is (still) present on g.
bool site_applicable(const GaussDiagram& g, const MoveSite& site);

// Applies a move; throws InvariantError on a stale/invalid site.
GaussDiagram apply_move(const GaussDiagram& g, const MoveSite& site);

// Walk configuration: kind-first selection, then a uniform site of that kind.
struct WalkOptions {
    int max_crossings = 40;          // suppress _add sites at/above this count
    // Relative weights per MoveTag (R1Add, R1Remove, R2Add, R2Remove, R3, BasePoint).
    std::array<int, 6> mix{1, 1, 1, 1, 2, 1};
};

// Deterministic-in-seed random move walk; result[0] == g, result has
// steps+1 entries (fewer only if no move is ever applicable, which cannot
// happen on a nonempty diagram). Each entry is one move from its predecessor.
std::vector<GaussDiagram> random_walk(const GaussDiagram& g, int steps,
                                      std::uint64_t seed,
                                      const WalkOptions& opts = {});

// Single random step; returns the chosen site, or nullopt if nothing applies.
// `rng_state` evolves deterministically.
class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
    std::uint64_t next();
    // Uniform value in [0, bound), bound >= 1.
    std::uint64_t below(std::uint64_t bound);

  private:
    std::uint64_t state_;
};

std::optional<MoveSite> random_move(const GaussDiagram& g, SplitMix64& rng,
                                    const WalkOptions& opts);

}  // namespace gdl
