#include "gdl/moves.hpp"

#include <algorithm>
#include <bitset>
#include <limits>

namespace gdl {

namespace {

// Valid local R3 configurations, as 9-bit signatures derived from the plane
// geometry of three oriented strands forming a triangle (see
// devtools/gen_r3_catalog.py for the derivation):
//   bit 0..2  sign of arrows x,y,z is positive
//   bit 3..5  head of x lies on strand P; head of y on P; head of z on Q
//   bit 6..8  on P the x-endpoint precedes y's; on Q x precedes z; on R y
//             precedes z (order along the strand arc, base point ignored)
// where arrows x<y<z and strand P carries endpoints of x,y; Q of x,z; R of y,z.
constexpr std::uint16_t kR3Signatures[] = {
    0x000, 0x007, 0x009, 0x00e, 0x01b, 0x01c, 0x023, 0x024, 0x031, 0x036, 0x038, 0x03f,
    0x043, 0x044, 0x04a, 0x04d, 0x058, 0x05f, 0x060, 0x067, 0x072, 0x075, 0x07b, 0x07c,
    0x082, 0x085, 0x08b, 0x08c, 0x099, 0x09e, 0x0a1, 0x0a6, 0x0b3, 0x0b4, 0x0ba, 0x0bd,
    0x0c1, 0x0c6, 0x0c8, 0x0cf, 0x0da, 0x0dd, 0x0e2, 0x0e5, 0x0f0, 0x0f7, 0x0f9, 0x0fe,
    0x101, 0x106, 0x108, 0x10f, 0x11a, 0x11d, 0x122, 0x125, 0x130, 0x137, 0x139, 0x13e,
    0x142, 0x145, 0x14b, 0x14c, 0x159, 0x15e, 0x161, 0x166, 0x173, 0x174, 0x17a, 0x17d,
    0x183, 0x184, 0x18a, 0x18d, 0x198, 0x19f, 0x1a0, 0x1a7, 0x1b2, 0x1b5, 0x1bb, 0x1bc,
    0x1c0, 0x1c7, 0x1c9, 0x1ce, 0x1db, 0x1dc, 0x1e3, 0x1e4, 0x1f1, 0x1f6, 0x1f8, 0x1ff,
};

const std::bitset<512>& r3_catalog() {
    static const std::bitset<512> cat = [] {
        std::bitset<512> b;
        for (auto s : kR3Signatures) b.set(s);
        return b;
    }();
    return cat;
}

bool adjacent_on_circle(const GaussDiagram& g, EndpointRef a, EndpointRef b) {
    return a.component == b.component && g.next(a) == b;
}

// An adjacency arc: two consecutive slots held by different arrows.
struct Adjacency {
    EndpointRef first;
    EndpointRef second;  // == next(first)
    int arrow_first;
    int arrow_second;
};

std::vector<Adjacency> collect_adjacencies(const GaussDiagram& g) {
    std::vector<Adjacency> out;
    for (int c = 0; c < g.component_count(); ++c) {
        const auto& comp = g.component(c);
        const int len = static_cast<int>(comp.size());
        if (len < 2) continue;
        for (int p = 0; p < len; ++p) {
            const int q = (p + 1) % len;
            if (comp[p].arrow == comp[q].arrow) continue;
            out.push_back(Adjacency{EndpointRef{c, p}, EndpointRef{c, q},
                                    comp[p].arrow, comp[q].arrow});
        }
    }
    return out;
}

// Builds the R3Move from three adjacencies if they form a valid triangle;
// nullopt otherwise.
std::optional<R3Move> triangle_site(const GaussDiagram& g, const Adjacency& a,
                                    const Adjacency& b, const Adjacency& c) {
    std::array<const Adjacency*, 3> adj{&a, &b, &c};
    // Three distinct arrows, each appearing in exactly two adjacencies.
    std::array<int, 6> arrs{a.arrow_first, a.arrow_second, b.arrow_first,
                            b.arrow_second, c.arrow_first, c.arrow_second};
    std::array<int, 6> sorted = arrs;
    std::sort(sorted.begin(), sorted.end());
    if (sorted[0] != sorted[1] || sorted[2] != sorted[3] || sorted[4] != sorted[5] ||
        sorted[1] == sorted[2] || sorted[3] == sorted[4])
        return std::nullopt;
    const int x = sorted[0], y = sorted[2], z = sorted[4];
    // Six distinct slots.
    std::array<EndpointRef, 6> slots{a.first, a.second, b.first,
                                     b.second, c.first, c.second};
    for (int i = 0; i < 6; ++i)
        for (int j = i + 1; j < 6; ++j)
            if (slots[i] == slots[j]) return std::nullopt;
    // Identify strands: P joins {x,y}, Q joins {x,z}, R joins {y,z}.
    const Adjacency* P = nullptr;
    const Adjacency* Q = nullptr;
    const Adjacency* R = nullptr;
    for (const Adjacency* t : adj) {
        const int lo = std::min(t->arrow_first, t->arrow_second);
        const int hi = std::max(t->arrow_first, t->arrow_second);
        if (lo == x && hi == y) P = t;
        else if (lo == x && hi == z) Q = t;
        else if (lo == y && hi == z) R = t;
    }
    if (!P || !Q || !R) return std::nullopt;

    auto head_on = [&](int arrow, const Adjacency* s) {
        const EndpointRef ref = s->arrow_first == arrow ? s->first : s->second;
        return g.at(ref).is_head;
    };
    std::uint16_t sig = 0;
    if (g.sign(x) > 0) sig |= 1 << 0;
    if (g.sign(y) > 0) sig |= 1 << 1;
    if (g.sign(z) > 0) sig |= 1 << 2;
    if (head_on(x, P)) sig |= 1 << 3;
    if (head_on(y, P)) sig |= 1 << 4;
    if (head_on(z, Q)) sig |= 1 << 5;
    if (P->arrow_first == x) sig |= 1 << 6;
    if (Q->arrow_first == x) sig |= 1 << 7;
    if (R->arrow_first == y) sig |= 1 << 8;
    if (!r3_catalog().test(sig)) return std::nullopt;

    R3Move m;
    m.arrows = {x, y, z};
    m.pairs = {std::array<EndpointRef, 2>{P->first, P->second},
               std::array<EndpointRef, 2>{Q->first, Q->second},
               std::array<EndpointRef, 2>{R->first, R->second}};
    return m;
}

std::vector<R3Move> r3_sites(const GaussDiagram& g) {
    std::vector<R3Move> out;
    const auto adj = collect_adjacencies(g);
    const int m = static_cast<int>(adj.size());
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            for (int k = j + 1; k < m; ++k)
                if (auto site = triangle_site(g, adj[i], adj[j], adj[k]))
                    out.push_back(*site);
    return out;
}

bool r1_removable(const GaussDiagram& g, int arrow) {
    const EndpointRef t = g.tail_of(arrow), h = g.head_of(arrow);
    return adjacent_on_circle(g, t, h) || adjacent_on_circle(g, h, t);
}

bool r2_removable(const GaussDiagram& g, int ax, int ay) {
    if (ax == ay) return false;
    if (g.sign(ax) + g.sign(ay) != 0) return false;
    const EndpointRef tx = g.tail_of(ax), ty = g.tail_of(ay);
    const EndpointRef hx = g.head_of(ax), hy = g.head_of(ay);
    const bool tails_adj = adjacent_on_circle(g, tx, ty) || adjacent_on_circle(g, ty, tx);
    const bool heads_adj = adjacent_on_circle(g, hx, hy) || adjacent_on_circle(g, hy, hx);
    return tails_adj && heads_adj;
}

GaussDiagram remove_arrows(const GaussDiagram& g, std::vector<int> dead) {
    std::sort(dead.begin(), dead.end());
    std::vector<int> remap(g.arrow_count(), -1);
    std::vector<int> signs;
    int next = 0;
    for (int a = 0; a < g.arrow_count(); ++a) {
        if (std::binary_search(dead.begin(), dead.end(), a)) continue;
        remap[a] = next++;
        signs.push_back(g.sign(a));
    }
    std::vector<std::vector<Endpoint>> comps(g.component_count());
    for (int c = 0; c < g.component_count(); ++c)
        for (const Endpoint& e : g.component(c))
            if (remap[e.arrow] >= 0) comps[c].push_back(Endpoint{remap[e.arrow], e.is_head});
    return GaussDiagram(std::move(comps), std::move(signs));
}

}  // namespace

MoveTag tag_of(const MoveSite& site) {
    return static_cast<MoveTag>(site.index());
}

std::string tag_name(MoveTag t) {
    switch (t) {
        case MoveTag::R1Add: return "R1_add";
        case MoveTag::R1Remove: return "R1_remove";
        case MoveTag::R2Add: return "R2_add";
        case MoveTag::R2Remove: return "R2_remove";
        case MoveTag::R3: return "R3";
        case MoveTag::BasePoint: return "base_point";
    }
    return "?";
}

std::string describe(const MoveSite& site) {
    std::string s = tag_name(tag_of(site));
    if (const auto* m = std::get_if<R1Add>(&site))
        s += " comp=" + std::to_string(m->comp) + " gap=" + std::to_string(m->gap) +
             " sign=" + std::to_string(m->sign) + (m->head_first ? " head_first" : " tail_first");
    else if (const auto* m = std::get_if<R1Remove>(&site))
        s += " arrow=" + std::to_string(m->arrow);
    else if (const auto* m = std::get_if<R2Add>(&site))
        s += " a=" + std::to_string(m->comp_a) + ":" + std::to_string(m->gap_a) +
             " b=" + std::to_string(m->comp_b) + ":" + std::to_string(m->gap_b) +
             (m->a_over ? " a_over" : " b_over") + (m->parallel ? " parallel" : " antiparallel") +
             " sign=" + std::to_string(m->first_sign);
    else if (const auto* m = std::get_if<R2Remove>(&site))
        s += " arrows=" + std::to_string(m->arrow_x) + "," + std::to_string(m->arrow_y);
    else if (const auto* m = std::get_if<R3Move>(&site))
        s += " arrows=" + std::to_string(m->arrows[0]) + "," +
             std::to_string(m->arrows[1]) + "," + std::to_string(m->arrows[2]);
    else if (const auto* m = std::get_if<BasePointMove>(&site))
        s += " comp=" + std::to_string(m->comp) + (m->forward ? " forward" : " backward");
    return s;
}

bool site_applicable(const GaussDiagram& g, const MoveSite& site) {
    if (const auto* m = std::get_if<R1Add>(&site)) {
        return m->comp >= 0 && m->comp < g.component_count() && m->gap >= 0 &&
               m->gap <= static_cast<int>(g.component(m->comp).size()) &&
               (m->sign == 1 || m->sign == -1);
    }
    if (const auto* m = std::get_if<R1Remove>(&site)) {
        return m->arrow >= 0 && m->arrow < g.arrow_count() && r1_removable(g, m->arrow);
    }
    if (const auto* m = std::get_if<R2Add>(&site)) {
        if (m->comp_a < 0 || m->comp_a >= g.component_count() || m->comp_b < 0 ||
            m->comp_b >= g.component_count())
            return false;
        if (m->gap_a < 0 || m->gap_a > static_cast<int>(g.component(m->comp_a).size()))
            return false;
        if (m->gap_b < 0 || m->gap_b > static_cast<int>(g.component(m->comp_b).size()))
            return false;
        if (m->comp_a == m->comp_b && m->gap_a == m->gap_b) return false;
        return m->first_sign == 1 || m->first_sign == -1;
    }
    if (const auto* m = std::get_if<R2Remove>(&site)) {
        return m->arrow_x >= 0 && m->arrow_x < g.arrow_count() && m->arrow_y >= 0 &&
               m->arrow_y < g.arrow_count() && r2_removable(g, m->arrow_x, m->arrow_y);
    }
    if (const auto* m = std::get_if<R3Move>(&site)) {
        std::array<Adjacency, 3> adj;
        for (int i = 0; i < 3; ++i) {
            const EndpointRef a = m->pairs[i][0], b = m->pairs[i][1];
            if (a.component < 0 || a.component >= g.component_count()) return false;
            const int len = static_cast<int>(g.component(a.component).size());
            if (a.slot < 0 || a.slot >= len) return false;
            if (!(g.next(a) == b)) return false;
            adj[i] = Adjacency{a, b, g.at(a).arrow, g.at(b).arrow};
            if (adj[i].arrow_first == adj[i].arrow_second) return false;
        }
        auto site2 = triangle_site(g, adj[0], adj[1], adj[2]);
        return site2 && site2->arrows == m->arrows;
    }
    if (const auto* m = std::get_if<BasePointMove>(&site)) {
        return m->comp >= 0 && m->comp < g.component_count();
    }
    return false;
}

GaussDiagram apply_move(const GaussDiagram& g, const MoveSite& site) {
    if (!site_applicable(g, site))
        throw InvariantError("move site is not applicable: " + describe(site));

    if (const auto* m = std::get_if<R1Add>(&site)) {
        auto comps = g.components();
        const int a = g.arrow_count();
        Endpoint head{a, true}, tail{a, false};
        auto& comp = comps[m->comp];
        comp.insert(comp.begin() + m->gap, m->head_first ? head : tail);
        comp.insert(comp.begin() + m->gap + 1, m->head_first ? tail : head);
        auto signs = g.signs();
        signs.push_back(m->sign);
        return GaussDiagram(std::move(comps), std::move(signs));
    }
    if (const auto* m = std::get_if<R1Remove>(&site)) {
        return remove_arrows(g, {m->arrow});
    }
    if (const auto* m = std::get_if<R2Add>(&site)) {
        const int a1 = g.arrow_count(), a2 = a1 + 1;
        auto comps = g.components();
        // Two endpoints on strand A (tails if a_over), two on strand B.
        Endpoint ea1{a1, !m->a_over}, ea2{a2, !m->a_over};
        Endpoint eb1{m->parallel ? a1 : a2, m->a_over};
        Endpoint eb2{m->parallel ? a2 : a1, m->a_over};
        // Insert at the later gap first so the earlier gap index stays valid.
        struct Ins { int comp; int gap; Endpoint e1, e2; };
        std::array<Ins, 2> ins{Ins{m->comp_a, m->gap_a, ea1, ea2},
                               Ins{m->comp_b, m->gap_b, eb1, eb2}};
        if (ins[0].comp == ins[1].comp && ins[0].gap < ins[1].gap)
            std::swap(ins[0], ins[1]);
        for (const Ins& i : ins) {
            auto& comp = comps[i.comp];
            comp.insert(comp.begin() + i.gap, i.e1);
            comp.insert(comp.begin() + i.gap + 1, i.e2);
        }
        auto signs = g.signs();
        signs.push_back(m->first_sign);
        signs.push_back(-m->first_sign);
        return GaussDiagram(std::move(comps), std::move(signs));
    }
    if (const auto* m = std::get_if<R2Remove>(&site)) {
        return remove_arrows(g, {m->arrow_x, m->arrow_y});
    }
    if (const auto* m = std::get_if<R3Move>(&site)) {
        auto comps = g.components();
        for (const auto& pair : m->pairs) {
            Endpoint& e1 = comps[pair[0].component][pair[0].slot];
            Endpoint& e2 = comps[pair[1].component][pair[1].slot];
            std::swap(e1, e2);
        }
        return GaussDiagram(std::move(comps), g.signs());
    }
    const auto& m = std::get<BasePointMove>(site);
    auto comps = g.components();
    auto& comp = comps[m.comp];
    if (comp.size() > 1) {
        if (m.forward)
            std::rotate(comp.begin(), comp.begin() + 1, comp.end());
        else
            std::rotate(comp.begin(), comp.end() - 1, comp.end());
    }
    return GaussDiagram(std::move(comps), g.signs());
}

std::vector<MoveSite> applicable_moves(const GaussDiagram& g) {
    std::vector<MoveSite> out;
    // R1 additions.
    for (int c = 0; c < g.component_count(); ++c) {
        const int len = static_cast<int>(g.component(c).size());
        for (int gap = 0; gap <= len; ++gap)
            for (int sign : {1, -1})
                for (bool hf : {false, true}) out.push_back(R1Add{c, gap, sign, hf});
    }
    // R2 additions: every ordered pair of distinct gap positions.
    std::vector<std::pair<int, int>> gaps;
    for (int c = 0; c < g.component_count(); ++c)
        for (int gap = 0; gap <= static_cast<int>(g.component(c).size()); ++gap)
            gaps.emplace_back(c, gap);
    for (const auto& [ca, ga] : gaps)
        for (const auto& [cb, gb] : gaps) {
            if (ca == cb && ga == gb) continue;
            for (bool a_over : {true, false})
                for (bool parallel : {true, false})
                    for (int sign : {1, -1})
                        out.push_back(R2Add{ca, ga, cb, gb, a_over, parallel, sign});
        }
    // Removals.
    for (int a = 0; a < g.arrow_count(); ++a)
        if (r1_removable(g, a)) out.push_back(R1Remove{a});
    for (int a = 0; a < g.arrow_count(); ++a)
        for (int b = a + 1; b < g.arrow_count(); ++b)
            if (r2_removable(g, a, b)) out.push_back(R2Remove{a, b});
    // R3.
    for (auto& site : r3_sites(g)) out.push_back(site);
    // Base points.
    for (int c = 0; c < g.component_count(); ++c) {
        if (g.component(c).empty()) continue;
        out.push_back(BasePointMove{c, true});
        out.push_back(BasePointMove{c, false});
    }
    return out;
}

// --- random walk -------------------------------------------------------------

std::uint64_t SplitMix64::next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::uint64_t SplitMix64::below(std::uint64_t bound) {
    // Bounds here are tiny relative to 2^64; modulo bias is negligible but we
    // reject anyway to keep walks well defined.
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t v;
    do {
        v = next();
    } while (v >= limit);
    return v % bound;
}

std::optional<MoveSite> random_move(const GaussDiagram& g, SplitMix64& rng,
                                    const WalkOptions& opts) {
    const bool adds_ok = g.arrow_count() < opts.max_crossings;

    std::vector<std::pair<int, int>> gaps;  // (component, gap)
    for (int c = 0; c < g.component_count(); ++c)
        for (int gap = 0; gap <= static_cast<int>(g.component(c).size()); ++gap)
            gaps.emplace_back(c, gap);

    std::vector<int> r1rm;
    for (int a = 0; a < g.arrow_count(); ++a)
        if (r1_removable(g, a)) r1rm.push_back(a);
    std::vector<std::pair<int, int>> r2rm;
    for (int a = 0; a < g.arrow_count(); ++a)
        for (int b = a + 1; b < g.arrow_count(); ++b)
            if (r2_removable(g, a, b)) r2rm.emplace_back(a, b);
    const auto r3 = r3_sites(g);

    std::vector<int> nonempty;
    for (int c = 0; c < g.component_count(); ++c)
        if (!g.component(c).empty()) nonempty.push_back(c);

    struct Kind { MoveTag tag; int weight; };
    std::vector<Kind> kinds;
    auto add_kind = [&](MoveTag t, bool available) {
        const int w = opts.mix[static_cast<int>(t)];
        if (w > 0 && available) kinds.push_back(Kind{t, w});
    };
    add_kind(MoveTag::R1Add, adds_ok && !gaps.empty());
    add_kind(MoveTag::R1Remove, !r1rm.empty());
    add_kind(MoveTag::R2Add, adds_ok && gaps.size() >= 2);
    add_kind(MoveTag::R2Remove, !r2rm.empty());
    add_kind(MoveTag::R3, !r3.empty());
    add_kind(MoveTag::BasePoint, !nonempty.empty());
    if (kinds.empty()) return std::nullopt;

    int total = 0;
    for (const Kind& k : kinds) total += k.weight;
    std::uint64_t r = rng.below(static_cast<std::uint64_t>(total));
    MoveTag chosen = kinds.back().tag;
    for (const Kind& k : kinds) {
        if (r < static_cast<std::uint64_t>(k.weight)) {
            chosen = k.tag;
            break;
        }
        r -= k.weight;
    }

    switch (chosen) {
        case MoveTag::R1Add: {
            const auto [c, gap] = gaps[rng.below(gaps.size())];
            const int sign = rng.below(2) ? 1 : -1;
            const bool hf = rng.below(2) != 0;
            return MoveSite{R1Add{c, gap, sign, hf}};
        }
        case MoveTag::R1Remove:
            return MoveSite{R1Remove{r1rm[rng.below(r1rm.size())]}};
        case MoveTag::R2Add: {
            const std::size_t ia = rng.below(gaps.size());
            std::size_t ib = rng.below(gaps.size() - 1);
            if (ib >= ia) ++ib;
            const auto [ca, ga] = gaps[ia];
            const auto [cb, gb] = gaps[ib];
            return MoveSite{R2Add{ca, ga, cb, gb, rng.below(2) != 0,
                                  rng.below(2) != 0, rng.below(2) ? 1 : -1}};
        }
        case MoveTag::R2Remove: {
            const auto [a, b] = r2rm[rng.below(r2rm.size())];
            return MoveSite{R2Remove{a, b}};
        }
        case MoveTag::R3:
            return MoveSite{r3[rng.below(r3.size())]};
        case MoveTag::BasePoint: {
            const int c = nonempty[rng.below(nonempty.size())];
            return MoveSite{BasePointMove{c, rng.below(2) != 0}};
        }
    }
    return std::nullopt;
}

std::vector<GaussDiagram> random_walk(const GaussDiagram& g, int steps,
                                      std::uint64_t seed, const WalkOptions& opts) {
    if (steps < 0) throw InvariantError("random_walk: steps must be >= 0");
    std::vector<GaussDiagram> out;
    out.reserve(steps + 1);
    out.push_back(g);
    SplitMix64 rng(seed);
    for (int i = 0; i < steps; ++i) {
        auto site = random_move(out.back(), rng, opts);
        if (!site) break;
        out.push_back(apply_move(out.back(), *site));
    }
    return out;
}

}  // namespace gdl
