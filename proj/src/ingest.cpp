#include "gdl/ingest.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

#include <json.hpp>

#include "gdl/moves.hpp"  // SplitMix64

namespace gdl {

namespace {

Vec3 sub(const Vec3& a, const Vec3& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }
double dot(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }
Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}
double norm(const Vec3& a) { return std::sqrt(dot(a, a)); }
Vec3 scale(const Vec3& a, double s) { return {a[0] * s, a[1] * s, a[2] * s}; }

void validate(const Polyline3& p) {
    for (const auto& loop : p.loops) {
        if (loop.size() < 3)
            throw InvariantError("each polyline loop needs at least 3 points");
        for (std::size_t i = 0; i < loop.size(); ++i) {
            const Vec3 d = sub(loop[(i + 1) % loop.size()], loop[i]);
            if (norm(d) == 0.0)
                throw InvariantError("consecutive polyline points must be distinct");
        }
    }
}

struct Incidence {
    int crossing;
    double along;  // segment index + parameter, for ordering along the loop
    bool is_over;
};

// Thrown internally to trigger a direction retry.
struct Degenerate {};

GaussDiagram project_once(const Polyline3& p, const Vec3& dir) {
    const double dn = norm(dir);
    if (dn == 0.0) throw InvariantError("projection direction must be nonzero");
    const Vec3 w = scale(dir, 1.0 / dn);
    // Frame (u, v, w), u chosen against the least-aligned axis.
    int axis = 0;
    for (int i = 1; i < 3; ++i)
        if (std::abs(w[i]) < std::abs(w[axis])) axis = i;
    Vec3 e{};
    e[axis] = 1.0;
    Vec3 u = cross(w, e);
    u = scale(u, 1.0 / norm(u));
    const Vec3 v = cross(w, u);

    struct Pt {
        double x, y, z;
    };
    std::vector<std::vector<Pt>> loops;
    double span = 0.0;
    for (const auto& loop : p.loops) {
        std::vector<Pt> pts;
        pts.reserve(loop.size());
        for (const Vec3& q : loop) {
            pts.push_back(Pt{dot(q, u), dot(q, v), dot(q, w)});
            span = std::max({span, std::abs(pts.back().x), std::abs(pts.back().y),
                             std::abs(pts.back().z)});
        }
        loops.push_back(std::move(pts));
    }
    const double eps = 1e-9 * std::max(span, 1.0);

    struct Crossing {
        int sign;
        int over_loop;
    };
    std::vector<Crossing> crossings;
    std::vector<std::vector<Incidence>> incidences(loops.size());

    const int nl = static_cast<int>(loops.size());
    for (int li = 0; li < nl; ++li) {
        const auto& a = loops[li];
        const int na = static_cast<int>(a.size());
        for (int lj = li; lj < nl; ++lj) {
            const auto& b = loops[lj];
            const int nb = static_cast<int>(b.size());
            for (int si = 0; si < na; ++si) {
                const int sj_start = (li == lj) ? si + 1 : 0;
                for (int sj = sj_start; sj < nb; ++sj) {
                    if (li == lj) {
                        // Skip the segment itself and neighbors sharing a vertex.
                        if (sj == si || sj == (si + 1) % na || si == (sj + 1) % nb)
                            continue;
                    }
                    const Pt& p0 = a[si];
                    const Pt& p1 = a[(si + 1) % na];
                    const Pt& q0 = b[sj];
                    const Pt& q1 = b[(sj + 1) % nb];
                    const double rx = p1.x - p0.x, ry = p1.y - p0.y;
                    const double wx = q1.x - q0.x, wy = q1.y - q0.y;
                    const double denom = rx * wy - ry * wx;
                    const double rlen = std::hypot(rx, ry), wlen = std::hypot(wx, wy);
                    if (rlen < eps || wlen < eps) throw Degenerate{};
                    if (std::abs(denom) < 1e-7 * rlen * wlen) {
                        // Near-parallel: degenerate only if the segments come close.
                        const double dx = q0.x - p0.x, dy = q0.y - p0.y;
                        const double off = std::abs(dx * ry - dy * rx) / rlen;
                        const double t0 = (dx * rx + dy * ry) / (rlen * rlen);
                        const double t1 = t0 + (wx * rx + wy * ry) / (rlen * rlen);
                        const bool overlap =
                            std::max(t0, t1) > -0.05 && std::min(t0, t1) < 1.05;
                        if (off < 16 * eps && overlap) throw Degenerate{};
                        continue;
                    }
                    const double dx = q0.x - p0.x, dy = q0.y - p0.y;
                    const double t = (dx * wy - dy * wx) / denom;
                    const double s = (dx * ry - dy * rx) / denom;
                    const double teps = 16 * eps / std::max(rlen, eps);
                    const double seps = 16 * eps / std::max(wlen, eps);
                    if (t < -teps || t > 1 + teps || s < -seps || s > 1 + seps) continue;
                    if (t < teps || t > 1 - teps || s < seps || s > 1 - seps)
                        throw Degenerate{};
                    const double za = p0.z + t * (p1.z - p0.z);
                    const double zb = q0.z + s * (q1.z - q0.z);
                    if (std::abs(za - zb) < 16 * eps) throw Degenerate{};
                    const bool a_over = za > zb;  // +w points toward the viewer
                    int sign;
                    if (a_over)
                        sign = (rx * wy - ry * wx) > 0 ? 1 : -1;
                    else
                        sign = (wx * ry - wy * rx) > 0 ? 1 : -1;
                    const int id = static_cast<int>(crossings.size());
                    crossings.push_back(Crossing{sign, a_over ? li : lj});
                    incidences[li].push_back(Incidence{id, si + t, a_over});
                    incidences[lj].push_back(Incidence{id, sj + s, !a_over});
                }
            }
        }
    }

    std::string code;
    for (int li = 0; li < nl; ++li) {
        auto& inc = incidences[li];
        std::sort(inc.begin(), inc.end(),
                  [](const Incidence& x, const Incidence& y) { return x.along < y.along; });
        bool first = true;
        for (const Incidence& i : inc) {
            if (!first) code += ' ';
            first = false;
            code += i.is_over ? 'O' : 'U';
            code += std::to_string(i.crossing + 1);
            code += crossings[i.crossing].sign > 0 ? '+' : '-';
        }
        code += '\n';
    }
    return parse_gauss_code(code);
}

}  // namespace

GaussDiagram project(const Polyline3& p, Vec3 direction, std::uint64_t seed,
                     int max_retries) {
    validate(p);
    SplitMix64 rng(seed ^ 0xa0761d6478bd642fULL);
    Vec3 dir = direction;
    for (int attempt = 0; attempt <= max_retries; ++attempt) {
        try {
            return project_once(p, dir);
        } catch (const Degenerate&) {
            // Deterministic perturbation, growing with the attempt count.
            const double mag = 1e-4 * (1 + attempt);
            auto unit = [&]() {
                return (static_cast<double>(rng.below(1u << 20)) / (1u << 20) - 0.5);
            };
            dir = {direction[0] + mag * unit(), direction[1] + mag * unit(),
                   direction[2] + mag * unit()};
        }
    }
    throw InvariantError("projection retry bound exhausted (pathological input)");
}

GaussDiagram project(const Polyline3& p, std::uint64_t seed) {
    SplitMix64 rng(seed);
    auto unit = [&]() {
        return static_cast<double>(rng.below(1u << 20)) / (1u << 20) - 0.5;
    };
    Vec3 dir{unit(), unit(), unit()};
    if (norm(dir) < 1e-3) dir = {0.351, 0.674, 0.912};
    return project(p, dir, rng.next());
}

// --- polyline file formats ---------------------------------------------------

Polyline3 parse_polyline_xyz(std::string_view text) {
    Polyline3 p;
    std::vector<Vec3> current;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        std::istringstream ls(line);
        double x, y, z;
        if (ls >> x >> y >> z) {
            current.push_back({x, y, z});
        } else {
            std::string rest;
            ls.clear();
            if (ls >> rest) throw ParseError("bad xyz line: " + line, 0);
            if (!current.empty()) {
                p.loops.push_back(std::move(current));
                current.clear();
            }
        }
    }
    if (!current.empty()) p.loops.push_back(std::move(current));
    return p;
}

Polyline3 parse_polyline_json(std::string_view text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what(), e.byte);
    }
    Polyline3 p;
    for (const auto& loop : j.at("components")) {
        std::vector<Vec3> pts;
        for (const auto& pt : loop)
            pts.push_back({pt.at(0).get<double>(), pt.at(1).get<double>(),
                           pt.at(2).get<double>()});
        p.loops.push_back(std::move(pts));
    }
    return p;
}

// --- PD codes ----------------------------------------------------------------

PdCode parse_pd(std::string_view text) {
    PdCode pd;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        for (char& c : line)
            if (c == ',' || c == '[' || c == ']' || c == '(' || c == ')') c = ' ';
        std::istringstream ls(line);
        std::string word;
        if (!(ls >> word)) continue;
        if (word == "X") {
            PdCrossing x;
            if (!(ls >> x.edges[0] >> x.edges[1] >> x.edges[2] >> x.edges[3]))
                throw ParseError("bad PD crossing line: " + line, 0);
            pd.crossings.push_back(x);
        } else if (word == "unknots") {
            if (!(ls >> pd.extra_unknots) || pd.extra_unknots < 0)
                throw ParseError("bad unknots line: " + line, 0);
        } else {
            throw ParseError("unrecognized PD line: " + line, 0);
        }
    }
    return pd;
}

GaussDiagram pd_to_gauss(const PdCode& pd) {
    const int nc = static_cast<int>(pd.crossings.size());
    // Incidences per edge label: (crossing, position).
    std::map<long, std::vector<std::pair<int, int>>> edges;
    for (int c = 0; c < nc; ++c)
        for (int pos = 0; pos < 4; ++pos)
            edges[pd.crossings[c].edges[pos]].push_back({c, pos});
    for (const auto& [label, inc] : edges)
        if (inc.size() != 2)
            throw InvariantError("PD edge " + std::to_string(label) +
                                 " must appear exactly twice");

    // Orient the over strands: over_in[c] true means position 1 is the
    // incoming over edge (else position 3). Positions 0/2 are under in/out.
    std::vector<int> over_in(nc, -1);  // -1 unknown, 1 pos1 in, 0 pos3 in
    // status(c,pos) == incoming is: pos0 -> true, pos2 -> false,
    // pos1 -> over_in, pos3 -> !over_in. Each edge is incoming at exactly one
    // of its two incidences. Propagate until stable.
    bool changed = true;
    auto known = [&](int c, int pos, bool& in) {
        if (pos == 0) { in = true; return true; }
        if (pos == 2) { in = false; return true; }
        if (over_in[c] < 0) return false;
        in = (pos == 1) == (over_in[c] == 1);
        return true;
    };
    auto force = [&](int c, int pos, bool in) {
        const int v = (pos == 1) == in ? 1 : 0;
        if (over_in[c] >= 0 && over_in[c] != v)
            throw InvariantError("inconsistent PD code (over-strand orientation)");
        over_in[c] = v;
    };
    while (changed) {
        changed = false;
        for (const auto& [label, inc] : edges) {
            bool in0, in1;
            const bool k0 = known(inc[0].first, inc[0].second, in0);
            const bool k1 = known(inc[1].first, inc[1].second, in1);
            if (k0 && k1) {
                if (in0 == in1)
                    throw InvariantError("inconsistent PD code at edge " +
                                         std::to_string(label));
            } else if (k0 && !k1) {
                force(inc[1].first, inc[1].second, !in0);
                changed = true;
            } else if (!k0 && k1) {
                force(inc[0].first, inc[0].second, !in1);
                changed = true;
            }
        }
    }
    // Components lying entirely over: fall back to the consecutive-label
    // convention (over runs b -> d when d follows b).
    for (int c = 0; c < nc; ++c) {
        if (over_in[c] >= 0) continue;
        const long b = pd.crossings[c].edges[1], d = pd.crossings[c].edges[3];
        bool pos1_in;
        if (d == b + 1) pos1_in = true;
        else if (b == d + 1) pos1_in = false;
        else pos1_in = b > d;  // wrap-around of a cyclic labeling
        over_in[c] = pos1_in ? 1 : 0;
        // Re-propagate after each heuristic assignment.
        changed = true;
        while (changed) {
            changed = false;
            for (const auto& [label, inc] : edges) {
                bool in0, in1;
                const bool k0 = known(inc[0].first, inc[0].second, in0);
                const bool k1 = known(inc[1].first, inc[1].second, in1);
                if (k0 && k1) {
                    if (in0 == in1)
                        throw InvariantError("inconsistent PD code at edge " +
                                             std::to_string(label));
                } else if (k0 != k1) {
                    if (k0) force(inc[1].first, inc[1].second, !in0);
                    else force(inc[0].first, inc[0].second, !in1);
                    changed = true;
                }
            }
        }
    }

    // Successor map: incoming edge -> outgoing edge at its crossing.
    std::map<long, long> succ;
    std::map<long, std::pair<int, bool>> incoming_at;  // edge -> (crossing, is_over)
    for (int c = 0; c < nc; ++c) {
        const auto& e = pd.crossings[c].edges;
        succ[e[0]] = e[2];
        incoming_at[e[0]] = {c, false};
        const long oin = over_in[c] == 1 ? e[1] : e[3];
        const long oout = over_in[c] == 1 ? e[3] : e[1];
        succ[oin] = oout;
        incoming_at[oin] = {c, true};
    }

    // Trace edge cycles into components, smallest unvisited edge first.
    std::vector<int> sign(nc);
    for (int c = 0; c < nc; ++c) sign[c] = over_in[c] == 1 ? -1 : 1;
    std::string code;
    std::map<long, bool> visited;
    for (const auto& [start, unused] : succ) {
        if (visited.count(start)) continue;
        std::string compline;
        long e = start;
        do {
            if (visited[e]) throw InvariantError("PD code has open strands");
            visited[e] = true;
            const auto [c, over] = incoming_at.at(e);
            if (!compline.empty()) compline += ' ';
            compline += over ? 'O' : 'U';
            compline += std::to_string(c + 1);
            compline += sign[c] > 0 ? '+' : '-';
            auto it = succ.find(e);
            if (it == succ.end()) throw InvariantError("PD code has open strands");
            e = it->second;
        } while (e != start);
        code += compline + "\n";
    }
    for (int i = 0; i < pd.extra_unknots; ++i) code += "\n";
    return parse_gauss_code(code);
}

}  // namespace gdl
