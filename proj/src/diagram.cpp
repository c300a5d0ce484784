#include "gdl/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

#include <json.hpp>

namespace gdl {

GaussDiagram::GaussDiagram(std::vector<std::vector<Endpoint>> components,
                           std::vector<int> signs)
    : comps_(std::move(components)), signs_(std::move(signs)) {
    const int n = arrow_count();
    tails_.assign(n, EndpointRef{});
    heads_.assign(n, EndpointRef{});
    std::vector<int> tail_seen(n, 0), head_seen(n, 0);
    for (int c = 0; c < component_count(); ++c) {
        for (int s = 0; s < static_cast<int>(comps_[c].size()); ++s) {
            const Endpoint& e = comps_[c][s];
            if (e.arrow < 0 || e.arrow >= n)
                throw InvariantError("endpoint references unknown arrow");
            EndpointRef ref{c, s};
            if (e.is_head) {
                ++head_seen[e.arrow];
                heads_[e.arrow] = ref;
            } else {
                ++tail_seen[e.arrow];
                tails_[e.arrow] = ref;
            }
        }
    }
    for (int a = 0; a < n; ++a) {
        if (tail_seen[a] != 1 || head_seen[a] != 1)
            throw InvariantError("arrow " + std::to_string(a) +
                                 " must have exactly one head and one tail endpoint");
        if (signs_[a] != 1 && signs_[a] != -1)
            throw InvariantError("arrow sign must be +1 or -1");
    }
}

EndpointRef GaussDiagram::next(EndpointRef r) const {
    const int len = static_cast<int>(comps_.at(r.component).size());
    return EndpointRef{r.component, (r.slot + 1) % len};
}

EndpointRef GaussDiagram::prev(EndpointRef r) const {
    const int len = static_cast<int>(comps_.at(r.component).size());
    return EndpointRef{r.component, (r.slot + len - 1) % len};
}

// --- Perm3 -------------------------------------------------------------------

Perm3::Perm3(std::array<int, 3> images) : img_(images) {
    std::array<int, 3> sorted = images;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != std::array<int, 3>{0, 1, 2})
        throw InvariantError("permutation images must be a rearrangement of {0,1,2}");
}

int Perm3::parity() const {
    int inversions = 0;
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            if (img_[i] > img_[j]) ++inversions;
    return inversions % 2 == 0 ? 1 : -1;
}

Perm3 Perm3::inverse() const {
    std::array<int, 3> inv{};
    for (int i = 0; i < 3; ++i) inv[img_[i]] = i;
    return Perm3(inv);
}

Perm3 Perm3::then(const Perm3& second) const {
    return Perm3({second(img_[0]), second(img_[1]), second(img_[2])});
}

const std::array<Perm3, 6>& Perm3::all() {
    static const std::array<Perm3, 6> perms = {
        Perm3({0, 1, 2}), Perm3({0, 2, 1}), Perm3({1, 0, 2}),
        Perm3({1, 2, 0}), Perm3({2, 0, 1}), Perm3({2, 1, 0})};
    return perms;
}

Perm3 Perm3::from_digits(std::string_view digits) {
    if (digits.size() != 3)
        throw InvariantError("permutation must be three digits, e.g. \"231\"");
    std::array<int, 3> img{};
    for (int i = 0; i < 3; ++i) {
        if (digits[i] < '1' || digits[i] > '3')
            throw InvariantError("permutation digits must be 1..3");
        img[i] = digits[i] - '1';
    }
    return Perm3(img);
}

std::string Perm3::to_digits() const {
    std::string s(3, '0');
    for (int i = 0; i < 3; ++i) s[i] = static_cast<char>('1' + img_[i]);
    return s;
}

// --- Gauss-code parsing ------------------------------------------------------

namespace {

struct RawToken {
    bool is_over = false;
    long label = 0;
    int sign = 0;
    std::size_t pos = 0;
};

// Splits text into component token lists. Every line is a component ('#'
// comments run to end of line; lines holding nothing but a comment are
// skipped); ';' separates additional components within a line; a trailing
// final newline does not open an extra component.
std::vector<std::vector<RawToken>> tokenize(std::string_view text) {
    std::vector<std::vector<RawToken>> comps;
    std::vector<RawToken> current;
    const std::size_t n = text.size();
    std::size_t i = 0;

    bool line_started = false;   // any character seen on this line
    bool line_tokens = false;    // any O/U token on this line
    bool line_semis = false;     // any ';' on this line
    bool line_comment = false;   // any comment on this line
    bool in_comment = false;

    auto end_line = [&](bool at_eof) {
        const bool comment_only = line_comment && !line_tokens && !line_semis;
        const bool empty_eof_tail = at_eof && !line_started;
        if (!comment_only && !empty_eof_tail) {
            comps.push_back(std::move(current));
        }
        current.clear();
        line_started = line_tokens = line_semis = line_comment = in_comment = false;
    };

    while (true) {
        if (i == n) {
            end_line(/*at_eof=*/true);
            break;
        }
        char ch = text[i];
        if (ch == '\n') {
            end_line(/*at_eof=*/false);
            ++i;
            continue;
        }
        line_started = true;
        if (in_comment) {
            ++i;
            continue;
        }
        if (ch == '#') {
            in_comment = true;
            line_comment = true;
            ++i;
            continue;
        }
        if (ch == ';') {
            line_semis = true;
            comps.push_back(std::move(current));
            current.clear();
            ++i;
            continue;
        }
        if (std::isspace(static_cast<unsigned char>(ch))) {
            ++i;
            continue;
        }
        // A token.
        line_tokens = true;
        RawToken tok;
        tok.pos = i;
        if (ch == 'O' || ch == 'o')
            tok.is_over = true;
        else if (ch == 'U' || ch == 'u')
            tok.is_over = false;
        else
            throw ParseError("expected 'O' or 'U'", i);
        ++i;
        if (i >= n || !std::isdigit(static_cast<unsigned char>(text[i])))
            throw ParseError("expected crossing label after O/U", i);
        long label = 0;
        while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) {
            label = label * 10 + (text[i] - '0');
            if (label > 1000000000) throw ParseError("crossing label too large", i);
            ++i;
        }
        tok.label = label;
        if (i >= n || (text[i] != '+' && text[i] != '-'))
            throw ParseError("expected '+' or '-' after crossing label", i);
        tok.sign = text[i] == '+' ? 1 : -1;
        ++i;
        if (i < n && !std::isspace(static_cast<unsigned char>(text[i])) &&
            text[i] != ';' && text[i] != '#' && text[i] != '\n')
            throw ParseError("unexpected character after token", i);
        current.push_back(tok);
    }
    return comps;
}

}  // namespace

GaussDiagram parse_gauss_code(std::string_view text) {
    auto comps_tokens = tokenize(text);

    struct LabelInfo {
        int arrow = -1;
        int over_count = 0;
        int under_count = 0;
        int sign = 0;
        std::size_t first_pos = 0;
    };
    std::map<long, LabelInfo> labels;
    int next_arrow = 0;

    std::vector<std::vector<Endpoint>> comps;
    std::vector<int> signs;
    comps.reserve(comps_tokens.size());
    for (const auto& toks : comps_tokens) {
        std::vector<Endpoint> comp;
        comp.reserve(toks.size());
        for (const RawToken& t : toks) {
            auto [it, fresh] = labels.try_emplace(t.label);
            LabelInfo& info = it->second;
            if (fresh) {
                info.arrow = next_arrow++;
                info.sign = t.sign;
                info.first_pos = t.pos;
                signs.push_back(t.sign);
            } else if (info.sign != t.sign) {
                throw ParseError("sign mismatch between O and U occurrences of label " +
                                     std::to_string(t.label),
                                 t.pos);
            }
            if (t.is_over) {
                if (++info.over_count > 1)
                    throw ParseError("label " + std::to_string(t.label) +
                                         " used more than once as O",
                                     t.pos);
            } else {
                if (++info.under_count > 1)
                    throw ParseError("label " + std::to_string(t.label) +
                                         " used more than once as U",
                                     t.pos);
            }
            // Tail = over strand, head = under strand.
            comp.push_back(Endpoint{info.arrow, /*is_head=*/!t.is_over});
        }
        comps.push_back(std::move(comp));
    }
    for (const auto& [label, info] : labels) {
        if (info.over_count != 1 || info.under_count != 1)
            throw ParseError("label " + std::to_string(label) +
                                 " must appear exactly once as O and once as U",
                             info.first_pos);
    }
    return GaussDiagram(std::move(comps), std::move(signs));
}

namespace {

// Canonical labels: 1..n in order of first occurrence (O or U) in traversal
// order. This matches the order in which parse_gauss_code numbers arrows,
// which is what makes parse(serialize(g)) reproduce g exactly.
std::vector<int> canonical_labels(const GaussDiagram& g) {
    std::vector<int> label(g.arrow_count(), 0);
    int next_label = 1;
    for (int c = 0; c < g.component_count(); ++c)
        for (const Endpoint& e : g.component(c))
            if (label[e.arrow] == 0) label[e.arrow] = next_label++;
    return label;
}

}  // namespace

bool GaussDiagram::operator==(const GaussDiagram& o) const {
    if (comps_ == o.comps_ && signs_ == o.signs_) return true;
    if (component_count() != o.component_count() || arrow_count() != o.arrow_count())
        return false;
    return serialize(*this) == serialize(o);
}

std::string serialize(const GaussDiagram& g) {
    const std::vector<int> label = canonical_labels(g);
    std::string out;
    for (int c = 0; c < g.component_count(); ++c) {
        const auto& comp = g.component(c);
        for (std::size_t s = 0; s < comp.size(); ++s) {
            if (s) out += ' ';
            const Endpoint& e = comp[s];
            out += e.is_head ? 'U' : 'O';
            out += std::to_string(label[e.arrow]);
            out += g.sign(e.arrow) > 0 ? '+' : '-';
        }
        out += '\n';
    }
    return out;
}

GaussDiagram parse_gauss_json(std::string_view text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what(), e.byte);
    }
    if (!j.is_object() || !j.contains("components") || !j["components"].is_array())
        throw ParseError("expected object with \"components\" array", 0);
    std::string code;
    for (const auto& comp : j["components"]) {
        if (!comp.is_array()) throw ParseError("component must be an array", 0);
        bool first = true;
        for (const auto& tok : comp) {
            std::string kind = tok.at("kind").get<std::string>();
            long label = tok.at("label").get<long>();
            int sign = tok.at("sign").get<int>();
            if ((kind != "O" && kind != "U") || (sign != 1 && sign != -1))
                throw ParseError("bad token in JSON component", 0);
            if (!first) code += ' ';
            first = false;
            code += kind + std::to_string(label) + (sign > 0 ? "+" : "-");
        }
        code += '\n';
    }
    if (j["components"].empty()) code = "";
    return parse_gauss_code(code);
}

std::string serialize_json(const GaussDiagram& g) {
    const std::vector<int> label = canonical_labels(g);
    nlohmann::json comps = nlohmann::json::array();
    for (int c = 0; c < g.component_count(); ++c) {
        nlohmann::json comp = nlohmann::json::array();
        for (const Endpoint& e : g.component(c)) {
            comp.push_back({{"kind", e.is_head ? "U" : "O"},
                            {"label", label[e.arrow]},
                            {"sign", g.sign(e.arrow)}});
        }
        comps.push_back(std::move(comp));
    }
    return nlohmann::json{{"components", std::move(comps)}}.dump();
}

// --- structural operations ---------------------------------------------------

GaussDiagram permute_components(const GaussDiagram& g, const Perm3& p) {
    if (g.component_count() != 3)
        throw InvariantError("permute_components requires a 3-component diagram");
    std::vector<std::vector<Endpoint>> comps(3);
    for (int r = 0; r < 3; ++r) comps[r] = g.component(p(r));
    return GaussDiagram(std::move(comps), g.signs());
}

GaussDiagram reverse_component(const GaussDiagram& g, int c) {
    if (c < 0 || c >= g.component_count())
        throw InvariantError("reverse_component: bad component index");
    auto comps = g.components();
    std::reverse(comps[c].begin(), comps[c].end());
    std::vector<int> signs = g.signs();
    for (int a = 0; a < g.arrow_count(); ++a) {
        const bool tail_on_c = g.tail_of(a).component == c;
        const bool head_on_c = g.head_of(a).component == c;
        if (tail_on_c != head_on_c) signs[a] = -signs[a];
    }
    return GaussDiagram(std::move(comps), std::move(signs));
}

GaussDiagram mirror(const GaussDiagram& g) {
    auto comps = g.components();
    for (auto& comp : comps)
        for (Endpoint& e : comp) e.is_head = !e.is_head;
    std::vector<int> signs = g.signs();
    for (int& s : signs) s = -s;
    return GaussDiagram(std::move(comps), std::move(signs));
}

GaussDiagram splice(const GaussDiagram& a, const GaussDiagram& b) {
    if (a.component_count() != b.component_count())
        throw InvariantError("splice: component counts differ");
    const int offset = a.arrow_count();
    std::vector<std::vector<Endpoint>> comps(a.component_count());
    for (int c = 0; c < a.component_count(); ++c) {
        comps[c] = a.component(c);
        for (const Endpoint& e : b.component(c))
            comps[c].push_back(Endpoint{e.arrow + offset, e.is_head});
    }
    std::vector<int> signs = a.signs();
    signs.insert(signs.end(), b.signs().begin(), b.signs().end());
    return GaussDiagram(std::move(comps), std::move(signs));
}

}  // namespace gdl
