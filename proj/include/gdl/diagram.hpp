#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace gdl {

// Error thrown for malformed Gauss codes. `position` is a byte offset into
// the input text (or npos when the error is not tied to one location).
struct ParseError : std::runtime_error {
    ParseError(const std::string& msg, std::size_t position)
        : std::runtime_error(msg), position(position) {}
    std::size_t position;
};

struct InvariantError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Reference to one arrow endpoint: component index + slot position on that
// component. Slot 0 is the first endpoint after the component's base point.
struct EndpointRef {
    int component = -1;
    int slot = -1;
    friend bool operator==(const EndpointRef&, const EndpointRef&) = default;
};

// A signed directed chord. The tail lies on the over-passing strand, the
// head on the under-passing strand (arrow points over -> under).
struct Arrow {
    EndpointRef tail;
    EndpointRef head;
    int sign = 0;  // +1 or -1
    friend bool operator==(const Arrow&, const Arrow&) = default;
};

// Slot content as stored per component.
struct Endpoint {
    int arrow = -1;
    bool is_head = false;
    friend bool operator==(const Endpoint&, const Endpoint&) = default;
};

// A based, ordered, multi-component Gauss diagram. Immutable after
// construction; every "mutation" builds a new diagram.
class GaussDiagram {
  public:
    GaussDiagram() = default;

    // components[c] lists the endpoints on circle c in base-point order;
    // signs[a] is the sign of arrow a. Validates the whole structure.
    GaussDiagram(std::vector<std::vector<Endpoint>> components, std::vector<int> signs);

    int component_count() const { return static_cast<int>(comps_.size()); }
    int arrow_count() const { return static_cast<int>(signs_.size()); }

    const std::vector<Endpoint>& component(int c) const { return comps_.at(c); }
    const std::vector<std::vector<Endpoint>>& components() const { return comps_; }

    int sign(int arrow) const { return signs_.at(arrow); }
    const std::vector<int>& signs() const { return signs_; }

    EndpointRef tail_of(int arrow) const { return tails_.at(arrow); }
    EndpointRef head_of(int arrow) const { return heads_.at(arrow); }
    Arrow arrow(int a) const { return Arrow{tails_.at(a), heads_.at(a), signs_.at(a)}; }

    const Endpoint& at(EndpointRef r) const { return comps_.at(r.component).at(r.slot); }

    // Cyclic successor / predecessor of a slot on its component.
    EndpointRef next(EndpointRef r) const;
    EndpointRef prev(EndpointRef r) const;

    // Semantic equality: same based diagram regardless of how the arrows
    // happen to be numbered internally. Base points, component order and
    // orientations all matter.
    bool operator==(const GaussDiagram& o) const;

  private:
    std::vector<std::vector<Endpoint>> comps_;
    std::vector<int> signs_;
    // Derived lookup tables, rebuilt on construction.
    std::vector<EndpointRef> tails_;
    std::vector<EndpointRef> heads_;
};

// A permutation of the three circle roles. images()[r] is the 0-based
// component assigned to role r (roles 0,1,2 = the template circles i,j,k).
class Perm3 {
  public:
    constexpr Perm3() : img_{0, 1, 2} {}
    explicit Perm3(std::array<int, 3> images);

    int operator()(int role) const { return img_[role]; }
    const std::array<int, 3>& images() const { return img_; }
    int parity() const;  // +1 or -1

    Perm3 inverse() const;
    Perm3 then(const Perm3& second) const;  // apply *this first, then second

    // The six elements of S3 in a fixed enumeration order.
    static const std::array<Perm3, 6>& all();
    // Parse "123".."321" (1-based images of roles 1,2,3).
    static Perm3 from_digits(std::string_view digits);
    std::string to_digits() const;

    friend bool operator==(const Perm3&, const Perm3&) = default;

  private:
    std::array<int, 3> img_;
};

// --- parsing / serialization -----------------------------------------------

// Gauss-code text: one component per line (also ';' separates components
// within a line); tokens are ("O"|"U") + decimal label + ("+"|"-");
// '#' starts a comment. An empty line is an empty component.
GaussDiagram parse_gauss_code(std::string_view text);

// Canonical form: crossings relabeled 1..n in order of first occurrence,
// one component per line, newline-terminated. parse_gauss_code(serialize(g))
// reproduces g exactly.
std::string serialize(const GaussDiagram& g);

// JSON form: {"components":[[{"kind":"O","label":1,"sign":1},...],...]}
GaussDiagram parse_gauss_json(std::string_view text);
std::string serialize_json(const GaussDiagram& g);

// --- structural operations --------------------------------------------------

// Reorders the component list: new component p(r) <- old component r is the
// binding used by pattern evaluation; here we produce the diagram whose
// component r is the old component p(r).
GaussDiagram permute_components(const GaussDiagram& g, const Perm3& p);

// Reverses the orientation of one component; crossings between c and other
// components change sign, intra-component crossings keep theirs.
GaussDiagram reverse_component(const GaussDiagram& g, int c);

// Mirror image: every arrow swaps head/tail and flips sign.
GaussDiagram mirror(const GaussDiagram& g);

// Component-wise connected sum at the base points (both diagrams must have
// the same component count).
GaussDiagram splice(const GaussDiagram& a, const GaussDiagram& b);

}  // namespace gdl
