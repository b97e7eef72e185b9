#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace sumlab {

enum class Shape { Cycle, Path };

struct ComponentKind {
    Shape shape;
    int order; // cycles >= 3, paths >= 2

    bool operator==(const ComponentKind&) const = default;
};

// A disjoint union of cycles and paths, i.e. a graph of maximum degree two
// without isolated vertices. Stored in input order; use processing_order()
// for the canonical labelling order.
struct GraphSpec {
    std::vector<ComponentKind> components;

    int vertex_count() const;
    int edge_count() const;
    int min_degree() const; // 1 if any path, else 2
    int max_degree() const; // 1 only for matchings (all P2), else 2
};

struct SpecParseError : std::runtime_error {
    std::size_t position;
    SpecParseError(const std::string& msg, std::size_t pos)
        : std::runtime_error(msg + " (at position " + std::to_string(pos) + ")"),
          position(pos) {}
};

// Grammar: SPEC := TERM ("+" TERM)*, TERM := [count] ("C"|"P") order.
// Whitespace is ignored. "5C3+2C4+P2" etc.
GraphSpec parse_spec(const std::string& text);

// Canonical printer: descending processing order with multiplicities,
// e.g. "3C9+2C7+C6+5C3+2C4+P9+2P8+P5+4P2". parse(print(s)) == canonical(s).
std::string to_canonical_string(const GraphSpec& spec);

// Non-C4 cycles descending, then all C4s, then paths descending; stable
// among equals.
std::vector<ComponentKind> processing_order(const GraphSpec& spec);

// Explicit vertex/edge realization with vertices 0..n-1 grouped by component
// in processing order.
struct ConcreteGraph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;
    // [first vertex id, kind] per component, in layout order.
    std::vector<std::pair<int, ComponentKind>> layout;
};

ConcreteGraph realize(const GraphSpec& spec);

// K_n realization for the complete-graph labeller and the generic search path.
ConcreteGraph make_complete(int n);

} // namespace sumlab
