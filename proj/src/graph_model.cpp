#include "sumlab/graph_model.hpp"

#include <algorithm>
#include <cctype>
#include <map>

namespace sumlab {

int GraphSpec::vertex_count() const {
    int n = 0;
    for (const auto& c : components) n += c.order;
    return n;
}

int GraphSpec::edge_count() const {
    int m = 0;
    for (const auto& c : components)
        m += (c.shape == Shape::Cycle) ? c.order : c.order - 1;
    return m;
}

int GraphSpec::min_degree() const {
    for (const auto& c : components)
        if (c.shape == Shape::Path) return 1;
    return 2;
}

int GraphSpec::max_degree() const {
    for (const auto& c : components)
        if (c.shape == Shape::Cycle || c.order >= 3) return 2;
    return 1;
}

GraphSpec parse_spec(const std::string& text) {
    GraphSpec spec;
    std::size_t i = 0;
    const std::size_t len = text.size();

    auto skip_ws = [&] {
        while (i < len && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    auto read_number = [&](const char* what) -> long {
        std::size_t start = i;
        long value = 0;
        while (i < len && std::isdigit(static_cast<unsigned char>(text[i]))) {
            value = value * 10 + (text[i] - '0');
            if (value > 1000000) throw SpecParseError(std::string(what) + " too large", start);
            ++i;
        }
        if (i == start) throw SpecParseError(std::string("expected ") + what, i);
        return value;
    };

    skip_ws();
    if (i == len) throw SpecParseError("empty spec", 0);

    while (true) {
        skip_ws();
        long count = 1;
        if (i < len && std::isdigit(static_cast<unsigned char>(text[i]))) {
            std::size_t countPos = i;
            count = read_number("component count");
            if (count == 0) throw SpecParseError("zero count", countPos);
            skip_ws();
        }
        if (i >= len) throw SpecParseError("expected 'C' or 'P'", i);
        char kindCh = text[i];
        if (kindCh != 'C' && kindCh != 'P')
            throw SpecParseError("expected 'C' or 'P'", i);
        ++i;
        skip_ws();
        std::size_t orderPos = i;
        long order = read_number("component order");
        Shape shape = (kindCh == 'C') ? Shape::Cycle : Shape::Path;
        if (shape == Shape::Cycle && order < 3)
            throw SpecParseError("cycle order must be >= 3", orderPos);
        if (shape == Shape::Path && order < 2)
            throw SpecParseError("path order must be >= 2", orderPos);
        for (long c = 0; c < count; ++c)
            spec.components.push_back({shape, static_cast<int>(order)});

        skip_ws();
        if (i == len) break;
        if (text[i] != '+') throw SpecParseError("expected '+'", i);
        ++i;
        skip_ws();
        if (i == len) throw SpecParseError("trailing '+'", i);
    }
    return spec;
}

std::vector<ComponentKind> processing_order(const GraphSpec& spec) {
    std::vector<ComponentKind> order = spec.components;
    auto category = [](const ComponentKind& c) {
        if (c.shape == Shape::Cycle && c.order != 4) return 0;
        if (c.shape == Shape::Cycle) return 1;
        return 2;
    };
    std::stable_sort(order.begin(), order.end(),
                     [&](const ComponentKind& a, const ComponentKind& b) {
                         int ca = category(a), cb = category(b);
                         if (ca != cb) return ca < cb;
                         if (ca == 1) return false; // C4s all equal
                         return a.order > b.order;
                     });
    return order;
}

std::string to_canonical_string(const GraphSpec& spec) {
    auto order = processing_order(spec);
    std::string out;
    std::size_t i = 0;
    while (i < order.size()) {
        std::size_t j = i;
        while (j < order.size() && order[j] == order[i]) ++j;
        std::size_t count = j - i;
        if (!out.empty()) out += "+";
        if (count > 1) out += std::to_string(count);
        out += (order[i].shape == Shape::Cycle) ? "C" : "P";
        out += std::to_string(order[i].order);
        i = j;
    }
    return out;
}

ConcreteGraph realize(const GraphSpec& spec) {
    ConcreteGraph g;
    for (const auto& c : processing_order(spec)) {
        int base = g.n;
        g.layout.emplace_back(base, c);
        for (int v = 0; v + 1 < c.order; ++v)
            g.edges.emplace_back(base + v, base + v + 1);
        if (c.shape == Shape::Cycle)
            g.edges.emplace_back(base + c.order - 1, base);
        g.n += c.order;
    }
    return g;
}

ConcreteGraph make_complete(int n) {
    ConcreteGraph g;
    g.n = n;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            g.edges.emplace_back(a, b);
    return g;
}

} // namespace sumlab
