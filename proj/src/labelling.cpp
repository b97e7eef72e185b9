#include "sumlab/labelling.hpp"

#include <algorithm>

namespace sumlab {

std::vector<Big> Labelling::vertex_labels() const {
    std::vector<Big> out;
    for (const auto& c : components)
        out.insert(out.end(), c.labels.begin(), c.labels.end());
    return out;
}

std::vector<Big> Labelling::all_labels() const {
    std::vector<Big> out = vertex_labels();
    out.insert(out.end(), isolates.begin(), isolates.end());
    return out;
}

std::set<Big> Labelling::label_set() const {
    auto v = all_labels();
    return std::set<Big>(v.begin(), v.end());
}

static std::pair<Big, Big> ordered(const Big& a, const Big& b) {
    return a < b ? std::make_pair(a, b) : std::make_pair(b, a);
}

std::vector<std::pair<Big, Big>> Labelling::claimed_edges() const {
    std::vector<std::pair<Big, Big>> edges;
    for (const auto& c : components) {
        const auto& L = c.labels;
        if (c.shape == PieceShape::Clique) {
            for (std::size_t i = 0; i < L.size(); ++i)
                for (std::size_t j = i + 1; j < L.size(); ++j)
                    edges.push_back(ordered(L[i], L[j]));
            continue;
        }
        for (std::size_t i = 0; i + 1 < L.size(); ++i)
            edges.push_back(ordered(L[i], L[i + 1]));
        if (c.shape == PieceShape::Cycle && L.size() >= 3)
            edges.push_back(ordered(L.back(), L.front()));
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return edges;
}

Labelling Labelling::scaled(const Big& c) const {
    Labelling out = *this;
    for (auto& comp : out.components)
        for (auto& l : comp.labels) l *= c;
    for (auto& l : out.isolates) l *= c;
    return out;
}

GraphSpec Labelling::target_spec() const {
    GraphSpec spec;
    for (const auto& c : components) {
        if (c.shape == PieceShape::Clique)
            throw std::logic_error("clique components have no cycle/path spec");
        spec.components.push_back({c.shape == PieceShape::Cycle ? Shape::Cycle : Shape::Path,
                                   static_cast<int>(c.labels.size())});
    }
    return spec;
}

} // namespace sumlab
