#pragma once

#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "sumlab/bigint.hpp"
#include "sumlab/graph_model.hpp"

namespace sumlab {

enum class PieceShape { Cycle, Path, Clique };

// One labelled component: cycle labels in cyclic order, path labels in path
// order, clique labels in any order (every pair adjacent).
struct LabelledComponent {
    PieceShape shape;
    std::vector<Big> labels;
};

// A claimed sum labelling: labelled components plus isolate labels. The
// verifier decides whether the labels actually induce exactly the claimed
// edges.
struct Labelling {
    std::vector<LabelledComponent> components;
    std::vector<Big> isolates;

    std::vector<Big> vertex_labels() const;
    std::vector<Big> all_labels() const;
    std::set<Big> label_set() const;

    // Unordered label pairs claimed adjacent (consecutive-in-order plus the
    // cycle wraparound; all pairs for cliques).
    std::vector<std::pair<Big, Big>> claimed_edges() const;

    Labelling scaled(const Big& c) const;

    // The component-kind view (cliques excluded; throws if any present).
    GraphSpec target_spec() const;
};

// Thrown when a construction that is supposed to be correct by design fails
// its own verification — always indicates a bug or a broken parameter set,
// never a condition to handle silently.
struct ConstructionIntegrityError : std::logic_error {
    using std::logic_error::logic_error;
};

} // namespace sumlab
