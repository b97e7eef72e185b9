#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sumlab/bigint.hpp"
#include "sumlab/labelling.hpp"

namespace sumlab {

enum class ViolationKind {
    DuplicateLabel,
    NonPositive,
    MissingEdge,
    UnwantedEdge,
    IsolateNotIsolated,
    // c4_structural_checks only:
    InternalC4Sum,
    FewDistinctC4Sums,
    NonArithmeticC4Sums,
};

struct Violation {
    ViolationKind kind;
    Big a; // label, or first label of the offending pair
    Big b; // second label of the pair; 0 when not applicable
};

struct Certificate {
    bool valid = true;
    std::vector<Violation> violations;
};

std::string violation_kind_name(ViolationKind k);
std::string describe(const Violation& v);

// All pairs {x,y}, x != y, with x+y in the set. Throws std::invalid_argument
// on duplicate or non-positive labels. Pairs returned as (smaller, larger),
// sorted.
std::vector<std::pair<Big, Big>> induced_edges(const std::vector<Big>& labels);

// Ground truth: the labels of `l` induce exactly l's claimed edges, and no
// induced edge touches an isolate label.
Certificate verify(const Labelling& l);

// Three labels x, x+d, x+2d present with offset d absent — the hook the C4
// grafting step scales into a fresh four-cycle.
struct NtapWitness {
    Big first;
    Big offset;
};

// All witnesses, sorted by (first, offset).
std::vector<NtapWitness> find_ntaps(const Labelling& l);

// True iff the sum of the two largest isolates differs from every vertex-pair
// sum (the precondition for growing a path out of the isolate pair). On
// failure the offending vertex pair is returned.
struct PathAppendCheck {
    bool ok = true;
    std::optional<std::pair<Big, Big>> offendingPair;
};
PathAppendCheck check_path_append(const Labelling& l);

// For each four-cycle component: its four edge sums avoid that cycle's own
// labels, take at least three distinct values, and — when exactly three —
// form an arithmetic progression.
Certificate c4_structural_checks(const Labelling& l);

} // namespace sumlab
