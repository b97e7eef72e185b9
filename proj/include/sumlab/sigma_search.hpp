#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sumlab/graph_model.hpp"
#include "sumlab/labelling.hpp"

namespace sumlab {

struct SearchLimits {
    // Upper bound on extension attempts; also guards the raw C(B, n+i)
    // estimate before starting. 0 = default (1e10).
    std::uint64_t nodeLimit = 0;
    double timeLimitSeconds = 0; // 0 = unlimited
};

enum class SearchStatus { Found, RefutedUpTo, BudgetExceeded };

struct SigmaSearchResult {
    SearchStatus status = SearchStatus::RefutedUpTo;
    int boundB = 0;
    // Found:
    int foundIsolates = -1;
    std::optional<Labelling> witness;
    // RefutedUpTo: every isolate count in [minDegree, refutedUpToIsolates]
    // has no valid labelling with labels <= B.
    int refutedUpToIsolates = -1;
    std::uint64_t nodes = 0;
    double elapsedSeconds = 0;
    std::string message;
};

// For i = delta(graph)..iMax ascending, look for S subset of [1,B] with
// |S| = n+i and gcd(S) = 1 whose induced sum graph is graph + i isolates
// (component-kind multiset match for max-degree-two targets, exact
// edge-matching otherwise). Subsets are enumerated in lexicographic ascending
// order, so the first witness is deterministic. A refutation only says "no
// such labelling with labels <= B" — bounded evidence, not a proof.
SigmaSearchResult min_isolates_bounded(const ConcreteGraph& graph, int B, int iMax,
                                       const SearchLimits& limits = {});

struct RangeSearchResult {
    SearchStatus status = SearchStatus::RefutedUpTo;
    int boundB = 0;
    int achievedRange = -1;
    std::optional<Labelling> witness;
    std::uint64_t nodes = 0;
    double elapsedSeconds = 0;
    std::string message;
};

// Smallest max-min over valid labellings of graph + (<= isolateBudget)
// isolates with labels <= B. Ranges are tried ascending from the
// 2n-(Delta-delta)-2 floor; for each range r, windows [m, m+r] are scanned
// with both endpoints required, so the report is exact within [1,B].
RangeSearchResult min_range_bounded(const ConcreteGraph& graph, int isolateBudget,
                                    int B, const SearchLimits& limits = {});

namespace detail {
// Unpruned reference implementations (plain subset enumeration + full check
// at every leaf). Exposed for the equivalence tests only.
SigmaSearchResult min_isolates_bounded_unpruned(const ConcreteGraph& graph, int B,
                                                int iMax);
RangeSearchResult min_range_bounded_unpruned(const ConcreteGraph& graph,
                                             int isolateBudget, int B);
// Induced component classification used at search leaves; exposed for tests.
struct InducedShape {
    bool maxDegreeAtMostTwo = false;
    std::vector<ComponentKind> components; // non-isolate components
    int isolateCount = 0;
};
InducedShape classify_induced(const std::vector<int>& labels);
} // namespace detail

} // namespace sumlab
