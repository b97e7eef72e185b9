#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sumlab/bigint.hpp"
#include "sumlab/graph_model.hpp"
#include "sumlab/labelling.hpp"
#include "sumlab/verifier.hpp"

namespace sumlab {

// Growing labelling with its pending isolates, optional NTAP hook, and an
// audit trace. Every append re-verifies the whole state; a failure throws
// ConstructionIntegrityError (it would mean a bug, not an input problem).
struct LabellingState {
    std::vector<LabelledComponent> placed;
    std::vector<Big> pendingIsolates; // 1, 2 or 3 labels, ascending
    std::optional<NtapWitness> ntap;
    std::vector<std::string> trace;

    Labelling as_labelling() const; // placed + pending as isolates
};

LabellingState state_from(const Labelling& l, std::optional<NtapWitness> ntap,
                          std::string step);

// Chain a fresh cycle out of the pending isolate pair (Fibonacci seeds).
// n == 4 is rejected; use append_c4. For n == 3 the seeds must additionally
// satisfy i2 != 2*i1 and i2 - i1 not a label.
LabellingState append_cycle(const LabellingState& s, int n);

// Scale everything by 4 and graft a four-cycle (2x+1, 2x-1, 2x+4d+1, 2x+4d-1)
// onto the NTAP (x, d); pending isolates and the witness scale along.
LabellingState append_c4(const LabellingState& s);

// Grow a path of order k out of the pending isolates: seeds (i1, i2) when two
// or more are pending (two largest; a third stays a final isolate), (i, 2i)
// when one is pending. Leaves exactly one pending isolate plus any leftover.
LabellingState append_path(const LabellingState& s, int k);

struct StrategyResult {
    Labelling labelling;
    int sigmaClaimed = 0;
    std::optional<NtapWitness> ntap;
    std::vector<std::string> trace;
};

// End-to-end: cycles (non-C4 descending, then C4 grafts), then paths
// (descending). Isolate count is the spec's minimum degree except for the two
// exceptional graphs C4 (3) and C4+P2 (2). Output always verifies.
StrategyResult label_graph(const GraphSpec& spec);

} // namespace sumlab
