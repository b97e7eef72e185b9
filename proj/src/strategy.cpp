#include "sumlab/strategy.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "sumlab/schemes.hpp"

namespace sumlab {

namespace {

std::string join(const std::vector<Big>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ",";
        out += v[i].str();
    }
    return out;
}

void reverify(const LabellingState& s, const std::string& what) {
    Certificate cert = verify(s.as_labelling());
    if (!cert.valid) {
        std::string msg = what + ": state no longer verifies:";
        for (const auto& v : cert.violations) msg += " " + describe(v);
        throw ConstructionIntegrityError(msg);
    }
    if (s.ntap) {
        auto set = s.as_labelling().label_set();
        const auto& w = *s.ntap;
        bool ok = w.offset > 0 && set.count(w.first) && set.count(w.first + w.offset) &&
                  set.count(w.first + 2 * w.offset) && !set.count(w.offset);
        if (!ok)
            throw ConstructionIntegrityError(what + ": progression witness (" + w.first.str() +
                                             "," + w.offset.str() + ") no longer holds");
    }
}

} // namespace

Labelling LabellingState::as_labelling() const {
    Labelling l;
    l.components = placed;
    l.isolates = pendingIsolates;
    return l;
}

LabellingState state_from(const Labelling& l, std::optional<NtapWitness> ntap,
                          std::string step) {
    LabellingState s;
    s.placed = l.components;
    s.pendingIsolates = l.isolates;
    std::sort(s.pendingIsolates.begin(), s.pendingIsolates.end());
    s.ntap = std::move(ntap);
    s.trace.push_back(std::move(step));
    reverify(s, "state_from");
    return s;
}

LabellingState append_cycle(const LabellingState& s, int n) {
    if (n < 3) throw std::invalid_argument("append_cycle: n must be >= 3");
    if (n == 4)
        throw std::invalid_argument("append_cycle: four-cycles attach via append_c4, "
                                    "not by Fibonacci chaining");
    const auto& pend = s.pendingIsolates;
    if (pend.size() < 2)
        throw std::invalid_argument("append_cycle: needs at least two pending isolates");
    bool consumeThree = false;
    if (pend.size() == 3) {
        if (pend[2] != pend[0] + pend[1])
            throw std::invalid_argument(
                "append_cycle: three pending isolates must be Fibonacci-consistent "
                "(i3 = i1 + i2)");
        consumeThree = true;
    }
    Big i1 = consumeThree ? pend[0] : pend[pend.size() - 2];
    Big i2 = consumeThree ? pend[1] : pend[pend.size() - 1];

    if (n == 3) {
        // A new triangle (i1, i2, i1+i2) risks two specific collisions; fail
        // loudly with the reason rather than relying on the final re-check.
        if (i2 == 2 * i1)
            throw ConstructionIntegrityError(
                "append_cycle(3): pending pair (" + i1.str() + "," + i2.str() +
                ") has i2 = 2*i1, so " + i1.str() + " + " + Big(2 * i1 + i2).str() +
                " would hit the new isolate");
        auto labels = s.as_labelling().label_set();
        Big gap = i2 - i1;
        if (labels.count(gap))
            throw ConstructionIntegrityError(
                "append_cycle(3): the gap " + gap.str() +
                " is itself a label, so it would gain an edge to " + i1.str());
    }

    Labelling cycle = fibonacci_cycle(i1, i2, n);

    LabellingState out = s;
    out.placed.push_back(cycle.components[0]);
    out.pendingIsolates.clear();
    if (!consumeThree)
        for (std::size_t i = 0; i + 2 < pend.size(); ++i)
            out.pendingIsolates.push_back(pend[i]);
    out.pendingIsolates.insert(out.pendingIsolates.end(), cycle.isolates.begin(),
                               cycle.isolates.end());
    std::sort(out.pendingIsolates.begin(), out.pendingIsolates.end());
    std::ostringstream step;
    step << "append_cycle(" << n << "): seeds (" << i1 << "," << i2 << ") -> cycle ("
         << join(cycle.components[0].labels) << "), pending (" << join(out.pendingIsolates)
         << ")";
    out.trace.push_back(step.str());
    reverify(out, "append_cycle");
    return out;
}

LabellingState append_c4(const LabellingState& s) {
    if (!s.ntap)
        throw std::invalid_argument(
            "append_c4: needs an arithmetic-progression hook (x, x+d, x+2d present, d absent)");
    if (s.pendingIsolates.size() != 2)
        throw std::invalid_argument("append_c4: needs exactly two pending isolates");
    Big x = s.ntap->first, d = s.ntap->offset;

    LabellingState out;
    out.trace = s.trace;
    for (const auto& comp : s.placed) {
        LabelledComponent scaledComp{comp.shape, {}};
        for (const auto& v : comp.labels) scaledComp.labels.push_back(v * 4);
        out.placed.push_back(std::move(scaledComp));
    }
    for (const auto& v : s.pendingIsolates) out.pendingIsolates.push_back(v * 4);
    // All scaled labels are even; the grafted cycle is odd, and its four edge
    // sums 4x, 4x+4d, 4x+8d are exactly the scaled progression.
    LabelledComponent graft{PieceShape::Cycle,
                            {2 * x + 1, 2 * x - 1, 2 * x + 4 * d + 1, 2 * x + 4 * d - 1}};
    out.placed.push_back(graft);
    out.ntap = NtapWitness{4 * x, 4 * d};
    std::ostringstream step;
    step << "append_c4: scaled by 4, grafted cycle (" << join(graft.labels)
         << ") onto progression (" << x << "," << d << "), pending ("
         << join(out.pendingIsolates) << ")";
    out.trace.push_back(step.str());
    reverify(out, "append_c4");
    return out;
}

LabellingState append_path(const LabellingState& s, int k) {
    if (k < 2) throw std::invalid_argument("append_path: k must be >= 2");
    const auto& pend = s.pendingIsolates;
    if (pend.empty()) throw std::invalid_argument("append_path: no pending isolates");

    Labelling path;
    LabellingState out = s;
    out.pendingIsolates.clear();
    std::ostringstream step;
    if (pend.size() >= 2) {
        Big i1 = pend[pend.size() - 2], i2 = pend[pend.size() - 1];
        PathAppendCheck chk = check_path_append(s.as_labelling());
        if (!chk.ok)
            throw ConstructionIntegrityError(
                "append_path: seed sum " + Big(i1 + i2).str() + " equals the label pair (" +
                chk.offendingPair->first.str() + "," + chk.offendingPair->second.str() +
                "), which would create a stray edge");
        path = fibonacci_path(i1, i2, k);
        for (std::size_t i = 0; i + 2 < pend.size(); ++i)
            out.pendingIsolates.push_back(pend[i]);
        step << "append_path(" << k << "): seeds (" << i1 << "," << i2 << ")";
    } else {
        // A single pending isolate i seeds (i, 2i); the doubled seed is new
        // and every new sum lands beyond the old labels.
        path = fibonacci_path(pend[0], 2 * pend[0], k);
        step << "append_path(" << k << "): seeds (" << pend[0] << "," << (2 * pend[0]) << ")";
    }
    out.placed.push_back(path.components[0]);
    out.pendingIsolates.push_back(path.isolates[0]);
    std::sort(out.pendingIsolates.begin(), out.pendingIsolates.end());
    step << " -> path (" << join(path.components[0].labels) << "), pending ("
         << join(out.pendingIsolates) << ")";
    out.trace.push_back(step.str());
    reverify(out, "append_path");
    return out;
}

StrategyResult label_graph(const GraphSpec& spec) {
    if (spec.components.empty()) throw std::invalid_argument("label_graph: empty graph");
    auto order = processing_order(spec);

    std::vector<int> nonC4;   // non-C4 cycle orders, descending
    int c4Count = 0;
    std::vector<int> paths;   // path orders, descending
    for (const auto& kind : order) {
        if (kind.shape == Shape::Cycle) {
            if (kind.order == 4)
                ++c4Count;
            else
                nonC4.push_back(kind.order);
        } else {
            paths.push_back(kind.order);
        }
    }

    LabellingState state;
    bool haveState = false;
    bool loneC4 = nonC4.empty() && c4Count == 1;

    if (!nonC4.empty()) {
        if (nonC4.size() == 1 && nonC4[0] == 5 && c4Count >= 1) {
            // A five-cycle whose only cycle companions are four-cycles: the
            // paired construction places the first four-cycle directly and
            // comes with a progression hook for the rest.
            auto [base, w] = c5_c4_special(2, 4, 1);
            state = state_from(base, w, "c5_c4_special(2,4,1)");
            for (int i = 1; i < c4Count; ++i) state = append_c4(state);
        } else {
            auto [base, w] = first_cycle_ntap(nonC4[0]);
            state = state_from(base, w,
                               "first_cycle_ntap(" + std::to_string(nonC4[0]) + ")");
            for (std::size_t i = 1; i < nonC4.size(); ++i)
                state = append_cycle(state, nonC4[i]);
            for (int i = 0; i < c4Count; ++i) state = append_c4(state);
        }
        haveState = true;
    } else if (c4Count >= 2) {
        auto [base, w] = two_c4_base();
        state = state_from(base, w, "two_c4_base()");
        for (int i = 2; i < c4Count; ++i) state = append_c4(state);
        haveState = true;
    } else if (loneC4 && paths.empty()) {
        // A single four-cycle needs three isolates; two are impossible since
        // the largest label never gains an edge and the four edge sums cannot
        // fit into one isolate plus the cycle itself.
        Labelling base = c4_linear_exponential(1);
        StrategyResult res;
        res.labelling = base;
        res.sigmaClaimed = static_cast<int>(base.isolates.size());
        auto hooks = find_ntaps(base);
        if (!hooks.empty()) res.ntap = hooks.front();
        res.trace = {"c4_linear_exponential(1)"};
        return res;
    }

    if (!paths.empty()) {
        std::size_t firstPath = 0;
        if (loneC4) {
            // A lone four-cycle has no two-isolate labelling, so the longest
            // path is built together with the cycle instead of appended.
            state = state_from(c4_path_special(paths[0]), std::nullopt,
                               "c4_path_special(" + std::to_string(paths[0]) + ")");
            haveState = true;
            firstPath = 1;
        } else if (!haveState) {
            state = state_from(fibonacci_path(1, 2, paths[0]), std::nullopt,
                               "fibonacci_path(1,2," + std::to_string(paths[0]) + ")");
            haveState = true;
            firstPath = 1;
        }
        for (std::size_t i = firstPath; i < paths.size(); ++i)
            state = append_path(state, paths[i]);
    }

    StrategyResult res;
    res.labelling = state.as_labelling();
    res.sigmaClaimed = static_cast<int>(res.labelling.isolates.size());
    res.ntap = state.ntap;
    res.trace = state.trace;
    return res;
}

} // namespace sumlab
