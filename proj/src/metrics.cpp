#include "sumlab/metrics.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "sumlab/schemes.hpp"
#include "sumlab/strategy.hpp"

namespace sumlab {

Big range_of(const Labelling& l) {
    auto all = l.all_labels();
    if (all.size() < 2) return 0;
    auto [mn, mx] = std::minmax_element(all.begin(), all.end());
    return *mx - *mn;
}

Big range_lower_bound(const GraphSpec& spec) {
    Big n = spec.vertex_count();
    return 2 * n - (spec.max_degree() - spec.min_degree()) - 2;
}

StorageEstimate storage_bits(const Labelling& l, int n) {
    if (n < 1) throw std::invalid_argument("storage_bits: n must be >= 1");
    auto all = l.all_labels();
    if (all.empty()) throw std::invalid_argument("storage_bits: empty labelling");
    Big mn = *std::min_element(all.begin(), all.end());
    StorageEstimate e;
    e.labelCount = all.size();
    e.range = range_of(l);
    e.headerBits = 2 * (ceil_log2(n) + ceil_log2(mn));
    e.perLabelBits = e.range >= 1 ? ceil_log2(e.range) : 0;
    e.bits = e.headerBits + e.labelCount * e.perLabelBits;
    return e;
}

namespace {

using Builder = std::function<Labelling(int)>;

Builder builder_for(const std::string& id) {
    if (id == "kc4")
        return [](int k) {
            GraphSpec spec;
            for (int i = 0; i < k; ++i) spec.components.push_back({Shape::Cycle, 4});
            return label_graph(spec).labelling;
        };
    if (id == "c4_linear_exponential")
        // The printed family stops verifying at k == 2, so its growth is
        // tabulated from the per-cycle recurrence: with k cycles the largest
        // label is the third isolate 2*a_k + 5*d_k and the smallest stays 2.
        return [](int k) {
            C4ChainCycle c = c4_linear_exponential_params(k);
            Labelling l;
            Big a = 2, d = 3;
            for (int i = 0; i < k; ++i) {
                l.components.push_back(
                    {PieceShape::Cycle, {a, a + d, a + 2 * d, a + 3 * d}});
                a = 2 * a + d;
                d *= 2;
            }
            l.isolates = {2 * c.anchor + c.difference, 2 * c.anchor + 3 * c.difference,
                          2 * c.anchor + 5 * c.difference};
            return l;
        };
    if (id == "matching_exponential") return [](int m) { return matching_exponential(m); };
    if (id == "matching_arithmetic")
        return [](int n) { return matching_arithmetic_convenience(n); };
    if (id == "fibonacci_path") return [](int k) { return fibonacci_path(1, 2, k); };
    if (id == "fibonacci_cycle") return [](int n) { return fibonacci_cycle(1, 2, n); };
    if (id == "triangles_chain") return [](int l) { return triangles_chain(1, 2, l); };
    throw std::invalid_argument("growth_table: unknown scheme id '" + id + "'");
}

} // namespace

std::vector<GrowthRow> growth_table(const std::string& schemeId, int paramFrom,
                                    int paramTo) {
    if (paramFrom > paramTo)
        throw std::invalid_argument("growth_table: paramFrom must be <= paramTo");
    Builder build = builder_for(schemeId);
    std::vector<GrowthRow> rows;
    Big prevMax = 0;
    for (int p = paramFrom; p <= paramTo; ++p) {
        Labelling l;
        try {
            l = build(p);
        } catch (const std::invalid_argument&) {
            continue; // parameter outside the scheme's window; no row
        } catch (const ConstructionIntegrityError&) {
            continue; // default seeds invalid for this parameter; no row
        }
        GrowthRow row;
        row.param = p;
        auto all = l.all_labels();
        row.n = static_cast<int>(all.size());
        row.maxLabel = *std::max_element(all.begin(), all.end());
        row.range = range_of(l);
        row.ratio = prevMax > 0
                        ? row.maxLabel.convert_to<double>() / prevMax.convert_to<double>()
                        : 0.0;
        prevMax = row.maxLabel;
        rows.push_back(std::move(row));
    }
    return rows;
}

std::vector<std::string> growth_table_scheme_ids() {
    return {"kc4",
            "c4_linear_exponential",
            "matching_exponential",
            "matching_arithmetic",
            "fibonacci_path",
            "fibonacci_cycle",
            "triangles_chain"};
}

} // namespace sumlab
