#pragma once

#include <string>
#include <vector>

#include "sumlab/bigint.hpp"
#include "sumlab/graph_model.hpp"
#include "sumlab/labelling.hpp"

namespace sumlab {

// max label - min label over vertices AND isolates.
Big range_of(const Labelling& l);

// 2n - (maxDegree - minDegree) - 2 for the core graph (isolates excluded);
// every labelling of the graph must meet it.
Big range_lower_bound(const GraphSpec& spec);

struct StorageEstimate {
    Big bits;
    Big headerBits;   // 2 * (ceil_log2(n) + ceil_log2(min label))
    Big perLabelBits; // ceil_log2(range)
    Big labelCount;
    Big range;
};

// bits = 2*(ceil_log2 n + ceil_log2 minLabel) + labelCount * ceil_log2 range,
// with ceil_log2(1) = 0 (and 0 per-label bits when the range is <= 1).
StorageEstimate storage_bits(const Labelling& l, int n);

struct GrowthRow {
    int param = 0;
    int n = 0; // total vertices incl. isolates
    Big maxLabel;
    Big range;
    double ratio = 0; // maxLabel / previous row's maxLabel; 0 on first row
};

// Registered ids: kc4, c4_linear_exponential, matching_exponential,
// matching_arithmetic, fibonacci_path, fibonacci_cycle, triangles_chain.
// Throws std::invalid_argument on unknown ids.
std::vector<GrowthRow> growth_table(const std::string& schemeId, int paramFrom,
                                    int paramTo);

std::vector<std::string> growth_table_scheme_ids();

} // namespace sumlab
