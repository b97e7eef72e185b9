#include "doctest.h"

#include <cmath>

#include "sumlab/graph_model.hpp"
#include "sumlab/metrics.hpp"
#include "sumlab/schemes.hpp"
#include "sumlab/strategy.hpp"

using namespace sumlab;

TEST_CASE("range_of spans vertices and isolates") {
    Labelling l;
    l.components.push_back({PieceShape::Cycle, {1, 4, 3}});
    l.isolates = {5, 7};
    CHECK(range_of(l) == 6);

    Labelling single;
    single.isolates = {42};
    CHECK(range_of(single) == 0);
    CHECK(range_of(Labelling{}) == 0);
}

TEST_CASE("range lower bound 2n - (maxdeg - mindeg) - 2") {
    CHECK(range_lower_bound(parse_spec("2C4")) == 14);
    CHECK(range_lower_bound(parse_spec("P2")) == 2);
    CHECK(range_lower_bound(parse_spec("C3+P2")) == 7);
    CHECK(range_lower_bound(parse_spec("C3")) == 4);
    CHECK(range_lower_bound(parse_spec("4P2")) == 14);
}

TEST_CASE("constructed labellings respect the range lower bound") {
    for (const char* spec :
         {"P2", "C3", "C4", "2C4", "C5+C3", "C4+P2", "4P2", "2C6+C4+P3+2P2"}) {
        CAPTURE(spec);
        GraphSpec g = parse_spec(spec);
        CHECK(range_of(label_graph(g).labelling) >= range_lower_bound(g));
    }
}

TEST_CASE("storage bits for the smallest labellings") {
    Labelling p2 = fibonacci_path(1, 2, 2); // (1,2) + {3}
    StorageEstimate e = storage_bits(p2, 2);
    CHECK(e.labelCount == 3);
    CHECK(e.range == 2);
    CHECK(e.headerBits == 2);   // 2 * (ceil_log2 2 + ceil_log2 1)
    CHECK(e.perLabelBits == 1); // ceil_log2 2
    CHECK(e.bits == 5);
}

TEST_CASE("storage bits for the 16-vertex arithmetic matching") {
    Labelling l = matching_arithmetic_convenience(16); // 16..31 + {47}
    StorageEstimate e = storage_bits(l, 16);
    CHECK(e.range == 31);
    CHECK(e.headerBits == 16);  // 2 * (4 + 4)
    CHECK(e.perLabelBits == 5); // ceil_log2 31
    CHECK(e.labelCount == 17);
    CHECK(e.bits == 16 + 17 * 5);
}

TEST_CASE("storage bits edge cases") {
    Labelling single;
    single.isolates = {9};
    StorageEstimate e = storage_bits(single, 1);
    CHECK(e.perLabelBits == 0); // range 0: nothing beyond the header
    CHECK(e.bits == e.headerBits);
    CHECK_THROWS_AS(storage_bits(Labelling{}, 1), std::invalid_argument);
    CHECK_THROWS_AS(storage_bits(single, 0), std::invalid_argument);
}

TEST_CASE("growth: k four-cycles keep the maximum label at 2^(2k+1)") {
    auto rows = growth_table("kc4", 1, 8);
    REQUIRE(rows.size() == 8);
    CHECK(rows[0].maxLabel == 19); // the lone four-cycle uses its own scheme
    for (std::size_t i = 1; i < rows.size(); ++i) {
        int k = rows[i].param;
        CHECK(rows[i].maxLabel == Big(1) << (2 * k + 1));
        if (i >= 2) CHECK(rows[i].ratio == doctest::Approx(4.0));
    }
}

TEST_CASE("growth: four-cycle chain ratio tends to two from above") {
    auto rows = growth_table("c4_linear_exponential", 1, 14);
    REQUIRE(rows.size() == 14);
    for (const auto& r : rows) {
        auto p = c4_linear_exponential_params(r.param);
        CHECK(r.maxLabel == 2 * p.anchor + 5 * p.difference);
        CHECK(r.range == r.maxLabel - 2);
    }
    for (std::size_t i = 1; i < rows.size(); ++i) {
        CHECK(rows[i].ratio > 2.0);
        if (i >= 2) CHECK(rows[i].ratio < rows[i - 1].ratio);
    }
    CHECK(rows.back().ratio == doctest::Approx(2.0).epsilon(0.07));
}

TEST_CASE("growth: exponential matching doubles") {
    auto rows = growth_table("matching_exponential", 1, 12);
    REQUIRE(rows.size() == 12);
    for (const auto& r : rows) {
        CHECK(r.maxLabel == (Big(3) << r.param) - 1);
        CHECK(r.n == 2 * r.param + 1);
    }
    CHECK(rows.back().ratio == doctest::Approx(2.0).epsilon(0.001));
}

TEST_CASE("growth: arithmetic matching stays linear with range 2n-1") {
    auto rows = growth_table("matching_arithmetic", 2, 24);
    // n = 2 fails its parameter window; only even n from 4 produce rows.
    REQUIRE(rows.size() == 11);
    for (const auto& r : rows) {
        CHECK(r.param % 2 == 0);
        // Labels n..2n-1 plus the isolate 3n-1.
        CHECK(r.maxLabel == 3 * r.param - 1);
        CHECK(r.range == 2 * r.param - 1);
        CHECK(r.n == r.param + 1);
    }
}

TEST_CASE("growth: Fibonacci ratios approach the golden ratio") {
    const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
    auto path = growth_table("fibonacci_path", 2, 40);
    CHECK(path.back().ratio == doctest::Approx(phi).epsilon(1e-6));

    auto cycle = growth_table("fibonacci_cycle", 3, 16);
    REQUIRE(!cycle.empty());
    CHECK(cycle.front().param == 5); // 3 (bad seeds) and 4 (no such scheme) skipped
    CHECK(cycle.back().ratio == doctest::Approx(phi).epsilon(1e-3));
}

TEST_CASE("growth: triangle chain multiplies by three") {
    auto rows = growth_table("triangles_chain", 1, 10);
    REQUIRE(rows.size() == 10);
    CHECK(rows[0].maxLabel == 7);
    for (std::size_t i = 1; i < rows.size(); ++i)
        CHECK(rows[i].maxLabel == 3 * rows[i - 1].maxLabel - 2);
}

TEST_CASE("growth table bookkeeping") {
    auto rows = growth_table("kc4", 3, 5);
    REQUIRE(rows.size() == 3);
    CHECK(rows[0].ratio == 0.0); // no previous row inside the window
    CHECK(rows[0].n == 14);      // 12 vertices + 2 isolates

    CHECK_THROWS_AS(growth_table("unknown", 1, 3), std::invalid_argument);
    CHECK_THROWS_AS(growth_table("kc4", 5, 3), std::invalid_argument);
    CHECK(growth_table_scheme_ids().size() == 7);
}
