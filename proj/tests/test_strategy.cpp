#include "doctest.h"

#include <random>
#include <string>
#include <vector>

#include "sumlab/graph_model.hpp"
#include "sumlab/schemes.hpp"
#include "sumlab/strategy.hpp"
#include "sumlab/verifier.hpp"

using namespace sumlab;

namespace {

std::vector<Big> bigs(std::initializer_list<long> xs) {
    return std::vector<Big>(xs.begin(), xs.end());
}

std::vector<Big> isolates_of(const std::string& spec) {
    return label_graph(parse_spec(spec)).labelling.isolates;
}

} // namespace

TEST_CASE("state_from sorts pending isolates and records the step") {
    Labelling l;
    l.components.push_back({PieceShape::Cycle, {1, 4, 3}});
    l.isolates = {7, 5};
    LabellingState s = state_from(l, std::nullopt, "seed");
    CHECK(s.pendingIsolates == bigs({5, 7}));
    REQUIRE(s.trace.size() == 1);
    CHECK(s.trace[0] == "seed");
    CHECK_FALSE(s.ntap.has_value());
}

TEST_CASE("state_from rejects an invalid labelling") {
    Labelling bad;
    bad.components.push_back({PieceShape::Cycle, {1, 3, 2}});
    bad.isolates = {5, 4};
    CHECK_THROWS_AS(state_from(bad, std::nullopt, "seed"), ConstructionIntegrityError);
}

TEST_CASE("append_cycle chains a Fibonacci cycle from the pending pair") {
    auto [base, w] = first_cycle_ntap(5);
    LabellingState s = state_from(base, w, "first");
    LabellingState t = append_cycle(s, 3);
    REQUIRE(t.placed.size() == 2);
    CHECK(t.placed[1].labels == bigs({9, 13, 22}));
    CHECK(t.pendingIsolates == bigs({31, 35}));
    CHECK(t.ntap.has_value());
    CHECK(t.trace.size() == 2);

    LabellingState u = append_cycle(t, 6);
    CHECK(u.placed[2].labels == bigs({31, 35, 66, 101, 167, 268}));
    CHECK(u.pendingIsolates == bigs({299, 435}));
}

TEST_CASE("append_cycle rejections") {
    auto [base, w] = first_cycle_ntap(5);
    LabellingState s = state_from(base, w, "first");
    CHECK_THROWS_AS(append_cycle(s, 4), std::invalid_argument);
    CHECK_THROWS_AS(append_cycle(s, 2), std::invalid_argument);

    // Three pending isolates that are not Fibonacci-consistent cannot seed a
    // cycle.
    Labelling iso;
    iso.isolates = {1, 2, 4};
    LabellingState pure = state_from(iso, std::nullopt, "isolates");
    CHECK_THROWS_AS(append_cycle(pure, 5), std::invalid_argument);

    // A pending pair (i, 2i) cannot seed a triangle: i + (2i+i2) would hit
    // the triangle's own isolate. P2 (4,6) + {5,10} is valid and has exactly
    // that shape.
    Labelling doubled;
    doubled.components.push_back({PieceShape::Path, {4, 6}});
    doubled.isolates = {5, 10};
    LabellingState sd = state_from(doubled, std::nullopt, "seed");
    CHECK_THROWS_AS(append_cycle(sd, 3), ConstructionIntegrityError);
    // The same pair seeds larger cycles without trouble.
    CHECK(append_cycle(sd, 5).placed[1].labels == bigs({5, 10, 15, 25, 40}));
}

TEST_CASE("append_c4 scales by four and grafts onto the progression") {
    auto [base, w] = two_c4_base();
    LabellingState s = state_from(base, w, "base");
    LabellingState t = append_c4(s);
    REQUIRE(t.placed.size() == 3);
    CHECK(t.placed[0].labels == bigs({8, 20, 32, 44}));
    CHECK(t.placed[1].labels == bigs({76, 52, 28, 4}));
    CHECK(t.placed[2].labels == bigs({5, 3, 17, 15}));
    CHECK(t.pendingIsolates == bigs({80, 128}));
    REQUIRE(t.ntap.has_value());
    CHECK(t.ntap->first == 8);
    CHECK(t.ntap->offset == 12);

    // Another round keeps verifying (the grafted labels stay odd, the rest
    // even).
    LabellingState u = append_c4(t);
    CHECK(u.pendingIsolates == bigs({320, 512}));
    CHECK(u.placed[3].labels == bigs({17, 15, 65, 63}));
}

TEST_CASE("append_c4 rejections") {
    Labelling l;
    l.components.push_back({PieceShape::Cycle, {1, 4, 3}});
    l.isolates = {5, 7};
    LabellingState noHook = state_from(l, std::nullopt, "seed");
    CHECK_THROWS_AS(append_c4(noHook), std::invalid_argument);

    Labelling c4 = c4_linear_exponential(1);
    LabellingState threePending = state_from(c4, NtapWitness{2, 3}, "seed");
    CHECK_THROWS_AS(append_c4(threePending), std::invalid_argument);
}

TEST_CASE("append_path grows from the two largest pending isolates") {
    auto [base, w] = two_c4_base();
    LabellingState s = state_from(base, w, "base");
    LabellingState t = append_path(s, 4);
    CHECK(t.placed[2].labels == bigs({20, 32, 52, 84}));
    CHECK(t.pendingIsolates == bigs({136}));

    // A single pending isolate doubles itself for the second seed.
    LabellingState u = append_path(t, 3);
    CHECK(u.placed[3].labels == bigs({136, 272, 408}));
    CHECK(u.pendingIsolates == bigs({680}));
}

TEST_CASE("append_path keeps smaller extra pendings as final isolates") {
    Labelling c4 = c4_linear_exponential(1); // isolates {7, 13, 19}
    LabellingState s = state_from(c4, NtapWitness{2, 3}, "seed");
    LabellingState t = append_path(s, 2);
    CHECK(t.placed[1].labels == bigs({13, 19}));
    CHECK(t.pendingIsolates == bigs({7, 32}));
}

TEST_CASE("append_path refuses a seed sum that collides with a vertex pair") {
    // Valid labelling in which the isolate sum 3 + 19 = 22 equals 10 + 12.
    Labelling l;
    l.components.push_back({PieceShape::Path, {10, 2, 1, 18}});
    l.components.push_back({PieceShape::Path, {6, 12}});
    l.isolates = {3, 19};
    REQUIRE(verify(l).valid);
    LabellingState s = state_from(l, std::nullopt, "seed");
    CHECK_THROWS_WITH_AS(append_path(s, 2),
                         "append_path: seed sum 22 equals the label pair (10,12), "
                         "which would create a stray edge",
                         ConstructionIntegrityError);
}

TEST_CASE("append_path rejections") {
    Labelling empty;
    LabellingState s = state_from(empty, std::nullopt, "nothing");
    CHECK_THROWS_AS(append_path(s, 3), std::invalid_argument);

    auto [base, w] = two_c4_base();
    LabellingState t = state_from(base, w, "base");
    CHECK_THROWS_AS(append_path(t, 1), std::invalid_argument);
}

TEST_CASE("label_graph golden isolate sets") {
    CHECK(isolates_of("C4") == bigs({7, 13, 19}));
    CHECK(isolates_of("2C4") == bigs({20, 32}));
    CHECK(isolates_of("5C4") == bigs({1280, 2048}));
    CHECK(isolates_of("C3") == bigs({5, 7}));
    CHECK(isolates_of("C5") == bigs({9, 13}));
    CHECK(isolates_of("C6") == bigs({13, 15}));
    CHECK(isolates_of("C7") == bigs({15, 17}));
    CHECK(isolates_of("3C5") == bigs({474, 658}));
    CHECK(isolates_of("C5+C3") == bigs({31, 35}));
    CHECK(isolates_of("C5+C4") == bigs({27, 44}));
    CHECK(isolates_of("C5+C4+C3") == bigs({124, 140}));
    CHECK(isolates_of("C5+2C4") == bigs({108, 176}));
    CHECK(isolates_of("2C6+C4+P3+2P2") == bigs({17892}));
    CHECK(isolates_of("C4+P2") == bigs({8, 52}));
    CHECK(isolates_of("C4+P3") == bigs({20}));
    CHECK(isolates_of("C4+2P2") == bigs({60}));
    CHECK(isolates_of("2C4+P2") == bigs({52}));
    CHECK(isolates_of("P5+P3+P2") == bigs({195}));
    CHECK(isolates_of("4P2") == bigs({81}));
    CHECK(isolates_of("P2") == bigs({3}));
    CHECK(isolates_of("3C9+2C7+C6+5C3+2C4+P9+2P8+P5+4P2") ==
          std::vector<Big>{Big("122538539078512128000")});
}

TEST_CASE("label_graph golden components for mixed graphs") {
    StrategyResult r = label_graph(parse_spec("C5+C4"));
    REQUIRE(r.labelling.components.size() == 2);
    CHECK(r.labelling.components[0].labels == bigs({2, 4, 6, 10, 16}));
    CHECK(r.labelling.components[1].labels == bigs({1, 9, 18, 26}));
    CHECK(r.sigmaClaimed == 2);

    StrategyResult chain = label_graph(parse_spec("C5+C4+C3"));
    REQUIRE(chain.labelling.components.size() == 3);
    CHECK(chain.labelling.components[0].labels == bigs({4, 8, 12, 20, 32}));
    CHECK(chain.labelling.components[1].labels == bigs({36, 52, 88}));
    CHECK(chain.labelling.components[2].labels == bigs({3, 1, 19, 17}));
}

TEST_CASE("label_graph exceptional isolate counts") {
    CHECK(label_graph(parse_spec("C4")).sigmaClaimed == 3);
    CHECK(label_graph(parse_spec("C4+P2")).sigmaClaimed == 2);
    // Everything else hits the minimum degree.
    CHECK(label_graph(parse_spec("2C4")).sigmaClaimed == 2);
    CHECK(label_graph(parse_spec("C4+P3")).sigmaClaimed == 1);
    CHECK(label_graph(parse_spec("C4+2P2")).sigmaClaimed == 1);
    CHECK(label_graph(parse_spec("C3")).sigmaClaimed == 2);
    CHECK(label_graph(parse_spec("P2")).sigmaClaimed == 1);
}

TEST_CASE("label_graph output always verifies and the trace is an audit log") {
    StrategyResult r = label_graph(parse_spec("2C6+C4+P3+2P2"));
    CHECK(verify(r.labelling).valid);
    CHECK(r.trace.size() >= 5);
    CHECK(r.trace[0] == "first_cycle_ntap(6)");

    StrategyResult c4 = label_graph(parse_spec("C4"));
    REQUIRE(c4.trace.size() == 1);
    CHECK(c4.trace[0] == "c4_linear_exponential(1)");
    REQUIRE(c4.ntap.has_value());
    CHECK(c4.ntap->first == 2);
    CHECK(c4.ntap->offset == 3);

    CHECK(label_graph(parse_spec("2C4")).trace[0] == "two_c4_base()");
    CHECK(label_graph(parse_spec("C5+2C4")).trace[0] == "c5_c4_special(2,4,1)");
}

TEST_CASE("label_graph rejects an empty graph") {
    CHECK_THROWS_AS(label_graph(GraphSpec{}), std::invalid_argument);
}

TEST_CASE("property: random graphs verify with minimum-degree isolate count") {
    std::mt19937 rng(424242);
    for (int iter = 0; iter < 150; ++iter) {
        GraphSpec spec;
        int parts = 1 + static_cast<int>(rng() % 5);
        for (int p = 0; p < parts; ++p) {
            bool cycle = rng() % 2 == 0;
            int order = cycle ? 3 + static_cast<int>(rng() % 7)
                              : 2 + static_cast<int>(rng() % 7);
            spec.components.push_back({cycle ? Shape::Cycle : Shape::Path, order});
        }
        std::string canon = to_canonical_string(spec);
        CAPTURE(canon);
        StrategyResult r = label_graph(spec);
        CHECK(verify(r.labelling).valid);
        CHECK(r.labelling.target_spec().vertex_count() == spec.vertex_count());
        CHECK(to_canonical_string(r.labelling.target_spec()) == canon);
        int expected = (canon == "C4") ? 3 : (canon == "C4+P2") ? 2 : spec.min_degree();
        CHECK(r.sigmaClaimed == expected);
        CHECK_FALSE(r.trace.empty());
    }
}
