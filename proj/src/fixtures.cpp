#include "sumlab/fixtures.hpp"

#include "sumlab/schemes.hpp"

namespace sumlab {

namespace {

Labelling make(std::vector<LabelledComponent> comps, std::vector<Big> isolates) {
    Labelling l;
    l.components = std::move(comps);
    l.isolates = std::move(isolates);
    return l;
}

std::vector<Fixture> build() {
    std::vector<Fixture> f;

    // --- valid reference labellings -------------------------------------
    f.push_back({"triangle-c3",
                 make({{PieceShape::Cycle, {1, 4, 3}}}, {5, 7}),
                 true,
                 "smallest triangle labelling; both non-vertex edge sums land on isolates"});
    f.push_back({"matching-exponential-m8", matching_exponential(8), true,
                 "eight disjoint edges (2,3),(5,6),...,(383,384) with isolate 767"});
    f.push_back({"matching-arithmetic-n16", matching_arithmetic_convenience(16), true,
                 "eight disjoint edges (16,31),...,(23,24), every pair summing to the "
                 "isolate 47"});
    f.push_back({"c4-chain-linexp-k1", c4_linear_exponential(1), true,
                 "a single four-cycle (2,5,8,11) whose edge sums are exactly the "
                 "three isolates 7,13,19"});
    f.push_back({"two-c4-base", two_c4_base().first, true,
                 "the minimal two-isolate pair of four-cycles (2,5,8,11) and (19,13,7,1)"});
    {
        auto l = two_c4_base().first.scaled(4);
        l.components.push_back({PieceShape::Cycle, {5, 3, 17, 15}});
        f.push_back({"three-c4-scaled", l, true,
                     "two-c4-base scaled by 4 with the odd cycle (5,3,17,15) grafted "
                     "onto the progression (2,3); isolates {80,128}"});
        auto l2 = l.scaled(4);
        l2.components.push_back({PieceShape::Cycle, {17, 15, 65, 63}});
        f.push_back({"four-c4-scaled", l2, true,
                     "the same grafting applied twice; isolates {320,512}"});
    }
    f.push_back({"c5-c4-ap-hook", c5_c4_special(2, 4, 1).first, true,
                 "C5 (2,4,6,10,16) + C4 (1,9,18,26) with isolates {27,44}"});
    f.push_back({"c6-interleaved", first_cycle_ntap(6).first, true,
                 "six-cycle (4,9,6,7,8,5): every edge sum is a vertex or one of the "
                 "isolates {13,15}"});
    f.push_back({"c7-interleaved", first_cycle_ntap(7).first, true,
                 "seven-cycle (4,6,9,8,7,10,5) with isolates {15,17}"});
    f.push_back({"three-c5-fibonacci",
                 make({{PieceShape::Cycle, {1, 2, 3, 5, 8}},
                       {PieceShape::Cycle, {9, 13, 22, 35, 57}},
                       {PieceShape::Cycle, {66, 92, 158, 250, 408}}},
                      {474, 658}),
                 true,
                 "three chained Fibonacci five-cycles; isolates {474,658}"});
    f.push_back({"c5-c3-fibonacci",
                 make({{PieceShape::Cycle, {1, 2, 3, 5, 8}}, {PieceShape::Cycle, {9, 13, 22}}},
                      {31, 35}),
                 true,
                 "Fibonacci five-cycle plus the triangle chained from its isolates; "
                 "isolates {31,35}"});
    f.push_back({"c5-c4-c3-compact",
                 make({{PieceShape::Cycle, {2, 4, 6, 10, 16}},
                       {PieceShape::Cycle, {18, 26, 1, 9}},
                       {PieceShape::Cycle, {27, 44, 71}}},
                      {98, 115}),
                 true,
                 "C5+C4+C3 with the triangle grown out of {27,44}; isolates {98,115}"});
    f.push_back({"c5-c3-c4-chained",
                 make({{PieceShape::Cycle, {4, 8, 12, 20, 32}},
                       {PieceShape::Cycle, {36, 52, 88}},
                       {PieceShape::Cycle, {3, 1, 19, 17}}},
                      {124, 140}),
                 true,
                 "C5+C3 chained first, then scaled by 4 with the odd four-cycle "
                 "grafted; isolates {124,140}"});
    f.push_back({"c4-p2-two-isolates", c4_path_special(2), true,
                 "C4 (1,7,13,19) + P2 (20,32) with isolates {8,52}; two isolates "
                 "suffice once the path joins the cycle"});
    f.push_back({"c4-p3-compact", c4_path_special(3), true,
                 "C4 (1,3,9,11) + P3 (12,4,16) with the single isolate 20"});
    f.push_back({"c4-p4-compact", c4_path_special(4), true,
                 "C4 (1,2,6,11) + P4 (17,3,8,12) with the single isolate 20"});
    f.push_back({"c4-p5-fibonacci-tail", c4_path_special(5), true,
                 "C4 (2,5,8,11) + P5 (26,13,7,19,20) with the single isolate 39"});
    f.push_back({"k4-arithmetic", complete_graph(4), true,
                 "K4 on 1,5,9,13 with isolates 6,10,...,22 catching all pair sums"});

    // --- labellings the verifier must reject ----------------------------
    f.push_back({"triangle-bad-isolates",
                 make({{PieceShape::Cycle, {1, 3, 2}}}, {5, 4}),
                 false,
                 "1 + 4 = 5, so the claimed isolate 4 has an edge"});
    f.push_back({"c4-p2-short-isolate",
                 make({{PieceShape::Cycle, {1, 7, 13, 19}}, {PieceShape::Path, {20, 32}}},
                      {8, 44}),
                 false,
                 "the path edge (20,32) sums to 52, which no label provides"});
    f.push_back({"c5-offset-progression-claim",
                 make({{PieceShape::Cycle, {1, 2, 7, 9, 3}}}, {4, 12, 16}),
                 false,
                 "3 + 4 = 7 and 4 + 12 = 16 give the claimed isolate 4 two edges"});
    f.push_back({"three-c5-from-bad-base",
                 make({{PieceShape::Cycle, {1, 2, 7, 9, 3}},
                       {PieceShape::Cycle, {4, 12, 16, 28, 44}},
                       {PieceShape::Cycle, {48, 72, 120, 192, 312}}},
                      {360, 504}),
                 false,
                 "3 + 4 = 7 joins two different five-cycles"});
    f.push_back({"c5-c3-octet",
                 make({{PieceShape::Cycle, {1, 2, 7, 9, 3}}, {PieceShape::Cycle, {4, 12, 16}}},
                      {20, 28}),
                 false,
                 "3 + 4 = 7 joins the five-cycle and the triangle"});
    f.push_back({"c4-chain-linexp-k4",
                 make({{PieceShape::Cycle, {2, 5, 8, 11}},
                       {PieceShape::Cycle, {7, 13, 19, 25}},
                       {PieceShape::Cycle, {20, 32, 44, 56}},
                       {PieceShape::Cycle, {52, 76, 100, 124}}},
                      {128, 176, 224}),
                 false,
                 "cycles two apart share a residue class mod 3: 5 + 20 = 25 and "
                 "8 + 44 = 52 are edges between the first and third cycle"});
    f.push_back({"c5-c3-c4-mixed-drawn",
                 make({{PieceShape::Cycle, {4, 8, 28, 36, 12}},
                       {PieceShape::Cycle, {16, 48, 64}},
                       {PieceShape::Cycle, {5, 3, 25, 23}}},
                      {124, 140}),
                 false,
                 "triangle edges (48,64) and (64,16) sum to 112 and 80, which are not "
                 "labels; 12 + 16 = 28 and 16 + 124 = 140 add stray edges"});

    return f;
}

} // namespace

const std::vector<Fixture>& reference_fixtures() {
    static const std::vector<Fixture> fixtures = build();
    return fixtures;
}

} // namespace sumlab
