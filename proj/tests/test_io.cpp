#include "doctest.h"

#include <sstream>

#include "sumlab/graph_model.hpp"
#include "sumlab/io.hpp"
#include "sumlab/schemes.hpp"
#include "sumlab/strategy.hpp"
#include "sumlab/verifier.hpp"

using namespace sumlab;

TEST_CASE("to_document golden output") {
    Labelling l = label_graph(parse_spec("C5+C3")).labelling;
    CHECK(to_document(l) == "C5: 1, 2, 3, 5, 8\nC3: 9, 13, 22\nI: 31, 35\n");
}

TEST_CASE("documents round-trip for every component shape") {
    for (const char* spec : {"P2", "C3", "C4", "2C4+P2", "C5+C4+C3", "4P2"}) {
        CAPTURE(spec);
        Labelling l = label_graph(parse_spec(spec)).labelling;
        Labelling back = parse_document(to_document(l));
        REQUIRE(back.components.size() == l.components.size());
        for (std::size_t i = 0; i < l.components.size(); ++i) {
            CHECK(back.components[i].shape == l.components[i].shape);
            CHECK(back.components[i].labels == l.components[i].labels);
        }
        CHECK(back.isolates == l.isolates);
    }

    Labelling k4 = complete_graph(4);
    Labelling back = parse_document(to_document(k4));
    REQUIRE(back.components.size() == 1);
    CHECK(back.components[0].shape == PieceShape::Clique);
    CHECK(back.components[0].labels == k4.components[0].labels);
    CHECK(verify(back).valid);
}

TEST_CASE("parser accepts comments, blank lines and lowercase heads") {
    Labelling l = parse_document("# a triangle\n"
                                 "\n"
                                 "c3: 1, 4, 3   # cycle order\n"
                                 "   i: 5, 7\n");
    REQUIRE(l.components.size() == 1);
    CHECK(l.components[0].shape == PieceShape::Cycle);
    CHECK(l.components[0].labels == std::vector<Big>{1, 4, 3});
    CHECK(l.isolates == std::vector<Big>{5, 7});
    CHECK(verify(l).valid);
}

TEST_CASE("zero isolates still need the final line") {
    Labelling l = parse_document("I:\n");
    CHECK(l.components.empty());
    CHECK(l.isolates.empty());
}

TEST_CASE("labels beyond 64 bits survive the round trip") {
    Labelling l = parse_document(
        "P2: 36893488147419103232, 73786976294838206464\n"
        "I: 110680464442257309696\n");
    CHECK(l.components[0].labels[0] == Big("36893488147419103232"));
    CHECK(verify(l).valid);
    CHECK(parse_document(to_document(l)).components[0].labels == l.components[0].labels);
}

TEST_CASE("parser rejections carry the line number") {
    CHECK_THROWS_WITH_AS(parse_document("C3: 1, 2\nI: 5\n"),
                         "component declares order 3 but lists 2 labels (line 1)",
                         DocumentParseError);
    CHECK_THROWS_WITH_AS(
        parse_document("C3: 1, 4, 3\n"),
        "missing final 'I:' line (use 'I:' with an empty list for zero isolates) (line 1)",
        DocumentParseError);
    CHECK_THROWS_WITH_AS(parse_document(""),
                         "missing final 'I:' line (use 'I:' with an empty list for zero "
                         "isolates) (line 1)",
                         DocumentParseError);
    CHECK_THROWS_WITH_AS(parse_document("I: 1\nI: 2\n"), "second 'I:' line (line 2)",
                         DocumentParseError);
    CHECK_THROWS_WITH_AS(parse_document("I: 5\nC3: 1, 4, 3\n"),
                         "component line after the 'I:' line (line 2)", DocumentParseError);
    CHECK_THROWS_WITH_AS(parse_document("X3: 1\nI: 2\n"),
                         "expected 'C', 'P', 'K' or 'I', got 'X' (line 1)",
                         DocumentParseError);
    CHECK_THROWS_WITH_AS(parse_document("C3: 1 4, 3\nI: 5\n"),
                         "expected ',' between labels (line 1)", DocumentParseError);
    CHECK_THROWS_WITH_AS(parse_document("I: 1, 2,\n"), "trailing comma (line 1)",
                         DocumentParseError);
    CHECK_THROWS_WITH_AS(parse_document("I: 1x\n"),
                         "label '1x' is not a decimal number (line 1)", DocumentParseError);
    CHECK_THROWS_WITH_AS(parse_document("C3 1, 4, 3\nI: 5\n"),
                         "expected ':' after the component order (line 1)",
                         DocumentParseError);
    CHECK_THROWS_WITH_AS(parse_document("I 5\n"), "expected ':' after 'I' (line 1)",
                         DocumentParseError);
    CHECK_THROWS_WITH_AS(parse_document("C: 1\nI: 2\n"),
                         "missing component order (line 1)", DocumentParseError);
    CHECK_THROWS_WITH_AS(parse_document("C2: 1, 2\nI: 3\n"),
                         "component order 2 is too small (line 1)", DocumentParseError);
    CHECK_THROWS_WITH_AS(parse_document("P1: 1\nI: 2\n"),
                         "component order 1 is too small (line 1)", DocumentParseError);
    CHECK_THROWS_WITH_AS(parse_document("I: ,\n"), "empty label (line 1)",
                         DocumentParseError);
}

TEST_CASE("paths of order two parse under both heads") {
    Labelling p = parse_document("P2: 20, 32\nI: 52\n");
    CHECK(p.components[0].shape == PieceShape::Path);
    Labelling k = parse_document("K2: 20, 32\nI: 52\n");
    CHECK(k.components[0].shape == PieceShape::Clique);
    // A two-clique and a two-path claim the same single edge.
    CHECK(verify(p).valid);
    CHECK(verify(k).valid);
}

TEST_CASE("stream overload matches the string overload") {
    std::istringstream in("C3: 1, 4, 3\nI: 5, 7\n");
    Labelling a = parse_document(in);
    Labelling b = parse_document("C3: 1, 4, 3\nI: 5, 7\n");
    CHECK(a.components[0].labels == b.components[0].labels);
    CHECK(a.isolates == b.isolates);
}
