#pragma once

#include <string>
#include <vector>

#include "sumlab/labelling.hpp"

namespace sumlab {

// Embedded reference labellings: the valid ones double as golden data for the
// demo and acceptance suites; the invalid ones are regression bait the
// verifier must reject (each note says which pair breaks them).
struct Fixture {
    std::string id;
    Labelling labelling;
    bool expectValid;
    std::string note;
};

const std::vector<Fixture>& reference_fixtures();

} // namespace sumlab
