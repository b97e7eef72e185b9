#pragma once

#include <iosfwd>
#include <string>

#include "sumlab/labelling.hpp"

namespace sumlab {

// Line-oriented labelling document:
//   # comment (ignored)
//   C5: 1, 2, 3, 5, 8
//   C3: 9, 13, 22
//   K4: 1, 5, 9, 13          (cliques supported for the complete-graph scheme)
//   I: 31, 35
// Exactly one I: line (last); decimal labels only (they can exceed any
// machine word).
std::string to_document(const Labelling& l);

struct DocumentParseError : std::runtime_error {
    int line;
    DocumentParseError(const std::string& msg, int lineNo)
        : std::runtime_error(msg + " (line " + std::to_string(lineNo) + ")"),
          line(lineNo) {}
};

Labelling parse_document(std::istream& in);
Labelling parse_document(const std::string& text);

} // namespace sumlab
