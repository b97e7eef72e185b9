#include "sumlab/io.hpp"

#include <cctype>
#include <sstream>

namespace sumlab {

namespace {

char shape_letter(PieceShape s) {
    switch (s) {
        case PieceShape::Cycle: return 'C';
        case PieceShape::Path: return 'P';
        case PieceShape::Clique: return 'K';
    }
    return '?';
}

std::string join(const std::vector<Big>& labels) {
    std::string out;
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (i) out += ", ";
        out += labels[i].str();
    }
    return out;
}

std::vector<Big> parse_label_list(const std::string& text, int lineNo) {
    std::vector<Big> out;
    std::string cur;
    auto flush = [&]() {
        if (cur.empty()) throw DocumentParseError("empty label", lineNo);
        for (char c : cur)
            if (!std::isdigit(static_cast<unsigned char>(c)))
                throw DocumentParseError("label '" + cur + "' is not a decimal number",
                                         lineNo);
        out.emplace_back(cur);
        cur.clear();
    };
    bool any = false, gap = false;
    for (char c : text) {
        if (std::isspace(static_cast<unsigned char>(c))) {
            if (!cur.empty()) gap = true;
            continue;
        }
        if (c == ',') {
            flush();
            any = true;
            gap = false;
        } else {
            if (gap) throw DocumentParseError("expected ',' between labels", lineNo);
            cur += c;
            any = true;
        }
    }
    if (!cur.empty()) flush();
    else if (any) throw DocumentParseError("trailing comma", lineNo);
    return out;
}

} // namespace

std::string to_document(const Labelling& l) {
    std::ostringstream out;
    for (const auto& comp : l.components)
        out << shape_letter(comp.shape) << comp.labels.size() << ": " << join(comp.labels)
            << "\n";
    out << "I: " << join(l.isolates) << "\n";
    return out.str();
}

Labelling parse_document(std::istream& in) {
    Labelling l;
    std::string line;
    int lineNo = 0;
    bool sawIsolates = false;
    while (std::getline(in, line)) {
        ++lineNo;
        if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        std::size_t i = 0;
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        if (i == line.size()) continue;
        char head = static_cast<char>(std::toupper(static_cast<unsigned char>(line[i])));
        ++i;
        if (head == 'I') {
            if (sawIsolates) throw DocumentParseError("second 'I:' line", lineNo);
            while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
            if (i >= line.size() || line[i] != ':')
                throw DocumentParseError("expected ':' after 'I'", lineNo);
            l.isolates = parse_label_list(line.substr(i + 1), lineNo);
            sawIsolates = true;
            continue;
        }
        if (sawIsolates)
            throw DocumentParseError("component line after the 'I:' line", lineNo);
        PieceShape shape;
        if (head == 'C') shape = PieceShape::Cycle;
        else if (head == 'P') shape = PieceShape::Path;
        else if (head == 'K') shape = PieceShape::Clique;
        else
            throw DocumentParseError(
                std::string("expected 'C', 'P', 'K' or 'I', got '") + line[i - 1] + "'",
                lineNo);
        std::size_t orderStart = i;
        while (i < line.size() && std::isdigit(static_cast<unsigned char>(line[i]))) ++i;
        if (i == orderStart) throw DocumentParseError("missing component order", lineNo);
        int order = std::stoi(line.substr(orderStart, i - orderStart));
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        if (i >= line.size() || line[i] != ':')
            throw DocumentParseError("expected ':' after the component order", lineNo);
        LabelledComponent comp{shape, parse_label_list(line.substr(i + 1), lineNo)};
        if (static_cast<int>(comp.labels.size()) != order)
            throw DocumentParseError("component declares order " + std::to_string(order) +
                                         " but lists " +
                                         std::to_string(comp.labels.size()) + " labels",
                                     lineNo);
        int minOrder = shape == PieceShape::Cycle ? 3 : 2;
        if (order < minOrder)
            throw DocumentParseError("component order " + std::to_string(order) +
                                         " is too small",
                                     lineNo);
        l.components.push_back(std::move(comp));
    }
    if (!sawIsolates)
        throw DocumentParseError("missing final 'I:' line (use 'I:' with an empty list "
                                 "for zero isolates)",
                                 lineNo ? lineNo : 1);
    return l;
}

Labelling parse_document(const std::string& text) {
    std::istringstream in(text);
    return parse_document(in);
}

} // namespace sumlab
