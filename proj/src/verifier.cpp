#include "sumlab/verifier.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace sumlab {

std::string violation_kind_name(ViolationKind k) {
    switch (k) {
        case ViolationKind::DuplicateLabel: return "DuplicateLabel";
        case ViolationKind::NonPositive: return "NonPositive";
        case ViolationKind::MissingEdge: return "MissingEdge";
        case ViolationKind::UnwantedEdge: return "UnwantedEdge";
        case ViolationKind::IsolateNotIsolated: return "IsolateNotIsolated";
        case ViolationKind::InternalC4Sum: return "InternalC4Sum";
        case ViolationKind::FewDistinctC4Sums: return "FewDistinctC4Sums";
        case ViolationKind::NonArithmeticC4Sums: return "NonArithmeticC4Sums";
    }
    return "?";
}

std::string describe(const Violation& v) {
    std::string s = violation_kind_name(v.kind) + "(" + v.a.str();
    if (v.b != 0) s += "," + v.b.str();
    s += ")";
    return s;
}

std::vector<std::pair<Big, Big>> induced_edges(const std::vector<Big>& labels) {
    std::set<Big> set;
    for (const auto& l : labels) {
        if (l <= 0) throw std::invalid_argument("non-positive label " + l.str());
        if (!set.insert(l).second)
            throw std::invalid_argument("duplicate label " + l.str());
    }
    std::vector<Big> sorted(set.begin(), set.end());
    std::vector<std::pair<Big, Big>> edges;
    for (std::size_t i = 0; i < sorted.size(); ++i)
        for (std::size_t j = i + 1; j < sorted.size(); ++j)
            if (set.count(sorted[i] + sorted[j]))
                edges.emplace_back(sorted[i], sorted[j]);
    return edges; // already sorted: generated in lexicographic order
}

Certificate verify(const Labelling& l) {
    Certificate cert;
    auto all = l.all_labels();

    // Label-set sanity first; edge analysis needs a genuine set.
    std::set<Big> seen, duplicated;
    for (const auto& x : all) {
        if (x <= 0) {
            cert.violations.push_back({ViolationKind::NonPositive, x, 0});
        } else if (!seen.insert(x).second && duplicated.insert(x).second) {
            cert.violations.push_back({ViolationKind::DuplicateLabel, x, 0});
        }
    }
    if (!cert.violations.empty()) {
        cert.valid = false;
        return cert;
    }

    std::set<Big> isolateSet(l.isolates.begin(), l.isolates.end());
    auto induced = induced_edges(all);
    auto claimed = l.claimed_edges();
    std::set<std::pair<Big, Big>> inducedSet(induced.begin(), induced.end());
    std::set<std::pair<Big, Big>> claimedSet(claimed.begin(), claimed.end());

    for (const auto& e : claimed)
        if (!inducedSet.count(e))
            cert.violations.push_back({ViolationKind::MissingEdge, e.first, e.second});
    for (const auto& e : induced) {
        if (claimedSet.count(e)) continue;
        bool touchesIsolate = isolateSet.count(e.first) || isolateSet.count(e.second);
        cert.violations.push_back({touchesIsolate ? ViolationKind::IsolateNotIsolated
                                                  : ViolationKind::UnwantedEdge,
                                   e.first, e.second});
    }
    cert.valid = cert.violations.empty();
    return cert;
}

std::vector<NtapWitness> find_ntaps(const Labelling& l) {
    auto set = l.label_set();
    std::vector<Big> sorted(set.begin(), set.end());
    std::vector<NtapWitness> out;
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        for (std::size_t j = i + 1; j < sorted.size(); ++j) {
            Big d = sorted[j] - sorted[i];
            if (set.count(d)) continue;
            if (set.count(sorted[j] + d)) out.push_back({sorted[i], d});
        }
    }
    return out; // sorted by (first, offset) by construction
}

PathAppendCheck check_path_append(const Labelling& l) {
    if (l.isolates.size() < 2)
        throw std::invalid_argument("check_path_append needs at least 2 isolates");
    std::vector<Big> iso = l.isolates;
    std::sort(iso.begin(), iso.end());
    Big target = iso[iso.size() - 1] + iso[iso.size() - 2];

    auto verts = l.vertex_labels();
    std::sort(verts.begin(), verts.end());
    PathAppendCheck res;
    for (std::size_t i = 0; i < verts.size(); ++i)
        for (std::size_t j = i + 1; j < verts.size(); ++j)
            if (verts[i] + verts[j] == target) {
                res.ok = false;
                res.offendingPair = {verts[i], verts[j]};
                return res;
            }
    return res;
}

Certificate c4_structural_checks(const Labelling& l) {
    Certificate cert;
    for (const auto& c : l.components) {
        if (c.shape != PieceShape::Cycle || c.labels.size() != 4) continue;
        const auto& L = c.labels;
        std::set<Big> own(L.begin(), L.end());
        std::vector<Big> sums;
        for (int i = 0; i < 4; ++i) sums.push_back(L[i] + L[(i + 1) % 4]);

        for (const auto& s : sums)
            if (own.count(s))
                cert.violations.push_back({ViolationKind::InternalC4Sum, s, 0});

        std::set<Big> distinct(sums.begin(), sums.end());
        if (distinct.size() < 3) {
            cert.violations.push_back(
                {ViolationKind::FewDistinctC4Sums, *distinct.begin(), 0});
        } else if (distinct.size() == 3) {
            std::vector<Big> v(distinct.begin(), distinct.end());
            if (v[0] + v[2] != 2 * v[1])
                cert.violations.push_back({ViolationKind::NonArithmeticC4Sums, v[0], v[2]});
        }
    }
    cert.valid = cert.violations.empty();
    return cert;
}

} // namespace sumlab
