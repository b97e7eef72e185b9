#include "sumlab/sigma_search.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "sumlab/bigint.hpp"

namespace sumlab {

namespace {

constexpr std::uint64_t kDefaultNodeLimit = 10'000'000'000ULL;

bool kind_less(const ComponentKind& a, const ComponentKind& b) {
    if (a.shape != b.shape) return static_cast<int>(a.shape) < static_cast<int>(b.shape);
    return a.order < b.order;
}

struct Target {
    int n = 0, m = 0, maxDeg = 0, minDeg = 0;
    bool maxDegTwo = false;
    std::vector<ComponentKind> kinds;     // sorted; only when maxDegTwo
    std::vector<std::vector<int>> adj;    // generic matching
    bool isComplete = false;
};

Target analyze(const ConcreteGraph& g) {
    Target t;
    t.n = g.n;
    t.m = static_cast<int>(g.edges.size());
    t.adj.assign(g.n, {});
    for (auto [a, b] : g.edges) {
        t.adj[a].push_back(b);
        t.adj[b].push_back(a);
    }
    t.minDeg = g.n ? static_cast<int>(t.adj[0].size()) : 0;
    for (const auto& nb : t.adj) {
        t.maxDeg = std::max(t.maxDeg, static_cast<int>(nb.size()));
        t.minDeg = std::min(t.minDeg, static_cast<int>(nb.size()));
    }
    if (t.minDeg < 1) throw std::invalid_argument("search target has an isolated vertex");
    t.maxDegTwo = t.maxDeg <= 2;
    if (t.maxDegTwo) {
        std::vector<char> seen(g.n, 0);
        for (int s = 0; s < g.n; ++s) {
            if (seen[s]) continue;
            int verts = 0, degSum = 0;
            std::vector<int> stack{s};
            seen[s] = 1;
            while (!stack.empty()) {
                int v = stack.back();
                stack.pop_back();
                ++verts;
                degSum += static_cast<int>(t.adj[v].size());
                for (int w : t.adj[v])
                    if (!seen[w]) {
                        seen[w] = 1;
                        stack.push_back(w);
                    }
            }
            int edges = degSum / 2;
            t.kinds.push_back({edges == verts ? Shape::Cycle : Shape::Path, verts});
        }
        std::sort(t.kinds.begin(), t.kinds.end(), kind_less);
    }
    t.isComplete = (2 * t.m == t.n * (t.n - 1));
    return t;
}

Big binom(int n, int k) {
    if (k < 0 || k > n) return 0;
    Big r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

struct InducedGraph {
    std::vector<int> labels; // sorted ascending
    std::vector<std::vector<int>> adj; // indices into labels
};

InducedGraph induce(const std::vector<int>& labelsIn) {
    InducedGraph g;
    g.labels = labelsIn;
    std::sort(g.labels.begin(), g.labels.end());
    int k = static_cast<int>(g.labels.size());
    g.adj.assign(k, {});
    std::vector<char> present;
    int maxL = k ? g.labels.back() : 0;
    present.assign(maxL + 1, 0);
    for (int v : g.labels) present[v] = 1;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
            long long s = static_cast<long long>(g.labels[i]) + g.labels[j];
            if (s <= maxL && present[static_cast<int>(s)]) {
                g.adj[i].push_back(j);
                g.adj[j].push_back(i);
            }
        }
    return g;
}

// Walk one max-degree-two component starting at `start`, returning vertex
// indices in traversal order (deterministic: cycles start at their smallest
// label and move towards the smaller neighbour).
std::vector<int> walk_component(const InducedGraph& g, int start, bool isCycle,
                                std::vector<char>& used) {
    std::vector<int> order;
    int prev = -1, cur = start;
    if (isCycle && g.adj[start].size() == 2) {
        int a = g.adj[start][0], b = g.adj[start][1];
        prev = (g.labels[a] < g.labels[b]) ? b : a; // leave via the smaller side
    }
    while (true) {
        order.push_back(cur);
        used[cur] = 1;
        int next = -1;
        for (int w : g.adj[cur])
            if (w != prev && !used[w]) {
                next = w;
                break;
            }
        if (next == -1) break;
        prev = cur;
        cur = next;
    }
    return order;
}

Labelling witness_from(const InducedGraph& g) {
    int k = static_cast<int>(g.labels.size());
    Labelling out;
    std::vector<char> used(k, 0);
    struct Piece {
        Big first;
        LabelledComponent comp;
    };
    std::vector<Piece> pieces;
    for (int i = 0; i < k; ++i) {
        if (used[i]) continue;
        if (g.adj[i].empty()) {
            used[i] = 1;
            out.isolates.push_back(g.labels[i]);
            continue;
        }
        // Find the component and decide path vs cycle.
        std::vector<int> comp;
        std::vector<int> stack{i};
        std::vector<char> inComp(k, 0);
        inComp[i] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (int w : g.adj[v])
                if (!inComp[w]) {
                    inComp[w] = 1;
                    stack.push_back(w);
                }
        }
        int degSum = 0, maxDeg = 0;
        for (int v : comp) {
            degSum += static_cast<int>(g.adj[v].size());
            maxDeg = std::max(maxDeg, static_cast<int>(g.adj[v].size()));
        }
        if (maxDeg > 2) {
            // Only one shape with degree > 2 is representable: a clique
            // (which is also the only generic target this search produces).
            bool complete = true;
            for (int v : comp)
                complete = complete && g.adj[v].size() + 1 == comp.size();
            if (!complete)
                throw std::logic_error(
                    "witness reconstruction only supports paths, cycles and cliques");
            Piece p;
            p.comp.shape = PieceShape::Clique;
            for (int v : comp) {
                p.comp.labels.push_back(g.labels[v]);
                used[v] = 1;
            }
            std::sort(p.comp.labels.begin(), p.comp.labels.end());
            p.first = p.comp.labels.front();
            pieces.push_back(std::move(p));
            continue;
        }
        bool isCycle = (degSum / 2 == static_cast<int>(comp.size()));
        int start = -1;
        if (isCycle) {
            for (int v : comp)
                if (start == -1 || g.labels[v] < g.labels[start]) start = v;
        } else {
            for (int v : comp)
                if (g.adj[v].size() == 1 && (start == -1 || g.labels[v] < g.labels[start]))
                    start = v;
        }
        auto order = walk_component(g, start, isCycle, used);
        Piece p;
        p.first = g.labels[start];
        p.comp.shape = isCycle ? PieceShape::Cycle : PieceShape::Path;
        for (int v : order) p.comp.labels.push_back(g.labels[v]);
        pieces.push_back(std::move(p));
    }
    std::sort(pieces.begin(), pieces.end(),
              [](const Piece& a, const Piece& b) { return a.first < b.first; });
    for (auto& p : pieces) out.components.push_back(std::move(p.comp));
    std::sort(out.isolates.begin(), out.isolates.end());
    return out;
}

// Generic subgraph matching: is the induced non-isolated part isomorphic to
// the target? Small backtracking over degree-compatible assignments.
bool matches_generic(const Target& t, const InducedGraph& g, int wantIsolates) {
    int k = static_cast<int>(g.labels.size());
    std::vector<int> core;
    int isolates = 0, edges = 0;
    for (int i = 0; i < k; ++i) {
        if (g.adj[i].empty())
            ++isolates;
        else
            core.push_back(i);
        edges += static_cast<int>(g.adj[i].size());
    }
    edges /= 2;
    if (isolates != wantIsolates || static_cast<int>(core.size()) != t.n || edges != t.m)
        return false;
    // assignment[targetVertex] = index into core
    std::vector<int> assignment(t.n, -1);
    std::vector<char> taken(core.size(), 0);
    std::vector<std::vector<char>> coreAdj(core.size(), std::vector<char>(core.size(), 0));
    std::vector<int> pos(k, -1);
    for (std::size_t i = 0; i < core.size(); ++i) pos[core[i]] = static_cast<int>(i);
    for (std::size_t i = 0; i < core.size(); ++i)
        for (int w : g.adj[core[i]]) coreAdj[i][pos[w]] = 1;

    std::function<bool(int)> place = [&](int v) -> bool {
        if (v == t.n) return true;
        for (std::size_t c = 0; c < core.size(); ++c) {
            if (taken[c]) continue;
            if (g.adj[core[c]].size() != t.adj[v].size()) continue;
            bool ok = true;
            for (int w : t.adj[v]) {
                if (assignment[w] == -1) continue;
                if (!coreAdj[c][assignment[w]]) {
                    ok = false;
                    break;
                }
            }
            // Also forbid extra adjacency towards already-placed vertices.
            if (ok) {
                for (int u = 0; u < v; ++u) {
                    bool tAdj = false;
                    for (int w : t.adj[v])
                        if (w == u) tAdj = true;
                    if (!tAdj && coreAdj[c][assignment[u]]) {
                        ok = false;
                        break;
                    }
                }
            }
            if (!ok) continue;
            taken[c] = 1;
            assignment[v] = static_cast<int>(c);
            if (place(v + 1)) return true;
            taken[c] = 0;
            assignment[v] = -1;
        }
        return false;
    };
    return place(0);
}

struct Budget {
    std::uint64_t nodeLimit;
    double timeLimit;
    std::chrono::steady_clock::time_point start;
    std::uint64_t nodes = 0;
    bool blown = false;
    std::string reason;

    Budget(const SearchLimits& limits)
        : nodeLimit(limits.nodeLimit ? limits.nodeLimit : kDefaultNodeLimit),
          timeLimit(limits.timeLimitSeconds),
          start(std::chrono::steady_clock::now()) {}

    double elapsed() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    }

    // Returns false once the budget is gone.
    bool tick() {
        if (blown) return false;
        ++nodes;
        if (nodes > nodeLimit) {
            blown = true;
            reason = "node limit " + std::to_string(nodeLimit) + " exhausted";
            return false;
        }
        if (timeLimit > 0 && (nodes & 0xFFF) == 0 && elapsed() > timeLimit) {
            blown = true;
            std::ostringstream os;
            os << "time limit " << timeLimit << "s exhausted";
            reason = os.str();
            return false;
        }
        return true;
    }
};

bool leaf_matches(const Target& t, const std::vector<int>& chosen, int wantIsolates,
                  bool requireGcdOne) {
    if (requireGcdOne) {
        int g = 0;
        for (int v : chosen) g = std::gcd(g, v);
        if (g != 1) return false;
    }
    InducedGraph ig = induce(chosen);
    if (t.maxDegTwo) {
        int isolates = 0;
        std::vector<char> seen(ig.labels.size(), 0);
        std::vector<ComponentKind> kinds;
        for (std::size_t i = 0; i < ig.labels.size(); ++i) {
            if (ig.adj[i].size() > 2) return false;
            if (ig.adj[i].empty()) {
                ++isolates;
                seen[i] = 1;
            }
        }
        if (isolates != wantIsolates) return false;
        for (std::size_t s = 0; s < ig.labels.size(); ++s) {
            if (seen[s]) continue;
            int verts = 0, degSum = 0;
            std::vector<int> stack{static_cast<int>(s)};
            seen[s] = 1;
            while (!stack.empty()) {
                int v = stack.back();
                stack.pop_back();
                ++verts;
                degSum += static_cast<int>(ig.adj[v].size());
                for (int w : ig.adj[v])
                    if (!seen[w]) {
                        seen[w] = 1;
                        stack.push_back(w);
                    }
            }
            kinds.push_back({degSum / 2 == verts ? Shape::Cycle : Shape::Path, verts});
        }
        std::sort(kinds.begin(), kinds.end(), kind_less);
        return kinds == t.kinds;
    }
    return matches_generic(t, ig, wantIsolates);
}

// Depth-first ascending-subset enumeration with degree/edge pruning. Labels
// are chosen in increasing order, so a new label z only creates edges between
// earlier labels x and z-x; z itself cannot gain an edge until a later label
// equals x+z. Degrees and edge counts only ever grow, which makes the two
// prunes sound.
struct PrunedDfs {
    const Target& t;
    int B, size, wantIsolates;
    bool requireGcdOne;
    Budget& budget;
    std::vector<int> chosen;
    std::vector<char> present;
    std::vector<int> deg;
    int edgeCount = 0;
    std::optional<std::vector<int>> hit;

    PrunedDfs(const Target& t_, int B_, int size_, int wantIsolates_, bool gcdOne,
              Budget& budget_)
        : t(t_), B(B_), size(size_), wantIsolates(wantIsolates_), requireGcdOne(gcdOne),
          budget(budget_), present(B_ + 1, 0), deg(B_ + 1, 0) {}

    bool run(int from) { return extend(from); }

    bool extend(int from) {
        if (static_cast<int>(chosen.size()) == size) {
            if (edgeCount == t.m && leaf_matches(t, chosen, wantIsolates, requireGcdOne)) {
                hit = chosen;
                return true;
            }
            return false;
        }
        int need = size - static_cast<int>(chosen.size());
        for (int v = from; v + need - 1 <= B; ++v) {
            if (!budget.tick()) return false;
            // Apply v's new edges (pairs x + (v-x) among the prefix).
            int added = 0;
            bool bad = false;
            for (int x : chosen) {
                int y = v - x;
                if (y <= x || y > B || !present[y]) continue;
                ++deg[x];
                ++deg[y];
                ++added;
                ++edgeCount;
                if (deg[x] > t.maxDeg || deg[y] > t.maxDeg || edgeCount > t.m) bad = true;
            }
            if (!bad) {
                chosen.push_back(v);
                present[v] = 1;
                if (extend(v + 1)) return true;
                present[v] = 0;
                chosen.pop_back();
                if (budget.blown) {
                    undo(v, added);
                    return false;
                }
            }
            undo(v, added);
        }
        return false;
    }

    void undo(int v, int added) {
        if (!added) return;
        for (int x : chosen) {
            int y = v - x;
            if (y <= x || y > B || !present[y]) continue;
            --deg[x];
            --deg[y];
            --edgeCount;
        }
        (void)added;
    }
};

int range_floor(const Target& t) {
    // Distinct labels force range >= |S|-1 >= n-1; the structural floor is
    // 2n - (maxDeg - minDeg) - 2.
    return std::max(t.n - 1, 2 * t.n - (t.maxDeg - t.minDeg) - 2);
}

} // namespace

SigmaSearchResult min_isolates_bounded(const ConcreteGraph& graph, int B, int iMax,
                                       const SearchLimits& limits) {
    if (B < 1) throw std::invalid_argument("min_isolates_bounded: B must be >= 1");
    Target t = analyze(graph);
    if (iMax < t.minDeg)
        throw std::invalid_argument(
            "min_isolates_bounded: iMax is below the minimum degree, which lower-bounds "
            "the isolate count");

    SigmaSearchResult res;
    res.boundB = B;
    Budget budget(limits);
    for (int i = t.minDeg; i <= iMax; ++i) {
        int size = t.n + i;
        if (size > B) {
            res.refutedUpToIsolates = i; // not enough distinct labels in [1, B]
            continue;
        }
        Big raw = binom(B, size);
        if (raw > Big(budget.nodeLimit - std::min(budget.nodeLimit, budget.nodes))) {
            res.status = SearchStatus::BudgetExceeded;
            res.nodes = budget.nodes;
            res.elapsedSeconds = budget.elapsed();
            res.message = "estimated " + raw.str() + " subsets of size " +
                          std::to_string(size) + " exceeds the node budget" +
                          (res.refutedUpToIsolates >= 0
                               ? "; isolate counts up to " +
                                     std::to_string(res.refutedUpToIsolates) +
                                     " already refuted for labels <= " + std::to_string(B)
                               : "");
            return res;
        }
        PrunedDfs dfs(t, B, size, i, /*gcdOne=*/true, budget);
        bool found = dfs.run(1);
        if (budget.blown) {
            res.status = SearchStatus::BudgetExceeded;
            res.nodes = budget.nodes;
            res.elapsedSeconds = budget.elapsed();
            res.message = budget.reason + " while trying " + std::to_string(i) +
                          " isolate(s)";
            return res;
        }
        if (found) {
            res.status = SearchStatus::Found;
            res.foundIsolates = i;
            res.witness = witness_from(induce(*dfs.hit));
            res.nodes = budget.nodes;
            res.elapsedSeconds = budget.elapsed();
            res.message = "found a labelling with " + std::to_string(i) +
                          " isolate(s) and labels <= " + std::to_string(B) +
                          (res.refutedUpToIsolates >= 0
                               ? "; counts up to " + std::to_string(res.refutedUpToIsolates) +
                                     " refuted for this bound"
                               : "");
            return res;
        }
        res.refutedUpToIsolates = i;
    }
    res.status = SearchStatus::RefutedUpTo;
    res.nodes = budget.nodes;
    res.elapsedSeconds = budget.elapsed();
    res.message = "no valid labelling with up to " + std::to_string(iMax) +
                  " isolate(s) and labels <= " + std::to_string(B) +
                  " (bounded evidence, not a proof)";
    return res;
}

RangeSearchResult min_range_bounded(const ConcreteGraph& graph, int isolateBudget, int B,
                                    const SearchLimits& limits) {
    if (B < 1) throw std::invalid_argument("min_range_bounded: B must be >= 1");
    if (isolateBudget < 0)
        throw std::invalid_argument("min_range_bounded: isolate budget must be >= 0");
    Target t = analyze(graph);

    RangeSearchResult res;
    res.boundB = B;
    Budget budget(limits);
    for (int r = range_floor(t); r <= B - 1; ++r) {
        for (int m = 1; m + r <= B; ++m) {
            for (int size = std::max(2, t.n); size <= t.n + isolateBudget; ++size) {
                if (size - 2 > r - 1) continue; // window too small
                // Force both window endpoints; enumerate the interior.
                PrunedDfs dfs(t, m + r, size, size - t.n, /*gcdOne=*/false, budget);
                dfs.chosen.push_back(m);
                dfs.present[m] = 1;
                struct Closer {
                    PrunedDfs& d;
                    int hi;
                    bool found = false;
                    bool close(int from) { return grow(from); }
                    bool grow(int v) {
                        // Interior values live in (m, m+r); the final slot is
                        // always the fixed top endpoint.
                        if (static_cast<int>(d.chosen.size()) == d.size - 1)
                            return addTop();
                        int slots = d.size - 1 - static_cast<int>(d.chosen.size());
                        for (int x = v; x + slots - 1 <= hi; ++x) {
                            if (!d.budget.tick()) return false;
                            int added = 0;
                            bool bad = false;
                            for (int c : d.chosen) {
                                int y = x - c;
                                if (y <= c || !d.present[y]) continue;
                                ++d.deg[c];
                                ++d.deg[y];
                                ++added;
                                ++d.edgeCount;
                                if (d.deg[c] > d.t.maxDeg || d.deg[y] > d.t.maxDeg ||
                                    d.edgeCount > d.t.m)
                                    bad = true;
                            }
                            if (!bad) {
                                d.chosen.push_back(x);
                                d.present[x] = 1;
                                if (grow(x + 1)) return true;
                                d.present[x] = 0;
                                d.chosen.pop_back();
                                if (d.budget.blown) {
                                    d.undo(x, added);
                                    return false;
                                }
                            }
                            d.undo(x, added);
                        }
                        return false;
                    }
                    bool addTop() {
                        int x = hi + 1; // the forced maximum m + r
                        if (!d.budget.tick()) return false;
                        int added = 0;
                        bool bad = false;
                        for (int c : d.chosen) {
                            int y = x - c;
                            if (y <= c || y > x || !d.present[y]) continue;
                            ++d.deg[c];
                            ++d.deg[y];
                            ++added;
                            ++d.edgeCount;
                            if (d.deg[c] > d.t.maxDeg || d.deg[y] > d.t.maxDeg ||
                                d.edgeCount > d.t.m)
                                bad = true;
                        }
                        if (!bad) {
                            d.chosen.push_back(x);
                            d.present[x] = 1;
                            if (d.edgeCount == d.t.m &&
                                leaf_matches(d.t, d.chosen, d.wantIsolates, false)) {
                                d.hit = d.chosen;
                                found = true;
                            }
                            d.present[x] = 0;
                            d.chosen.pop_back();
                        }
                        d.undo(x, added);
                        return found;
                    }
                };
                Closer closer{dfs, m + r - 1};
                bool found = (size == 2) ? closer.addTop() : closer.close(m + 1);
                if (budget.blown) {
                    res.status = SearchStatus::BudgetExceeded;
                    res.nodes = budget.nodes;
                    res.elapsedSeconds = budget.elapsed();
                    res.message = budget.reason + " while trying range " + std::to_string(r);
                    return res;
                }
                if (found) {
                    res.status = SearchStatus::Found;
                    res.achievedRange = r;
                    res.witness = witness_from(induce(*dfs.hit));
                    res.nodes = budget.nodes;
                    res.elapsedSeconds = budget.elapsed();
                    res.message = "smallest range with labels <= " + std::to_string(B) +
                                  " and at most " + std::to_string(isolateBudget) +
                                  " isolate(s) is " + std::to_string(r);
                    return res;
                }
            }
        }
    }
    res.status = SearchStatus::RefutedUpTo;
    res.nodes = budget.nodes;
    res.elapsedSeconds = budget.elapsed();
    res.message = "no valid labelling with at most " + std::to_string(isolateBudget) +
                  " isolate(s) and labels <= " + std::to_string(B);
    return res;
}

namespace detail {

InducedShape classify_induced(const std::vector<int>& labels) {
    InducedShape shape;
    InducedGraph g = induce(labels);
    for (const auto& nb : g.adj)
        if (nb.size() > 2) return shape; // maxDegreeAtMostTwo stays false
    shape.maxDegreeAtMostTwo = true;
    std::vector<char> seen(g.labels.size(), 0);
    for (std::size_t s = 0; s < g.labels.size(); ++s) {
        if (seen[s]) continue;
        if (g.adj[s].empty()) {
            ++shape.isolateCount;
            seen[s] = 1;
            continue;
        }
        int verts = 0, degSum = 0;
        std::vector<int> stack{static_cast<int>(s)};
        seen[s] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            ++verts;
            degSum += static_cast<int>(g.adj[v].size());
            for (int w : g.adj[v])
                if (!seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
        }
        shape.components.push_back({degSum / 2 == verts ? Shape::Cycle : Shape::Path, verts});
    }
    std::sort(shape.components.begin(), shape.components.end(), kind_less);
    return shape;
}

namespace {

// Plain subset enumeration: no degree or edge-count pruning while growing,
// full recheck at every leaf. Same ascending order as the pruned search.
bool plain_subsets(int from, int B, int size, std::vector<int>& chosen,
                   const std::function<bool(const std::vector<int>&)>& atLeaf) {
    if (static_cast<int>(chosen.size()) == size) return atLeaf(chosen);
    int need = size - static_cast<int>(chosen.size());
    for (int v = from; v + need - 1 <= B; ++v) {
        chosen.push_back(v);
        if (plain_subsets(v + 1, B, size, chosen, atLeaf)) return true;
        chosen.pop_back();
    }
    return false;
}

} // namespace

SigmaSearchResult min_isolates_bounded_unpruned(const ConcreteGraph& graph, int B,
                                                int iMax) {
    Target t = analyze(graph);
    if (iMax < t.minDeg)
        throw std::invalid_argument("min_isolates_bounded_unpruned: iMax below minimum degree");
    SigmaSearchResult res;
    res.boundB = B;
    for (int i = t.minDeg; i <= iMax; ++i) {
        int size = t.n + i;
        if (size > B) {
            res.refutedUpToIsolates = i;
            continue;
        }
        std::vector<int> chosen;
        std::optional<std::vector<int>> hit;
        plain_subsets(1, B, size, chosen, [&](const std::vector<int>& s) {
            if (!leaf_matches(t, s, i, /*requireGcdOne=*/true)) return false;
            hit = s;
            return true;
        });
        if (hit) {
            res.status = SearchStatus::Found;
            res.foundIsolates = i;
            res.witness = witness_from(induce(*hit));
            return res;
        }
        res.refutedUpToIsolates = i;
    }
    res.status = SearchStatus::RefutedUpTo;
    return res;
}

RangeSearchResult min_range_bounded_unpruned(const ConcreteGraph& graph, int isolateBudget,
                                             int B) {
    Target t = analyze(graph);
    RangeSearchResult res;
    res.boundB = B;
    for (int r = std::max(t.n - 1, 2 * t.n - (t.maxDeg - t.minDeg) - 2); r <= B - 1; ++r) {
        for (int m = 1; m + r <= B; ++m) {
            for (int size = std::max(2, t.n); size <= t.n + isolateBudget; ++size) {
                if (size - 2 > r - 1) continue;
                std::vector<int> chosen{m};
                std::optional<std::vector<int>> hit;
                plain_subsets(m + 1, m + r - 1, size - 1, chosen,
                              [&](const std::vector<int>& s) {
                                  std::vector<int> full = s;
                                  full.push_back(m + r);
                                  if (!leaf_matches(t, full, size - t.n, false)) return false;
                                  hit = full;
                                  return true;
                              });
                if (hit) {
                    res.status = SearchStatus::Found;
                    res.achievedRange = r;
                    res.witness = witness_from(induce(*hit));
                    return res;
                }
            }
        }
    }
    res.status = SearchStatus::RefutedUpTo;
    return res;
}

} // namespace detail

} // namespace sumlab
