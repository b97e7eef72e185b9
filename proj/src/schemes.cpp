#include "sumlab/schemes.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace sumlab {

namespace {

void must_verify(const Labelling& l, const std::string& what) {
    Certificate cert = verify(l);
    if (cert.valid) return;
    std::string msg = what + " failed self-verification:";
    for (const auto& v : cert.violations) msg += " " + describe(v);
    throw ConstructionIntegrityError(msg);
}

void must_hold_ntap(const Labelling& l, const NtapWitness& w, const std::string& what) {
    auto set = l.label_set();
    bool ok = w.offset > 0 && set.count(w.first) && set.count(w.first + w.offset) &&
              set.count(w.first + 2 * w.offset) && !set.count(w.offset);
    if (!ok)
        throw ConstructionIntegrityError(what + ": progression witness (" + w.first.str() +
                                         "," + w.offset.str() + ") does not hold");
}

std::vector<Big> fibonacci_from(const Big& s1, const Big& s2, int k) {
    std::vector<Big> l{s1, s2};
    while (static_cast<int>(l.size()) < k) l.push_back(l[l.size() - 1] + l[l.size() - 2]);
    return l;
}

} // namespace

Labelling fibonacci_path(const Big& s1, const Big& s2, int k) {
    if (k < 2) throw std::invalid_argument("fibonacci_path: k must be >= 2");
    if (!(0 < s1 && s1 < s2))
        throw std::invalid_argument("fibonacci_path: seeds must satisfy 0 < s1 < s2");
    auto labels = fibonacci_from(s1, s2, k);
    Labelling l;
    l.components.push_back({PieceShape::Path, labels});
    l.isolates.push_back(labels[k - 2] + labels[k - 1]);
    must_verify(l, "fibonacci_path");
    return l;
}

Big matching_exponential_closed_form(int position) {
    if (position < 1) throw std::invalid_argument("position must be >= 1");
    if (position % 2 == 0) return Big(3) << (position / 2 - 1); // 3*2^(k-1)
    return (Big(3) << (position / 2)) - 1;                      // 3*2^k - 1
}

Labelling matching_exponential(int m) {
    if (m < 1) throw std::invalid_argument("matching_exponential: m must be >= 1");
    Labelling l;
    for (int i = 1; i <= m; ++i)
        l.components.push_back({PieceShape::Path,
                                {matching_exponential_closed_form(2 * i - 1),
                                 matching_exponential_closed_form(2 * i)}});
    l.isolates.push_back(matching_exponential_closed_form(2 * m + 1));
    must_verify(l, "matching_exponential");
    return l;
}

Labelling matching_arithmetic(const Big& x, const Big& y, const Big& d, int k) {
    if (k < 0) throw std::invalid_argument("matching_arithmetic: k must be >= 0");
    if (!(x < y)) throw std::invalid_argument("matching_arithmetic: requires x < y");
    if (!(2 * x + d > y)) throw std::invalid_argument("matching_arithmetic: requires 2x+d > y");
    if (!(2 * x + d < x + y))
        throw std::invalid_argument("matching_arithmetic: requires 2x+d < x+y");
    Labelling l;
    std::set<Big> seen;
    for (int i = 0; i <= k; ++i) {
        Big a = x + i * d, b = y - i * d;
        for (const Big& v : {a, b})
            if (v <= 0 || !seen.insert(v).second)
                throw std::invalid_argument("matching_arithmetic: duplicate label " + v.str());
        l.components.push_back({PieceShape::Path, {a, b}});
    }
    Big iso = x + y;
    l.isolates.push_back(iso);
    if (!seen.insert(iso).second)
        throw std::invalid_argument("matching_arithmetic: duplicate label " + iso.str());
    // The three inequalities above are not sufficient on their own (e.g.
    // x=3, y=7, d=3 passes them but 3+4 = 7 creates a stray edge), so the
    // verifier has the last word.
    must_verify(l, "matching_arithmetic");
    return l;
}

Labelling matching_arithmetic_convenience(int n) {
    if (n < 2 || n % 2 != 0)
        throw std::invalid_argument("matching_arithmetic_convenience: n must be even and >= 2");
    return matching_arithmetic(n, 2 * n - 1, 1, n / 2 - 1);
}

Labelling fibonacci_cycle(const Big& s1, const Big& s2, int n) {
    if (n < 3) throw std::invalid_argument("fibonacci_cycle: n must be >= 3");
    if (n == 4)
        throw std::invalid_argument(
            "fibonacci_cycle: n = 4 not supported (a four-cycle's edge sums cannot "
            "all live inside the chain)");
    if (!(0 < s1 && s1 < s2))
        throw std::invalid_argument("fibonacci_cycle: seeds must satisfy 0 < s1 < s2");
    auto labels = fibonacci_from(s1, s2, n);
    Labelling l;
    l.components.push_back({PieceShape::Cycle, labels});
    l.isolates.push_back(labels[n - 1] + labels[0]);
    l.isolates.push_back(labels[n - 2] + labels[n - 1]);
    // Catches the bad seed families too, e.g. s2 = 2*s1 with n = 3, where
    // s1 + (2*s1+s2) equals the second isolate.
    must_verify(l, "fibonacci_cycle");
    return l;
}

std::pair<Labelling, NtapWitness> first_cycle_ntap(int n) {
    if (n < 3 || n == 4)
        throw std::invalid_argument("first_cycle_ntap: n must be >= 3 and != 4");

    Labelling l;
    NtapWitness w;
    if (n == 3) {
        l.components.push_back({PieceShape::Cycle, {1, 3, 4}});
        l.isolates = {5, 7};
        w = {1, 2};
    } else if (n == 5) {
        // The plain Fibonacci five-cycle already contains the progression
        // 1, 5, 9 with absent offset 4, so no special-purpose labelling is
        // needed (and the interleaved order below is invalid at n = 5).
        l = fibonacci_cycle(1, 2, 5);
        w = {1, 4};
    } else if (n % 2 == 0) {
        // Labels [n-2, 2n-3]: start at n-2, then alternate the descending
        // run 2n-3, 2n-5, ..., n-1 with the ascending run n, n+2, ..., 2n-4.
        std::vector<Big> order{Big(n - 2)};
        int high = 2 * n - 3, low = n;
        for (int i = 0; i + 1 < n; ++i) {
            if (i % 2 == 0) {
                order.push_back(high);
                high -= 2;
            } else {
                order.push_back(low);
                low += 2;
            }
        }
        l.components.push_back({PieceShape::Cycle, order});
        l.isolates = {Big(3 * n - 5), Big(3 * n - 3)};
        w = {Big(n - 2), 1};
    } else {
        // Odd n >= 7. Labels [n-3, 2n-4]: start at n-3, then alternate the
        // ascending run n-1, n+1, ..., 2n-4 with the descending run
        // 2n-5, 2n-7, ..., n-2.
        std::vector<Big> order{Big(n - 3)};
        int low = n - 1, high = 2 * n - 5;
        for (int i = 0; i + 1 < n; ++i) {
            if (i % 2 == 0) {
                order.push_back(low);
                low += 2;
            } else {
                order.push_back(high);
                high -= 2;
            }
        }
        l.components.push_back({PieceShape::Cycle, order});
        l.isolates = {Big(3 * n - 6), Big(3 * n - 4)};
        w = {Big(n - 3), 1};
    }
    must_verify(l, "first_cycle_ntap");
    must_hold_ntap(l, w, "first_cycle_ntap");
    return {l, w};
}

Labelling triangles_chain(const Big& x, const Big& y, int count) {
    if (count < 1) throw std::invalid_argument("triangles_chain: count must be >= 1");
    if (x <= 0 || y <= 0 || x == y)
        throw std::invalid_argument("triangles_chain: requires 0 < x, 0 < y, x != y");
    Labelling l;
    Big a = x, b = x + y; // each triangle is (a, b, a+b); next seeds are its isolates
    for (int i = 0; i < count; ++i) {
        Big c = a + b;
        l.components.push_back({PieceShape::Cycle, {a, b, c}});
        Big i1 = a + c, i2 = b + c;
        a = i1;
        b = i2;
    }
    l.isolates = {a, b};
    must_verify(l, "triangles_chain");
    return l;
}

Labelling c4_linear_exponential(int k) {
    if (k < 1) throw std::invalid_argument("c4_linear_exponential: k must be >= 1");
    Labelling l;
    Big a = 2, d = 3;
    for (int i = 0; i < k; ++i) {
        l.components.push_back({PieceShape::Cycle, {a, a + d, a + 2 * d, a + 3 * d}});
        Big nextA = 2 * a + d;
        if (i + 1 == k) l.isolates = {nextA, nextA + 2 * d, nextA + 4 * d};
        a = nextA;
        d *= 2;
    }
    // k == 1 verifies; from k == 2 onwards the family collides with itself
    // (cycles two apart share a residue class mod 3, e.g. 5+20 = 25), which
    // this check reports loudly.
    must_verify(l, "c4_linear_exponential");
    return l;
}

C4ChainCycle c4_linear_exponential_params(int k) {
    if (k < 1) throw std::invalid_argument("c4_linear_exponential_params: k must be >= 1");
    C4ChainCycle c{2, 3};
    for (int i = 1; i < k; ++i) {
        c.anchor = 2 * c.anchor + c.difference;
        c.difference *= 2;
    }
    return c;
}

std::pair<Labelling, NtapWitness> two_c4_base() {
    Labelling l;
    l.components.push_back({PieceShape::Cycle, {2, 5, 8, 11}});
    l.components.push_back({PieceShape::Cycle, {19, 13, 7, 1}});
    l.isolates = {20, 32};
    NtapWitness w{2, 3};
    must_verify(l, "two_c4_base");
    must_hold_ntap(l, w, "two_c4_base");
    return {l, w};
}

std::pair<Labelling, NtapWitness> c5_c4_special(const Big& a, const Big& b, const Big& c) {
    if (c <= 0) throw std::invalid_argument("c5_c4_special: requires c > 0");
    if (a != 2 * c) throw std::invalid_argument("c5_c4_special: requires a = 2c");
    if (b == 3 * c)
        throw std::invalid_argument(
            "c5_c4_special: requires b != 3c (else c + a = b creates a stray edge)");
    if (!(a < b)) throw std::invalid_argument("c5_c4_special: requires a < b");
    Labelling l;
    l.components.push_back(
        {PieceShape::Cycle, {a, b, a + b, a + 2 * b, 2 * a + 3 * b}});
    l.components.push_back(
        {PieceShape::Cycle, {c, 2 * b + c, 3 * a + 3 * b, 3 * a + 5 * b}});
    l.isolates = {3 * a + 5 * b + c, 6 * a + 8 * b};
    must_verify(l, "c5_c4_special");

    // Witness location: prefer the progression anchored at the five-cycle's
    // fourth label with the isolate gap as offset; fall back to the finder.
    auto found = find_ntaps(l);
    if (found.empty())
        throw ConstructionIntegrityError("c5_c4_special: no arithmetic-progression hook");
    NtapWitness preferred{a + 2 * b, l.isolates[1] - l.isolates[0]};
    for (const auto& f : found)
        if (f.first == preferred.first && f.offset == preferred.offset) return {l, f};
    return {l, found.front()};
}

Labelling c4_path_special(int k) {
    if (k < 2) throw std::invalid_argument("c4_path_special: k must be >= 2");
    Labelling l;
    if (k == 2) {
        l.components.push_back({PieceShape::Cycle, {1, 7, 13, 19}});
        l.components.push_back({PieceShape::Path, {20, 32}});
        l.isolates = {8, 52};
    } else if (k == 3) {
        l.components.push_back({PieceShape::Cycle, {1, 3, 9, 11}});
        l.components.push_back({PieceShape::Path, {12, 4, 16}});
        l.isolates = {20};
    } else if (k == 4) {
        l.components.push_back({PieceShape::Cycle, {1, 2, 6, 11}});
        l.components.push_back({PieceShape::Path, {17, 3, 8, 12}});
        l.isolates = {20};
    } else {
        std::vector<Big> path{26, 13, 7, 19, 20};
        while (static_cast<int>(path.size()) < k)
            path.push_back(path[path.size() - 1] + path[path.size() - 2]);
        l.components.push_back({PieceShape::Cycle, {2, 5, 8, 11}});
        l.components.push_back({PieceShape::Path, path});
        l.isolates = {path[k - 2] + path[k - 1]};
    }
    must_verify(l, "c4_path_special");
    return l;
}

Labelling complete_graph(int n) {
    if (n < 4) throw std::invalid_argument("complete_graph: n must be >= 4");
    Labelling l;
    LabelledComponent clique{PieceShape::Clique, {}};
    for (int i = 1; i <= n; ++i) clique.labels.push_back(Big(4) * i - 3);
    l.components.push_back(clique);
    for (int j = 1; j <= 2 * n - 3; ++j) l.isolates.push_back(Big(4) * j + 2);
    must_verify(l, "complete_graph");
    return l;
}

} // namespace sumlab
