#pragma once

#include <utility>
#include <vector>

#include "sumlab/bigint.hpp"
#include "sumlab/labelling.hpp"
#include "sumlab/verifier.hpp"

namespace sumlab {

// Every constructor below self-verifies its output and throws
// ConstructionIntegrityError if the labels do not induce exactly the claimed
// graph. Parameter-window violations throw std::invalid_argument naming the
// failed condition.

// Path l1=s1, l2=s2, l_i = l_{i-1} + l_{i-2}; one isolate l_{k-1} + l_k.
Labelling fibonacci_path(const Big& s1, const Big& s2, int k);

// m disjoint edges (2,3),(5,6),(11,12),...; one isolate 3*2^m - 1.
// Closed form: label(2k) = 3*2^(k-1), label(2k+1) = 3*2^k - 1 (label(1) = 2).
Labelling matching_exponential(int m);
Big matching_exponential_closed_form(int position); // 1-based position

// Edges (x + i*d, y - i*d) for i = 0..k; one isolate x+y.
Labelling matching_arithmetic(const Big& x, const Big& y, const Big& d, int k);
// x=n, y=2n-1, d=1, k=n/2-1 for an n-vertex perfect matching (n even).
Labelling matching_arithmetic_convenience(int n);

// Cycle l1=s1, l2=s2, l_i = l_{i-1} + l_{i-2}; isolates l_n + l_1 and
// l_{n-1} + l_n. Rejects n == 4 (a four-cycle cannot absorb its own edge
// sums this way) and any seed pair that fails verification (e.g. s2 == 2*s1
// for n == 3).
Labelling fibonacci_cycle(const Big& s1, const Big& s2, int n);

// Deterministic opening cycle that both verifies and contains an NTAP:
//   n == 3      -> (1,3,4), isolates {5,7}, NTAP (1,2)
//   n == 5      -> (1,2,3,5,8), isolates {9,13}, NTAP (1,4)
//   even n >= 6 -> interleaved labels [n-2, 2n-3], isolates {3n-5, 3n-3},
//                  NTAP (n-2, 1)
//   odd n >= 7  -> interleaved labels [n-3, 2n-4], isolates {3n-6, 3n-4},
//                  NTAP (n-3, 1)
// The odd interleaving is not offered for n == 5 (it fails verification).
std::pair<Labelling, NtapWitness> first_cycle_ntap(int n);

// Chain of `count` triangles; triple i+1 is seeded by triple i's isolate
// pair. Final isolates 3^l*x + floor(3^l/2)*y and 3^l*x + ceil(3^l/2)*y.
Labelling triangles_chain(const Big& x, const Big& y, int count);

// k four-cycles where cycle i is the previous cycle's isolate triple extended
// by one term (an AP with anchor a_i, difference d_i = 3*2^(i-1)); exactly
// three isolates. Only k == 1 verifies: from k == 2 onwards the family
// collides with itself (5+20 = 25, 8+44 = 52, ...), so larger k throws
// ConstructionIntegrityError naming the violations. The per-cycle arithmetic
// is still exposed via c4_linear_exponential_params for growth reporting.
Labelling c4_linear_exponential(int k);

struct C4ChainCycle {
    Big anchor;     // a_k: first label of the k-th cycle
    Big difference; // d_k = 3*2^(k-1)
};
// Pure recurrence a_1 = 2, d_1 = 3, a_{k+1} = 2*a_k + d_k, d_{k+1} = 2*d_k.
C4ChainCycle c4_linear_exponential_params(int k);

// Cycles (2,5,8,11) and (19,13,7,1); isolates {20,32}; NTAP (2,3).
std::pair<Labelling, NtapWitness> two_c4_base();

// C5 (a, b, a+b, a+2b, 2a+3b) + C4 (c, 2b+c, 3a+3b, 3a+5b);
// isolates {3a+5b+c, 6a+8b}. Requires a = 2c, b != 3c, a < b.
// The returned NTAP is located by the finder, not assumed.
std::pair<Labelling, NtapWitness> c5_c4_special(const Big& a, const Big& b, const Big& c);

// One C4 plus one path of order k:
//   k == 2 -> C4 (1,7,13,19), P2 (20,32), isolates {8,52}
//   k == 3 -> C4 (1,3,9,11), P3 (12,4,16), isolate {20}
//   k == 4 -> C4 (1,2,6,11), P4 (17,3,8,12), isolate {20}
//   k >= 5 -> C4 (2,5,8,11), path 26,13,7,19,20,(Fibonacci continuation...),
//             isolate = last pair sum (k=5: 39)
Labelling c4_path_special(int k);

// K_n vertices 4i-3 (1<=i<=n) plus isolates 4j+2 (1<=j<=2n-3).
Labelling complete_graph(int n);

} // namespace sumlab
