#pragma once

#include <span>

#include "fpd/poly.hpp"

namespace fpd {

// Closed-form expected value and full-observation probability for stars,
// complete multipartite graphs and generalized barbells. Every formula is
// validated against subset enumeration on the generated graph in the test
// suite; placements here are vertex sets.

// Star on n >= 3 vertices, |S| = s, with or without the universal vertex.
Poly star_expected(int n, int s, bool contains_center);
Poly star_prob_full(int n, int s, bool contains_center);

// K_{r_1..r_k} with k >= 2 parts of size r_i >= 2 and picked[i] vertices
// chosen from part i, total >= 1. Probability that the surviving PMUs
// include vertices from two distinct parts:
//   1 - sum_i q^{l-l_i} + (k-1) q^l  with l = sum l_i.
Poly multipartite_two_parts_prob(std::span<const int> part_sizes,
                                 std::span<const int> picked);

// Expected observed count for the same placement. Decomposes into the
// two-parts event (everything observed) plus, per part t, the weight
// q^{l-l_t} times the within-part survival sum
//   sum_{i=1}^{l_t} C(l_t,i) obs(i) q^{l_t-i} (1-q)^i,
// where obs(i) = r when r_t - i <= 1 (the other parts can force the last
// unobserved vertex of part t) and r - r_t + i otherwise. A variant that
// additionally multiplies the within-part sum by (1-q^{l_t}) and gates the
// forcing on l_t instead of r_t disagrees with direct enumeration already
// on K_{2,2} with one PMU, so this form is the one implemented.
Poly multipartite_expected(std::span<const int> part_sizes,
                           std::span<const int> picked);

// Generalized barbell on |G1| = l, |G2| = n and an m-vertex central path,
// where G1, G2 are each one of K_1, K_n, W_n, C_n or the complement of
// C_{n+2}: any surviving PMU inside G_i observes all of G_i, the central
// path and the far anchor. Placement has r PMUs in G1, s on the central
// path and t in G2:
//   (l+m+n)(1-q^r)(1-q^t) + (l+m+1)(1-q^r)q^t
//   + (m+n+1)q^r(1-q^t) + (m+2)q^{r+t}(1-q^s).
Poly barbell_expected(int l, int n, int m, int r, int s, int t);

}  // namespace fpd
