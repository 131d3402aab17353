#pragma once

#include <ordpat/bits.hpp>
#include <ordpat/errors.hpp>
#include <ordpat/hypergraph.hpp>
#include <ordpat/matrix.hpp>
#include <ordpat/partition.hpp>
#include <ordpat/pattern_class.hpp>
#include <ordpat/permutation.hpp>
#include <ordpat/witness.hpp>

#include <limits>
#include <vector>

namespace ordpat {

/// Sentinel for an absent degree or edge-size cap.
inline constexpr int unbounded = std::numeric_limits<int>::max();

/// H(pi): the structure on [2k] with edges {i, pi(i) + k}.
OrderedHypergraph h_of_pi(const Permutation & pi);

/// H(pi) read as a partition of [2k]; the empty permutation gives the empty partition.
Partition h_of_pi_partition(const Permutation & pi);

/// G(n, A, pi): H(pi) placed on the increasing vertex list A of [n], other vertices isolated.
OrderedHypergraph make_g(int n, const std::vector<int> & a, const Permutation & pi);

/// Row-permutes (K, L) so the left block becomes I and returns the resulting class.
PatternClass canonical_pattern(const BinaryMatrix & k_block, const BinaryMatrix & l_block);

/// |E| x n matrix whose row r is the indicator of edge r in sorted edge order.
BinaryMatrix incidence_matrix(const OrderedHypergraph & h);

/// The hypergraph whose edges are the blocks of size at least two.
OrderedHypergraph hypergraph_of_partition(const Partition & p);

/// Sum of edge sizes.
int weight(const OrderedHypergraph & h);

/// Number of vertices u != v sharing some edge with v.
int two_degree(const OrderedHypergraph & h, int v);

OrderedHypergraph complete_graph(int t);

/// K_{t,t} on [2t]: every {i, j} with i <= t < j.
OrderedHypergraph complete_bipartite(int t);

/// E_{l,l} on [2l]: no edges.
OrderedHypergraph empty_bipartite(int l);

BinaryMatrix s1_matrix();
BinaryMatrix s2_matrix();

/// Every pair of non-edges is disjoint or equal.
bool is_comatching(const OrderedHypergraph & g);

/// {x1, y1} in E (x1 < y1) implies {x1, y2} in E for every y1 <= y2 <= n.
bool is_starmatching(const OrderedHypergraph & g);

/// Every vertex lies in at most max_degree edges and every edge has at most max_edge_size vertices.
bool satisfies_caps(const OrderedHypergraph & h, int max_degree, int max_edge_size);

} // namespace ordpat
