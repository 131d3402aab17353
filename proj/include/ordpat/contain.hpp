#pragma once

#include <ordpat/core.hpp>

#include <optional>
#include <span>
#include <vector>

namespace ordpat {

// Every search in this header scans choices in increasing index order and returns the
// lexicographically least witness it finds.

/// Positions a(1) < ... < a(k) of host whose values are order-isomorphic to pattern.
std::optional<Witness> perm_contains(const Permutation & host, const Permutation & pattern);

/// As perm_contains, over any sequence of distinct integers. With `must_use_last` only
/// occurrences that include the final element are considered.
std::optional<Witness> sequence_contains(std::span<const int> host, const Permutation & pattern, bool must_use_last = false);

/// Increasing rows and columns of host whose sub-matrix has a 1 wherever pattern does.
std::optional<Witness> matrix_contains(const BinaryMatrix & host, const BinaryMatrix & pattern);

/// k distinct host rows (in any vertical order) and columns a_1 < ... < a_k < b_1 < ... < b_k
/// such that the row carrying pattern row i has 1s at a_i and b_{pi(i)}.
std::optional<Witness> matrix_contains_class(const BinaryMatrix & host, const PatternClass & cls);

bool verify_perm_witness(const Permutation & host, const Permutation & pattern, const Witness & w);
bool verify_matrix_witness(const BinaryMatrix & host, const BinaryMatrix & pattern, const Witness & w);
bool verify_class_witness(const BinaryMatrix & host, const PatternClass & cls, const Witness & w);

/// The induced sub-hypergraph on increasing vertex list u, relabelled onto [|u|].
OrderedHypergraph hg_induced_sub(const OrderedHypergraph & h, const std::vector<int> & u);

/// Distinct traces e ∩ U of size >= 2, relabelled onto [|U|], each with the first host edge
/// (1-based) producing it. Sorted by that edge index.
struct Trace {
    VertexSet set;
    int host_edge;
};
std::vector<Trace> traces_on(const OrderedHypergraph & h, VertexSet u);

/// K is an induced sub-hypergraph of H; witness cols = U.
std::optional<Witness> is_induced_sub(const OrderedHypergraph & k, const OrderedHypergraph & h);

/// K is a sub-hypergraph of H; witness cols = U, rows/row_assignment = host edge per K edge.
std::optional<Witness> is_sub_hypergraph(const OrderedHypergraph & k, const OrderedHypergraph & h);

/// K is contained in H: distinct traces d_i on U with f_i ⊆ d_i.
std::optional<Witness> hg_contains(const OrderedHypergraph & k, const OrderedHypergraph & h);

/// H contains pi: increasing v_1 < ... < v_2k and distinct edges E_i ⊇ {v_i, v_{pi(i)+k}}.
std::optional<Witness> hg_contains_perm(const OrderedHypergraph & h, const Permutation & pi);

bool verify_hg_perm_witness(const OrderedHypergraph & h, const Permutation & pi, const Witness & w);

/// Checks a witness from is_sub_hypergraph / hg_contains (containment when `exact` is false).
bool verify_hg_witness(const OrderedHypergraph & k, const OrderedHypergraph & h, const Witness & w, bool exact);

/// Relabel onto [|S|] and drop empty classes.
Partition sub_partition(const Partition & p, const std::vector<int> & s);

/// Some S has sub_partition(P, S) == Q; witness cols = S.
std::optional<Witness> partition_contains(const Partition & p, const Partition & q);

} // namespace ordpat
