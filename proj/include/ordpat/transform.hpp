#pragma once

#include <ordpat/core.hpp>

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace ordpat {

enum class Bracket : char { left = 'L', right = 'R' };

/// A legal bracket word: every prefix has at least as many left as right brackets, and the
/// totals agree.
class BracketSeq {
public:
    BracketSeq() = default;
    explicit BracketSeq(std::vector<Bracket> symbols);
    /// From a word over {L, R}; also accepts '(' and ')'.
    static BracketSeq parse(const std::string & word);

    int pairs() const { return static_cast<int>(_symbols.size()) / 2; }
    const std::vector<Bracket> & symbols() const { return _symbols; }
    std::string to_string() const;

    bool operator==(const BracketSeq &) const = default;

private:
    std::vector<Bracket> _symbols;
};

/// A sequence of non-negative integers (a_1, ..., a_n).
class DegreeSequence {
public:
    DegreeSequence() = default;
    explicit DegreeSequence(std::vector<int> entries);

    int size() const { return static_cast<int>(_entries.size()); }
    int total() const;
    const std::vector<int> & entries() const { return _entries; }

    bool operator==(const DegreeSequence &) const = default;

private:
    std::vector<int> _entries;
};

/// For a graph of maximum degree one with edges e_i = {a_i, b_i} in left-endpoint order:
/// phi(i) is the rank of b_i among the right endpoints.
Permutation phi_deg1(const OrderedHypergraph & g);

/// L for each left endpoint and R for each right endpoint, scanning vertices in order.
BracketSeq psi_brackets(const OrderedHypergraph & g);

/// The non-isolated vertices of g, increasing.
std::vector<int> support(const OrderedHypergraph & g);

/// Rebuilds the graph with edge set {a(s(i)), a(t(phi(i)))}. Throws InvariantError on size
/// mismatch or when (phi, psi) is realised by no graph of maximum degree one.
OrderedHypergraph reconstruct_deg1(int n, const Permutation & phi, const BracketSeq & psi, const std::vector<int> & a);

struct EdgeOrderTriple {
    Permutation phi_p;
    DegreeSequence phi_l;
    DegreeSequence phi_r;

    bool operator==(const EdgeOrderTriple &) const = default;
};

/// Edges in the left order (by left endpoint, then right) and right order (by right endpoint,
/// then left). phi_p(i) is the right-order rank of the i-th edge in left order; phi_l and
/// phi_r count edges by left and right endpoint.
EdgeOrderTriple phi_triple(const OrderedHypergraph & g);

/// Edges of g in the left order.
std::vector<VertexSet> left_order(const OrderedHypergraph & g);

/// The unique graph on [n] with this triple, or nullopt when none exists. Rebuilt by
/// repeatedly peeling off the right-order-minimal edge. Throws InvariantError when the
/// sequence totals disagree with |phi_p| or their lengths differ from n.
std::optional<OrderedHypergraph> reconstruct_triple(int n, const Permutation & phi_p, const DegreeSequence & phi_l,
    const DegreeSequence & phi_r);

/// Identifies vertices 2i - 1 and 2i. Images of size one are dropped.
OrderedHypergraph contract_pairs(const OrderedHypergraph & h);

/// Block j of row i covers columns (j - 1)t + 1 .. min(jt, n); the entry is 1 when the block has a 1.
BinaryMatrix block_compress(const BinaryMatrix & a, int t);

/// Turns a class witness in block_compress(a, t) into one in a by taking, for each used
/// block, its leftmost 1.
Witness lift_block_witness(const Witness & block_witness, const BinaryMatrix & a, int t, const PatternClass & cls);

/// One row per 1-entry a_ij with i <= j, in (i, j) order, carrying 1s at columns i and j.
BinaryMatrix incidence_reduction(const BinaryMatrix & a);

/// a_ij = 1 iff i < j and some row of b has 1s at both i and j. Rows of b carry at most two 1s.
BinaryMatrix pair_graph_reduction(const BinaryMatrix & b);

/// M placed top-right with an extra 1 bottom-left: a (k+1) x (k+1) permutation matrix.
BinaryMatrix corner_pattern(const PatternClass & cls);

/// A class witness in incidence_reduction(a) at columns a_* < b_* becomes an occurrence of the
/// permutation matrix at rows a_* and columns b_* of a.
Witness translate_incidence_witness(const BinaryMatrix & a, const PatternClass & cls, const Witness & class_witness);

/// An occurrence of corner_pattern(cls) in pair_graph_reduction(b) becomes a class witness in b.
Witness translate_pair_graph_witness(const BinaryMatrix & b, const PatternClass & cls, const Witness & corner_witness);

/// sigma(2i - 1) = 2 pi(i), sigma(2i) = 2 pi(i) - 1.
Permutation sigma_double(const Permutation & pi);

/// Requires phi_triple(g).phi_p == sigma_double(pi); returns the graph on the odd-indexed
/// edges of the left order, which are pairwise disjoint.
OrderedHypergraph extract_independent_matching(const OrderedHypergraph & g, const Permutation & pi);

/// Bipartite graph between parts A = [a_size] and B = [b_size]; adjacency[a - 1] lists the
/// neighbours of a in B.
struct BipartiteGraph {
    int a_size = 0;
    int b_size = 0;
    std::vector<std::vector<int>> adjacency;
};

/// Keeps the first edge at every A-vertex, then one edge per resulting star. Requires every A
/// vertex to have degree >= 1 and every B vertex degree <= max_b_degree.
std::vector<std::pair<int, int>> greedy_star_matching(const BipartiteGraph & g, int max_b_degree);

} // namespace ordpat
