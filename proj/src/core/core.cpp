#include <ordpat/core.hpp>

#include <algorithm>
#include <string>

namespace ordpat {

OrderedHypergraph h_of_pi(const Permutation & pi)
{
    const int k = pi.size();
    std::vector<VertexSet> edges;
    for (int i = 1; i <= k; ++i)
        edges.push_back(vertex_bit(i) | vertex_bit(pi(i) + k));
    return OrderedHypergraph(2 * k, std::move(edges));
}

Partition h_of_pi_partition(const Permutation & pi)
{
    const OrderedHypergraph h = h_of_pi(pi);
    return Partition(h.vertex_count(), std::vector<VertexSet>(h.edges().begin(), h.edges().end()));
}

OrderedHypergraph make_g(int n, const std::vector<int> & a, const Permutation & pi)
{
    if (a.size() % 2 != 0)
        throw InvariantError("make_g: vertex list must have even size");
    const int k = static_cast<int>(a.size()) / 2;
    if (pi.size() != k)
        throw InvariantError("make_g: permutation size must be half the vertex list size");
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] < 1 || a[i] > n)
            throw InvariantError("make_g: vertex outside [n]");
        if (i > 0 && a[i] <= a[i - 1])
            throw InvariantError("make_g: vertex list must be strictly increasing");
    }
    std::vector<VertexSet> edges;
    for (int i = 1; i <= k; ++i)
        edges.push_back(vertex_bit(a[i - 1]) | vertex_bit(a[pi(i) + k - 1]));
    return OrderedHypergraph(n, std::move(edges));
}

PatternClass canonical_pattern(const BinaryMatrix & k_block, const BinaryMatrix & l_block)
{
    if (! k_block.is_permutation_matrix() || ! l_block.is_permutation_matrix() || k_block.rows() != l_block.rows())
        throw InvariantError("canonical_pattern: expects two k x k permutation matrices");
    const int k = k_block.rows();
    // The row whose K-entry sits in column c becomes row c; its L-entry gives m_perm(c).
    std::vector<int> m(k);
    for (int r = 1; r <= k; ++r)
        m[min_vertex(k_block.row_mask(r)) - 1] = min_vertex(l_block.row_mask(r));
    return PatternClass(Permutation(std::move(m)));
}

BinaryMatrix incidence_matrix(const OrderedHypergraph & h)
{
    return BinaryMatrix(h.edge_count(), h.vertex_count(), std::vector<VertexSet>(h.edges().begin(), h.edges().end()));
}

OrderedHypergraph hypergraph_of_partition(const Partition & p)
{
    std::vector<VertexSet> edges;
    for (VertexSet b : p.blocks())
        if (set_size(b) >= 2)
            edges.push_back(b);
    return OrderedHypergraph(p.ground_size(), std::move(edges));
}

int weight(const OrderedHypergraph & h)
{
    int total = 0;
    for (VertexSet e : h.edges())
        total += set_size(e);
    return total;
}

int two_degree(const OrderedHypergraph & h, int v)
{
    if (v < 1 || v > h.vertex_count())
        throw InvariantError("two_degree: vertex " + std::to_string(v) + " out of range");
    VertexSet nbrs = 0;
    for (VertexSet e : h.edges())
        if (contains_vertex(e, v))
            nbrs |= e;
    return set_size(nbrs & ~vertex_bit(v));
}

OrderedHypergraph complete_graph(int t)
{
    if (t < 1)
        throw InvariantError("complete_graph: size must be positive");
    std::vector<VertexSet> edges;
    for (int i = 1; i <= t; ++i)
        for (int j = i + 1; j <= t; ++j)
            edges.push_back(vertex_bit(i) | vertex_bit(j));
    return OrderedHypergraph(t, std::move(edges));
}

OrderedHypergraph complete_bipartite(int t)
{
    if (t < 1)
        throw InvariantError("complete_bipartite: size must be positive");
    std::vector<VertexSet> edges;
    for (int i = 1; i <= t; ++i)
        for (int j = t + 1; j <= 2 * t; ++j)
            edges.push_back(vertex_bit(i) | vertex_bit(j));
    return OrderedHypergraph(2 * t, std::move(edges));
}

OrderedHypergraph empty_bipartite(int l)
{
    if (l < 1)
        throw InvariantError("empty_bipartite: size must be positive");
    return OrderedHypergraph(2 * l, std::vector<VertexSet>{});
}

BinaryMatrix s1_matrix()
{
    return BinaryMatrix({{1, 0, 1, 0}, {0, 1, 0, 1}});
}

BinaryMatrix s2_matrix()
{
    return BinaryMatrix({{0, 1, 0, 1}, {1, 0, 1, 0}});
}

namespace {

void require_graph(const OrderedHypergraph & g, const char * op)
{
    if (! g.is_graph())
        throw InvariantError(std::string(op) + ": every edge must have size 2");
}

} // namespace

bool is_comatching(const OrderedHypergraph & g)
{
    require_graph(g, "is_comatching");
    VertexSet covered = 0;
    for (int x = 1; x <= g.vertex_count(); ++x)
        for (int y = x + 1; y <= g.vertex_count(); ++y) {
            VertexSet pair = vertex_bit(x) | vertex_bit(y);
            if (g.has_edge(pair))
                continue;
            if (covered & pair)
                return false;
            covered |= pair;
        }
    return true;
}

bool is_starmatching(const OrderedHypergraph & g)
{
    require_graph(g, "is_starmatching");
    const int n = g.vertex_count();
    for (VertexSet e : g.edges()) {
        int x = min_vertex(e), y = max_vertex(e);
        for (int y2 = y + 1; y2 <= n; ++y2)
            if (! g.has_edge(vertex_bit(x) | vertex_bit(y2)))
                return false;
    }
    return true;
}

bool satisfies_caps(const OrderedHypergraph & h, int max_degree, int max_edge_size)
{
    for (VertexSet e : h.edges())
        if (set_size(e) > max_edge_size)
            return false;
    return max_degree == unbounded || h.max_degree() <= max_degree;
}

} // namespace ordpat
