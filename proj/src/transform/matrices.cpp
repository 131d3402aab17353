#include <ordpat/contain.hpp>
#include <ordpat/transform.hpp>

#include <algorithm>

namespace ordpat {

OrderedHypergraph contract_pairs(const OrderedHypergraph & h)
{
    if (h.vertex_count() % 2 != 0)
        throw InvariantError("contract_pairs: vertex count must be even");
    const int n = h.vertex_count() / 2;
    std::vector<VertexSet> images;
    for (VertexSet e : h.edges()) {
        VertexSet image = 0;
        for (int i = 1; i <= n; ++i)
            if (e & (vertex_bit(2 * i - 1) | vertex_bit(2 * i)))
                image |= vertex_bit(i);
        if (set_size(image) >= 2)
            images.push_back(image);
    }
    return OrderedHypergraph::from_edges_dedup(n, std::move(images));
}

namespace {

VertexSet block_mask(int block, int t, int n)
{
    int first = (block - 1) * t + 1;
    int last = std::min(block * t, n);
    return full_set(last) & ~full_set(first - 1);
}

} // namespace

BinaryMatrix block_compress(const BinaryMatrix & a, int t)
{
    if (t < 1)
        throw InvariantError("block_compress: block width must be at least 1");
    const int n = a.cols();
    const int blocks = (n + t - 1) / t;
    std::vector<VertexSet> rows;
    for (VertexSet r : a.row_masks()) {
        VertexSet b = 0;
        for (int j = 1; j <= blocks; ++j)
            if (r & block_mask(j, t, n))
                b |= vertex_bit(j);
        rows.push_back(b);
    }
    return BinaryMatrix(a.rows(), blocks, std::move(rows));
}

Witness lift_block_witness(const Witness & block_witness, const BinaryMatrix & a, int t, const PatternClass & cls)
{
    const BinaryMatrix b = block_compress(a, t);
    if (! verify_class_witness(b, cls, block_witness))
        throw InvariantError("lift_block_witness: witness does not hold in the compressed matrix");
    const int k = cls.k();
    Witness out = block_witness;
    for (std::size_t j = 0; j < block_witness.rows.size(); ++j) {
        int i = block_witness.row_assignment[j];
        VertexSet row = a.row_mask(block_witness.rows[j]);
        for (int pos : {i - 1, k + cls.m_perm()(i) - 1}) {
            VertexSet hits = row & block_mask(block_witness.cols[pos], t, a.cols());
            out.cols[pos] = min_vertex(hits);
        }
    }
    return out;
}

BinaryMatrix incidence_reduction(const BinaryMatrix & a)
{
    if (a.rows() != a.cols())
        throw InvariantError("incidence_reduction: matrix must be square");
    const int n = a.rows();
    std::vector<VertexSet> rows;
    for (int i = 1; i <= n; ++i)
        for (int j = i; j <= n; ++j)
            if (a.get(i, j))
                rows.push_back(vertex_bit(i) | vertex_bit(j));
    const int m = static_cast<int>(rows.size());
    return BinaryMatrix(m, n, std::move(rows));
}

BinaryMatrix pair_graph_reduction(const BinaryMatrix & b)
{
    const int n = b.cols();
    std::vector<VertexSet> rows(n, 0);
    for (VertexSet r : b.row_masks()) {
        if (set_size(r) > 2)
            throw InvariantError("pair_graph_reduction: every row must have at most two 1s");
        if (set_size(r) == 2)
            rows[min_vertex(r) - 1] |= vertex_bit(max_vertex(r));
    }
    return BinaryMatrix(n, n, std::move(rows));
}

BinaryMatrix corner_pattern(const PatternClass & cls)
{
    const int k = cls.k();
    if (k < 1)
        throw InvariantError("corner_pattern: k must be at least 1");
    std::vector<VertexSet> rows;
    for (int i = 1; i <= k; ++i)
        rows.push_back(vertex_bit(cls.m_perm()(i) + 1));
    rows.push_back(vertex_bit(1));
    return BinaryMatrix(k + 1, k + 1, std::move(rows));
}

Witness translate_incidence_witness(const BinaryMatrix & a, const PatternClass & cls, const Witness & class_witness)
{
    if (! verify_class_witness(incidence_reduction(a), cls, class_witness))
        throw InvariantError("translate_incidence_witness: witness does not hold in the incidence reduction");
    const int k = cls.k();
    Witness out;
    out.rows.assign(class_witness.cols.begin(), class_witness.cols.begin() + k);
    out.cols.assign(class_witness.cols.begin() + k, class_witness.cols.end());
    return out;
}

Witness translate_pair_graph_witness(const BinaryMatrix & b, const PatternClass & cls, const Witness & corner_witness)
{
    if (! verify_matrix_witness(pair_graph_reduction(b), corner_pattern(cls), corner_witness))
        throw InvariantError("translate_pair_graph_witness: witness does not hold in the pair graph");
    const int k = cls.k();
    const auto & ra = corner_witness.rows;
    const auto & cb = corner_witness.cols;

    std::vector<std::pair<int, int>> pairs;
    for (int i = 1; i <= k; ++i) {
        VertexSet want = vertex_bit(ra[i - 1]) | vertex_bit(cb[cls.m_perm()(i)]);
        int found = 0;
        for (int r = 1; r <= b.rows() && ! found; ++r)
            if (is_subset(want, b.row_mask(r)))
                found = r;
        pairs.emplace_back(found, i);
    }
    std::sort(pairs.begin(), pairs.end());

    Witness out;
    out.cols.assign(ra.begin(), ra.begin() + k);
    out.cols.insert(out.cols.end(), cb.begin() + 1, cb.end());
    for (auto [r, i] : pairs) {
        out.rows.push_back(r);
        out.row_assignment.push_back(i);
    }
    return out;
}

std::vector<std::pair<int, int>> greedy_star_matching(const BipartiteGraph & g, int max_b_degree)
{
    if (static_cast<int>(g.adjacency.size()) != g.a_size)
        throw InvariantError("greedy_star_matching: adjacency size must equal |A|");
    std::vector<int> b_degree(g.b_size + 1, 0);
    for (const auto & nbrs : g.adjacency) {
        if (nbrs.empty())
            throw InvariantError("greedy_star_matching: every vertex of A needs degree at least 1");
        for (int b : nbrs) {
            if (b < 1 || b > g.b_size)
                throw InvariantError("greedy_star_matching: neighbour outside B");
            ++b_degree[b];
        }
    }
    if (*std::max_element(b_degree.begin(), b_degree.end()) > max_b_degree)
        throw InvariantError("greedy_star_matching: a vertex of B exceeds the degree cap");

    // Prune each A-vertex to its smallest neighbour; the stars are then centred in B.
    std::vector<int> centre_taken(g.b_size + 1, 0);
    std::vector<std::pair<int, int>> matching;
    for (int a = 1; a <= g.a_size; ++a) {
        int b = *std::min_element(g.adjacency[a - 1].begin(), g.adjacency[a - 1].end());
        if (! centre_taken[b]) {
            centre_taken[b] = 1;
            matching.emplace_back(a, b);
        }
    }
    return matching;
}

} // namespace ordpat
