#include <ordpat/transform.hpp>

#include <algorithm>

namespace ordpat {

namespace {

void require_matching(const OrderedHypergraph & g, const char * op)
{
    if (! g.is_graph())
        throw InvariantError(std::string(op) + ": every edge must have size 2");
    if (g.max_degree() > 1)
        throw InvariantError(std::string(op) + ": maximum degree must be at most 1");
}

} // namespace

Permutation phi_deg1(const OrderedHypergraph & g)
{
    require_matching(g, "phi_deg1");
    // Stored edge order is left-endpoint order for a matching.
    std::vector<int> rights;
    for (VertexSet e : g.edges())
        rights.push_back(max_vertex(e));
    std::vector<int> sorted = rights;
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> ranks;
    for (int b : rights)
        ranks.push_back(static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), b) - sorted.begin()) + 1);
    return Permutation(std::move(ranks));
}

BracketSeq psi_brackets(const OrderedHypergraph & g)
{
    require_matching(g, "psi_brackets");
    VertexSet lefts = 0, rights = 0;
    for (VertexSet e : g.edges()) {
        lefts |= vertex_bit(min_vertex(e));
        rights |= vertex_bit(max_vertex(e));
    }
    std::vector<Bracket> out;
    for (int v = 1; v <= g.vertex_count(); ++v) {
        if (contains_vertex(lefts, v))
            out.push_back(Bracket::left);
        else if (contains_vertex(rights, v))
            out.push_back(Bracket::right);
    }
    return BracketSeq(std::move(out));
}

std::vector<int> support(const OrderedHypergraph & g)
{
    VertexSet s = 0;
    for (VertexSet e : g.edges())
        s |= e;
    return set_to_list(s);
}

OrderedHypergraph reconstruct_deg1(int n, const Permutation & phi, const BracketSeq & psi, const std::vector<int> & a)
{
    const int k = phi.size();
    if (psi.pairs() != k || static_cast<int>(a.size()) != 2 * k)
        throw InvariantError("reconstruct_deg1: need |A| = |psi| = 2|phi|");
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] < 1 || a[i] > n || (i > 0 && a[i] <= a[i - 1]))
            throw InvariantError("reconstruct_deg1: A must be strictly increasing within [n]");

    std::vector<int> s, t;
    for (int p = 1; p <= 2 * k; ++p)
        (psi.symbols()[p - 1] == Bracket::left ? s : t).push_back(p);

    std::vector<VertexSet> edges;
    for (int i = 1; i <= k; ++i) {
        int left = s[i - 1], right = t[phi(i) - 1];
        if (left > right)
            throw InvariantError("reconstruct_deg1: (phi, psi) is not realised by any graph");
        edges.push_back(vertex_bit(a[left - 1]) | vertex_bit(a[right - 1]));
    }
    OrderedHypergraph g(n, std::move(edges));
    if (phi_deg1(g) != phi || psi_brackets(g) != psi)
        throw InvariantError("reconstruct_deg1: (phi, psi) is not realised by any graph");
    return g;
}

} // namespace ordpat
