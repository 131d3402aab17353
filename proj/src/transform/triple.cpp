#include <ordpat/transform.hpp>

#include <algorithm>

namespace ordpat {

namespace {

void require_graph(const OrderedHypergraph & g, const char * op)
{
    if (! g.is_graph())
        throw InvariantError(std::string(op) + ": every edge must have size 2");
}

bool right_less(VertexSet e, VertexSet f)
{
    int e2 = max_vertex(e), f2 = max_vertex(f);
    if (e2 != f2)
        return e2 < f2;
    return min_vertex(e) < min_vertex(f);
}

} // namespace

std::vector<VertexSet> left_order(const OrderedHypergraph & g)
{
    require_graph(g, "left_order");
    // Lexicographic order on pairs is exactly (left endpoint, right endpoint).
    return {g.edges().begin(), g.edges().end()};
}

EdgeOrderTriple phi_triple(const OrderedHypergraph & g)
{
    std::vector<VertexSet> by_left = left_order(g);
    std::vector<VertexSet> by_right = by_left;
    std::sort(by_right.begin(), by_right.end(), right_less);

    std::vector<int> p;
    for (VertexSet e : by_left)
        p.push_back(static_cast<int>(std::find(by_right.begin(), by_right.end(), e) - by_right.begin()) + 1);

    std::vector<int> l(g.vertex_count()), r(g.vertex_count());
    for (VertexSet e : by_left) {
        ++l[min_vertex(e) - 1];
        ++r[max_vertex(e) - 1];
    }
    return {Permutation(std::move(p)), DegreeSequence(std::move(l)), DegreeSequence(std::move(r))};
}

std::optional<OrderedHypergraph> reconstruct_triple(int n, const Permutation & phi_p, const DegreeSequence & phi_l,
    const DegreeSequence & phi_r)
{
    const int m = phi_p.size();
    if (phi_l.size() != n || phi_r.size() != n)
        throw InvariantError("reconstruct_triple: degree sequences must have length n");
    if (phi_l.total() != m || phi_r.total() != m)
        throw InvariantError("reconstruct_triple: degree sequence totals must equal |phi_p|");

    std::vector<int> order(phi_p.values().begin(), phi_p.values().end());
    std::vector<int> lefts = phi_l.entries(), rights = phi_r.entries();
    std::vector<VertexSet> edges;

    for (int step = 0; step < m; ++step) {
        // The right-order-minimal edge sits at the left-order position holding rank 1.
        auto pos = static_cast<int>(std::find(order.begin(), order.end(), 1) - order.begin());
        int right = static_cast<int>(std::find_if(rights.begin(), rights.end(), [](int x) { return x > 0; }) - rights.begin()) + 1;
        int left = 0;
        for (int v = 1, seen = 0; v <= n; ++v) {
            seen += lefts[v - 1];
            if (seen > pos) {
                left = v;
                break;
            }
        }
        if (left >= right)
            return std::nullopt;
        VertexSet e = vertex_bit(left) | vertex_bit(right);
        if (std::find(edges.begin(), edges.end(), e) != edges.end())
            return std::nullopt;
        edges.push_back(e);

        --lefts[left - 1];
        --rights[right - 1];
        order.erase(order.begin() + pos);
        for (int & x : order)
            --x;
    }

    OrderedHypergraph g(n, std::move(edges));
    if (phi_triple(g) != EdgeOrderTriple{phi_p, phi_l, phi_r})
        return std::nullopt;
    return g;
}

Permutation sigma_double(const Permutation & pi)
{
    std::vector<int> s;
    for (int i = 1; i <= pi.size(); ++i) {
        s.push_back(2 * pi(i));
        s.push_back(2 * pi(i) - 1);
    }
    return Permutation(std::move(s));
}

OrderedHypergraph extract_independent_matching(const OrderedHypergraph & g, const Permutation & pi)
{
    if (phi_triple(g).phi_p != sigma_double(pi))
        throw InvariantError("extract_independent_matching: phi_p(G) must equal sigma_double(pi)");
    std::vector<VertexSet> by_left = left_order(g);
    std::vector<VertexSet> odd;
    for (std::size_t i = 0; i < by_left.size(); i += 2)
        odd.push_back(by_left[i]);
    return OrderedHypergraph(g.vertex_count(), std::move(odd));
}

} // namespace ordpat
