#include <ordpat/ramsey.hpp>

#include <ordpat/errors.hpp>

#include <bit>
#include <functional>

namespace ordpat {

namespace {

std::vector<VertexSet> adjacency(const OrderedHypergraph & g)
{
    if (! g.is_graph())
        throw InvariantError("Ramsey search needs a graph");
    std::vector<VertexSet> adj(g.vertex_count() + 1, 0);
    for (VertexSet e : g.edges()) {
        int a = min_vertex(e), b = max_vertex(e);
        adj[a] |= vertex_bit(b);
        adj[b] |= vertex_bit(a);
    }
    return adj;
}

std::optional<Homogeneity> homogeneous(const std::vector<VertexSet> & adj, VertexSet s)
{
    bool clique = true, independent = true;
    for (VertexSet r = s; r; r &= r - 1) {
        int v = std::countr_zero(r) + 1;
        VertexSet others = s & ~vertex_bit(v);
        clique = clique && is_subset(others, adj[v]);
        independent = independent && (adj[v] & others) == 0;
    }
    if (clique)
        return Homogeneity::complete;
    if (independent)
        return Homogeneity::empty;
    return std::nullopt;
}

void check_l(int l)
{
    if (l < 1)
        throw InvariantError("l must be at least 1");
}

// Some l-subset of the a-set is inside l of the neighbourhoods, or outside l of them.
bool bipartite_has_homogeneous(const std::vector<VertexSet> & nbhd, int a, int l)
{
    bool found = false;
    for_each_combination_mask(a, l, [&](VertexSet x) {
        int inside = 0, outside = 0;
        for (VertexSet y : nbhd) {
            inside += is_subset(x, y);
            outside += (x & y) == 0;
        }
        return found = inside >= l || outside >= l;
    });
    return found;
}

} // namespace

std::optional<HomogeneousSet> ramsey_find(const OrderedHypergraph & g, int l, int max_vertices_searched)
{
    check_l(l);
    if (g.vertex_count() > max_vertices_searched)
        throw FeasibilityError("Ramsey search on " + std::to_string(g.vertex_count()) + " vertices exceeds bound "
            + std::to_string(max_vertices_searched));
    auto adj = adjacency(g);
    std::optional<HomogeneousSet> out;
    for_each_combination_mask(g.vertex_count(), l, [&](VertexSet s) {
        if (auto kind = homogeneous(adj, s)) {
            out = HomogeneousSet{*kind, set_to_list(s)};
            return true;
        }
        return false;
    });
    return out;
}

std::optional<HomogeneousPair> bipartite_ramsey_find(const OrderedHypergraph & g, const std::vector<int> & part_a,
    const std::vector<int> & part_b, int l, int max_vertices_searched)
{
    check_l(l);
    if (g.vertex_count() > max_vertices_searched)
        throw FeasibilityError("bipartite Ramsey search on " + std::to_string(g.vertex_count())
            + " vertices exceeds bound " + std::to_string(max_vertices_searched));
    VertexSet a_set = 0, b_set = 0;
    for (int v : part_a)
        a_set |= vertex_bit(v);
    for (int v : part_b)
        b_set |= vertex_bit(v);
    if ((a_set & b_set) != 0 || list_to_set(part_a) != a_set || list_to_set(part_b) != b_set
        || ! is_subset(a_set | b_set, full_set(g.vertex_count())))
        throw InvariantError("parts must be disjoint vertex sets of the graph");
    auto adj = adjacency(g);
    std::vector<int> a = set_to_list(a_set), b = set_to_list(b_set);
    int size_a = static_cast<int>(a.size());
    std::optional<HomogeneousPair> out;
    for_each_combination_mask(size_a, l, [&](VertexSet pick) {
        std::vector<int> left;
        VertexSet common = b_set, none = b_set;
        for (int i : set_to_list(pick)) {
            left.push_back(a[i - 1]);
            common &= adj[a[i - 1]];
            none &= ~adj[a[i - 1]];
        }
        for (auto [kind, set] : {std::pair{Homogeneity::complete, common}, std::pair{Homogeneity::empty, none}}) {
            if (set_size(set) >= l) {
                std::vector<int> right = set_to_list(set);
                right.resize(l);
                out = HomogeneousPair{kind, left, right};
                return true;
            }
        }
        return false;
    });
    return out;
}

int ramsey_number(int l, int max_n)
{
    check_l(l);
    for (int n = 1;; ++n) {
        if (n > max_n)
            throw FeasibilityError("Ramsey number search exceeds n=" + std::to_string(max_n));
        std::vector<std::pair<int, int>> pairs;
        for (int a = 1; a <= n; ++a)
            for (int b = a + 1; b <= n; ++b)
                pairs.emplace_back(a, b);
        bool all = n >= l;
        for (std::uint64_t code = 0; all && code < (std::uint64_t{1} << pairs.size()); ++code) {
            std::vector<VertexSet> adj(n + 1, 0);
            for (std::size_t p = 0; p < pairs.size(); ++p)
                if ((code >> p) & 1) {
                    adj[pairs[p].first] |= vertex_bit(pairs[p].second);
                    adj[pairs[p].second] |= vertex_bit(pairs[p].first);
                }
            bool found = false;
            for_each_combination_mask(n, l, [&](VertexSet s) { return found = homogeneous(adj, s).has_value(); });
            all = found;
        }
        if (all)
            return n;
    }
}

int bipartite_ramsey_number(int l, int max_n)
{
    check_l(l);
    int a = 2 * l - 1;
    if (a > 20)
        throw FeasibilityError("bipartite Ramsey search too large");
    VertexSet masks = VertexSet{1} << a;
    for (int n = 1;; ++n) {
        if (n > max_n)
            throw FeasibilityError("bipartite Ramsey number search exceeds n=" + std::to_string(max_n));
        // Neighbourhoods of the n-side as a nondecreasing sequence; vertex order does not matter.
        std::vector<VertexSet> nbhd(n, 0);
        bool all = true;
        std::function<void(int, VertexSet)> rec = [&](int i, VertexSet from) {
            if (! all)
                return;
            if (i == n) {
                all = bipartite_has_homogeneous(nbhd, a, l);
                return;
            }
            for (VertexSet m = from; m < masks && all; ++m) {
                nbhd[i] = m;
                rec(i + 1, m);
            }
        };
        rec(0, 0);
        if (all)
            return n;
    }
}

} // namespace ordpat
