#include <ordpat/contain.hpp>

#include <algorithm>
#include <numeric>

namespace ordpat {

namespace {

// Lexicographically least system of distinct representatives; candidates must be sorted.
bool assign_distinct(const std::vector<std::vector<int>> & candidates, std::vector<int> & choice,
    std::vector<char> & used, std::size_t next = 0)
{
    if (next == candidates.size())
        return true;
    for (int c : candidates[next]) {
        if (used[c])
            continue;
        used[c] = 1;
        choice[next] = c;
        if (assign_distinct(candidates, choice, used, next + 1))
            return true;
        used[c] = 0;
    }
    return false;
}

std::optional<std::vector<int>> distinct_representatives(const std::vector<std::vector<int>> & candidates, int universe)
{
    std::vector<int> choice(candidates.size());
    std::vector<char> used(universe + 1, 0);
    if (assign_distinct(candidates, choice, used))
        return choice;
    return std::nullopt;
}

// Pairs of (host index, pattern index) sorted by host index.
void fill_assignment(Witness & w, const std::vector<int> & host_for_pattern)
{
    std::vector<std::pair<int, int>> pairs;
    for (std::size_t i = 0; i < host_for_pattern.size(); ++i)
        pairs.emplace_back(host_for_pattern[i], static_cast<int>(i) + 1);
    std::sort(pairs.begin(), pairs.end());
    w.rows.clear();
    w.row_assignment.clear();
    for (auto [h, p] : pairs) {
        w.rows.push_back(h);
        w.row_assignment.push_back(p);
    }
}

bool strictly_increasing_in(const std::vector<int> & v, int lo, int hi)
{
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] < lo || v[i] > hi)
            return false;
        if (i > 0 && v[i] <= v[i - 1])
            return false;
    }
    return true;
}

bool is_permutation_of(const std::vector<int> & v, int k)
{
    if (static_cast<int>(v.size()) != k)
        return false;
    std::vector<char> seen(k + 1, 0);
    for (int x : v) {
        if (x < 1 || x > k || seen[x])
            return false;
        seen[x] = 1;
    }
    return true;
}

struct SequenceSearch {
    std::span<const int> host;
    std::span<const int> pattern;
    bool must_use_last;
    std::vector<int> chosen;

    bool dfs(std::size_t depth, std::size_t start)
    {
        const std::size_t k = pattern.size(), n = host.size();
        if (depth == k)
            return true;
        for (std::size_t pos = start; pos + (k - depth) <= n; ++pos) {
            if (must_use_last && depth + 1 == k && pos + 1 != n)
                continue;
            bool ok = true;
            for (std::size_t i = 0; i < depth && ok; ++i)
                ok = (host[chosen[i]] < host[pos]) == (pattern[i] < pattern[depth]);
            if (! ok)
                continue;
            chosen[depth] = static_cast<int>(pos);
            if (dfs(depth + 1, pos + 1))
                return true;
        }
        return false;
    }
};

} // namespace

std::optional<Witness> sequence_contains(std::span<const int> host, const Permutation & pattern, bool must_use_last)
{
    if (pattern.size() > static_cast<int>(host.size()))
        return std::nullopt;
    if (pattern.empty())
        return must_use_last && ! host.empty() ? std::nullopt : std::optional<Witness>(Witness{});
    SequenceSearch s{host, pattern.values(), must_use_last, std::vector<int>(pattern.size())};
    if (! s.dfs(0, 0))
        return std::nullopt;
    Witness w;
    for (int p : s.chosen)
        w.cols.push_back(p + 1);
    return w;
}

std::optional<Witness> perm_contains(const Permutation & host, const Permutation & pattern)
{
    return sequence_contains(host.values(), pattern);
}

bool verify_perm_witness(const Permutation & host, const Permutation & pattern, const Witness & w)
{
    if (static_cast<int>(w.cols.size()) != pattern.size() || ! strictly_increasing_in(w.cols, 1, host.size()))
        return false;
    for (int i = 1; i <= pattern.size(); ++i)
        for (int j = 1; j <= pattern.size(); ++j)
            if ((host(w.cols[i - 1]) < host(w.cols[j - 1])) != (pattern(i) < pattern(j)))
                return false;
    return true;
}

namespace {

// Greedy leftmost column embedding of the first `depth` pattern rows into the chosen host rows.
bool greedy_columns(const BinaryMatrix & host, const BinaryMatrix & pattern, const std::vector<int> & rows,
    std::size_t depth, std::vector<int> * out)
{
    int c = 1;
    for (int j = 1; j <= pattern.cols(); ++j) {
        bool placed = false;
        for (; c <= host.cols(); ++c) {
            bool ok = true;
            for (std::size_t i = 0; i < depth && ok; ++i)
                ok = ! pattern.get(static_cast<int>(i) + 1, j) || host.get(rows[i], c);
            if (ok) {
                if (out)
                    out->push_back(c);
                ++c;
                placed = true;
                break;
            }
        }
        if (! placed)
            return false;
    }
    return true;
}

bool matrix_rows_dfs(const BinaryMatrix & host, const BinaryMatrix & pattern, std::vector<int> & rows, std::size_t depth, int start)
{
    if (depth == static_cast<std::size_t>(pattern.rows()))
        return true;
    for (int r = start; r + (pattern.rows() - static_cast<int>(depth)) - 1 <= host.rows(); ++r) {
        // A row must at least cover its pattern row's 1s with the right count of columns.
        if (set_size(host.row_mask(r)) < set_size(pattern.row_mask(static_cast<int>(depth) + 1)))
            continue;
        rows[depth] = r;
        if (! greedy_columns(host, pattern, rows, depth + 1, nullptr))
            continue;
        if (matrix_rows_dfs(host, pattern, rows, depth + 1, r + 1))
            return true;
    }
    return false;
}

} // namespace

std::optional<Witness> matrix_contains(const BinaryMatrix & host, const BinaryMatrix & pattern)
{
    if (pattern.rows() > host.rows() || pattern.cols() > host.cols())
        return std::nullopt;
    std::vector<int> rows(pattern.rows());
    if (! greedy_columns(host, pattern, rows, 0, nullptr))
        return std::nullopt;
    if (! matrix_rows_dfs(host, pattern, rows, 0, 1))
        return std::nullopt;
    Witness w;
    w.rows = rows;
    greedy_columns(host, pattern, rows, rows.size(), &w.cols);
    return w;
}

bool verify_matrix_witness(const BinaryMatrix & host, const BinaryMatrix & pattern, const Witness & w)
{
    if (static_cast<int>(w.rows.size()) != pattern.rows() || static_cast<int>(w.cols.size()) != pattern.cols())
        return false;
    if (! strictly_increasing_in(w.rows, 1, host.rows()) || ! strictly_increasing_in(w.cols, 1, host.cols()))
        return false;
    for (int i = 1; i <= pattern.rows(); ++i)
        for (int j = 1; j <= pattern.cols(); ++j)
            if (pattern.get(i, j) && ! host.get(w.rows[i - 1], w.cols[j - 1]))
                return false;
    return true;
}

namespace {

struct ClassSearch {
    const BinaryMatrix & host;
    const Permutation & pi;
    int k;
    std::vector<int> inv;
    std::vector<int> cols;
    std::vector<std::vector<int>> candidates;
    std::vector<int> assignment;

    // Host rows with 1s at both columns of pattern row i.
    std::vector<int> rows_for(int i) const
    {
        std::vector<int> out;
        for (int r = 1; r <= host.rows(); ++r)
            if (host.get(r, cols[i - 1]) && host.get(r, cols[k + pi(i) - 1]))
                out.push_back(r);
        return out;
    }

    bool dfs(int pos, int start)
    {
        if (pos > 2 * k) {
            auto sdr = distinct_representatives(candidates, host.rows());
            if (! sdr)
                return false;
            assignment = *sdr;
            return true;
        }
        for (int c = start; c + (2 * k - pos) <= host.cols(); ++c) {
            cols[pos - 1] = c;
            if (pos <= k) {
                // Column a_pos needs some row with a 1 there.
                if (host.column_mask(c) == 0)
                    continue;
            }
            else {
                int i = inv[pos - k];
                candidates[i - 1] = rows_for(i);
                if (candidates[i - 1].empty())
                    continue;
            }
            if (dfs(pos + 1, c + 1))
                return true;
        }
        return false;
    }
};

} // namespace

std::optional<Witness> matrix_contains_class(const BinaryMatrix & host, const PatternClass & cls)
{
    const int k = cls.k();
    if (k == 0)
        return Witness{};
    if (k > host.rows() || 2 * k > host.cols())
        return std::nullopt;
    const Permutation & pi = cls.m_perm();
    std::vector<int> inv(k + 1);
    for (int i = 1; i <= k; ++i)
        inv[pi(i)] = i;
    ClassSearch s{host, pi, k, inv, std::vector<int>(2 * k), std::vector<std::vector<int>>(k), {}};
    if (! s.dfs(1, 1))
        return std::nullopt;
    Witness w;
    w.cols = s.cols;
    fill_assignment(w, s.assignment);
    return w;
}

bool verify_class_witness(const BinaryMatrix & host, const PatternClass & cls, const Witness & w)
{
    const int k = cls.k();
    if (static_cast<int>(w.cols.size()) != 2 * k || static_cast<int>(w.rows.size()) != k)
        return false;
    if (! strictly_increasing_in(w.cols, 1, host.cols()) || ! strictly_increasing_in(w.rows, 1, host.rows()))
        return false;
    if (! is_permutation_of(w.row_assignment, k))
        return false;
    for (int j = 0; j < k; ++j) {
        int i = w.row_assignment[j];
        int r = w.rows[j];
        if (! host.get(r, w.cols[i - 1]) || ! host.get(r, w.cols[k + cls.m_perm()(i) - 1]))
            return false;
    }
    return true;
}

namespace {

VertexSet checked_vertex_list(const std::vector<int> & u, int n)
{
    if (! strictly_increasing_in(u, 1, n))
        throw InvariantError("vertex list must be strictly increasing within [n]");
    return list_to_set(u);
}

} // namespace

std::vector<Trace> traces_on(const OrderedHypergraph & h, VertexSet u)
{
    std::vector<Trace> out;
    for (int e = 1; e <= h.edge_count(); ++e) {
        VertexSet t = h.edge(e) & u;
        if (set_size(t) < 2)
            continue;
        VertexSet rel = relabel_onto(t, u);
        if (std::none_of(out.begin(), out.end(), [rel](const Trace & x) { return x.set == rel; }))
            out.push_back({rel, e});
    }
    return out;
}

OrderedHypergraph hg_induced_sub(const OrderedHypergraph & h, const std::vector<int> & u)
{
    VertexSet mask = checked_vertex_list(u, h.vertex_count());
    std::vector<VertexSet> edges;
    for (const Trace & t : traces_on(h, mask))
        edges.push_back(t.set);
    return OrderedHypergraph(static_cast<int>(u.size()), std::move(edges));
}

std::optional<Witness> is_induced_sub(const OrderedHypergraph & k, const OrderedHypergraph & h)
{
    std::optional<Witness> found;
    for_each_combination(h.vertex_count(), k.vertex_count(), [&](const std::vector<int> & u) {
        auto traces = traces_on(h, list_to_set(u));
        if (static_cast<int>(traces.size()) != k.edge_count())
            return false;
        for (const Trace & t : traces)
            if (! k.has_edge(t.set))
                return false;
        found = Witness{{}, u, {}};
        return true;
    });
    return found;
}

std::optional<Witness> is_sub_hypergraph(const OrderedHypergraph & k, const OrderedHypergraph & h)
{
    std::optional<Witness> found;
    for_each_combination(h.vertex_count(), k.vertex_count(), [&](const std::vector<int> & u) {
        auto traces = traces_on(h, list_to_set(u));
        std::vector<int> host_edges;
        for (VertexSet f : k.edges()) {
            auto it = std::find_if(traces.begin(), traces.end(), [f](const Trace & t) { return t.set == f; });
            if (it == traces.end())
                return false;
            host_edges.push_back(it->host_edge);
        }
        Witness w;
        w.cols = u;
        fill_assignment(w, host_edges);
        found = std::move(w);
        return true;
    });
    return found;
}

std::optional<Witness> hg_contains(const OrderedHypergraph & k, const OrderedHypergraph & h)
{
    std::optional<Witness> found;
    if (k.edge_count() > h.edge_count())
        return found;
    for_each_combination(h.vertex_count(), k.vertex_count(), [&](const std::vector<int> & u) {
        auto traces = traces_on(h, list_to_set(u));
        if (traces.size() < static_cast<std::size_t>(k.edge_count()))
            return false;
        std::vector<std::vector<int>> candidates;
        for (VertexSet f : k.edges()) {
            std::vector<int> c;
            for (std::size_t t = 0; t < traces.size(); ++t)
                if (is_subset(f, traces[t].set))
                    c.push_back(static_cast<int>(t));
            if (c.empty())
                return false;
            candidates.push_back(std::move(c));
        }
        auto sdr = distinct_representatives(candidates, static_cast<int>(traces.size()));
        if (! sdr)
            return false;
        std::vector<int> host_edges;
        for (int t : *sdr)
            host_edges.push_back(traces[t].host_edge);
        Witness w;
        w.cols = u;
        fill_assignment(w, host_edges);
        found = std::move(w);
        return true;
    });
    return found;
}

bool verify_hg_witness(const OrderedHypergraph & k, const OrderedHypergraph & h, const Witness & w, bool exact)
{
    if (static_cast<int>(w.cols.size()) != k.vertex_count() || ! strictly_increasing_in(w.cols, 1, h.vertex_count()))
        return false;
    if (static_cast<int>(w.rows.size()) != k.edge_count() || ! strictly_increasing_in(w.rows, 1, h.edge_count()))
        return false;
    if (! is_permutation_of(w.row_assignment, k.edge_count()))
        return false;
    const VertexSet u = list_to_set(w.cols);
    std::vector<VertexSet> used;
    for (std::size_t j = 0; j < w.rows.size(); ++j) {
        VertexSet d = relabel_onto(h.edge(w.rows[j]) & u, u);
        VertexSet f = k.edge(w.row_assignment[j]);
        if (exact ? d != f : ! is_subset(f, d))
            return false;
        if (std::find(used.begin(), used.end(), d) != used.end())
            return false;
        used.push_back(d);
    }
    return true;
}

namespace {

struct PermInHypergraph {
    const OrderedHypergraph & h;
    const Permutation & pi;
    int k;
    std::vector<int> inv;
    std::vector<int> v;
    std::vector<std::vector<int>> candidates;
    std::vector<int> assignment;

    bool dfs(int pos, int start)
    {
        if (pos > 2 * k) {
            auto sdr = distinct_representatives(candidates, h.edge_count());
            if (! sdr)
                return false;
            assignment = *sdr;
            return true;
        }
        for (int x = start; x + (2 * k - pos) <= h.vertex_count(); ++x) {
            v[pos - 1] = x;
            if (pos > k) {
                int i = inv[pos - k];
                VertexSet pair = vertex_bit(v[i - 1]) | vertex_bit(x);
                auto & c = candidates[i - 1];
                c.clear();
                for (int e = 1; e <= h.edge_count(); ++e)
                    if (is_subset(pair, h.edge(e)))
                        c.push_back(e);
                if (c.empty())
                    continue;
            }
            if (dfs(pos + 1, x + 1))
                return true;
        }
        return false;
    }
};

} // namespace

std::optional<Witness> hg_contains_perm(const OrderedHypergraph & h, const Permutation & pi)
{
    const int k = pi.size();
    if (k == 0)
        return Witness{};
    if (2 * k > h.vertex_count() || k > h.edge_count())
        return std::nullopt;
    std::vector<int> inv(k + 1);
    for (int i = 1; i <= k; ++i)
        inv[pi(i)] = i;
    PermInHypergraph s{h, pi, k, inv, std::vector<int>(2 * k), std::vector<std::vector<int>>(k), {}};
    if (! s.dfs(1, 1))
        return std::nullopt;
    Witness w;
    w.cols = s.v;
    fill_assignment(w, s.assignment);
    return w;
}

bool verify_hg_perm_witness(const OrderedHypergraph & h, const Permutation & pi, const Witness & w)
{
    const int k = pi.size();
    if (static_cast<int>(w.cols.size()) != 2 * k || ! strictly_increasing_in(w.cols, 1, h.vertex_count()))
        return false;
    if (static_cast<int>(w.rows.size()) != k || ! strictly_increasing_in(w.rows, 1, h.edge_count()))
        return false;
    if (! is_permutation_of(w.row_assignment, k))
        return false;
    for (int j = 0; j < k; ++j) {
        int i = w.row_assignment[j];
        VertexSet pair = vertex_bit(w.cols[i - 1]) | vertex_bit(w.cols[pi(i) + k - 1]);
        if (! is_subset(pair, h.edge(w.rows[j])))
            return false;
    }
    return true;
}

Partition sub_partition(const Partition & p, const std::vector<int> & s)
{
    VertexSet mask = checked_vertex_list(s, p.ground_size());
    std::vector<VertexSet> blocks;
    for (VertexSet b : p.blocks()) {
        VertexSet rel = relabel_onto(b & mask, mask);
        if (rel)
            blocks.push_back(rel);
    }
    return Partition(static_cast<int>(s.size()), std::move(blocks));
}

std::optional<Witness> partition_contains(const Partition & p, const Partition & q)
{
    std::optional<Witness> found;
    for_each_combination(p.ground_size(), q.ground_size(), [&](const std::vector<int> & s) {
        if (sub_partition(p, s) != q)
            return false;
        found = Witness{{}, s, {}};
        return true;
    });
    return found;
}

} // namespace ordpat
