#include <ordpat/extremal.hpp>

#include <ordpat/contain.hpp>
#include <ordpat/errors.hpp>

#include "parallel.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <climits>

namespace ordpat {

bool avoids_all(const BinaryMatrix & m, std::span<const MatrixPattern> patterns)
{
    for (const auto & p : patterns) {
        bool hit = std::holds_alternative<BinaryMatrix>(p)
            ? matrix_contains(m, std::get<BinaryMatrix>(p)).has_value()
            : matrix_contains_class(m, std::get<PatternClass>(p)).has_value();
        if (hit)
            return false;
    }
    return true;
}

namespace {

constexpr int infeasible = -1;

// Row masks ranked as bit strings read from column 1.
VertexSet lex_key(VertexSet mask, int n)
{
    VertexSet key = 0;
    for (int j = 1; j <= n; ++j)
        if (contains_vertex(mask, j))
            key |= VertexSet{1} << (n - j);
    return key;
}

// Leftmost-column embedding of pattern rows into host rows, row by row.
bool columns_fit(const std::vector<VertexSet> & host, const std::vector<int> & host_rows, const BinaryMatrix & pattern,
    int n)
{
    int c = 1;
    for (int j = 1; j <= pattern.cols(); ++j) {
        VertexSet need = pattern.column_mask(j);
        for (; c <= n; ++c) {
            bool ok = true;
            for (VertexSet r = need; r && ok; r &= r - 1)
                ok = contains_vertex(host[host_rows[std::countr_zero(r)]], c);
            if (ok)
                break;
        }
        if (c > n)
            return false;
        ++c;
    }
    return true;
}

// An occurrence of `pattern` whose last row sits on the last row of `host`.
bool contains_using_last_row(const std::vector<VertexSet> & host, const BinaryMatrix & pattern, int n)
{
    int k = pattern.rows();
    int m = static_cast<int>(host.size());
    if (k == 0)
        return pattern.cols() <= n;
    if (k > m || pattern.cols() > n)
        return false;
    bool found = false;
    std::vector<int> chosen(k);
    chosen[k - 1] = m - 1;
    auto test = [&](const std::vector<int> & c) {
        for (int i = 0; i + 1 < k; ++i)
            chosen[i] = c[i] - 1;
        return found = columns_fit(host, chosen, pattern, n);
    };
    if (k == 1)
        return columns_fit(host, chosen, pattern, n);
    for_each_combination(m - 1, k - 1, test);
    return found;
}

struct RowSearch {
    int n;
    std::span<const MatrixPattern> patterns;
    bool distinct;
    std::vector<VertexSet> lex_rows;    // allowed masks, lexicographic
    std::vector<VertexSet> heavy_rows;  // allowed masks, heaviest first
    std::vector<int> ex;                // ex[r]: best for r rows, infeasible if none

    bool ok_with(std::vector<VertexSet> & rows, VertexSet mask) const
    {
        if (distinct && std::find(rows.begin(), rows.end(), mask) != rows.end())
            return false;
        rows.push_back(mask);
        bool ok = true;
        for (const auto & p : patterns) {
            if (const auto * b = std::get_if<BinaryMatrix>(&p))
                ok = ! contains_using_last_row(rows, *b, n);
            else
                ok = ! matrix_contains_class(BinaryMatrix(static_cast<int>(rows.size()), n, rows), std::get<PatternClass>(p));
            if (! ok)
                break;
        }
        rows.pop_back();
        return ok;
    }

    int bound(int ones, int remaining) const { return ex[remaining] == infeasible ? infeasible : ones + ex[remaining]; }

    // Best total over completions of `rows` to r rows; prunes against local and shared bests.
    void maximise(std::vector<VertexSet> & rows, int ones, int r, int & local, std::atomic<int> & shared) const
    {
        int depth = static_cast<int>(rows.size());
        if (depth == r) {
            if (ones > local) {
                local = ones;
                detail::atomic_max(shared, ones);
            }
            return;
        }
        int b = bound(ones, r - depth);
        if (b == infeasible || b <= local || b < shared.load())
            return;
        for (VertexSet mask : heavy_rows) {
            if (! ok_with(rows, mask))
                continue;
            rows.push_back(mask);
            maximise(rows, ones + std::popcount(mask), r, local, shared);
            rows.pop_back();
        }
    }

    // First completion in lexicographic order reaching `target` ones.
    bool first_reaching(std::vector<VertexSet> & rows, int ones, int r, int target) const
    {
        int depth = static_cast<int>(rows.size());
        if (depth == r)
            return ones == target;
        int b = bound(ones, r - depth);
        if (b == infeasible || b < target)
            return false;
        for (VertexSet mask : lex_rows) {
            if (! ok_with(rows, mask))
                continue;
            rows.push_back(mask);
            if (first_reaching(rows, ones + std::popcount(mask), r, target))
                return true;
            rows.pop_back();
        }
        return false;
    }

    int best_value(int r, int jobs) const
    {
        if (r == 0)
            return 0;
        std::atomic<int> shared{infeasible};
        std::vector<int> local(heavy_rows.size(), infeasible);
        detail::parallel_for(heavy_rows.size(), jobs, [&](std::size_t i) {
            std::vector<VertexSet> rows;
            if (! ok_with(rows, heavy_rows[i]))
                return;
            rows.push_back(heavy_rows[i]);
            maximise(rows, std::popcount(heavy_rows[i]), r, local[i], shared);
        });
        return shared.load();
    }

    std::vector<VertexSet> lex_first(int r, int target, int jobs) const
    {
        if (r == 0)
            return {};
        std::atomic<std::size_t> first_hit{lex_rows.size()};
        std::vector<std::vector<VertexSet>> found(lex_rows.size());
        detail::parallel_for(lex_rows.size(), jobs, [&](std::size_t i) {
            if (i > first_hit.load())
                return;
            std::vector<VertexSet> rows;
            if (! ok_with(rows, lex_rows[i]))
                return;
            rows.push_back(lex_rows[i]);
            if (first_reaching(rows, std::popcount(lex_rows[i]), r, target)) {
                found[i] = rows;
                std::size_t cur = first_hit.load();
                while (i < cur && ! first_hit.compare_exchange_weak(cur, i)) {
                }
            }
        });
        return found[first_hit.load()];
    }
};

} // namespace

ExtremalResult extremal_ones(int n, std::span<const MatrixPattern> patterns, const ExtremalOptions & opts)
{
    if (n < 0 || n > max_vertices)
        throw InvariantError("column count out of range");
    int m = opts.rows.value_or(n);
    if (m < 0)
        throw InvariantError("row count must be non-negative");
    if (opts.square && m != n)
        throw InvariantError("square shape needs rows == n");
    if ((n > opts.bound || m > opts.bound) && ! opts.force)
        throw FeasibilityError("extremal search of " + std::to_string(m) + "x" + std::to_string(n) + " exceeds bound "
            + std::to_string(opts.bound) + "; use force to override");
    if (n > 24)
        throw FeasibilityError("extremal search needs n <= 24");
    int weight_cap = opts.max_row_weight.value_or(n);
    if (weight_cap < 0)
        throw InvariantError("max_row_weight must be non-negative");

    RowSearch s{n, patterns, opts.distinct_rows, {}, {}, {0}};
    for (VertexSet mask = 0; mask < (VertexSet{1} << n); ++mask)
        if (std::popcount(mask) <= weight_cap)
            s.lex_rows.push_back(mask);
    std::sort(s.lex_rows.begin(), s.lex_rows.end(),
        [n](VertexSet a, VertexSet b) { return lex_key(a, n) < lex_key(b, n); });
    s.heavy_rows = s.lex_rows;
    std::stable_sort(s.heavy_rows.begin(), s.heavy_rows.end(),
        [](VertexSet a, VertexSet b) { return std::popcount(a) > std::popcount(b); });

    for (int r = 1; r <= m; ++r)
        s.ex.push_back(s.ex[r - 1] == infeasible ? infeasible : s.best_value(r, opts.jobs));
    if (s.ex[m] == infeasible || (m == 0 && ! avoids_all(BinaryMatrix(0, n), patterns)))
        throw InvariantError("no matrix of this shape meets the constraints");
    auto rows = s.lex_first(m, s.ex[m], opts.jobs);
    return {s.ex[m], BinaryMatrix(m, n, rows)};
}

namespace {

struct WeightSearch {
    int n;
    const Permutation & pi;
    std::vector<VertexSet> candidates;
    std::vector<int> suffix;  // suffix[j]: total size of candidates j..end

    struct Best {
        int value = -1;
        std::vector<VertexSet> edges;
    };

    void visit(std::vector<VertexSet> & edges, int last, int weight, Best & local, std::atomic<int> & shared) const
    {
        if (weight > local.value) {
            local.value = weight;
            local.edges = edges;
            detail::atomic_max(shared, weight);
        }
        int b = weight + suffix[last + 1];
        if (b <= local.value || b < shared.load())
            return;
        for (int j = last + 1; j < static_cast<int>(candidates.size()); ++j) {
            if (weight + suffix[j] <= local.value || weight + suffix[j] < shared.load())
                return;
            edges.push_back(candidates[j]);
            if (! hg_contains_perm(OrderedHypergraph(n, edges), pi))
                visit(edges, j, weight + std::popcount(candidates[j]), local, shared);
            edges.pop_back();
        }
    }
};

} // namespace

WeightResult max_weight_avoiding(int n, const Permutation & pi, int jobs, bool force, int bound)
{
    if (n < 0 || n > max_vertices)
        throw InvariantError("n out of range");
    if (n > bound && ! force)
        throw FeasibilityError("max_weight_avoiding at n=" + std::to_string(n) + " exceeds bound "
            + std::to_string(bound) + "; use force to override");
    if (hg_contains_perm(OrderedHypergraph(n, std::vector<VertexSet>{}), pi))
        throw InvariantError("no hypergraph avoids the empty permutation");
    WeightSearch s{n, pi, {}, {}};
    for (int size = 2; size <= n; ++size)
        for_each_combination_mask(n, size, [&](VertexSet e) {
            s.candidates.push_back(e);
            return false;
        });
    sort_edges(s.candidates);
    s.suffix.assign(s.candidates.size() + 1, 0);
    for (int j = static_cast<int>(s.candidates.size()) - 1; j >= 0; --j)
        s.suffix[j] = s.suffix[j + 1] + std::popcount(s.candidates[j]);

    // Task 0 is the empty hypergraph; task j + 1 is the subtree whose first edge is candidate j.
    std::atomic<int> shared{0};
    std::vector<WeightSearch::Best> best(s.candidates.size() + 1);
    best[0].value = 0;
    detail::parallel_for(s.candidates.size(), jobs, [&](std::size_t j) {
        std::vector<VertexSet> edges{s.candidates[j]};
        auto & local = best[j + 1];
        if (! hg_contains_perm(OrderedHypergraph(n, edges), pi))
            s.visit(edges, static_cast<int>(j), std::popcount(s.candidates[j]), local, shared);
    });
    std::size_t pick = 0;
    for (std::size_t i = 1; i < best.size(); ++i)
        if (best[i].value > best[pick].value)
            pick = i;
    return {best[pick].value, OrderedHypergraph(n, best[pick].edges)};
}

} // namespace ordpat
