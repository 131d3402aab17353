#include <ordpat/enumerate.hpp>

#include <ordpat/contain.hpp>
#include <ordpat/errors.hpp>

#include "parallel.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <optional>
#include <set>

namespace ordpat {

std::string universe_name(Universe u)
{
    switch (u) {
    case Universe::permutation:
        return "perm";
    case Universe::graph:
        return "graph";
    case Universe::hypergraph:
        return "hypergraph";
    case Universe::partition:
        return "partition";
    }
    return "?";
}

namespace {

template <typename... Ts>
struct Overloaded : Ts... {
    using Ts::operator()...;
};

// The spec split by how each pattern is tested.
struct Checker {
    Universe universe;
    std::vector<Permutation> perms;
    std::vector<OrderedHypergraph> sub_patterns;
    std::vector<OrderedHypergraph> minor_patterns;
    std::vector<OrderedHypergraph> induced_patterns;
    std::vector<PatternClass> classes;
    std::vector<Partition> partitions;
    int max_degree = unbounded;
    int max_edge_size = unbounded;
    std::function<long long(int)> edge_count_cap;
    std::vector<GraphFilter> filters;

    explicit Checker(const PropertySpec & spec)
        : universe(spec.universe)
        , max_degree(spec.max_degree)
        , max_edge_size(spec.max_edge_size)
        , edge_count_cap(spec.edge_count_cap)
        , filters(spec.filters)
    {
        validate(spec);
        for (const auto & f : spec.forbidden) {
            std::visit(Overloaded{
                           [&](const PermPattern & p) {
                               if (universe == Universe::partition)
                                   partitions.push_back(h_of_pi_partition(p.pi));
                               else
                                   perms.push_back(p.pi);
                           },
                           [&](const StructurePattern & p) {
                               switch (p.mode) {
                               case ContainmentMode::sub:
                                   sub_patterns.push_back(p.pattern);
                                   break;
                               case ContainmentMode::induced:
                                   induced_patterns.push_back(p.pattern);
                                   break;
                               case ContainmentMode::containment:
                                   minor_patterns.push_back(p.pattern);
                                   break;
                               }
                           },
                           [&](const PartitionPattern & p) { partitions.push_back(p.pattern); },
                           [&](const ClassPattern & p) { classes.push_back(p.cls); },
                       },
                f);
        }
    }

    // Forbidding an empty pattern empties the property.
    bool forbids_everything() const
    {
        auto empty_hg = [](const OrderedHypergraph & h) { return h.vertex_count() == 0; };
        return std::any_of(perms.begin(), perms.end(), [](const Permutation & p) { return p.empty(); })
            || std::any_of(sub_patterns.begin(), sub_patterns.end(), empty_hg)
            || std::any_of(minor_patterns.begin(), minor_patterns.end(), empty_hg)
            || std::any_of(induced_patterns.begin(), induced_patterns.end(), empty_hg)
            || std::any_of(classes.begin(), classes.end(), [](const PatternClass & c) { return c.k() == 0; })
            || std::any_of(partitions.begin(), partitions.end(), [](const Partition & q) { return q.ground_size() == 0; });
    }

    bool has_monotone() const
    {
        return ! perms.empty() || ! sub_patterns.empty() || ! minor_patterns.empty() || ! classes.empty();
    }

    bool has_leaf_checks() const { return ! induced_patterns.empty() || ! filters.empty(); }

    long long cap_for(int n) const
    {
        if (! edge_count_cap)
            return std::numeric_limits<long long>::max();
        return edge_count_cap(n);
    }

    bool perm_ok(std::span<const int> seq) const
    {
        for (const auto & p : perms)
            if (sequence_contains(seq, p))
                return false;
        return true;
    }

    bool monotone_ok(const OrderedHypergraph & h) const
    {
        for (const auto & p : perms)
            if (hg_contains_perm(h, p))
                return false;
        for (const auto & k : sub_patterns)
            if (is_sub_hypergraph(k, h))
                return false;
        for (const auto & k : minor_patterns)
            if (hg_contains(k, h))
                return false;
        if (! classes.empty()) {
            BinaryMatrix m = incidence_matrix(h);
            for (const auto & c : classes)
                if (matrix_contains_class(m, c))
                    return false;
        }
        return true;
    }

    bool leaf_ok(const OrderedHypergraph & h) const
    {
        for (const auto & k : induced_patterns)
            if (is_induced_sub(k, h))
                return false;
        for (GraphFilter f : filters) {
            bool ok = f == GraphFilter::comatching ? is_comatching(h) : is_starmatching(h);
            if (! ok)
                return false;
        }
        return true;
    }

    bool caps_ok(const OrderedHypergraph & h) const
    {
        return satisfies_caps(h, max_degree, max_edge_size) && h.edge_count() <= cap_for(h.vertex_count());
    }

    bool hypergraph_ok(const OrderedHypergraph & h) const
    {
        if (universe == Universe::graph && ! h.is_graph())
            return false;
        return caps_ok(h) && monotone_ok(h) && leaf_ok(h);
    }

    bool partition_ok(const Partition & p) const
    {
        if (! caps_ok(hypergraph_of_partition(p)))
            return false;
        for (const auto & q : partitions)
            if (partition_contains(p, q))
                return false;
        return true;
    }
};

struct Sink {
    std::uint64_t count = 0;
    std::vector<Structure> items;
};

// A slot in the generation order: either a structure emitted above the split depth or a subtree task.
struct Unit {
    int task = -1;
    std::optional<Structure> item;
};

template <typename S>
void walk(const S & s, typename S::Node & node, Sink & sink, bool collect)
{
    if (s.accept(node)) {
        ++sink.count;
        if (collect)
            sink.items.push_back(s.build(node));
    }
    s.for_each_child(node, [&](typename S::Node & child) { walk(s, child, sink, collect); });
}

template <typename S>
void split(const S & s, typename S::Node & node, int depth, int limit, std::vector<Unit> & units,
    std::vector<typename S::Node> & tasks, bool collect)
{
    if (depth == limit) {
        units.push_back({static_cast<int>(tasks.size()), std::nullopt});
        tasks.push_back(node);
        return;
    }
    if (s.accept(node))
        units.push_back({-1, collect ? std::optional<Structure>(s.build(node)) : std::nullopt});
    s.for_each_child(node, [&](typename S::Node & child) { split(s, child, depth + 1, limit, units, tasks, collect); });
}

constexpr int split_depth = 2;

template <typename S>
Enumeration drive(const S & s, const EnumerateOptions & opts)
{
    std::vector<Unit> units;
    std::vector<typename S::Node> tasks;
    auto root = s.root();
    split(s, root, 0, split_depth, units, tasks, opts.collect);
    std::vector<Sink> results(tasks.size());
    detail::parallel_for(tasks.size(), opts.jobs, [&](std::size_t i) {
        auto node = tasks[i];
        walk(s, node, results[i], opts.collect);
    });
    Enumeration out;
    std::uint64_t total = 0;
    for (auto & u : units) {
        if (u.task < 0) {
            ++total;
            if (u.item)
                out.items.push_back(std::move(*u.item));
        } else {
            auto & r = results[u.task];
            total += r.count;
            for (auto & item : r.items)
                out.items.push_back(std::move(item));
        }
    }
    out.count = total;
    return out;
}

struct PermSearch {
    struct Node {
        std::vector<int> prefix;
        VertexSet used = 0;
    };

    const Checker & check;
    int n;
    bool naive;

    Node root() const { return {}; }

    bool accept(const Node & node) const
    {
        if (static_cast<int>(node.prefix.size()) != n)
            return false;
        return (! naive && n > 0) || check.perm_ok(node.prefix);
    }

    template <typename F>
    void for_each_child(Node & node, F && f) const
    {
        if (static_cast<int>(node.prefix.size()) == n)
            return;
        for (int v = 1; v <= n; ++v) {
            if (contains_vertex(node.used, v))
                continue;
            node.prefix.push_back(v);
            node.used |= vertex_bit(v);
            bool ok = true;
            if (! naive)
                for (const auto & p : check.perms)
                    if (sequence_contains(node.prefix, p, true)) {
                        ok = false;
                        break;
                    }
            if (ok)
                f(node);
            node.prefix.pop_back();
            node.used &= ~vertex_bit(v);
        }
    }

    Structure build(const Node & node) const { return Permutation(node.prefix); }
};

struct HypergraphSearch {
    struct Node {
        std::vector<VertexSet> edges;
        std::vector<int> degrees;
        int last = -1;
    };

    const Checker & check;
    int n;
    bool naive;
    std::vector<VertexSet> candidates;
    long long edge_cap;
    bool monotone;
    bool leaf_checks;

    HypergraphSearch(const Checker & c, int n_, bool naive_)
        : check(c)
        , n(n_)
        , naive(naive_)
        , edge_cap(c.cap_for(n_))
        , monotone(c.has_monotone())
        , leaf_checks(c.has_leaf_checks())
    {
        int top = c.universe == Universe::graph ? 2 : std::min(n, c.max_edge_size);
        if (c.universe == Universe::graph && c.max_edge_size < 2)
            top = 1;
        if (naive)
            top = c.universe == Universe::graph ? 2 : n;
        for (int s = 2; s <= top; ++s)
            for_each_combination_mask(n, s, [&](VertexSet e) {
                candidates.push_back(e);
                return false;
            });
        sort_edges(candidates);
    }

    Node root() const { return {{}, std::vector<int>(n + 1, 0), -1}; }

    OrderedHypergraph graph_of(const Node & node) const { return OrderedHypergraph(n, node.edges); }

    bool accept(const Node & node) const
    {
        if (naive || node.last < 0)
            return check.hypergraph_ok(graph_of(node));
        return ! leaf_checks || check.leaf_ok(graph_of(node));
    }

    template <typename F>
    void for_each_child(Node & node, F && f) const
    {
        if (! naive && static_cast<long long>(node.edges.size()) >= edge_cap)
            return;
        int saved = node.last;
        for (int j = saved + 1; j < static_cast<int>(candidates.size()); ++j) {
            VertexSet e = candidates[j];
            if (! naive && check.max_degree != unbounded) {
                bool ok = true;
                for (VertexSet r = e; r && ok; r &= r - 1)
                    ok = node.degrees[std::countr_zero(r) + 1] < check.max_degree;
                if (! ok)
                    continue;
            }
            node.edges.push_back(e);
            for (VertexSet r = e; r; r &= r - 1)
                ++node.degrees[std::countr_zero(r) + 1];
            node.last = j;
            if (naive || ! monotone || check.monotone_ok(graph_of(node)))
                f(node);
            node.edges.pop_back();
            for (VertexSet r = e; r; r &= r - 1)
                --node.degrees[std::countr_zero(r) + 1];
        }
        node.last = saved;
    }

    Structure build(const Node & node) const { return graph_of(node); }
};

// True if some copy of q (as restricted growth string) in `labels` uses the last element.
bool rgs_contains_using_last(const std::vector<int> & labels, const std::vector<int> & q)
{
    int j = static_cast<int>(labels.size());
    int size = static_cast<int>(q.size());
    if (size == 0 || size > j)
        return false;
    if (size == 1)
        return true;
    std::vector<int> map_host(j), map_pat(size);
    auto matches = [&](VertexSet chosen) {
        std::vector<int> pos = set_to_list(chosen);
        pos.push_back(j);
        std::fill(map_host.begin(), map_host.end(), -1);
        std::fill(map_pat.begin(), map_pat.end(), -1);
        for (int i = 0; i < size; ++i) {
            int h = labels[pos[i] - 1], p = q[i];
            if (map_host[h] < 0 && map_pat[p] < 0) {
                map_host[h] = p;
                map_pat[p] = h;
            } else if (map_host[h] != p || map_pat[p] != h) {
                return false;
            }
        }
        return true;
    };
    bool found = false;
    for_each_combination_mask(j - 1, size - 1, [&](VertexSet chosen) { return found = matches(chosen); });
    return found;
}

struct PartitionSearch {
    struct Node {
        std::vector<int> labels;
        int blocks = 0;
    };

    const Checker & check;
    int n;
    bool naive;
    std::vector<std::vector<int>> pattern_labels;

    PartitionSearch(const Checker & c, int n_, bool naive_) : check(c), n(n_), naive(naive_)
    {
        for (const auto & q : c.partitions)
            pattern_labels.push_back(q.labels());
    }

    Node root() const { return {}; }

    bool accept(const Node & node) const
    {
        if (static_cast<int>(node.labels.size()) != n)
            return false;
        Partition p = Partition::from_labels(node.labels);
        if (naive || n == 0)
            return check.partition_ok(p);
        return check.caps_ok(hypergraph_of_partition(p));
    }

    template <typename F>
    void for_each_child(Node & node, F && f) const
    {
        if (static_cast<int>(node.labels.size()) == n)
            return;
        for (int b = 0; b <= node.blocks; ++b) {
            node.labels.push_back(b);
            int saved = node.blocks;
            if (b == node.blocks)
                ++node.blocks;
            bool ok = true;
            if (! naive)
                for (const auto & q : pattern_labels)
                    if (rgs_contains_using_last(node.labels, q)) {
                        ok = false;
                        break;
                    }
            if (ok)
                f(node);
            node.blocks = saved;
            node.labels.pop_back();
        }
    }

    Structure build(const Node & node) const { return Partition::from_labels(node.labels); }
};

int bound_for(Universe u, const FeasibilityBounds & b)
{
    switch (u) {
    case Universe::permutation:
        return b.permutation;
    case Universe::graph:
        return b.graph;
    case Universe::hypergraph:
        return b.hypergraph;
    case Universe::partition:
        return b.partition;
    }
    return 0;
}

} // namespace

void validate(const PropertySpec & spec)
{
    if (spec.max_degree < 0 || spec.max_edge_size < 0)
        throw InvariantError("caps must be non-negative");
    bool hg = spec.universe == Universe::graph || spec.universe == Universe::hypergraph;
    for (const auto & f : spec.forbidden) {
        bool ok = std::visit(Overloaded{
                                 [&](const PermPattern &) { return true; },
                                 [&](const StructurePattern &) { return hg; },
                                 [&](const PartitionPattern &) { return spec.universe == Universe::partition; },
                                 [&](const ClassPattern &) { return hg; },
                             },
            f);
        if (! ok)
            throw InvariantError("forbidden pattern kind does not fit universe " + universe_name(spec.universe));
    }
    if (! spec.filters.empty() && spec.universe != Universe::graph)
        throw InvariantError("graph filters need the graph universe");
    if (spec.universe == Universe::permutation
        && (spec.max_degree != unbounded || spec.max_edge_size != unbounded || spec.edge_count_cap))
        throw InvariantError("caps do not apply to permutations");
}

bool satisfies(const PropertySpec & spec, const Structure & s)
{
    Checker check(spec);
    return std::visit(Overloaded{
                          [&](const Permutation & p) {
                              if (spec.universe != Universe::permutation)
                                  throw InvariantError("structure does not fit universe");
                              return check.perm_ok(p.values());
                          },
                          [&](const OrderedHypergraph & h) {
                              if (spec.universe != Universe::graph && spec.universe != Universe::hypergraph)
                                  throw InvariantError("structure does not fit universe");
                              return check.hypergraph_ok(h);
                          },
                          [&](const Partition & p) {
                              if (spec.universe != Universe::partition)
                                  throw InvariantError("structure does not fit universe");
                              return check.partition_ok(p);
                          },
                      },
        s);
}

Enumeration enumerate(const PropertySpec & spec, int n, const EnumerateOptions & opts)
{
    if (n < 0)
        throw InvariantError("n must be non-negative");
    int bound = bound_for(spec.universe, opts.bounds);
    if (n > bound && ! opts.force)
        throw FeasibilityError(universe_name(spec.universe) + " enumeration at n=" + std::to_string(n)
            + " exceeds bound " + std::to_string(bound) + "; use force to override");
    if (n > max_vertices)
        throw FeasibilityError("n exceeds 64");
    Checker check(spec);
    if (check.forbids_everything())
        return {};
    switch (spec.universe) {
    case Universe::permutation:
        return drive(PermSearch{check, n, opts.naive}, opts);
    case Universe::graph:
    case Universe::hypergraph:
        return drive(HypergraphSearch(check, n, opts.naive), opts);
    case Universe::partition:
        return drive(PartitionSearch(check, n, opts.naive), opts);
    }
    return {};
}

SpeedTable speed_table(const PropertySpec & spec, int n_max, const EnumerateOptions & opts)
{
    SpeedTable t{spec, {}};
    EnumerateOptions o = opts;
    o.collect = false;
    for (int n = 1; n <= n_max; ++n)
        t.counts.push_back(enumerate(spec, n, o).count);
    return t;
}

std::vector<OrderedHypergraph> matching_family(int n)
{
    if (n < 0 || n > max_vertices)
        throw InvariantError("n out of range");
    std::set<OrderedHypergraph> seen;
    for (int k = 0; 2 * k <= n; ++k) {
        auto perms = Permutation::all(k);
        for_each_combination_mask(n, 2 * k, [&](VertexSet a) {
            std::vector<int> list = set_to_list(a);
            for (const auto & pi : perms)
                seen.insert(make_g(n, list, pi));
            return false;
        });
    }
    return {seen.begin(), seen.end()};
}

} // namespace ordpat
