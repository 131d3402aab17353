#pragma once

#include <ordpat/bigint.hpp>
#include <ordpat/core.hpp>

#include <functional>
#include <string>
#include <variant>
#include <vector>

namespace ordpat {

enum class Universe { permutation, graph, hypergraph, partition };

enum class ContainmentMode { sub, induced, containment };

/// Forbidden permutation. Read as pattern containment for permutations, as "H contains pi"
/// for graphs and hypergraphs, and as an induced copy of the partition H(pi) for partitions.
struct PermPattern {
    Permutation pi;
};

/// Forbidden ordered (hyper)graph under the given relation.
struct StructurePattern {
    OrderedHypergraph pattern;
    ContainmentMode mode = ContainmentMode::containment;
};

/// Forbidden induced sub-partition.
struct PartitionPattern {
    Partition pattern;
};

/// Forbidden class of M(k), tested against the incidence matrix.
struct ClassPattern {
    PatternClass cls;
};

using ForbiddenPattern = std::variant<PermPattern, StructurePattern, PartitionPattern, ClassPattern>;

enum class GraphFilter { comatching, starmatching };

/// A property given by forbidden patterns plus caps. Every cap defaults to unbounded.
struct PropertySpec {
    Universe universe = Universe::permutation;
    std::vector<ForbiddenPattern> forbidden;
    int max_degree = unbounded;
    int max_edge_size = unbounded;
    /// Optional e(G) <= cap(n) filter.
    std::function<long long(int)> edge_count_cap;
    /// Hereditary graph predicates, checked per structure.
    std::vector<GraphFilter> filters;
};

using Structure = std::variant<Permutation, OrderedHypergraph, Partition>;

struct FeasibilityBounds {
    int permutation = 10;
    int graph = 7;
    int hypergraph = 5;
    int partition = 10;
};

struct EnumerateOptions {
    /// Worker threads; 0 means hardware concurrency.
    int jobs = 1;
    bool force = false;
    /// Filter complete structures only, without pruning.
    bool naive = false;
    /// Keep the structures, in generation order.
    bool collect = false;
    FeasibilityBounds bounds;
};

struct Enumeration {
    BigInt count;
    std::vector<Structure> items;
};

/// Throws InvariantError when a pattern kind does not fit the universe.
void validate(const PropertySpec & spec);

/// Direct membership test of a single structure.
bool satisfies(const PropertySpec & spec, const Structure & s);

/// Every structure on [n] in the property. Permutations come in lexicographic order,
/// (hyper)graphs in lexicographic order of their sorted edge lists, partitions in order of
/// their restricted growth strings. Throws FeasibilityError when n exceeds the bound for
/// the universe and `force` is not set.
Enumeration enumerate(const PropertySpec & spec, int n, const EnumerateOptions & opts = {});

struct SpeedTable {
    PropertySpec spec;
    /// counts[i] is |P_{i+1}|.
    std::vector<BigInt> counts;
};

SpeedTable speed_table(const PropertySpec & spec, int n_max, const EnumerateOptions & opts = {});

/// All distinct G(n, A, pi), sorted.
std::vector<OrderedHypergraph> matching_family(int n);

std::string universe_name(Universe u);

} // namespace ordpat
