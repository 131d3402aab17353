#pragma once

#include <ordpat/core.hpp>
#include <ordpat/counting.hpp>
#include <ordpat/enumerate.hpp>

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace ordpat::cli {

enum ExitCode : int {
    exit_ok = 0,
    exit_avoided = 1,
    exit_parse_error = 2,
    exit_invariant = 3,
    exit_feasibility = 4,
};

enum class Kind { permutation, matrix, graph, hypergraph, partition };

using ParsedStructure = std::variant<Permutation, BinaryMatrix, OrderedHypergraph, Partition>;

/// Syntax problems throw ParseError with a 1-based line and column; well-formed input that
/// breaks a structural rule (repeated edge, non-bijection, ...) throws InvariantError.
ParsedStructure parse_structure(const std::string & text, Kind kind);

Permutation parse_permutation(const std::string & text);
BinaryMatrix parse_matrix(const std::string & text);
OrderedHypergraph parse_hypergraph(const std::string & text, bool graph_only = false);
Partition parse_partition(const std::string & text);

/// The file format of the structure; parse_structure reads it back unchanged.
std::string format_structure(const ParsedStructure & s);

Kind parse_kind(const std::string & name);

enum class Format { text, json, tsv };

struct CountResult {
    int n = 0;
    BigInt count;
    std::vector<Structure> items;
    bool listed = false;
};

struct TableResult {
    std::vector<BigInt> counts;
};

enum class WitnessLayout { positions, matrix, hypergraph };

struct ContainResult {
    WitnessLayout layout = WitnessLayout::positions;
    std::optional<Witness> witness;
};

struct ValueResult {
    int n = 0;
    int value = 0;
    std::optional<BinaryMatrix> matrix;
    std::optional<OrderedHypergraph> hypergraph;
};

struct ConstantsResult {
    Constants constants;
    std::optional<std::pair<int, BigInt>> f_bound;
};

/// Named outputs of a transform, each already in its file format.
struct TransformResult {
    std::string op;
    std::vector<std::pair<std::string, std::string>> fields;
};

using Result = std::variant<CountResult, TableResult, ContainResult, ValueResult, ConstantsResult, TransformResult>;

/// Text for people, JSON with stable field names (big integers as decimal strings), or TSV
/// with one value per column. Output ends with a newline.
std::string render(const Result & result, Format format);

/// Runs one command line (without the program name). Returns the exit code.
int run(const std::vector<std::string> & args, std::ostream & out, std::ostream & err);

} // namespace ordpat::cli
