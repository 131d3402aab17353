#include <ordpat/cli.hpp>

#include <ordpat/contain.hpp>
#include <ordpat/errors.hpp>
#include <ordpat/extremal.hpp>
#include <ordpat/transform.hpp>

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

namespace ordpat::cli {

namespace {

// "@path" reads a file; otherwise ';' stands for a line break.
std::string argument_text(const std::string & arg)
{
    if (! arg.empty() && arg.front() == '@') {
        std::ifstream in(arg.substr(1));
        if (! in)
            throw ParseError("cannot read file '" + arg.substr(1) + "'", 0, 0);
        std::ostringstream s;
        s << in.rdbuf();
        return s.str();
    }
    std::string text = arg;
    std::replace(text.begin(), text.end(), ';', '\n');
    return text;
}

template <typename T>
T parse_arg(const std::string & option, const std::string & arg, Kind kind)
{
    try {
        return std::get<T>(parse_structure(argument_text(arg), kind));
    } catch (const ParseError & e) {
        throw ParseError(option + ": " + e.message(), e.line(), e.column());
    } catch (const InvariantError & e) {
        throw InvariantError(option + ": " + e.what());
    }
}

Permutation perm_arg(const std::string & option, const std::string & arg)
{
    return parse_arg<Permutation>(option, arg, Kind::permutation);
}

struct CommonOptions {
    Format format = Format::text;
    int jobs = 1;
    bool force = false;

    void add(CLI::App * cmd)
    {
        static const std::map<std::string, Format> formats{{"text", Format::text}, {"json", Format::json}, {"tsv", Format::tsv}};
        cmd->add_option("--format", format, "Output format: text, json or tsv")->transform(CLI::CheckedTransformer(formats))->option_text("text|json|tsv");
        cmd->add_option("--jobs", jobs, "Worker threads (0 = all cores)")->check(CLI::NonNegativeNumber);
        cmd->add_flag("--force", force, "Run past the default feasibility bounds");
    }
};

struct PropertyOptions {
    Universe universe = Universe::permutation;
    std::vector<std::string> avoid_perm;
    std::vector<std::string> avoid_structure;
    std::vector<std::string> avoid_partition;
    std::vector<std::string> avoid_class;
    ContainmentMode mode = ContainmentMode::containment;
    int max_degree = unbounded;
    int max_edge_size = unbounded;
    long long max_edges = -1;
    std::vector<GraphFilter> filters;
    bool naive = false;

    void add(CLI::App * cmd)
    {
        static const std::map<std::string, Universe> universes{{"perm", Universe::permutation},
            {"graph", Universe::graph}, {"hypergraph", Universe::hypergraph}, {"partition", Universe::partition}};
        static const std::map<std::string, ContainmentMode> modes{
            {"sub", ContainmentMode::sub}, {"induced", ContainmentMode::induced}, {"containment", ContainmentMode::containment}};
        static const std::map<std::string, GraphFilter> filter_names{
            {"comatching", GraphFilter::comatching}, {"starmatching", GraphFilter::starmatching}};
        cmd->add_option("--universe", universe, "perm, graph, hypergraph or partition")
            ->transform(CLI::CheckedTransformer(universes))
            ->option_text("perm|graph|hypergraph|partition");
        cmd->add_option("--avoid-perm", avoid_perm, "Forbidden permutation (repeatable)");
        cmd->add_option("--avoid-structure", avoid_structure, "Forbidden (hyper)graph (repeatable)");
        cmd->add_option("--mode", mode, "Relation for --avoid-structure: sub, induced or containment")
            ->transform(CLI::CheckedTransformer(modes))
            ->option_text("sub|induced|containment");
        cmd->add_option("--avoid-partition", avoid_partition, "Forbidden partition (repeatable)");
        cmd->add_option("--avoid-class", avoid_class, "Forbidden class of M(k), given by its permutation (repeatable)");
        cmd->add_option("--max-degree", max_degree, "Degree cap")->check(CLI::NonNegativeNumber);
        cmd->add_option("--max-edge-size", max_edge_size, "Edge size cap")->check(CLI::NonNegativeNumber);
        cmd->add_option("--max-edges", max_edges, "Edge count cap")->check(CLI::NonNegativeNumber);
        cmd->add_option("--filter", filters, "comatching or starmatching (repeatable)")
            ->transform(CLI::CheckedTransformer(filter_names))
            ->option_text("comatching|starmatching ...");
        cmd->add_flag("--naive", naive, "Filter complete structures instead of pruning");
    }

    PropertySpec spec() const
    {
        PropertySpec s;
        s.universe = universe;
        for (const auto & a : avoid_perm)
            s.forbidden.push_back(PermPattern{perm_arg("--avoid-perm", a)});
        Kind hg_kind = universe == Universe::graph ? Kind::graph : Kind::hypergraph;
        for (const auto & a : avoid_structure)
            s.forbidden.push_back(StructurePattern{parse_arg<OrderedHypergraph>("--avoid-structure", a, hg_kind), mode});
        for (const auto & a : avoid_partition)
            s.forbidden.push_back(PartitionPattern{parse_arg<Partition>("--avoid-partition", a, Kind::partition)});
        for (const auto & a : avoid_class)
            s.forbidden.push_back(ClassPattern{PatternClass(perm_arg("--avoid-class", a))});
        s.max_degree = max_degree;
        s.max_edge_size = max_edge_size;
        if (max_edges >= 0) {
            long long cap = max_edges;
            s.edge_count_cap = [cap](int) { return cap; };
        }
        s.filters = filters;
        return s;
    }
};

enum class ContainKind { perm, matrix, cls, hypergraph, sub, induced, hg_perm, partition };

ContainResult run_contains(ContainKind kind, const std::string & host, const std::string & pattern)
{
    ContainResult r;
    switch (kind) {
    case ContainKind::perm:
        r.witness = perm_contains(perm_arg("--host", host), perm_arg("--pattern", pattern));
        break;
    case ContainKind::matrix:
        r.layout = WitnessLayout::matrix;
        r.witness = matrix_contains(parse_arg<BinaryMatrix>("--host", host, Kind::matrix),
            parse_arg<BinaryMatrix>("--pattern", pattern, Kind::matrix));
        break;
    case ContainKind::cls:
        r.layout = WitnessLayout::matrix;
        r.witness = matrix_contains_class(
            parse_arg<BinaryMatrix>("--host", host, Kind::matrix), PatternClass(perm_arg("--pattern", pattern)));
        break;
    case ContainKind::hypergraph:
    case ContainKind::sub:
    case ContainKind::induced: {
        r.layout = WitnessLayout::hypergraph;
        auto h = parse_arg<OrderedHypergraph>("--host", host, Kind::hypergraph);
        auto k = parse_arg<OrderedHypergraph>("--pattern", pattern, Kind::hypergraph);
        r.witness = kind == ContainKind::hypergraph ? hg_contains(k, h)
            : kind == ContainKind::sub              ? is_sub_hypergraph(k, h)
                                                    : is_induced_sub(k, h);
        break;
    }
    case ContainKind::hg_perm:
        r.layout = WitnessLayout::hypergraph;
        r.witness = hg_contains_perm(parse_arg<OrderedHypergraph>("--host", host, Kind::hypergraph),
            perm_arg("--pattern", pattern));
        break;
    case ContainKind::partition:
        r.witness = partition_contains(parse_arg<Partition>("--host", host, Kind::partition),
            parse_arg<Partition>("--pattern", pattern, Kind::partition));
        break;
    }
    return r;
}

std::string seq_text(const DegreeSequence & d)
{
    std::string s;
    for (std::size_t i = 0; i < d.entries().size(); ++i)
        s += (i ? " " : "") + std::to_string(d.entries()[i]);
    return s;
}

TransformResult run_transform(const std::string & op, const std::string & input, int t, const std::string & pi)
{
    TransformResult r{op, {}};
    auto field = [&](const std::string & name, const std::string & value) { r.fields.emplace_back(name, value); };
    if (op == "phi") {
        auto g = parse_arg<OrderedHypergraph>("--input", input, Kind::graph);
        field("phi", phi_deg1(g).to_string());
        field("psi", psi_brackets(g).to_string());
    } else if (op == "triple") {
        auto tr = phi_triple(parse_arg<OrderedHypergraph>("--input", input, Kind::graph));
        field("phi_p", tr.phi_p.to_string());
        field("phi_l", seq_text(tr.phi_l));
        field("phi_r", seq_text(tr.phi_r));
    } else if (op == "contract") {
        field("hypergraph", format_structure(contract_pairs(parse_arg<OrderedHypergraph>("--input", input, Kind::hypergraph))));
    } else if (op == "compress") {
        field("matrix", format_structure(block_compress(parse_arg<BinaryMatrix>("--input", input, Kind::matrix), t)));
    } else if (op == "incidence") {
        field("matrix", format_structure(incidence_reduction(parse_arg<BinaryMatrix>("--input", input, Kind::matrix))));
    } else if (op == "pair-graph") {
        field("matrix", format_structure(pair_graph_reduction(parse_arg<BinaryMatrix>("--input", input, Kind::matrix))));
    } else if (op == "corner") {
        field("matrix", format_structure(corner_pattern(PatternClass(perm_arg("--input", input)))));
    } else if (op == "sigma") {
        field("sigma", sigma_double(perm_arg("--input", input)).to_string());
    } else if (op == "extract") {
        auto g = parse_arg<OrderedHypergraph>("--input", input, Kind::graph);
        field("hypergraph", format_structure(extract_independent_matching(g, perm_arg("--pi", pi))));
    } else {
        throw ParseError("unknown transform op '" + op + "'", 0, 0);
    }
    return r;
}

} // namespace

int run(const std::vector<std::string> & args, std::ostream & out, std::ostream & err)
{
    CLI::App app{"Ordered pattern containment, enumeration and extremal computations", "ordpat"};
    app.require_subcommand(1);

    CommonOptions common;

    auto * contains = app.add_subcommand("contains", "Search for a pattern in a host structure");
    static const std::map<std::string, ContainKind> contain_kinds{{"perm", ContainKind::perm},
        {"matrix", ContainKind::matrix}, {"class", ContainKind::cls}, {"hypergraph", ContainKind::hypergraph},
        {"sub", ContainKind::sub}, {"induced", ContainKind::induced}, {"hg-perm", ContainKind::hg_perm},
        {"partition", ContainKind::partition}};
    ContainKind contain_kind = ContainKind::perm;
    std::string host, pattern;
    bool assert_mode = false;
    contains->add_option("--kind", contain_kind, "perm, matrix, class, hypergraph, sub, induced, hg-perm or partition")
        ->required()
        ->transform(CLI::CheckedTransformer(contain_kinds))
        ->option_text("KIND REQUIRED");
    contains->add_option("--host", host, "Host structure (inline, ';' for newlines, or @file)")->required();
    contains->add_option("--pattern", pattern, "Pattern (inline, ';' for newlines, or @file)")->required();
    contains->add_flag("--assert", assert_mode, "Exit 0 when contained, 1 when avoided");

    PropertyOptions property;
    int n = 0;
    bool list = false;
    auto * enumerate_cmd = app.add_subcommand("enumerate", "Count (and list) the structures on [n] in a property");
    property.add(enumerate_cmd);
    enumerate_cmd->add_option("--n", n, "Ground set size")->required()->check(CLI::NonNegativeNumber);
    enumerate_cmd->add_flag("--list", list, "Print every structure");

    int upto = 0;
    std::string family;
    auto * speed = app.add_subcommand("speed", "Counts for n = 1..N");
    property.add(speed);
    speed->add_option("--upto", upto, "Largest n")->required()->check(CLI::NonNegativeNumber);
    speed->add_option("--family", family, "Use a generated family instead of a property: matching")
        ->check(CLI::IsMember({"matching"}));

    auto * extremal = app.add_subcommand("extremal", "Largest number of 1s avoiding matrix patterns");
    std::optional<int> rows, max_row_weight;
    bool square = false, distinct_rows = false;
    std::vector<std::string> avoid_matrix, avoid_class;
    std::string avoid_perm;
    extremal->add_option("--n", n, "Column count")->required()->check(CLI::NonNegativeNumber);
    extremal->add_option("--rows", rows, "Row count (default n)")->check(CLI::NonNegativeNumber);
    extremal->add_flag("--square", square, "Require rows == n");
    extremal->add_flag("--distinct-rows", distinct_rows, "Rows must be distinct");
    extremal->add_option("--max-row-weight", max_row_weight, "At most this many 1s per row")->check(CLI::NonNegativeNumber);
    extremal->add_option("--avoid-matrix", avoid_matrix, "Forbidden matrix (repeatable)");
    extremal->add_option("--avoid-class", avoid_class, "Forbidden class of M(k), by permutation (repeatable)");
    extremal->add_option("--avoid-perm", avoid_perm, "Maximise hypergraph weight avoiding this permutation instead");

    auto * transform = app.add_subcommand("transform", "Apply a structural map");
    std::string op, input, pi;
    int t = 2;
    transform->add_option("--op", op, "phi, triple, contract, compress, incidence, pair-graph, corner, sigma or extract")
        ->required();
    transform->add_option("--input", input, "Input structure (inline, ';' for newlines, or @file)")->required();
    transform->add_option("--t", t, "Block width for compress");
    transform->add_option("--pi", pi, "Permutation for extract");

    auto * constants_cmd = app.add_subcommand("constants", "Exact constants of the linear extremal bound");
    int k = 1;
    std::optional<int> f_n;
    constants_cmd->add_option("--k", k, "Pattern size")->required();
    constants_cmd->add_option("--n", f_n, "Also evaluate the f(n, k) recurrence bound");

    for (auto * cmd : {contains, enumerate_cmd, speed, extremal, transform, constants_cmd})
        common.add(cmd);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp & e) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::CallForAllHelp & e) {
        out << app.help("", CLI::AppFormatMode::All);
        return exit_ok;
    } catch (const CLI::ParseError & e) {
        for (auto * sub : app.get_subcommands())
            if (sub->get_help_ptr() && sub->get_help_ptr()->count() > 0) {
                out << sub->help();
                return exit_ok;
            }
        err << "error: " << e.what() << '\n';
        return exit_parse_error;
    }

    try {
        EnumerateOptions eopts;
        eopts.jobs = common.jobs;
        eopts.force = common.force;
        Result result;
        int code = exit_ok;
        if (contains->parsed()) {
            auto r = run_contains(contain_kind, host, pattern);
            if (assert_mode && ! r.witness)
                code = exit_avoided;
            result = r;
        } else if (enumerate_cmd->parsed()) {
            eopts.naive = property.naive;
            eopts.collect = list;
            auto e = enumerate(property.spec(), n, eopts);
            result = CountResult{n, e.count, std::move(e.items), list};
        } else if (speed->parsed()) {
            TableResult table;
            if (family == "matching") {
                constexpr int family_bound = 10;
                if (upto > family_bound && ! common.force)
                    throw FeasibilityError("matching family beyond n=" + std::to_string(family_bound) + "; use --force");
                for (int m = 1; m <= upto; ++m)
                    table.counts.push_back(matching_family(m).size());
            } else {
                eopts.naive = property.naive;
                table.counts = speed_table(property.spec(), upto, eopts).counts;
            }
            result = table;
        } else if (extremal->parsed()) {
            if (! avoid_perm.empty()) {
                if (! avoid_matrix.empty() || ! avoid_class.empty())
                    throw InvariantError("--avoid-perm cannot be combined with matrix patterns");
                auto w = max_weight_avoiding(n, perm_arg("--avoid-perm", avoid_perm), common.jobs, common.force);
                result = ValueResult{n, w.value, std::nullopt, w.witness};
            } else {
                std::vector<MatrixPattern> patterns;
                for (const auto & a : avoid_matrix)
                    patterns.emplace_back(parse_arg<BinaryMatrix>("--avoid-matrix", a, Kind::matrix));
                for (const auto & a : avoid_class)
                    patterns.emplace_back(PatternClass(perm_arg("--avoid-class", a)));
                ExtremalOptions xopts;
                xopts.rows = rows;
                xopts.square = square;
                xopts.distinct_rows = distinct_rows;
                xopts.max_row_weight = max_row_weight;
                xopts.jobs = common.jobs;
                xopts.force = common.force;
                auto x = extremal_ones(n, patterns, xopts);
                result = ValueResult{n, x.value, x.witness, std::nullopt};
            }
        } else if (transform->parsed()) {
            result = run_transform(op, input, t, pi);
        } else {
            ConstantsResult c{constants(k), std::nullopt};
            if (f_n)
                c.f_bound.emplace(*f_n, f_recurrence_bound(*f_n, k));
            result = c;
        }
        out << render(result, common.format);
        return code;
    } catch (const ParseError & e) {
        err << "parse error";
        if (e.line() > 0)
            err << " at line " << e.line() << ", column " << e.column();
        err << ": " << e.message() << '\n';
        return exit_parse_error;
    } catch (const FeasibilityError & e) {
        err << "refused: " << e.what() << '\n';
        return exit_feasibility;
    } catch (const std::exception & e) {
        err << "invalid input: " << e.what() << '\n';
        return exit_invariant;
    }
}

} // namespace ordpat::cli
