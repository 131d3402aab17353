#include <ordpat/cli.hpp>

#include <json.hpp>

#include <sstream>

namespace ordpat::cli {

namespace {

using json = nlohmann::ordered_json;

template <typename... Ts>
struct Overloaded : Ts... {
    using Ts::operator()...;
};

std::string big(const BigInt & v) { return v.str(); }

std::string spaced(const std::vector<int> & xs)
{
    std::string s;
    for (std::size_t i = 0; i < xs.size(); ++i)
        s += (i ? " " : "") + std::to_string(xs[i]);
    return s;
}

json edge_lists(const OrderedHypergraph & h)
{
    json edges = json::array();
    for (VertexSet e : h.edges())
        edges.push_back(set_to_list(e));
    return edges;
}

json structure_json(const Structure & s)
{
    return std::visit(Overloaded{
                          [](const Permutation & p) { return json(std::vector<int>(p.values().begin(), p.values().end())); },
                          [](const OrderedHypergraph & h) { return edge_lists(h); },
                          [](const Partition & q) {
                              json blocks = json::array();
                              for (VertexSet b : q.blocks())
                                  blocks.push_back(set_to_list(b));
                              return blocks;
                          },
                      },
        s);
}

std::string structure_text(const Structure & s)
{
    return std::visit(Overloaded{
                          [](const Permutation & p) { return p.to_string(); },
                          [](const OrderedHypergraph & h) {
                              std::string out;
                              for (VertexSet e : h.edges()) {
                                  std::string inner;
                                  for (int v : set_to_list(e))
                                      inner += (inner.empty() ? "" : ",") + std::to_string(v);
                                  out += (out.empty() ? "{" : " {") + inner + "}";
                              }
                              return out.empty() ? std::string("(no edges)") : out;
                          },
                          [](const Partition & q) {
                              std::string out = format_structure(q);
                              out.pop_back();
                              return out;
                          },
                      },
        s);
}

std::string render_count(const CountResult & r, Format f)
{
    std::ostringstream out;
    switch (f) {
    case Format::json: {
        json j{{"n", r.n}, {"count", big(r.count)}};
        if (r.listed) {
            json items = json::array();
            for (const auto & s : r.items)
                items.push_back(structure_json(s));
            j["items"] = items;
        }
        out << j.dump() << '\n';
        break;
    }
    case Format::tsv:
        out << r.n << '\t' << big(r.count) << '\n';
        break;
    case Format::text:
        out << "n = " << r.n << ", count = " << big(r.count) << '\n';
        if (r.listed)
            for (const auto & s : r.items)
                out << "  " << structure_text(s) << '\n';
        break;
    }
    return out.str();
}

std::string render_table(const TableResult & r, Format f)
{
    std::ostringstream out;
    switch (f) {
    case Format::json: {
        json table = json::array();
        for (std::size_t i = 0; i < r.counts.size(); ++i)
            table.push_back(json{{"n", i + 1}, {"count", big(r.counts[i])}});
        out << json{{"table", table}}.dump() << '\n';
        break;
    }
    case Format::tsv:
        for (std::size_t i = 0; i < r.counts.size(); ++i)
            out << (i ? "\t" : "") << big(r.counts[i]);
        out << '\n';
        break;
    case Format::text:
        out << "n\tcount\n";
        for (std::size_t i = 0; i < r.counts.size(); ++i)
            out << i + 1 << '\t' << big(r.counts[i]) << '\n';
        break;
    }
    return out.str();
}

std::vector<std::pair<std::string, std::vector<int>>> witness_fields(const ContainResult & r)
{
    const Witness & w = *r.witness;
    std::vector<std::pair<std::string, std::vector<int>>> fields;
    switch (r.layout) {
    case WitnessLayout::positions:
        fields.emplace_back("cols", w.cols);
        break;
    case WitnessLayout::matrix:
        fields.emplace_back("rows", w.rows);
        fields.emplace_back("cols", w.cols);
        break;
    case WitnessLayout::hypergraph:
        fields.emplace_back("vertices", w.cols);
        fields.emplace_back("edges", w.rows);
        break;
    }
    if (! w.row_assignment.empty())
        fields.emplace_back("row_assignment", w.row_assignment);
    return fields;
}

std::string render_contain(const ContainResult & r, Format f)
{
    std::ostringstream out;
    bool hit = r.witness.has_value();
    switch (f) {
    case Format::json: {
        json j{{"contained", hit}};
        if (hit) {
            json w = json::object();
            for (const auto & [name, xs] : witness_fields(r))
                w[name] = xs;
            j["witness"] = w;
        }
        out << j.dump() << '\n';
        break;
    }
    case Format::tsv:
        out << (hit ? "true" : "false");
        if (hit)
            for (const auto & [name, xs] : witness_fields(r))
                out << '\t' << spaced(xs);
        out << '\n';
        break;
    case Format::text:
        out << (hit ? "contained" : "avoided") << '\n';
        if (hit)
            for (const auto & [name, xs] : witness_fields(r))
                out << (name == "cols" && r.layout == WitnessLayout::positions ? "positions" : name) << ": "
                    << spaced(xs) << '\n';
        break;
    }
    return out.str();
}

std::string render_value(const ValueResult & r, Format f)
{
    std::ostringstream out;
    switch (f) {
    case Format::json: {
        json j{{"n", r.n}, {"value", r.value}};
        if (r.matrix)
            j["matrix"] = r.matrix->to_strings();
        if (r.hypergraph)
            j["hypergraph"] = json{{"n", r.hypergraph->vertex_count()}, {"edges", edge_lists(*r.hypergraph)}};
        out << j.dump() << '\n';
        break;
    }
    case Format::tsv:
        out << r.n << '\t' << r.value << '\n';
        break;
    case Format::text:
        out << "n = " << r.n << ", value = " << r.value << '\n';
        if (r.matrix)
            out << format_structure(*r.matrix);
        if (r.hypergraph)
            out << format_structure(*r.hypergraph);
        break;
    }
    return out.str();
}

std::string render_constants(const ConstantsResult & r, Format f)
{
    const Constants & c = r.constants;
    std::ostringstream out;
    switch (f) {
    case Format::json: {
        json j{{"k", c.k}, {"C_bound", big(c.c_bound)}, {"C_1", big(c.c_1)}, {"c_k", big(c.c_k)},
            {"threshold_2_pow", big(c.threshold_2_pow)}};
        if (r.f_bound)
            j["f_bound"] = json{{"n", r.f_bound->first}, {"value", big(r.f_bound->second)}};
        out << j.dump() << '\n';
        break;
    }
    case Format::tsv:
        out << c.k << '\t' << big(c.c_bound) << '\t' << big(c.c_1) << '\t' << big(c.c_k) << '\t'
            << big(c.threshold_2_pow);
        if (r.f_bound)
            out << '\t' << big(r.f_bound->second);
        out << '\n';
        break;
    case Format::text:
        out << "k = " << c.k << '\n'
            << "C_bound = " << big(c.c_bound) << '\n'
            << "C_1 = " << big(c.c_1) << '\n'
            << "c_k = " << big(c.c_k) << '\n'
            << "2^(8k^3) = " << big(c.threshold_2_pow) << '\n';
        if (r.f_bound)
            out << "f(" << r.f_bound->first << ") <= " << big(r.f_bound->second) << '\n';
        break;
    }
    return out.str();
}

std::string render_transform(const TransformResult & r, Format f)
{
    std::ostringstream out;
    auto trimmed = [](std::string s) {
        while (! s.empty() && s.back() == '\n')
            s.pop_back();
        return s;
    };
    switch (f) {
    case Format::json: {
        json j{{"op", r.op}};
        for (const auto & [name, value] : r.fields)
            j[name] = trimmed(value);
        out << j.dump() << '\n';
        break;
    }
    case Format::tsv:
        for (std::size_t i = 0; i < r.fields.size(); ++i) {
            std::string v = trimmed(r.fields[i].second);
            for (char & ch : v)
                if (ch == '\n')
                    ch = ';';
            out << (i ? "\t" : "") << v;
        }
        out << '\n';
        break;
    case Format::text:
        for (const auto & [name, value] : r.fields) {
            std::string v = trimmed(value);
            if (v.find('\n') != std::string::npos)
                out << name << ":\n" << v << '\n';
            else
                out << name << ": " << v << '\n';
        }
        break;
    }
    return out.str();
}

} // namespace

std::string render(const Result & result, Format format)
{
    return std::visit(Overloaded{
                          [&](const CountResult & r) { return render_count(r, format); },
                          [&](const TableResult & r) { return render_table(r, format); },
                          [&](const ContainResult & r) { return render_contain(r, format); },
                          [&](const ValueResult & r) { return render_value(r, format); },
                          [&](const ConstantsResult & r) { return render_constants(r, format); },
                          [&](const TransformResult & r) { return render_transform(r, format); },
                      },
        result);
}

} // namespace ordpat::cli
