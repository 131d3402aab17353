#include <ordpat/cli.hpp>

#include <ordpat/errors.hpp>

#include <cctype>
#include <sstream>

namespace ordpat::cli {

namespace {

struct Line {
    int number;
    std::string text;
};

bool skippable(const std::string & s)
{
    std::size_t i = s.find_first_not_of(" \t\r");
    return i == std::string::npos || s[i] == '#';
}

std::vector<Line> content_lines(const std::string & text)
{
    std::vector<Line> out;
    std::istringstream in(text);
    std::string s;
    int number = 0;
    while (std::getline(in, s)) {
        ++number;
        if (! s.empty() && s.back() == '\r')
            s.pop_back();
        if (! skippable(s))
            out.push_back({number, s});
    }
    return out;
}

bool blank(char c) { return c == ' ' || c == '\t'; }

// Reads integers separated by blanks and any of `separators`; columns are 1-based.
struct IntScanner {
    const Line & line;
    std::string separators;
    std::size_t pos = 0;

    [[noreturn]] void fail(const std::string & message) const
    {
        throw ParseError(message, line.number, static_cast<int>(pos) + 1);
    }

    void skip_blanks()
    {
        while (pos < line.text.size() && blank(line.text[pos]))
            ++pos;
    }

    bool done()
    {
        skip_blanks();
        return pos >= line.text.size();
    }

    int column() const { return static_cast<int>(pos) + 1; }

    int next_int()
    {
        skip_blanks();
        if (pos >= line.text.size() || ! std::isdigit(static_cast<unsigned char>(line.text[pos])))
            fail("expected a positive integer");
        long long v = 0;
        while (pos < line.text.size() && std::isdigit(static_cast<unsigned char>(line.text[pos]))) {
            v = v * 10 + (line.text[pos] - '0');
            if (v > 1000000)
                fail("integer too large");
            ++pos;
        }
        return static_cast<int>(v);
    }

    // Consumes one separator (blanks alone count when `blank_ok`). Returns false at end of line.
    bool separator(bool blank_ok)
    {
        std::size_t start = pos;
        skip_blanks();
        if (pos >= line.text.size())
            return false;
        if (separators.find(line.text[pos]) != std::string::npos) {
            ++pos;
            return true;
        }
        if (blank_ok && pos > start)
            return true;
        fail(std::string("unexpected character '") + line.text[pos] + "'");
    }
};

const Line & single_line(const std::vector<Line> & lines, const char * what)
{
    if (lines.size() > 1)
        throw ParseError(std::string(what) + " must be a single line", lines[1].number, 1);
    return lines.front();
}

} // namespace

Permutation parse_permutation(const std::string & text)
{
    auto lines = content_lines(text);
    if (lines.empty())
        return Permutation();
    IntScanner scan{single_line(lines, "permutation"), ","};
    std::vector<int> values;
    if (! scan.done()) {
        do
            values.push_back(scan.next_int());
        while (scan.separator(true));
    }
    return Permutation(std::move(values));
}

BinaryMatrix parse_matrix(const std::string & text)
{
    std::vector<std::vector<int>> rows;
    int first_line = 0;
    for (const auto & line : content_lines(text)) {
        std::vector<int> row;
        for (std::size_t i = 0; i < line.text.size(); ++i) {
            char c = line.text[i];
            if (c == '0' || c == '1')
                row.push_back(c - '0');
            else if (! blank(c))
                throw ParseError(std::string("unexpected character '") + c + "' in matrix row", line.number,
                    static_cast<int>(i) + 1);
        }
        if (rows.empty())
            first_line = line.number;
        else if (row.size() != rows.front().size())
            throw ParseError("row has " + std::to_string(row.size()) + " entries, expected "
                    + std::to_string(rows.front().size()) + " (as on line " + std::to_string(first_line) + ")",
                line.number, 1);
        rows.push_back(std::move(row));
    }
    if (rows.empty())
        return BinaryMatrix(0, 0);
    return BinaryMatrix(rows);
}

OrderedHypergraph parse_hypergraph(const std::string & text, bool graph_only)
{
    auto lines = content_lines(text);
    if (lines.empty())
        throw ParseError("missing 'n=<int>' header", 1, 1);
    const Line & header = lines.front();
    IntScanner head{header, ""};
    head.skip_blanks();
    if (header.text.compare(head.pos, 1, "n") != 0)
        head.fail("expected 'n=<int>'");
    ++head.pos;
    head.skip_blanks();
    if (head.pos >= header.text.size() || header.text[head.pos] != '=')
        head.fail("expected '=' after 'n'");
    ++head.pos;
    int n = head.next_int();
    if (! head.done())
        head.fail("unexpected text after vertex count");

    std::vector<std::vector<int>> edges;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        IntScanner scan{lines[i], ","};
        std::vector<int> edge;
        do {
            int col = (scan.skip_blanks(), scan.column());
            int v = scan.next_int();
            if (! edge.empty() && v <= edge.back())
                throw ParseError("edge vertices must be increasing", lines[i].number, col);
            edge.push_back(v);
        } while (scan.separator(false));
        if (graph_only && edge.size() != 2)
            throw InvariantError("graph edge on line " + std::to_string(lines[i].number) + " does not have two vertices");
        edges.push_back(std::move(edge));
    }
    return OrderedHypergraph(n, edges);
}

Partition parse_partition(const std::string & text)
{
    auto lines = content_lines(text);
    if (lines.empty())
        return Partition(0, std::vector<VertexSet>{});
    IntScanner scan{single_line(lines, "partition"), ",|"};
    std::vector<std::vector<int>> blocks(1);
    int n = 0;
    for (;;) {
        int v = scan.next_int();
        blocks.back().push_back(v);
        n = std::max(n, v);
        scan.skip_blanks();
        if (scan.pos >= scan.line.text.size())
            break;
        char c = scan.line.text[scan.pos];
        if (c == '|')
            blocks.emplace_back();
        else if (c != ',')
            scan.fail(std::string("unexpected character '") + c + "'");
        ++scan.pos;
    }
    return Partition(n, blocks);
}

ParsedStructure parse_structure(const std::string & text, Kind kind)
{
    switch (kind) {
    case Kind::permutation:
        return parse_permutation(text);
    case Kind::matrix:
        return parse_matrix(text);
    case Kind::graph:
        return parse_hypergraph(text, true);
    case Kind::hypergraph:
        return parse_hypergraph(text, false);
    case Kind::partition:
        return parse_partition(text);
    }
    throw InvariantError("unknown structure kind");
}

Kind parse_kind(const std::string & name)
{
    if (name == "perm" || name == "permutation")
        return Kind::permutation;
    if (name == "matrix")
        return Kind::matrix;
    if (name == "graph")
        return Kind::graph;
    if (name == "hypergraph")
        return Kind::hypergraph;
    if (name == "partition")
        return Kind::partition;
    throw ParseError("unknown structure kind '" + name + "'", 1, 1);
}

namespace {

std::string join_list(const std::vector<int> & xs, char sep)
{
    std::string s;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i)
            s += sep;
        s += std::to_string(xs[i]);
    }
    return s;
}

} // namespace

std::string format_structure(const ParsedStructure & s)
{
    std::string out;
    if (const auto * p = std::get_if<Permutation>(&s)) {
        out = p->to_string() + "\n";
    } else if (const auto * m = std::get_if<BinaryMatrix>(&s)) {
        for (int i = 1; i <= m->rows(); ++i) {
            for (int j = 1; j <= m->cols(); ++j) {
                if (j > 1)
                    out += ' ';
                out += m->get(i, j) ? '1' : '0';
            }
            out += '\n';
        }
    } else if (const auto * h = std::get_if<OrderedHypergraph>(&s)) {
        out = "n=" + std::to_string(h->vertex_count()) + "\n";
        for (VertexSet e : h->edges())
            out += join_list(set_to_list(e), ',') + "\n";
    } else {
        const auto & q = std::get<Partition>(s);
        for (std::size_t b = 0; b < q.blocks().size(); ++b) {
            if (b)
                out += '|';
            out += join_list(set_to_list(q.blocks()[b]), ',');
        }
        out += '\n';
    }
    return out;
}

} // namespace ordpat::cli
