#include <ordpat/transform.hpp>

#include <numeric>

namespace ordpat {

BracketSeq::BracketSeq(std::vector<Bracket> symbols) :
    _symbols(std::move(symbols))
{
    int depth = 0;
    for (Bracket b : _symbols) {
        depth += b == Bracket::left ? 1 : -1;
        if (depth < 0)
            throw InvariantError("bracket sequence has a prefix with more right than left brackets");
    }
    if (depth != 0)
        throw InvariantError("bracket sequence is unbalanced");
}

BracketSeq BracketSeq::parse(const std::string & word)
{
    std::vector<Bracket> out;
    for (char c : word) {
        if (c == 'L' || c == '(')
            out.push_back(Bracket::left);
        else if (c == 'R' || c == ')')
            out.push_back(Bracket::right);
        else if (c != ' ')
            throw InvariantError(std::string("unexpected bracket symbol '") + c + "'");
    }
    return BracketSeq(std::move(out));
}

std::string BracketSeq::to_string() const
{
    std::string s;
    for (Bracket b : _symbols)
        s += static_cast<char>(b);
    return s;
}

DegreeSequence::DegreeSequence(std::vector<int> entries) :
    _entries(std::move(entries))
{
    for (int a : _entries)
        if (a < 0)
            throw InvariantError("degree sequence entries must be non-negative");
}

int DegreeSequence::total() const
{
    return std::accumulate(_entries.begin(), _entries.end(), 0);
}

} // namespace ordpat
