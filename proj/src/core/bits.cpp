#include <ordpat/bits.hpp>

namespace ordpat {

std::vector<int> set_to_list(VertexSet s)
{
    std::vector<int> out;
    out.reserve(set_size(s));
    while (s) {
        out.push_back(min_vertex(s));
        s &= s - 1;
    }
    return out;
}

VertexSet list_to_set(const std::vector<int> & vertices)
{
    VertexSet s = 0;
    for (int v : vertices)
        s |= vertex_bit(v);
    return s;
}

bool lex_less(VertexSet a, VertexSet b)
{
    while (a && b) {
        int x = min_vertex(a), y = min_vertex(b);
        if (x != y)
            return x < y;
        a &= a - 1;
        b &= b - 1;
    }
    return ! a && b;
}

VertexSet relabel_onto(VertexSet s, VertexSet u)
{
    VertexSet out = 0;
    int label = 0;
    while (u) {
        VertexSet low = u & -u;
        if (s & low)
            out |= VertexSet{1} << label;
        ++label;
        u &= u - 1;
    }
    return out;
}

VertexSet expand_from(VertexSet s, VertexSet u)
{
    VertexSet out = 0;
    int label = 0;
    while (u) {
        VertexSet low = u & -u;
        if ((s >> label) & 1U)
            out |= low;
        ++label;
        u &= u - 1;
    }
    return out;
}

} // namespace ordpat
