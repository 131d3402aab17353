#include <ordpat/errors.hpp>
#include <ordpat/permutation.hpp>

#include <algorithm>
#include <numeric>

namespace ordpat {

Permutation::Permutation(std::vector<int> values) :
    _values(std::move(values))
{
    const int k = size();
    std::vector<bool> seen(k + 1, false);
    for (int v : _values) {
        if (v < 1 || v > k || seen[v])
            throw InvariantError("not a permutation of [" + std::to_string(k) + "]: " + to_string());
        seen[v] = true;
    }
}

Permutation Permutation::identity(int k)
{
    std::vector<int> v(k);
    std::iota(v.begin(), v.end(), 1);
    return Permutation(std::move(v));
}

std::vector<Permutation> Permutation::all(int k)
{
    std::vector<int> v(k);
    std::iota(v.begin(), v.end(), 1);
    std::vector<Permutation> out;
    do {
        out.emplace_back(v);
    } while (std::next_permutation(v.begin(), v.end()));
    return out;
}

Permutation Permutation::inverse() const
{
    std::vector<int> inv(_values.size());
    for (int i = 0; i < size(); ++i)
        inv[_values[i] - 1] = i + 1;
    return Permutation(std::move(inv));
}

std::string Permutation::to_string() const
{
    std::string s;
    for (std::size_t i = 0; i < _values.size(); ++i) {
        if (i)
            s += ' ';
        s += std::to_string(_values[i]);
    }
    return s;
}

Permutation standardize(std::span<const int> values)
{
    std::vector<int> order(values.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return values[a] < values[b]; });
    std::vector<int> out(values.size());
    for (std::size_t r = 0; r < order.size(); ++r) {
        if (r > 0 && values[order[r]] == values[order[r - 1]])
            throw InvariantError("standardize: repeated value");
        out[order[r]] = static_cast<int>(r) + 1;
    }
    return Permutation(std::move(out));
}

} // namespace ordpat
