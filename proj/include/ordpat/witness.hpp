#pragma once

#include <vector>

namespace ordpat {

/// Index certificate for a containment claim. All indices are 1-based.
///
/// For permutations `cols` holds the chosen positions. For matrices `rows` and `cols` are the
/// selected host rows and columns. For hypergraphs `cols` is the chosen vertex list and `rows`
/// the host edge indices used. When the pattern rows (or pattern edges) are matched to host
/// rows out of order, row_assignment[j] names the pattern row carried by host row rows[j].
struct Witness {
    std::vector<int> rows;
    std::vector<int> cols;
    std::vector<int> row_assignment;

    bool operator==(const Witness &) const = default;
};

} // namespace ordpat
