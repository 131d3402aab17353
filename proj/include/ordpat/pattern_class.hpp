#pragma once

#include <ordpat/matrix.hpp>
#include <ordpat/permutation.hpp>

#include <compare>

namespace ordpat {

/// An equivalence class of k x 2k matrices (K, L), K and L permutation matrices, under row
/// permutation. Represented by its canonical member (I, M) where M has its row-i 1 in
/// column m_perm(i).
class PatternClass {
public:
    PatternClass() = default;
    explicit PatternClass(Permutation m_perm) : _m_perm(std::move(m_perm)) {}

    int k() const { return _m_perm.size(); }
    const Permutation & m_perm() const { return _m_perm; }

    /// The canonical k x 2k matrix (I, M).
    BinaryMatrix canonical_matrix() const;

    /// The k x k permutation matrix M.
    BinaryMatrix permutation_matrix() const;

    auto operator<=>(const PatternClass &) const = default;
    bool operator==(const PatternClass &) const = default;

private:
    Permutation _m_perm;
};

} // namespace ordpat
