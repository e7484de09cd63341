#pragma once

#include "mforge/matrix.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace mforge {

/// A matroid stored extensionally: ground-set labels plus the full set of
/// bases as bitmasks over column positions. Ground sets are capped at 31
/// elements, far beyond the desk scale this library targets.
class Matroid {
public:
    /// Builds a matroid from its bases. Basic shape checks always run;
    /// the basis-exchange axiom is checked when validate is set.
    static Matroid from_bases(std::vector<int> labels, int rank, std::vector<uint32_t> bases,
                              bool validate = false);

    int size() const { return n_; }
    int rank() const { return r_; }
    const std::vector<int>& labels() const { return labels_; }
    const std::vector<uint32_t>& bases() const { return bases_; }

    int label_at(int pos) const { return labels_[pos]; }
    /// Position of a label, or -1.
    int position(int label) const;
    uint32_t mask_of_labels(std::span<const int> ls) const;
    std::vector<int> labels_of_mask(uint32_t mask) const;

    bool is_basis(uint32_t mask) const;
    bool independent(uint32_t mask) const;
    /// rank(S) = max over bases B of |S & B|.
    int rank_of(uint32_t mask) const;
    uint32_t closure(uint32_t mask) const;

    /// All circuits (minimal dependent sets), sorted ascending as masks.
    std::vector<uint32_t> circuits() const;
    /// The unique circuit inside B + k containing k; requires k outside the
    /// basis B. Returned as a mask.
    uint32_t fundamental_circuit(int elementLabel, uint32_t basisMask) const;

    /// No circuit of size <= 2.
    bool simple() const;
    /// Every pair of elements lies on a common circuit (single elements and
    /// the empty matroid count as connected).
    bool connected() const;

    /// Number of rank-2 flats with exactly three elements.
    int three_point_lines() const;
    /// All rank-2 flats with at least two elements.
    std::vector<uint32_t> rank2_flats() const;

    /// Exhaustive basis-exchange check; O(#bases^2 * r^2).
    bool basis_exchange_ok() const;

    /// Lexicographically least basis as sorted labels.
    std::vector<int> least_basis_labels() const;

private:
    int n_ = 0, r_ = 0;
    std::vector<int> labels_;
    std::vector<uint32_t> bases_;  // sorted
};

/// Column matroid: bases are the independent r-subsets of columns, where r
/// is the rank of the matrix. Labels carry over.
Matroid matroid_of_matrix(const LabeledMatrix& m);

/// True iff both matroids have the same ground labels and identical basis
/// sets (as sets of label subsets). Throws when the ground sets differ.
bool equal_labeled(const Matroid& a, const Matroid& b);

/// Label bijection mapping bases onto bases, or nullopt. The result maps
/// a.labels()[i] to out[i]. Backtracking with basis-degree and pairwise
/// co-occurrence pruning; deterministic search order.
std::optional<std::vector<int>> find_isomorphism(const Matroid& a, const Matroid& b);

/// Dual matroid: bases are the complements of bases.
Matroid dual_matroid(const Matroid& m);

}  // namespace mforge
