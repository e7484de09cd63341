#pragma once

#include "mforge/gf.hpp"

#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace mforge {

/// r x n matrix over GF(q) with per-column ground-set labels.
///
/// Matrices are plain values; every operation below returns a new matrix.
class LabeledMatrix {
public:
    /// Zero-filled, labels defaulting to 1..n.
    LabeledMatrix(GaloisField f, int rows, int cols);
    LabeledMatrix(GaloisField f, int rows, int cols, std::vector<int> entries,
                  std::vector<int> labels = {});

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const GaloisField& field() const { return field_; }

    int at(int i, int j) const { return entries_[i * cols_ + j]; }
    void set(int i, int j, int v);

    const std::vector<int>& labels() const { return labels_; }
    void set_labels(std::vector<int> l);
    /// Column position of a label, or -1.
    int label_position(int label) const;

    std::vector<int> column(int j) const;
    const std::vector<int>& entries() const { return entries_; }

    /// Appends one column on the right with the given label.
    LabeledMatrix with_column(std::span<const int> col, int label) const;
    /// Columns picked by position, in the given order (labels follow).
    LabeledMatrix select_columns(std::span<const int> positions) const;

    /// Same field, dimensions and grid (labels ignored).
    bool same_entries(const LabeledMatrix& o) const;
    /// same_entries plus identical label sequences.
    bool operator==(const LabeledMatrix& o) const;
    bool operator!=(const LabeledMatrix& o) const { return !(*this == o); }

private:
    GaloisField field_;
    int rows_, cols_;
    std::vector<int> entries_;  // row-major
    std::vector<int> labels_;
};

/// Representation in standard form: the first r columns of base are I_r.
struct StandardForm {
    LabeledMatrix base;
    std::vector<int> basisLabels;  // labels of the identity columns, in order

    int r() const { return base.rows(); }
    int n() const { return base.cols(); }
    /// Entry of the D part (column j counts from the first non-basis column).
    int d_at(int i, int j) const { return base.at(i, r() + j); }
};

/// Row transformation + column scalings + column permutation
/// (+ Frobenius power), certifying an equivalence of representations.
///
/// apply_witness composes them in this fixed order: the automorphism is
/// applied entrywise, then the row transform on the left, then each column i
/// is scaled by colScale[i], then column i is moved to position colPerm[i]
/// (labels travel with their columns).
struct TransformWitness {
    int frobPower = 0;
    std::vector<int> rowTransform;  // r*r row-major; empty = identity
    std::vector<int> colScale;      // n values; empty = all ones
    std::vector<int> colPerm;       // image list, 0-based; empty = identity

    static TransformWitness identity(int r, int n);
};

/// Reduced row-echelon form with deterministic pivoting (leftmost column,
/// topmost nonzero row). Returns the reduced matrix and the rank.
std::pair<LabeledMatrix, int> rref(const LabeledMatrix& m);
int matrix_rank(const LabeledMatrix& m);

/// Reorders the basis columns first (in the given order) and row-reduces so
/// they become I_r. Throws if the named columns are dependent.
StandardForm to_standard_form(const LabeledMatrix& m, std::span<const int> basisLabels);

/// Wraps a matrix that is already in standard form (first r columns = I_r).
StandardForm as_standard_form(const LabeledMatrix& m);

/// Scales every column so its first nonzero entry is 1. Rejects zero columns.
LabeledMatrix normalize_columns(const LabeledMatrix& m);

/// Dual representation: [I_r | D] with labels (b_1..b_r, e_1..e_{n-r}) maps
/// to [I_{n-r} | -D^T] with labels (e_1..e_{n-r}, b_1..b_r). Involutive at
/// the level of the represented labeled matroid.
StandardForm dual_matrix(const StandardForm& s);

LabeledMatrix apply_witness(const LabeledMatrix& m, const TransformWitness& w);

/// One elementary operation, for replaying recorded transformation scripts.
/// Indices are 1-based to match the usual written form.
struct ElementaryOp {
    enum Kind { RowSwap, RowScale, RowAddMul, ColSwap, ColScale } kind;
    int i = 0, j = 0;  // rows or columns involved
    int c = 1;         // scale factor / multiple

    static ElementaryOp row_swap(int i, int j) { return {RowSwap, i, j, 1}; }
    static ElementaryOp row_scale(int i, int c) { return {RowScale, i, 0, c}; }
    /// row_i += c * row_j
    static ElementaryOp row_addmul(int i, int j, int c) { return {RowAddMul, i, j, c}; }
    static ElementaryOp col_swap(int i, int j) { return {ColSwap, i, j, 1}; }
    static ElementaryOp col_scale(int i, int c) { return {ColScale, i, 0, c}; }
};

LabeledMatrix apply_ops(const LabeledMatrix& m, std::span<const ElementaryOp> ops);

// Small exact linear-algebra helpers on raw row-major grids.
std::vector<int> grid_mul(const GaloisField& f, const std::vector<int>& a, int ar, int ac,
                          const std::vector<int>& b, int br, int bc);
std::vector<int> grid_vec(const GaloisField& f, const std::vector<int>& a, int r, int c,
                          std::span<const int> v);
/// Inverse of an r x r grid, or nullopt if singular.
std::optional<std::vector<int>> grid_inverse(const GaloisField& f, const std::vector<int>& a, int r);
std::vector<int> identity_grid(int r);

}  // namespace mforge
