#include "mforge/matrix.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace mforge {

LabeledMatrix::LabeledMatrix(GaloisField f, int rows, int cols)
    : field_(std::move(f)), rows_(rows), cols_(cols), entries_(rows * cols, 0), labels_(cols) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimensions");
    std::iota(labels_.begin(), labels_.end(), 1);
}

LabeledMatrix::LabeledMatrix(GaloisField f, int rows, int cols, std::vector<int> entries,
                             std::vector<int> labels)
    : field_(std::move(f)), rows_(rows), cols_(cols), entries_(std::move(entries)),
      labels_(std::move(labels)) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimensions");
    if (static_cast<int>(entries_.size()) != rows * cols)
        throw std::invalid_argument("entry count does not match dimensions");
    for (int v : entries_)
        if (!field_.is_element(v)) throw std::invalid_argument("matrix entry out of field range");
    if (labels_.empty()) {
        labels_.resize(cols);
        std::iota(labels_.begin(), labels_.end(), 1);
    }
    set_labels(labels_);
}

void LabeledMatrix::set(int i, int j, int v) {
    if (!field_.is_element(v)) throw std::invalid_argument("matrix entry out of field range");
    entries_[i * cols_ + j] = v;
}

void LabeledMatrix::set_labels(std::vector<int> l) {
    if (static_cast<int>(l.size()) != cols_)
        throw std::invalid_argument("label count does not match column count");
    std::vector<int> sorted = l;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw std::invalid_argument("column labels must be pairwise distinct");
    labels_ = std::move(l);
}

int LabeledMatrix::label_position(int label) const {
    for (int j = 0; j < cols_; ++j)
        if (labels_[j] == label) return j;
    return -1;
}

std::vector<int> LabeledMatrix::column(int j) const {
    std::vector<int> c(rows_);
    for (int i = 0; i < rows_; ++i) c[i] = at(i, j);
    return c;
}

LabeledMatrix LabeledMatrix::with_column(std::span<const int> col, int label) const {
    if (static_cast<int>(col.size()) != rows_) throw std::invalid_argument("column size mismatch");
    LabeledMatrix out(field_, rows_, cols_ + 1);
    std::vector<int> l = labels_;
    l.push_back(label);
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j) out.set(i, j, at(i, j));
        out.set(i, cols_, col[i]);
    }
    out.set_labels(std::move(l));
    return out;
}

LabeledMatrix LabeledMatrix::select_columns(std::span<const int> positions) const {
    LabeledMatrix out(field_, rows_, static_cast<int>(positions.size()));
    std::vector<int> l(positions.size());
    for (size_t j = 0; j < positions.size(); ++j) {
        int src = positions[j];
        if (src < 0 || src >= cols_) throw std::invalid_argument("column position out of range");
        l[j] = labels_[src];
        for (int i = 0; i < rows_; ++i) out.set(i, static_cast<int>(j), at(i, src));
    }
    out.set_labels(std::move(l));
    return out;
}

bool LabeledMatrix::same_entries(const LabeledMatrix& o) const {
    return field_ == o.field_ && rows_ == o.rows_ && cols_ == o.cols_ && entries_ == o.entries_;
}

bool LabeledMatrix::operator==(const LabeledMatrix& o) const {
    return same_entries(o) && labels_ == o.labels_;
}

TransformWitness TransformWitness::identity(int r, int n) {
    TransformWitness w;
    w.rowTransform = identity_grid(r);
    w.colScale.assign(n, 1);
    w.colPerm.resize(n);
    std::iota(w.colPerm.begin(), w.colPerm.end(), 0);
    return w;
}

std::pair<LabeledMatrix, int> rref(const LabeledMatrix& m) {
    const GaloisField& f = m.field();
    LabeledMatrix a = m;
    int pivotRow = 0;
    for (int col = 0; col < a.cols() && pivotRow < a.rows(); ++col) {
        int sel = -1;
        for (int i = pivotRow; i < a.rows(); ++i) {
            if (a.at(i, col) != 0) {
                sel = i;
                break;
            }
        }
        if (sel < 0) continue;
        if (sel != pivotRow) {
            for (int j = 0; j < a.cols(); ++j) {
                int tmp = a.at(sel, j);
                a.set(sel, j, a.at(pivotRow, j));
                a.set(pivotRow, j, tmp);
            }
        }
        int scale = f.inv(a.at(pivotRow, col));
        if (scale != 1)
            for (int j = 0; j < a.cols(); ++j) a.set(pivotRow, j, f.mul(scale, a.at(pivotRow, j)));
        for (int i = 0; i < a.rows(); ++i) {
            if (i == pivotRow) continue;
            int factor = a.at(i, col);
            if (factor == 0) continue;
            for (int j = 0; j < a.cols(); ++j)
                a.set(i, j, f.sub(a.at(i, j), f.mul(factor, a.at(pivotRow, j))));
        }
        ++pivotRow;
    }
    return {a, pivotRow};
}

int matrix_rank(const LabeledMatrix& m) { return rref(m).second; }

StandardForm to_standard_form(const LabeledMatrix& m, std::span<const int> basisLabels) {
    if (static_cast<int>(basisLabels.size()) != m.rows())
        throw std::invalid_argument("basis must name exactly r columns");
    std::vector<int> order;
    order.reserve(m.cols());
    for (int label : basisLabels) {
        int pos = m.label_position(label);
        if (pos < 0) throw std::invalid_argument("basis label not present in matrix");
        order.push_back(pos);
    }
    for (int j = 0; j < m.cols(); ++j)
        if (std::find(order.begin(), order.end(), j) == order.end()) order.push_back(j);
    LabeledMatrix permuted = m.select_columns(order);
    auto [red, rank] = rref(permuted);
    // basis columns independent <=> reduction puts I_r exactly in front
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.rows(); ++j)
            if (red.at(i, j) != (i == j ? 1 : 0))
                throw std::invalid_argument("dependent basis columns");
    return StandardForm{red, std::vector<int>(basisLabels.begin(), basisLabels.end())};
}

StandardForm as_standard_form(const LabeledMatrix& m) {
    if (m.cols() < m.rows()) throw std::invalid_argument("matrix has fewer columns than rows");
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.rows(); ++j)
            if (m.at(i, j) != (i == j ? 1 : 0))
                throw std::invalid_argument("matrix is not in standard form");
    std::vector<int> basis(m.labels().begin(), m.labels().begin() + m.rows());
    return StandardForm{m, basis};
}

LabeledMatrix normalize_columns(const LabeledMatrix& m) {
    const GaloisField& f = m.field();
    LabeledMatrix out = m;
    for (int j = 0; j < m.cols(); ++j) {
        int lead = 0;
        for (int i = 0; i < m.rows(); ++i) {
            if (m.at(i, j) != 0) {
                lead = m.at(i, j);
                break;
            }
        }
        if (lead == 0) throw std::invalid_argument("zero column cannot be normalized");
        if (lead == 1) continue;
        int s = f.inv(lead);
        for (int i = 0; i < m.rows(); ++i) out.set(i, j, f.mul(s, m.at(i, j)));
    }
    return out;
}

StandardForm dual_matrix(const StandardForm& s) {
    const LabeledMatrix& a = s.base;
    const GaloisField& f = a.field();
    int r = s.r(), n = s.n(), d = n - r;
    LabeledMatrix out(f, d, n);
    std::vector<int> labels(n);
    for (int j = 0; j < d; ++j) labels[j] = a.labels()[r + j];
    for (int j = 0; j < r; ++j) labels[d + j] = a.labels()[j];
    for (int i = 0; i < d; ++i) {
        out.set(i, i, 1);
        for (int j = 0; j < r; ++j) out.set(i, d + j, f.neg(a.at(j, r + i)));
    }
    out.set_labels(labels);
    std::vector<int> basis(labels.begin(), labels.begin() + d);
    return StandardForm{out, basis};
}

LabeledMatrix apply_witness(const LabeledMatrix& m, const TransformWitness& w) {
    const GaloisField& f = m.field();
    int r = m.rows(), n = m.cols();
    TransformWitness v = w;
    if (v.rowTransform.empty()) v.rowTransform = identity_grid(r);
    if (v.colScale.empty()) v.colScale.assign(n, 1);
    if (v.colPerm.empty()) {
        v.colPerm.resize(n);
        std::iota(v.colPerm.begin(), v.colPerm.end(), 0);
    }
    if (static_cast<int>(v.rowTransform.size()) != r * r)
        throw std::invalid_argument("row transform dimension mismatch");
    if (static_cast<int>(v.colScale.size()) != n || static_cast<int>(v.colPerm.size()) != n)
        throw std::invalid_argument("column data dimension mismatch");
    if (!grid_inverse(f, v.rowTransform, r)) throw std::invalid_argument("singular row transform");
    std::vector<char> seen(n, 0);
    for (int img : v.colPerm) {
        if (img < 0 || img >= n || seen[img]) throw std::invalid_argument("column permutation is not a bijection");
        seen[img] = 1;
    }
    for (int s : v.colScale)
        if (s == 0 || !f.is_element(s)) throw std::invalid_argument("column scale must be a nonzero field element");

    LabeledMatrix work = m;
    if (v.frobPower != 0)
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < n; ++j) work.set(i, j, f.frobenius(m.at(i, j), v.frobPower));

    std::vector<int> prod = grid_mul(f, v.rowTransform, r, r, work.entries(), r, n);
    LabeledMatrix out(f, r, n);
    std::vector<int> labels(n);
    for (int j = 0; j < n; ++j) {
        int dst = v.colPerm[j];
        labels[dst] = m.labels()[j];
        for (int i = 0; i < r; ++i) out.set(i, dst, f.mul(v.colScale[j], prod[i * n + j]));
    }
    out.set_labels(labels);
    return out;
}

LabeledMatrix apply_ops(const LabeledMatrix& m, std::span<const ElementaryOp> ops) {
    const GaloisField& f = m.field();
    LabeledMatrix a = m;
    for (const ElementaryOp& op : ops) {
        switch (op.kind) {
            case ElementaryOp::RowSwap: {
                int i = op.i - 1, j = op.j - 1;
                for (int c = 0; c < a.cols(); ++c) {
                    int tmp = a.at(i, c);
                    a.set(i, c, a.at(j, c));
                    a.set(j, c, tmp);
                }
                break;
            }
            case ElementaryOp::RowScale: {
                int i = op.i - 1;
                if (op.c == 0) throw std::invalid_argument("row scale by zero");
                for (int c = 0; c < a.cols(); ++c) a.set(i, c, f.mul(op.c, a.at(i, c)));
                break;
            }
            case ElementaryOp::RowAddMul: {
                int i = op.i - 1, j = op.j - 1;
                for (int c = 0; c < a.cols(); ++c)
                    a.set(i, c, f.add(a.at(i, c), f.mul(op.c, a.at(j, c))));
                break;
            }
            case ElementaryOp::ColSwap: {
                int i = op.i - 1, j = op.j - 1;
                for (int rr = 0; rr < a.rows(); ++rr) {
                    int tmp = a.at(rr, i);
                    a.set(rr, i, a.at(rr, j));
                    a.set(rr, j, tmp);
                }
                std::vector<int> l = a.labels();
                std::swap(l[i], l[j]);
                a.set_labels(std::move(l));
                break;
            }
            case ElementaryOp::ColScale: {
                int i = op.i - 1;
                if (op.c == 0) throw std::invalid_argument("column scale by zero");
                for (int rr = 0; rr < a.rows(); ++rr) a.set(rr, i, f.mul(op.c, a.at(rr, i)));
                break;
            }
        }
    }
    return a;
}

std::vector<int> grid_mul(const GaloisField& f, const std::vector<int>& a, int ar, int ac,
                          const std::vector<int>& b, int br, int bc) {
    if (ac != br) throw std::invalid_argument("grid multiplication dimension mismatch");
    std::vector<int> out(ar * bc, 0);
    for (int i = 0; i < ar; ++i)
        for (int k = 0; k < ac; ++k) {
            int v = a[i * ac + k];
            if (v == 0) continue;
            for (int j = 0; j < bc; ++j)
                out[i * bc + j] = f.add(out[i * bc + j], f.mul(v, b[k * bc + j]));
        }
    return out;
}

std::vector<int> grid_vec(const GaloisField& f, const std::vector<int>& a, int r, int c,
                          std::span<const int> v) {
    if (static_cast<int>(v.size()) != c) throw std::invalid_argument("vector size mismatch");
    std::vector<int> out(r, 0);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) out[i] = f.add(out[i], f.mul(a[i * c + j], v[j]));
    return out;
}

std::optional<std::vector<int>> grid_inverse(const GaloisField& f, const std::vector<int>& a, int r) {
    // gaussian elimination on [a | I]
    std::vector<int> m(a);
    std::vector<int> inv = identity_grid(r);
    for (int col = 0; col < r; ++col) {
        int sel = -1;
        for (int i = col; i < r; ++i)
            if (m[i * r + col] != 0) {
                sel = i;
                break;
            }
        if (sel < 0) return std::nullopt;
        if (sel != col)
            for (int j = 0; j < r; ++j) {
                std::swap(m[sel * r + j], m[col * r + j]);
                std::swap(inv[sel * r + j], inv[col * r + j]);
            }
        int s = f.inv(m[col * r + col]);
        if (s != 1)
            for (int j = 0; j < r; ++j) {
                m[col * r + j] = f.mul(s, m[col * r + j]);
                inv[col * r + j] = f.mul(s, inv[col * r + j]);
            }
        for (int i = 0; i < r; ++i) {
            if (i == col) continue;
            int factor = m[i * r + col];
            if (factor == 0) continue;
            for (int j = 0; j < r; ++j) {
                m[i * r + j] = f.sub(m[i * r + j], f.mul(factor, m[col * r + j]));
                inv[i * r + j] = f.sub(inv[i * r + j], f.mul(factor, inv[col * r + j]));
            }
        }
    }
    return inv;
}

std::vector<int> identity_grid(int r) {
    std::vector<int> g(r * r, 0);
    for (int i = 0; i < r; ++i) g[i * r + i] = 1;
    return g;
}

}  // namespace mforge
