#pragma once

#include "mforge/equivalence.hpp"
#include "mforge/matroid.hpp"
#include "mforge/named.hpp"

#include <initializer_list>
#include <random>
#include <vector>

namespace testutil {

using namespace mforge;

inline LabeledMatrix make_matrix(const GaloisField& f, int rows, int cols,
                                 std::initializer_list<int> entries,
                                 std::vector<int> labels = {}) {
    return LabeledMatrix(f, rows, cols, std::vector<int>(entries), std::move(labels));
}

// ---- independent oracles; these stay oblivious of the library internals ----

// Laplace-expansion determinant.
inline int det_oracle(const GaloisField& f, const std::vector<int>& grid, int n) {
    if (n == 1) return grid[0];
    int det = 0;
    for (int c = 0; c < n; ++c) {
        if (grid[c] == 0) continue;
        std::vector<int> minor;
        minor.reserve((n - 1) * (n - 1));
        for (int i = 1; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (j != c) minor.push_back(grid[i * n + j]);
        int term = f.mul(grid[c], det_oracle(f, minor, n - 1));
        det = (c % 2 == 0) ? f.add(det, term) : f.sub(det, term);
    }
    return det;
}

// Square-free Gauss-Jordan on a copy; returns the echelon grid. Written
// separately from the library so the two can check each other.
inline std::vector<int> gauss_oracle(const GaloisField& f, std::vector<int> g, int rows, int cols,
                                     int* rankOut = nullptr) {
    int pivotRow = 0;
    for (int col = 0; col < cols && pivotRow < rows; ++col) {
        int sel = -1;
        for (int i = pivotRow; i < rows; ++i)
            if (g[i * cols + col] != 0) {
                sel = i;
                break;
            }
        if (sel < 0) continue;
        for (int j = 0; j < cols; ++j) std::swap(g[sel * cols + j], g[pivotRow * cols + j]);
        int s = f.inv(g[pivotRow * cols + col]);
        for (int j = 0; j < cols; ++j) g[pivotRow * cols + j] = f.mul(s, g[pivotRow * cols + j]);
        for (int i = 0; i < rows; ++i) {
            if (i == pivotRow) continue;
            int factor = g[i * cols + col];
            if (factor == 0) continue;
            for (int j = 0; j < cols; ++j)
                g[i * cols + j] = f.sub(g[i * cols + j], f.mul(factor, g[pivotRow * cols + j]));
        }
        ++pivotRow;
    }
    if (rankOut) *rankOut = pivotRow;
    return g;
}

// Column matroid built purely from determinants of r x r minors (requires a
// full-row-rank matrix). Cross-checks matroid_of_matrix.
inline Matroid matroid_by_determinants(const LabeledMatrix& m) {
    int r = m.rows(), n = m.cols();
    std::vector<uint32_t> bases;
    std::vector<int> pick(r);
    auto rec = [&](auto&& self, int start, int depth) -> void {
        if (depth == r) {
            std::vector<int> grid(r * r);
            for (int c = 0; c < r; ++c)
                for (int i = 0; i < r; ++i) grid[i * r + c] = m.at(i, pick[c]);
            if (det_oracle(m.field(), grid, r) != 0) {
                uint32_t mask = 0;
                for (int c : pick) mask |= 1u << c;
                bases.push_back(mask);
            }
            return;
        }
        for (int c = start; c < n; ++c) {
            pick[depth] = c;
            self(self, c + 1, depth + 1);
        }
    };
    rec(rec, 0, 0);
    return Matroid::from_bases(m.labels(), r, std::move(bases));
}

// Exhaustive PGL(2,q) search: tries every invertible 2x2 transform and asks
// whether one maps the normalized column multiset of a onto that of b.
inline bool pgl2_equivalent_bruteforce(const LabeledMatrix& a, const LabeledMatrix& b) {
    const GaloisField& f = a.field();
    if (a.rows() != 2 || b.rows() != 2 || a.cols() != b.cols()) return false;
    auto norm = [&](std::vector<int> v) {
        int lead = v[0] != 0 ? v[0] : v[1];
        int s = f.inv(lead);
        return std::vector<int>{f.mul(s, v[0]), f.mul(s, v[1])};
    };
    auto pointset = [&](const LabeledMatrix& m, const std::vector<int>& t) {
        std::vector<std::pair<int, int>> pts;
        for (int j = 0; j < m.cols(); ++j) {
            std::vector<int> v = {f.add(f.mul(t[0], m.at(0, j)), f.mul(t[1], m.at(1, j))),
                                  f.add(f.mul(t[2], m.at(0, j)), f.mul(t[3], m.at(1, j)))};
            auto nv = norm(v);
            pts.emplace_back(nv[0], nv[1]);
        }
        std::sort(pts.begin(), pts.end());
        return pts;
    };
    std::vector<int> id = {1, 0, 0, 1};
    auto target = pointset(b, id);
    for (int t00 = 0; t00 < f.q(); ++t00)
        for (int t01 = 0; t01 < f.q(); ++t01)
            for (int t10 = 0; t10 < f.q(); ++t10)
                for (int t11 = 0; t11 < f.q(); ++t11) {
                    int det = f.sub(f.mul(t00, t11), f.mul(t01, t10));
                    if (det == 0) continue;
                    if (pointset(a, {t00, t01, t10, t11}) == target) return true;
                }
    return false;
}

// ---- random instance generation (deterministic; seeds fixed per suite) ----

// Random full-row-rank matrix with nonzero columns.
inline LabeledMatrix random_matrix(std::mt19937& rng, const GaloisField& f, int r, int n) {
    for (;;) {
        std::vector<int> entries(r * n);
        std::uniform_int_distribution<int> dist(0, f.q() - 1);
        for (int& e : entries) e = dist(rng);
        LabeledMatrix m(f, r, n, entries);
        bool zeroCol = false;
        for (int j = 0; j < n && !zeroCol; ++j) {
            bool all = true;
            for (int i = 0; i < r; ++i)
                if (m.at(i, j) != 0) all = false;
            zeroCol = all;
        }
        if (zeroCol) continue;
        if (matrix_rank(m) != r) continue;
        return m;
    }
}

// Random matrix whose columns are distinct projective points, so the column
// matroid is simple. Retries until it is also connected.
inline LabeledMatrix random_simple_connected_matrix(std::mt19937& rng, const GaloisField& f,
                                                    int r, int n) {
    // all normalized points of PG(r-1, q)
    std::vector<std::vector<int>> points;
    std::vector<int> v(r, 0);
    long long total = 1;
    for (int i = 0; i < r; ++i) total *= f.q();
    for (long long val = 0; val < total; ++val) {
        long long x = val;
        for (int i = r - 1; i >= 0; --i) {
            v[i] = static_cast<int>(x % f.q());
            x /= f.q();
        }
        int lead = 0;
        for (int e : v)
            if (e != 0) {
                lead = e;
                break;
            }
        if (lead == 1) points.push_back(v);
    }
    for (int attempt = 0; attempt < 200; ++attempt) {
        std::vector<std::vector<int>> pick = points;
        std::shuffle(pick.begin(), pick.end(), rng);
        if (static_cast<int>(pick.size()) < n) break;
        std::vector<int> entries(r * n);
        for (int j = 0; j < n; ++j)
            for (int i = 0; i < r; ++i) entries[i * n + j] = pick[j][i];
        LabeledMatrix m(f, r, n, entries);
        if (matrix_rank(m) != r) continue;
        Matroid matroid = matroid_of_matrix(m);
        if (matroid.connected()) return m;
    }
    return random_matrix(rng, f, r, n);  // dense fields; caller re-checks flags
}

// Random valid witness for shape (r, n); frobenius power drawn when the
// field has automorphisms and allowFrob is set.
inline TransformWitness random_witness(std::mt19937& rng, const GaloisField& f, int r, int n,
                                       bool allowFrob = false, bool allowPerm = true) {
    TransformWitness w;
    std::uniform_int_distribution<int> elem(0, f.q() - 1);
    std::uniform_int_distribution<int> unit(1, f.q() - 1);
    for (;;) {
        std::vector<int> t(r * r);
        for (int& e : t) e = elem(rng);
        if (grid_inverse(f, t, r)) {
            w.rowTransform = std::move(t);
            break;
        }
    }
    w.colScale.resize(n);
    for (int& s : w.colScale) s = unit(rng);
    w.colPerm.resize(n);
    for (int i = 0; i < n; ++i) w.colPerm[i] = i;
    if (allowPerm) std::shuffle(w.colPerm.begin(), w.colPerm.end(), rng);
    if (allowFrob && f.k() > 1) w.frobPower = std::uniform_int_distribution<int>(0, f.k() - 1)(rng);
    return w;
}

}  // namespace testutil
