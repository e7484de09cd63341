#include "mforge/equivalence.hpp"

#include "mforge/bipartite.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace mforge {

const char* relation_name(Relation r) {
    switch (r) {
        case Relation::Projective: return "projective";
        case Relation::Algebraic: return "algebraic";
        case Relation::Geometric: return "geometric";
    }
    return "?";
}

std::optional<Relation> relation_from_name(const std::string& s) {
    if (s == "projective") return Relation::Projective;
    if (s == "algebraic") return Relation::Algebraic;
    if (s == "geometric") return Relation::Geometric;
    return std::nullopt;
}

namespace {

void check_shapes(const LabeledMatrix& a1, const LabeledMatrix& a2) {
    if (a1.field() != a2.field()) throw std::invalid_argument("matrices live over different fields");
    if (a1.rows() != a2.rows() || a1.cols() != a2.cols())
        throw std::invalid_argument("matrices have different dimensions");
}

void check_full_row_rank(const LabeledMatrix& a) {
    if (matrix_rank(a) != a.rows())
        throw std::invalid_argument("representation must have full row rank");
}

struct ProjCanon {
    std::vector<int> transform;  // r x r: scalings folded into the reduction
    LabeledMatrix canon;
};

// Standard form on the given basis with every spanning-forest entry of the
// support bipartite graph scaled to one. Unique within a projective class.
ProjCanon projective_canonicalize(const LabeledMatrix& a, std::span<const int> basisLabels) {
    const GaloisField& f = a.field();
    int r = a.rows(), n = a.cols();
    StandardForm s = to_standard_form(a, basisLabels);

    // left transform of the standardization: inverse of the basis submatrix
    std::vector<int> positions;
    for (int label : basisLabels) positions.push_back(a.label_position(label));
    LabeledMatrix basisCols = a.select_columns(positions);
    auto t0 = grid_inverse(f, basisCols.entries(), r);
    if (!t0) throw std::logic_error("basis submatrix not invertible after standardization");

    int d = n - r;
    std::vector<std::vector<char>> support(r, std::vector<char>(d, 0));
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < d; ++j) support[i][j] = s.d_at(i, j) != 0;
    std::vector<int> colLabels(s.base.labels().begin() + r, s.base.labels().end());
    auto forest = spanning_forest_bfs(support, basisLabels, colLabels);

    // solve row/column scalings so that every forest entry becomes one;
    // BFS order makes the system triangular
    std::vector<int> rowScale(r, 0), colScale(d, 0);
    auto rowIndex = [&](int label) {
        return static_cast<int>(std::find(basisLabels.begin(), basisLabels.end(), label) -
                                basisLabels.begin());
    };
    auto colIndex = [&](int label) {
        return static_cast<int>(std::find(colLabels.begin(), colLabels.end(), label) -
                                colLabels.begin());
    };
    for (auto [rowLabel, colLabel] : forest) {
        int i = rowIndex(rowLabel), j = colIndex(colLabel);
        int entry = s.d_at(i, j);
        if (rowScale[i] != 0 && colScale[j] == 0) {
            colScale[j] = f.inv(f.mul(rowScale[i], entry));
        } else if (rowScale[i] == 0 && colScale[j] != 0) {
            rowScale[i] = f.inv(f.mul(entry, colScale[j]));
        } else if (rowScale[i] == 0 && colScale[j] == 0) {
            rowScale[i] = 1;  // component root on the row side
            colScale[j] = f.inv(entry);
        } else {
            throw std::logic_error("forest edge closed a cycle");
        }
    }
    for (int i = 0; i < r; ++i)
        if (rowScale[i] == 0) rowScale[i] = 1;
    for (int j = 0; j < d; ++j)
        if (colScale[j] == 0) colScale[j] = 1;

    LabeledMatrix canon = s.base;
    for (int i = 0; i < r; ++i) {
        for (int j = 0; j < d; ++j) canon.set(i, r + j, f.mul(rowScale[i], f.mul(s.d_at(i, j), colScale[j])));
        // identity columns are preserved by compensating column scalings
    }
    std::vector<int> transform(*t0);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) transform[i * r + j] = f.mul(rowScale[i], transform[i * r + j]);
    return {std::move(transform), std::move(canon)};
}

// Scale factors carrying T*a1 onto a2 columnwise; nullopt if some pair of
// columns is not parallel.
std::optional<std::vector<int>> column_ratios(const GaloisField& f, const std::vector<int>& T,
                                              const LabeledMatrix& a1, const LabeledMatrix& a2) {
    int r = a1.rows(), n = a1.cols();
    std::vector<int> scales(n, 1);
    for (int j = 0; j < n; ++j) {
        std::vector<int> img = grid_vec(f, T, r, r, a1.column(j));
        std::vector<int> target = a2.column(j);
        int s = 0;
        for (int i = 0; i < r; ++i) {
            if (img[i] != 0) {
                s = f.mul(target[i], f.inv(img[i]));
                break;
            }
            if (target[i] != 0) return std::nullopt;
        }
        if (s == 0) {
            // zero column maps to zero column
            bool allZero = std::all_of(target.begin(), target.end(), [](int v) { return v == 0; });
            if (!allZero) return std::nullopt;
            scales[j] = 1;
            continue;
        }
        for (int i = 0; i < r; ++i)
            if (f.mul(s, img[i]) != target[i]) return std::nullopt;
        scales[j] = s;
    }
    return scales;
}

}  // namespace

std::optional<TransformWitness> projective_equivalent(const LabeledMatrix& a1,
                                                      const LabeledMatrix& a2) {
    check_shapes(a1, a2);
    check_full_row_rank(a1);
    check_full_row_rank(a2);
    if (a1.labels() != a2.labels()) return std::nullopt;

    Matroid m1 = matroid_of_matrix(a1);
    Matroid m2 = matroid_of_matrix(a2);
    if (!equal_labeled(m1, m2)) return std::nullopt;

    std::vector<int> basis = m1.least_basis_labels();
    ProjCanon c1 = projective_canonicalize(a1, basis);
    ProjCanon c2 = projective_canonicalize(a2, basis);
    if (!c1.canon.same_entries(c2.canon)) return std::nullopt;

    const GaloisField& f = a1.field();
    auto inv2 = grid_inverse(f, c2.transform, a1.rows());
    std::vector<int> T = grid_mul(f, *inv2, a1.rows(), a1.rows(), c1.transform, a1.rows(), a1.rows());
    auto scales = column_ratios(f, T, a1, a2);
    if (!scales) throw std::logic_error("canonical forms equal but columns not parallel");
    TransformWitness w;
    w.frobPower = 0;
    w.rowTransform = std::move(T);
    w.colScale = std::move(*scales);
    w.colPerm.resize(a1.cols());
    for (int j = 0; j < a1.cols(); ++j) w.colPerm[j] = j;
    return w;
}

std::optional<TransformWitness> algebraically_equivalent(const LabeledMatrix& a1,
                                                         const LabeledMatrix& a2) {
    check_shapes(a1, a2);
    const GaloisField& f = a1.field();
    for (int j = 0; j < f.k(); ++j) {
        LabeledMatrix twisted = a1;
        if (j != 0)
            for (int i = 0; i < a1.rows(); ++i)
                for (int c = 0; c < a1.cols(); ++c) twisted.set(i, c, f.frobenius(a1.at(i, c), j));
        auto w = projective_equivalent(twisted, a2);
        if (w) {
            w->frobPower = j;
            return w;
        }
    }
    return std::nullopt;
}

namespace {

long long encode_point(const GaloisField& f, const std::vector<int>& v) {
    long long code = 0;
    for (int x : v) code = code * f.q() + x;
    return code;
}

std::vector<int> normalize_point(const GaloisField& f, std::vector<int> v) {
    int lead = 0;
    for (int x : v)
        if (x != 0) {
            lead = x;
            break;
        }
    if (lead == 0) throw std::invalid_argument("zero column is not a projective point");
    if (lead != 1) {
        int s = f.inv(lead);
        for (int& x : v) x = f.mul(s, x);
    }
    return v;
}

struct GeomSearch {
    const GaloisField* f;
    int r = 0, n = 0;
    std::vector<std::vector<int>> pts1;            // normalized columns of a1
    std::map<long long, int> counts2;              // encoded point -> multiplicity in a2
    std::map<long long, int> counts1;
    std::vector<std::vector<int>> distinct2;       // ascending by encoding
    std::vector<int> distinct2Mult;
    std::vector<int> vInv;                         // inverse of chosen a1 frame
    std::vector<int> frameMult;                    // multiplicities of the a1 frame points
    std::vector<int> chosen;                       // indices into distinct2
    std::vector<int> result;                       // transform, when found

    bool transform_matches(const std::vector<int>& T) {
        std::map<long long, int> need = counts2;
        for (const auto& p : pts1) {
            std::vector<int> img = normalize_point(*f, grid_vec(*f, T, r, r, p));
            auto it = need.find(encode_point(*f, img));
            if (it == need.end() || it->second == 0) return false;
            --it->second;
        }
        return true;
    }

    bool try_scalings(int depth, std::vector<int>& mu, std::vector<int>& w) {
        if (depth == r) {
            // W has column i = mu_i * distinct2[chosen[i]]
            std::vector<int> W(r * r);
            for (int c = 0; c < r; ++c)
                for (int i = 0; i < r; ++i)
                    W[i * r + c] = f->mul(mu[c], distinct2[chosen[c]][i]);
            std::vector<int> T = grid_mul(*f, W, r, r, vInv, r, r);
            if (transform_matches(T)) {
                result = std::move(T);
                return true;
            }
            return false;
        }
        for (int u = 1; u < f->q(); ++u) {
            mu[depth] = u;
            if (try_scalings(depth + 1, mu, w)) return true;
        }
        return false;
    }

    bool choose_images(int depth, std::vector<int>& frame) {
        if (depth == r) {
            std::vector<int> mu(r, 1);
            std::vector<int> w;
            return try_scalings(1, mu, w);  // mu[0] pinned to 1
        }
        for (int idx = 0; idx < static_cast<int>(distinct2.size()); ++idx) {
            if (std::find(chosen.begin(), chosen.begin() + depth, idx) !=
                chosen.begin() + depth)
                continue;
            if (distinct2Mult[idx] != frameMult[depth]) continue;
            // candidate must stay independent of the chosen prefix
            std::vector<int> probe;
            probe.reserve((depth + 1) * r);
            for (int d = 0; d <= depth; ++d) {
                const std::vector<int>& pt = d < depth ? distinct2[chosen[d]] : distinct2[idx];
                probe.insert(probe.end(), pt.begin(), pt.end());
            }
            LabeledMatrix probeM(*f, depth + 1, r, probe);
            if (matrix_rank(probeM) != depth + 1) continue;
            chosen[depth] = idx;
            if (choose_images(depth + 1, frame)) return true;
        }
        return false;
    }
};

}  // namespace

std::optional<TransformWitness> geometrically_equivalent(const LabeledMatrix& a1,
                                                         const LabeledMatrix& a2) {
    check_shapes(a1, a2);
    check_full_row_rank(a1);
    check_full_row_rank(a2);
    const GaloisField& f = a1.field();
    int r = a1.rows(), n = a1.cols();

    LabeledMatrix n1 = normalize_columns(a1);
    LabeledMatrix n2 = normalize_columns(a2);

    GeomSearch search;
    search.f = &f;
    search.r = r;
    search.n = n;
    for (int j = 0; j < n; ++j) {
        search.pts1.push_back(n1.column(j));
        ++search.counts1[encode_point(f, search.pts1.back())];
        std::vector<int> p2 = n2.column(j);
        ++search.counts2[encode_point(f, p2)];
    }
    {
        // multiplicity profiles must agree
        std::vector<int> m1, m2;
        for (auto& [_, c] : search.counts1) m1.push_back(c);
        for (auto& [_, c] : search.counts2) m2.push_back(c);
        std::sort(m1.begin(), m1.end());
        std::sort(m2.begin(), m2.end());
        if (m1 != m2) return std::nullopt;
    }
    for (auto& [enc, mult] : search.counts2) {
        std::vector<int> pt(r);
        long long v = enc;
        for (int i = r - 1; i >= 0; --i) {
            pt[i] = static_cast<int>(v % f.q());
            v /= f.q();
        }
        search.distinct2.push_back(std::move(pt));
        search.distinct2Mult.push_back(mult);
    }

    // greedy frame: first r independent columns of a1
    std::vector<int> framePositions;
    std::vector<int> frameFlat;
    for (int j = 0; j < n && static_cast<int>(framePositions.size()) < r; ++j) {
        std::vector<int> trial = frameFlat;
        std::vector<int> col = n1.column(j);
        trial.insert(trial.end(), col.begin(), col.end());
        LabeledMatrix probe(f, static_cast<int>(framePositions.size()) + 1, r, trial);
        if (matrix_rank(probe) == static_cast<int>(framePositions.size()) + 1) {
            framePositions.push_back(j);
            frameFlat = std::move(trial);
        }
    }
    // full row rank was checked, so the frame is complete
    std::vector<int> V(r * r);
    for (int c = 0; c < r; ++c)
        for (int i = 0; i < r; ++i) V[i * r + c] = n1.at(i, framePositions[c]);
    search.vInv = *grid_inverse(f, V, r);
    for (int c = 0; c < r; ++c)
        search.frameMult.push_back(search.counts1[encode_point(f, n1.column(framePositions[c]))]);
    search.chosen.assign(r, -1);

    std::vector<int> frame;
    if (!search.choose_images(0, frame)) return std::nullopt;

    // recover the explicit permutation and scalings for the found transform
    const std::vector<int>& T = search.result;
    std::map<long long, std::vector<int>> slots;  // encoded a2 point -> column positions, ascending
    for (int j = 0; j < n; ++j) slots[encode_point(f, n2.column(j))].push_back(j);
    TransformWitness w;
    w.frobPower = 0;
    w.rowTransform = T;
    w.colScale.assign(n, 1);
    w.colPerm.assign(n, -1);
    for (int j = 0; j < n; ++j) {
        std::vector<int> img = grid_vec(f, T, r, r, a1.column(j));
        std::vector<int> normImg = normalize_point(f, img);
        auto& positions = slots[encode_point(f, normImg)];
        if (positions.empty()) throw std::logic_error("geometric match lost a column slot");
        int target = positions.front();
        positions.erase(positions.begin());
        w.colPerm[j] = target;
        int lead = -1;
        for (int i = 0; i < r; ++i)
            if (img[i] != 0) {
                lead = i;
                break;
            }
        w.colScale[j] = f.mul(a2.at(lead, target), f.inv(img[lead]));
    }
    if (!apply_witness(a1, w).same_entries(a2))
        throw std::logic_error("geometric witness failed soundness replay");
    return w;
}

std::optional<TransformWitness> equivalent(const LabeledMatrix& a1, const LabeledMatrix& a2,
                                           Relation rel) {
    switch (rel) {
        case Relation::Projective: return projective_equivalent(a1, a2);
        case Relation::Algebraic: return algebraically_equivalent(a1, a2);
        case Relation::Geometric: return geometrically_equivalent(a1, a2);
    }
    return std::nullopt;
}

int ClassPartition::class_of(int item) const {
    for (int c = 0; c < static_cast<int>(classes.size()); ++c)
        for (int member : classes[c])
            if (member == item) return c;
    return -1;
}

ClassPartition partition_by_equivalence(const std::vector<LabeledMatrix>& items, Relation rel) {
    ClassPartition part;
    part.witnessToRep.resize(items.size());
    for (int i = 0; i < static_cast<int>(items.size()); ++i) {
        bool placed = false;
        for (auto& cls : part.classes) {
            int rep = cls[0];
            auto w = equivalent(items[i], items[rep], rel);
            if (w) {
                cls.push_back(i);
                part.witnessToRep[i] = std::move(w);
                placed = true;
                break;
            }
        }
        if (!placed) part.classes.push_back({i});
    }
    return part;
}

}  // namespace mforge
