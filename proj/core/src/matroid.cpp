#include "mforge/matroid.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <stdexcept>

namespace mforge {

namespace {

constexpr int kMaxGround = 31;

// Next subset of the same popcount (Gosper's hack).
uint32_t next_combination(uint32_t v) {
    uint32_t t = v | (v - 1);
    return (t + 1) | (((~t & (t + 1)) - 1) >> (std::countr_zero(v) + 1));
}

}  // namespace

Matroid Matroid::from_bases(std::vector<int> labels, int rank, std::vector<uint32_t> bases,
                            bool validate) {
    Matroid m;
    m.n_ = static_cast<int>(labels.size());
    m.r_ = rank;
    if (m.n_ > kMaxGround) throw std::invalid_argument("ground set larger than supported");
    if (rank < 0 || rank > m.n_) throw std::invalid_argument("rank out of range");
    {
        std::vector<int> sorted = labels;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw std::invalid_argument("ground labels must be pairwise distinct");
    }
    m.labels_ = std::move(labels);
    std::sort(bases.begin(), bases.end());
    bases.erase(std::unique(bases.begin(), bases.end()), bases.end());
    if (bases.empty()) throw std::invalid_argument("a matroid needs at least one basis");
    uint32_t full = m.n_ == 31 ? 0x7fffffffu : ((1u << m.n_) - 1);
    for (uint32_t b : bases) {
        if ((b & ~full) != 0) throw std::invalid_argument("basis mask out of range");
        if (std::popcount(b) != rank) throw std::invalid_argument("all bases must have size rank");
    }
    m.bases_ = std::move(bases);
    if (validate && !m.basis_exchange_ok())
        throw std::invalid_argument("basis-exchange axiom fails: not a matroid");
    return m;
}

int Matroid::position(int label) const {
    for (int i = 0; i < n_; ++i)
        if (labels_[i] == label) return i;
    return -1;
}

uint32_t Matroid::mask_of_labels(std::span<const int> ls) const {
    uint32_t mask = 0;
    for (int l : ls) {
        int pos = position(l);
        if (pos < 0) throw std::invalid_argument("label not in ground set");
        mask |= 1u << pos;
    }
    return mask;
}

std::vector<int> Matroid::labels_of_mask(uint32_t mask) const {
    std::vector<int> out;
    for (int i = 0; i < n_; ++i)
        if (mask & (1u << i)) out.push_back(labels_[i]);
    return out;
}

bool Matroid::is_basis(uint32_t mask) const {
    return std::binary_search(bases_.begin(), bases_.end(), mask);
}

bool Matroid::independent(uint32_t mask) const {
    for (uint32_t b : bases_)
        if ((mask & ~b) == 0) return true;
    return false;
}

int Matroid::rank_of(uint32_t mask) const {
    int best = 0;
    for (uint32_t b : bases_) best = std::max(best, std::popcount(mask & b));
    return best;
}

uint32_t Matroid::closure(uint32_t mask) const {
    int rk = rank_of(mask);
    uint32_t cl = mask;
    for (int i = 0; i < n_; ++i) {
        uint32_t bit = 1u << i;
        if ((mask & bit) == 0 && rank_of(mask | bit) == rk) cl |= bit;
    }
    return cl;
}

std::vector<uint32_t> Matroid::circuits() const {
    if (n_ > 22) throw std::invalid_argument("circuit enumeration capped at 22 elements");
    uint32_t limit = 1u << n_;
    // downward closure of the bases
    std::vector<char> indep(limit, 0);
    for (uint32_t b : bases_) indep[b] = 1;
    for (uint32_t mask = limit - 1; mask > 0; --mask) {
        if (!indep[mask]) continue;
        uint32_t rest = mask;
        while (rest) {
            uint32_t bit = rest & (~rest + 1);
            indep[mask ^ bit] = 1;
            rest ^= bit;
        }
    }
    std::vector<uint32_t> out;
    for (uint32_t mask = 1; mask < limit; ++mask) {
        if (indep[mask]) continue;
        bool minimal = true;
        uint32_t rest = mask;
        while (rest && minimal) {
            uint32_t bit = rest & (~rest + 1);
            if (!indep[mask ^ bit]) minimal = false;
            rest ^= bit;
        }
        if (minimal) out.push_back(mask);
    }
    return out;
}

uint32_t Matroid::fundamental_circuit(int elementLabel, uint32_t basisMask) const {
    if (!is_basis(basisMask)) throw std::invalid_argument("not a basis");
    int pos = position(elementLabel);
    if (pos < 0) throw std::invalid_argument("label not in ground set");
    uint32_t kbit = 1u << pos;
    if (basisMask & kbit) throw std::invalid_argument("element lies in the basis");
    // b belongs to C(k,B) iff B - b + k is again a basis
    uint32_t circuit = kbit;
    uint32_t rest = basisMask;
    while (rest) {
        uint32_t bit = rest & (~rest + 1);
        if (is_basis((basisMask ^ bit) | kbit)) circuit |= bit;
        rest ^= bit;
    }
    return circuit;
}

bool Matroid::simple() const {
    // loops: elements in no basis; parallel pairs: 2-sets of rank 1
    for (int i = 0; i < n_; ++i)
        if (rank_of(1u << i) == 0) return false;
    for (int i = 0; i < n_; ++i)
        for (int j = i + 1; j < n_; ++j)
            if (rank_of((1u << i) | (1u << j)) <= 1) return false;
    return true;
}

bool Matroid::connected() const {
    if (n_ <= 1) return true;
    std::vector<uint32_t> cs = circuits();
    // elements i and j are connected iff some circuit contains both
    std::vector<uint32_t> reach(n_, 0);
    for (uint32_t c : cs)
        for (int i = 0; i < n_; ++i)
            if (c & (1u << i)) reach[i] |= c;
    for (int i = 0; i < n_; ++i)
        for (int j = i + 1; j < n_; ++j)
            if ((reach[i] & (1u << j)) == 0) return false;
    return true;
}

std::vector<uint32_t> Matroid::rank2_flats() const {
    std::set<uint32_t> flats;
    for (int i = 0; i < n_; ++i)
        for (int j = i + 1; j < n_; ++j) {
            uint32_t pair = (1u << i) | (1u << j);
            if (rank_of(pair) != 2) continue;
            flats.insert(closure(pair));
        }
    return std::vector<uint32_t>(flats.begin(), flats.end());
}

int Matroid::three_point_lines() const {
    int count = 0;
    for (uint32_t f : rank2_flats())
        if (std::popcount(f) == 3) ++count;
    return count;
}

bool Matroid::basis_exchange_ok() const {
    for (uint32_t b1 : bases_) {
        for (uint32_t b2 : bases_) {
            uint32_t only1 = b1 & ~b2;
            uint32_t rest1 = only1;
            while (rest1) {
                uint32_t x = rest1 & (~rest1 + 1);
                rest1 ^= x;
                bool found = false;
                uint32_t rest2 = b2 & ~b1;
                while (rest2 && !found) {
                    uint32_t y = rest2 & (~rest2 + 1);
                    rest2 ^= y;
                    if (is_basis((b1 ^ x) | y)) found = true;
                }
                if (!found) return false;
            }
        }
    }
    return true;
}

std::vector<int> Matroid::least_basis_labels() const {
    // least by sorted-label order: remap to sorted positions and compare masks
    std::vector<int> sorted = labels_;
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> toSorted(n_);
    for (int i = 0; i < n_; ++i)
        toSorted[i] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), labels_[i]) -
                                       sorted.begin());
    uint32_t best = 0;
    bool have = false;
    for (uint32_t b : bases_) {
        uint32_t remapped = 0;
        for (int i = 0; i < n_; ++i)
            if (b & (1u << i)) remapped |= 1u << toSorted[i];
        if (!have || remapped < best) {
            best = remapped;
            have = true;
        }
    }
    std::vector<int> out;
    for (int i = 0; i < n_; ++i)
        if (best & (1u << i)) out.push_back(sorted[i]);
    return out;
}

Matroid matroid_of_matrix(const LabeledMatrix& m) {
    int n = m.cols();
    if (n > kMaxGround) throw std::invalid_argument("too many columns");
    int r = matrix_rank(m);
    std::vector<uint32_t> bases;
    if (r == 0) {
        bases.push_back(0);
    } else {
        uint32_t mask = (1u << r) - 1;
        uint32_t limit = 1u << n;
        while (mask < limit) {
            std::vector<int> pos;
            for (int i = 0; i < n; ++i)
                if (mask & (1u << i)) pos.push_back(i);
            if (matrix_rank(m.select_columns(pos)) == r) bases.push_back(mask);
            mask = next_combination(mask);
        }
    }
    return Matroid::from_bases(m.labels(), r, std::move(bases));
}

bool equal_labeled(const Matroid& a, const Matroid& b) {
    std::vector<int> la = a.labels(), lb = b.labels();
    std::sort(la.begin(), la.end());
    std::sort(lb.begin(), lb.end());
    if (la != lb) throw std::invalid_argument("matroids have different ground sets");
    if (a.rank() != b.rank() || a.bases().size() != b.bases().size()) return false;
    // compare bases as label sets via the sorted-label position space
    auto remap = [](const Matroid& m, const std::vector<int>& sorted) {
        std::vector<uint32_t> out;
        out.reserve(m.bases().size());
        for (uint32_t basis : m.bases()) {
            uint32_t mm = 0;
            for (int i = 0; i < m.size(); ++i)
                if (basis & (1u << i)) {
                    int pos = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(),
                                                                m.labels()[i]) -
                                               sorted.begin());
                    mm |= 1u << pos;
                }
            out.push_back(mm);
        }
        std::sort(out.begin(), out.end());
        return out;
    };
    return remap(a, la) == remap(b, la);
}

namespace {

struct IsoContext {
    int n;
    const std::vector<uint32_t>* basesA;
    const std::vector<uint32_t>* basesB;
    std::vector<int> degA, degB;               // basis-membership counts
    std::vector<std::vector<int>> coA, coB;    // pairwise co-occurrence counts
    std::vector<int> image;                    // position in B for each position in A
    std::vector<char> used;
};

bool iso_extend(IsoContext& ctx, int pos) {
    if (pos == ctx.n) {
        // full check: every basis of A maps to a basis of B
        for (uint32_t b : *ctx.basesA) {
            uint32_t mapped = 0;
            for (int i = 0; i < ctx.n; ++i)
                if (b & (1u << i)) mapped |= 1u << ctx.image[i];
            if (!std::binary_search(ctx.basesB->begin(), ctx.basesB->end(), mapped)) return false;
        }
        return true;
    }
    for (int cand = 0; cand < ctx.n; ++cand) {
        if (ctx.used[cand]) continue;
        if (ctx.degA[pos] != ctx.degB[cand]) continue;
        bool ok = true;
        for (int prev = 0; prev < pos && ok; ++prev)
            if (ctx.coA[pos][prev] != ctx.coB[cand][ctx.image[prev]]) ok = false;
        if (!ok) continue;
        ctx.image[pos] = cand;
        ctx.used[cand] = 1;
        if (iso_extend(ctx, pos + 1)) return true;
        ctx.used[cand] = 0;
    }
    return false;
}

}  // namespace

std::optional<std::vector<int>> find_isomorphism(const Matroid& a, const Matroid& b) {
    if (a.size() != b.size() || a.rank() != b.rank() || a.bases().size() != b.bases().size())
        return std::nullopt;
    int n = a.size();
    IsoContext ctx;
    ctx.n = n;
    ctx.basesA = &a.bases();
    ctx.basesB = &b.bases();
    ctx.degA.assign(n, 0);
    ctx.degB.assign(n, 0);
    ctx.coA.assign(n, std::vector<int>(n, 0));
    ctx.coB.assign(n, std::vector<int>(n, 0));
    for (uint32_t basis : a.bases())
        for (int i = 0; i < n; ++i)
            if (basis & (1u << i)) {
                ++ctx.degA[i];
                for (int j = 0; j < n; ++j)
                    if (j != i && (basis & (1u << j))) ++ctx.coA[i][j];
            }
    for (uint32_t basis : b.bases())
        for (int i = 0; i < n; ++i)
            if (basis & (1u << i)) {
                ++ctx.degB[i];
                for (int j = 0; j < n; ++j)
                    if (j != i && (basis & (1u << j))) ++ctx.coB[i][j];
            }
    {
        std::vector<int> da = ctx.degA, db = ctx.degB;
        std::sort(da.begin(), da.end());
        std::sort(db.begin(), db.end());
        if (da != db) return std::nullopt;
    }
    ctx.image.assign(n, -1);
    ctx.used.assign(n, 0);
    if (!iso_extend(ctx, 0)) return std::nullopt;
    std::vector<int> out(n);
    for (int i = 0; i < n; ++i) out[i] = b.labels()[ctx.image[i]];
    return out;
}

Matroid dual_matroid(const Matroid& m) {
    uint32_t full = m.size() == 31 ? 0x7fffffffu : ((1u << m.size()) - 1);
    std::vector<uint32_t> bases;
    bases.reserve(m.bases().size());
    for (uint32_t b : m.bases()) bases.push_back(full & ~b);
    return Matroid::from_bases(m.labels(), m.size() - m.rank(), std::move(bases));
}

}  // namespace mforge
