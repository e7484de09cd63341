#include "mforge/named.hpp"

#include <bit>
#include <stdexcept>

namespace mforge {

namespace {

LabeledMatrix standard_with_d(const GaloisField& f, std::vector<std::vector<int>> dColumns) {
    int r = static_cast<int>(dColumns.empty() ? 0 : dColumns[0].size());
    int n = r + static_cast<int>(dColumns.size());
    LabeledMatrix m(f, r, n);
    for (int i = 0; i < r; ++i) m.set(i, i, 1);
    for (size_t j = 0; j < dColumns.size(); ++j)
        for (int i = 0; i < r; ++i) m.set(i, r + static_cast<int>(j), dColumns[j][i]);
    return m;
}

// U(r,n) parsing: "U(2,4)"
bool parse_uniform(const std::string& name, int& r, int& n) {
    if (name.size() < 6 || name[0] != 'U' || name[1] != '(') return false;
    size_t comma = name.find(',');
    size_t close = name.find(')');
    if (comma == std::string::npos || close == std::string::npos || close != name.size() - 1)
        return false;
    try {
        r = std::stoi(name.substr(2, comma - 2));
        n = std::stoi(name.substr(comma + 1, close - comma - 1));
    } catch (const std::exception&) {
        return false;
    }
    return r >= 0 && n >= r && n >= 1;
}

Matroid uniform_matroid(int r, int n) {
    std::vector<int> labels(n);
    for (int i = 0; i < n; ++i) labels[i] = i + 1;
    std::vector<uint32_t> bases;
    for (uint32_t mask = 0; mask < (1u << n); ++mask)
        if (std::popcount(mask) == r) bases.push_back(mask);
    return Matroid::from_bases(std::move(labels), r, std::move(bases));
}

Matroid p6_matroid() {
    // rank-3 on six elements with exactly one 3-point line, {1,2,4}
    std::vector<int> labels = {1, 2, 3, 4, 5, 6};
    uint32_t line = (1u << 0) | (1u << 1) | (1u << 3);
    std::vector<uint32_t> bases;
    for (uint32_t mask = 0; mask < (1u << 6); ++mask)
        if (std::popcount(mask) == 3 && mask != line) bases.push_back(mask);
    return Matroid::from_bases(std::move(labels), 3, std::move(bases));
}

}  // namespace

LabeledMatrix whirl_matrix_A() {
    return standard_with_d(GaloisField::make(5), {{1, 1, 0}, {0, 1, 1}, {1, 0, 1}});
}

LabeledMatrix whirl_matrix_B() {
    return standard_with_d(GaloisField::make(5), {{1, 1, 0}, {0, 1, 1}, {1, 0, 2}});
}

LabeledMatrix whirl_matrix_C() {
    return standard_with_d(GaloisField::make(5), {{1, 1, 0}, {0, 1, 1}, {1, 0, 3}});
}

LabeledMatrix triangle_family_matrix(const GaloisField& f, int a, int b) {
    if (a == 0 || b == 0) throw std::invalid_argument("family parameters must be nonzero");
    return standard_with_d(f, {{1, 1, 0}, {0, 1, 1}, {1, a, b}});
}

LabeledMatrix uniform_matrix(const GaloisField& f, int r, int n) {
    if (r < 1) throw std::invalid_argument("uniform matrix needs rank >= 1");
    if (n > f.q() + 1) throw std::invalid_argument("U(r,n) needs n <= q+1");
    if (n < r) throw std::invalid_argument("U(r,n) needs n >= r");
    LabeledMatrix m(f, r, n);
    // moment-curve columns (1, t, t^2, ...); the optional extra column is
    // (0, ..., 0, 1), reachable only when n = q+1
    for (int j = 0; j < n; ++j) {
        if (j < f.q()) {
            int t = j;
            for (int i = 0; i < r; ++i) m.set(i, j, f.pow(t, i));
        } else {
            m.set(r - 1, j, 1);
        }
    }
    // standard form [I_r | D] on the first r columns
    std::vector<int> basis(m.labels().begin(), m.labels().begin() + r);
    return to_standard_form(m, basis).base;
}

BuiltinMatroid builtin_matroid(const std::string& name) {
    GaloisField gf5 = GaloisField::make(5);
    if (name == "W3wheel") {
        LabeledMatrix m = triangle_family_matrix(gf5, 1, 1);
        return {name, matroid_of_matrix(m), m};
    }
    if (name == "W3whirl") {
        LabeledMatrix m = whirl_matrix_A();
        return {name, matroid_of_matrix(m), m};
    }
    if (name == "Q6") {
        LabeledMatrix m = triangle_family_matrix(gf5, 3, 1);
        return {name, matroid_of_matrix(m), m};
    }
    if (name == "P6") return {name, p6_matroid(), std::nullopt};
    if (name == "F7minus") {
        LabeledMatrix m = whirl_matrix_A().with_column(std::vector<int>{1, 1, 1}, 7);
        return {name, matroid_of_matrix(m), m};
    }
    if (name == "X7") {
        LabeledMatrix m = whirl_matrix_B().with_column(std::vector<int>{1, 1, 1}, 7);
        return {name, matroid_of_matrix(m), m};
    }
    int r = 0, n = 0;
    if (parse_uniform(name, r, n)) {
        Matroid m = uniform_matroid(r, n);
        std::optional<LabeledMatrix> rep;
        if (r >= 1 && n <= 6) rep = uniform_matrix(gf5, r, n);
        return {name, std::move(m), std::move(rep)};
    }
    throw std::invalid_argument("unknown builtin matroid: " + name);
}

BuiltinMatroid builtin_matroid_over(const std::string& name, const GaloisField& f) {
    BuiltinMatroid base = builtin_matroid(name);
    int r = 0, n = 0;
    if (parse_uniform(name, r, n)) {
        LabeledMatrix m = uniform_matrix(f, r, n);
        return {name, std::move(base.matroid), std::move(m)};
    }
    if (!base.matrix) throw std::invalid_argument(name + " has no defining matrix");
    const LabeledMatrix& src = *base.matrix;
    for (int v : src.entries())
        if (!f.is_element(v))
            throw std::invalid_argument(name + ": defining matrix does not fit in " + f.describe());
    LabeledMatrix m(f, src.rows(), src.cols(), src.entries(), src.labels());
    if (!equal_labeled(matroid_of_matrix(m), base.matroid))
        throw std::invalid_argument(name + " is not represented by its matrix over " + f.describe());
    return {name, std::move(base.matroid), std::move(m)};
}

}  // namespace mforge
