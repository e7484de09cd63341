#include "mforge/coordinatize.hpp"

#include "mforge/bipartite.hpp"
#include "mforge/parallel.hpp"
#include "mforge/union_find.hpp"

#include <algorithm>
#include <stdexcept>

namespace mforge {

namespace {

// cycle-free and same component structure as the full bipartite graph
void validate_forest(const CoordinatizationProblem& prob,
                     const std::vector<std::pair<int, int>>& pinned) {
    int r = static_cast<int>(prob.basisLabels.size());
    int d = static_cast<int>(prob.cobasisLabels.size());
    auto rowIndex = [&](int label) {
        auto it = std::find(prob.basisLabels.begin(), prob.basisLabels.end(), label);
        if (it == prob.basisLabels.end()) throw std::invalid_argument("pinned one names a non-basis row");
        return static_cast<int>(it - prob.basisLabels.begin());
    };
    auto colIndex = [&](int label) {
        auto it = std::find(prob.cobasisLabels.begin(), prob.cobasisLabels.end(), label);
        if (it == prob.cobasisLabels.end())
            throw std::invalid_argument("pinned one names a non-cobasis column");
        return static_cast<int>(it - prob.cobasisLabels.begin());
    };
    UnionFind pinnedUf(r + d);
    for (auto [rowLabel, colLabel] : pinned) {
        int i = rowIndex(rowLabel), j = colIndex(colLabel);
        if (!prob.incidence[i][j])
            throw std::invalid_argument("pinned one is not a fundamental-circuit position");
        if (!pinnedUf.merge(i, r + j))
            throw std::invalid_argument("pinned ones contain a cycle");
    }
    UnionFind fullUf(r + d);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < d; ++j)
            if (prob.incidence[i][j]) fullUf.merge(i, r + j);
    if (pinnedUf.component_count() != fullUf.component_count())
        throw std::invalid_argument("pinned ones do not span the incidence graph");
}

}  // namespace

CoordinatizationProblem build_problem(const Matroid& m, std::optional<std::vector<int>> basisLabels,
                                      std::optional<std::vector<std::pair<int, int>>> pinnedOnes) {
    if (!m.connected()) throw std::invalid_argument("coordinatization requires a connected matroid");

    CoordinatizationProblem prob;
    prob.matroid = m;
    std::vector<int> basis = basisLabels ? *basisLabels : m.least_basis_labels();
    std::sort(basis.begin(), basis.end());
    uint32_t basisMask = m.mask_of_labels(basis);
    if (!m.is_basis(basisMask)) throw std::invalid_argument("given labels are not a basis");
    prob.basisLabels = basis;
    for (int label : m.labels())
        if (!(basisMask & (1u << m.position(label)))) prob.cobasisLabels.push_back(label);
    std::sort(prob.cobasisLabels.begin(), prob.cobasisLabels.end());

    int r = static_cast<int>(prob.basisLabels.size());
    int d = static_cast<int>(prob.cobasisLabels.size());
    prob.incidence.assign(r, std::vector<char>(d, 0));
    for (int j = 0; j < d; ++j) {
        uint32_t circuit = m.fundamental_circuit(prob.cobasisLabels[j], basisMask);
        for (int i = 0; i < r; ++i)
            if (circuit & (1u << m.position(prob.basisLabels[i]))) prob.incidence[i][j] = 1;
    }

    if (pinnedOnes) {
        validate_forest(prob, *pinnedOnes);
        prob.forest = *pinnedOnes;
    } else {
        prob.forest = spanning_forest_bfs(prob.incidence, prob.basisLabels, prob.cobasisLabels);
    }

    auto inForest = [&](int rowLabel, int colLabel) {
        return std::find(prob.forest.begin(), prob.forest.end(),
                         std::make_pair(rowLabel, colLabel)) != prob.forest.end();
    };
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < d; ++j)
            if (prob.incidence[i][j] && !inForest(prob.basisLabels[i], prob.cobasisLabels[j]))
                prob.unknowns.emplace_back(prob.basisLabels[i], prob.cobasisLabels[j]);
    return prob;
}

LabeledMatrix assemble_matrix(const CoordinatizationProblem& prob, const GaloisField& f,
                              std::span<const int> assignment) {
    int r = static_cast<int>(prob.basisLabels.size());
    int d = static_cast<int>(prob.cobasisLabels.size());
    if (static_cast<int>(assignment.size()) != static_cast<int>(prob.unknowns.size()))
        throw std::invalid_argument("assignment length does not match unknown count");
    for (int v : assignment)
        if (v == 0 || !f.is_element(v))
            throw std::invalid_argument("assignments must be nonzero field elements");

    LabeledMatrix m(f, r, r + d);
    std::vector<int> labels = prob.basisLabels;
    labels.insert(labels.end(), prob.cobasisLabels.begin(), prob.cobasisLabels.end());
    for (int i = 0; i < r; ++i) m.set(i, i, 1);
    for (auto [rowLabel, colLabel] : prob.forest) {
        int i = static_cast<int>(std::find(prob.basisLabels.begin(), prob.basisLabels.end(), rowLabel) -
                                 prob.basisLabels.begin());
        int j = static_cast<int>(std::find(prob.cobasisLabels.begin(), prob.cobasisLabels.end(),
                                           colLabel) -
                                 prob.cobasisLabels.begin());
        m.set(i, r + j, 1);
    }
    for (size_t u = 0; u < prob.unknowns.size(); ++u) {
        auto [rowLabel, colLabel] = prob.unknowns[u];
        int i = static_cast<int>(std::find(prob.basisLabels.begin(), prob.basisLabels.end(), rowLabel) -
                                 prob.basisLabels.begin());
        int j = static_cast<int>(std::find(prob.cobasisLabels.begin(), prob.cobasisLabels.end(),
                                           colLabel) -
                                 prob.cobasisLabels.begin());
        m.set(i, r + j, assignment[u]);
    }
    m.set_labels(labels);
    return m;
}

Matroid classify_assignment(const CoordinatizationProblem& prob, const GaloisField& f,
                            std::span<const int> assignment) {
    return matroid_of_matrix(assemble_matrix(prob, f, assignment));
}

CoordinatizationReport enumerate_representations(const CoordinatizationProblem& prob,
                                                 const GaloisField& f, int maxUnknowns, int jobs) {
    int u = static_cast<int>(prob.unknowns.size());
    if (u > maxUnknowns)
        throw std::invalid_argument("unknown count " + std::to_string(u) +
                                    " exceeds the configured cap " + std::to_string(maxUnknowns));
    int base = f.q() - 1;
    std::uint64_t total = 1;
    for (int i = 0; i < u; ++i) {
        total *= static_cast<std::uint64_t>(base);
        if (total > (1ull << 26)) throw std::invalid_argument("assignment space too large");
    }

    CoordinatizationReport report{f};
    report.totalAssignments = total;

    std::vector<int> units = f.units();
    std::vector<char> keep(total, 0);
    parallel_for(static_cast<std::int64_t>(total), jobs, [&](std::int64_t idx) {
        std::vector<int> assignment(u);
        std::uint64_t v = static_cast<std::uint64_t>(idx);
        for (int i = u - 1; i >= 0; --i) {
            assignment[i] = units[v % base];
            v /= base;
        }
        Matroid got = classify_assignment(prob, f, assignment);
        if (equal_labeled(got, prob.matroid)) keep[idx] = 1;
    });

    for (std::uint64_t idx = 0; idx < total; ++idx) {
        if (!keep[idx]) continue;
        std::vector<int> assignment(u);
        std::uint64_t v = idx;
        for (int i = u - 1; i >= 0; --i) {
            assignment[i] = units[v % base];
            v /= base;
        }
        report.matrices.push_back(assemble_matrix(prob, f, assignment));
        report.assignments.push_back(std::move(assignment));
    }
    report.representable = !report.assignments.empty();
    report.geometric = partition_by_equivalence(report.matrices, Relation::Geometric);
    return report;
}

}  // namespace mforge
