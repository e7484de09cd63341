#pragma once

#include "mforge/equivalence.hpp"
#include "mforge/matroid.hpp"

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace mforge {

/// Coordinatization setup for a connected matroid and a chosen basis:
/// the fundamental-circuit incidence pattern, a spanning forest of its
/// bipartite graph whose entries are pinned to one, and the remaining
/// nonzero positions as the ordered unknowns.
struct CoordinatizationProblem {
    Matroid matroid;
    std::vector<int> basisLabels;    // sorted ascending
    std::vector<int> cobasisLabels;  // sorted ascending
    /// incidence[i][j] = 1 iff basis element i lies on the fundamental
    /// circuit of cobasis element j.
    std::vector<std::vector<char>> incidence;
    std::vector<std::pair<int, int>> forest;    // (basisLabel, cobasisLabel)
    std::vector<std::pair<int, int>> unknowns;  // row-major over incidence
};

/// Builds the problem. The basis defaults to the lexicographically least
/// basis; pinned ones, when supplied, must form a spanning forest of the
/// incidence bipartite graph, otherwise a deterministic BFS forest is used.
CoordinatizationProblem build_problem(
    const Matroid& m, std::optional<std::vector<int>> basisLabels = std::nullopt,
    std::optional<std::vector<std::pair<int, int>>> pinnedOnes = std::nullopt);

/// Matrix [I_r | D] for one assignment of the unknowns: forest positions
/// carry 1, unknown positions carry the assigned values, the rest 0.
/// Column labels are basis labels then cobasis labels.
LabeledMatrix assemble_matrix(const CoordinatizationProblem& prob, const GaloisField& f,
                              std::span<const int> assignment);

/// Matroid of the assembled matrix, whether or not it matches the target.
Matroid classify_assignment(const CoordinatizationProblem& prob, const GaloisField& f,
                            std::span<const int> assignment);

struct CoordinatizationReport {
    GaloisField field;
    std::uint64_t totalAssignments = 0;
    bool representable = false;
    /// Valid assignments in lexicographic order; one projective class each.
    std::vector<std::vector<int>> assignments;
    std::vector<LabeledMatrix> matrices;  // parallel to assignments
    ClassPartition geometric;             // over matrices

    int projective_classes() const { return static_cast<int>(assignments.size()); }
    int geometric_classes() const { return static_cast<int>(geometric.classes.size()); }
};

/// Scans all (q-1)^u assignments of the unknowns over the units of f and
/// keeps those whose matrix represents the target matroid.
CoordinatizationReport enumerate_representations(const CoordinatizationProblem& prob,
                                                 const GaloisField& f, int maxUnknowns = 12,
                                                 int jobs = 1);

}  // namespace mforge
