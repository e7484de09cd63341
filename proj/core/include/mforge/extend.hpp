#pragma once

#include "mforge/equivalence.hpp"
#include "mforge/matroid.hpp"

#include <vector>

namespace mforge {

/// The points of PG(r-1, q): one normalized column (first nonzero entry 1)
/// per one-dimensional subspace, in lexicographic order of the entry tuples.
struct PGPointSet {
    int r;
    GaloisField field;
    std::vector<std::vector<int>> points;
};

PGPointSet pg_points(int r, const GaloisField& f);

/// One isomorphism class of single-element extensions of a base matrix.
/// Columns are grouped by labeled equality of the extension they produce;
/// all matrices of the class are additionally partitioned geometrically.
struct ExtensionClass {
    int classId = 0;
    LabeledMatrix representativeMatrix;  // base with the least column appended
    Matroid representative;
    /// Labeled-equality groups, each a list of columns; group order and
    /// column order follow the candidate enumeration.
    std::vector<std::vector<std::vector<int>>> groups;
    /// All columns of the class, ascending; memberMatrices aligns with this.
    std::vector<std::vector<int>> columns;
    std::vector<LabeledMatrix> memberMatrices;
    ClassPartition geometric;  // over memberMatrices
    int projectiveRepCount = 0;  // largest labeled-equality group
    int geometricRepCount = 0;
};

struct ExtensionReport {
    StandardForm base;
    int newLabel = 0;
    bool coextension = false;
    std::vector<std::vector<int>> candidates;  // lexicographic
    std::vector<ExtensionClass> classes;
};

/// All simple single-element extensions of M[a]: one candidate per point of
/// PG(r-1,q) not already a column of a, grouped into isomorphism classes.
/// Requires M[a] simple and connected.
ExtensionReport extend_all(const StandardForm& a, int jobs = 1);

/// Coextensions via duality: extend_all on the dual representation, every
/// member matrix dualized back. Class structure (groups, columns, geometric
/// partition and witnesses) is carried over from the dual side; columns and
/// witnesses therefore live in the dual space.
ExtensionReport coextend_all(const StandardForm& a, int jobs = 1);

/// Per-class stability summary of extend_all.
struct StabilityRow {
    int classId = 0;
    int projectiveRepCount = 0;  // >= 2 means some group has >= 2 columns
    int geometricRepCount = 0;
};

std::vector<StabilityRow> stability_probe(const StandardForm& a, int jobs = 1);
std::vector<StabilityRow> stability_probe(const ExtensionReport& report);

/// One isomorphism class of the generated catalog, with one representative
/// matrix per geometric representation class and provenance for replay.
struct CatalogEntry {
    int id = 0;
    int n = 0;
    int r = 0;
    Matroid representative;
    std::vector<StandardForm> representatives;  // pairwise geometrically inequivalent
    int parentId = -1;                          // -1 for seeds
    std::vector<int> extendingColumn;           // empty for seeds
};

/// Breadth-first exhaustive generation: every geometric representative of
/// every entry is extended, new matroids are deduplicated by isomorphism
/// within each ground-set size, and each class keeps all of its geometric
/// representation classes. Entries are ordered by size, then discovery.
std::vector<CatalogEntry> generate_catalog(const std::vector<StandardForm>& seeds, int nMax,
                                           int jobs = 1);

}  // namespace mforge
