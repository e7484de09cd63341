#pragma once

#include "mforge/coordinatize.hpp"
#include "mforge/extend.hpp"

#include <iosfwd>
#include <string>

namespace mforge {

/// Matrix text format:
///
///     # optional comments
///     field 5
///     rows 3 cols 6
///     1 0 0 1 0 1
///     0 1 0 1 1 0
///     0 0 1 0 1 1
///     labels 1 2 3 4 5 6      # optional line; default 1..n
///
/// Prime-power fields write `field q poly c0 c1 ... c{k-1}` (coefficients
/// degree-ascending, monic leading 1 implicit). Parse errors carry the line
/// number. `#` starts a comment anywhere on a line.
LabeledMatrix read_matrix(std::istream& in, const std::string& source = "<input>");
LabeledMatrix read_matrix_file(const std::string& path);
std::string matrix_to_text(const LabeledMatrix& m);

/// Abstract matroid text format (ground set 1..n):
///
///     matroid n=6 r=3
///     basis 1 2 3
///     basis 1 2 5
///
/// The basis-exchange axiom is verified on read.
Matroid read_matroid(std::istream& in, const std::string& source = "<input>");
Matroid read_matroid_file(const std::string& path);
std::string matroid_to_text(const Matroid& m);

enum class ReportFormat { Plain, Json };

/// Witness serialization; key names frozen: frobPower, rowTransform (r x r
/// grid), colScale, colPerm (0-based image list).
std::string render_witness(const TransformWitness& w);

std::string render_matrix_json(const LabeledMatrix& m);
std::string render_field(const GaloisField& f, bool tables, ReportFormat fmt);
std::string render_equivalence(Relation rel, const std::optional<TransformWitness>& w,
                               bool includeWitness, ReportFormat fmt);
std::string render_isomorphism(const Matroid& a, const Matroid& b,
                               const std::optional<std::vector<int>>& image, ReportFormat fmt);
std::string render_coordinatization(const CoordinatizationProblem& prob,
                                    const CoordinatizationReport& report, ReportFormat fmt);
std::string render_extension(const ExtensionReport& report, ReportFormat fmt);
/// JSON-lines, one entry per line.
std::string render_catalog(const std::vector<CatalogEntry>& catalog);

}  // namespace mforge
