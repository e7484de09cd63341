#pragma once

#include "mforge/matroid.hpp"

#include <optional>
#include <string>

namespace mforge {

/// A catalog matroid together with its defining matrix, when one exists.
/// The matrix is over the stated field of the catalog entry; P6 is defined
/// by its line structure alone and carries no matrix.
struct BuiltinMatroid {
    std::string name;
    Matroid matroid;
    std::optional<LabeledMatrix> matrix;
};

/// Looks up a named matroid. Accepted names: W3wheel, W3whirl, Q6, P6,
/// F7minus, X7, and U(r,n). Throws on unknown names.
BuiltinMatroid builtin_matroid(const std::string& name);

/// Same, but with the defining matrix re-read over the given field. The
/// matrix entries must fit in the field and must still represent the same
/// abstract matroid; otherwise this throws.
BuiltinMatroid builtin_matroid_over(const std::string& name, const GaloisField& f);

/// The three rank-3 whirl representations over GF(5) used throughout the
/// test fixtures, and the generic family [I_3 | (1,1,0) (0,1,1) (1,a,b)].
LabeledMatrix whirl_matrix_A();
LabeledMatrix whirl_matrix_B();
LabeledMatrix whirl_matrix_C();
LabeledMatrix triangle_family_matrix(const GaloisField& f, int a, int b);

/// U(r,n) representation via the moment curve; needs n <= q+1.
LabeledMatrix uniform_matrix(const GaloisField& f, int r, int n);

}  // namespace mforge
