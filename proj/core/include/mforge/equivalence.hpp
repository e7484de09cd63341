#pragma once

#include "mforge/matroid.hpp"

#include <optional>
#include <vector>

namespace mforge {

enum class Relation { Projective, Algebraic, Geometric };

const char* relation_name(Relation r);
std::optional<Relation> relation_from_name(const std::string& s);

/// Decides whether a2 can be obtained from a1 by row operations and column
/// scaling alone. Requires equal dimensions and fields (throws otherwise)
/// and full row rank. Returns a witness with identity permutation and
/// frobPower 0, or nullopt.
///
/// Decision rule: both matrices are put in standard form on the least basis
/// of their (necessarily equal) labeled matroid, and the entries of a fixed
/// spanning forest of the fundamental-circuit bipartite graph are scaled to
/// one. The representations are equivalent iff the results agree entrywise;
/// this canonical form is unique within a projective class.
std::optional<TransformWitness> projective_equivalent(const LabeledMatrix& a1,
                                                      const LabeledMatrix& a2);

/// Projective equivalence up to a Frobenius power: tries every automorphism
/// sigma^j of the field, j in [0, k). On prime fields this coincides with
/// projective_equivalent.
std::optional<TransformWitness> algebraically_equivalent(const LabeledMatrix& a1,
                                                         const LabeledMatrix& a2);

/// Decides whether some invertible row transform, column scalings and a
/// column permutation carry a1 to a2; equivalently, whether a linear
/// transformation maps the column point multiset of a1 onto that of a2.
///
/// Search: fix the first r independent columns of a1; enumerate every
/// ordered r-tuple of independent projective points of a2 as their images,
/// refined by scaling vectors (1, mu_2..mu_r) over the units. Each choice
/// pins the transform, which is then checked against the full multiset.
/// Works on any inputs with nonzero columns, including parallel columns
/// (matched with multiplicity).
std::optional<TransformWitness> geometrically_equivalent(const LabeledMatrix& a1,
                                                         const LabeledMatrix& a2);

std::optional<TransformWitness> equivalent(const LabeledMatrix& a1, const LabeledMatrix& a2,
                                           Relation rel);

/// Partition of a list of same-shaped matrices into equivalence classes.
/// Classes are listed by least member index; each class lists its member
/// indices ascending, the first being the representative. Non-representative
/// members carry a witness onto their representative.
struct ClassPartition {
    std::vector<std::vector<int>> classes;
    std::vector<std::optional<TransformWitness>> witnessToRep;

    int class_of(int item) const;
    int representative(int cls) const { return classes[cls][0]; }
};

ClassPartition partition_by_equivalence(const std::vector<LabeledMatrix>& items, Relation rel);

}  // namespace mforge
