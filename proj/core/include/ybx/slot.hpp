#pragma once

#include "ybx/matrix.hpp"
#include "ybx/subspace.hpp"

#include <string>
#include <variant>

namespace ybx {

enum class SlotKind { Scalar, ScalarPair, Vector, VectorCovector, ProjectorPair, Tuple };

std::string to_string(SlotKind k);

/// Pair of scalars carried in one slot.
struct ScalarPair {
    Rat first, second;
    friend bool operator==(const ScalarPair&, const ScalarPair&) = default;
};

/// Soliton polarization data: a vector and a covector with (xi, eta) != 0.
/// Stored projectively: the invariant content is the induced rank-1 projector
/// xi (x) eta / (xi, eta), and equality is equality of induced projectors.
struct VectorCovector {
    Vec xi, eta;
    friend bool operator==(const VectorCovector&, const VectorCovector&) = default;
};

/// A projector encoded by its kernel and image.
struct ProjectorPair {
    Subspace kernel, image;
    friend bool operator==(const ProjectorPair&, const ProjectorPair&) = default;
};

/// Plain list of rationals (distinct from Vector only in intent).
struct TupleValue {
    Vec entries;
    friend bool operator==(const TupleValue&, const TupleValue&) = default;
};

using SlotValue = std::variant<Rat, ScalarPair, Vec, VectorCovector, ProjectorPair, TupleValue>;

SlotKind kind_of(const SlotValue& v);

/// Kind-aware equality: exact for scalar/vector/tuple kinds, canonical-basis
/// for projector pairs, induced-projector for vector/covector pairs.
bool slot_equal(const SlotValue& a, const SlotValue& b);

std::string slot_str(const SlotValue& v);

/// xi (x) eta / (xi, eta). Throws SingularInput when the pairing vanishes.
QMatrix induced_projector(const VectorCovector& p);

} // namespace ybx
