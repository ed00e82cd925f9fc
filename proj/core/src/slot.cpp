#include "ybx/slot.hpp"

#include "ybx/errors.hpp"

namespace ybx {

std::string to_string(SlotKind k) {
    switch (k) {
        case SlotKind::Scalar: return "scalar";
        case SlotKind::ScalarPair: return "scalar-pair";
        case SlotKind::Vector: return "vector";
        case SlotKind::VectorCovector: return "vector-covector";
        case SlotKind::ProjectorPair: return "projector-pair";
        case SlotKind::Tuple: return "tuple";
    }
    return "?";
}

SlotKind kind_of(const SlotValue& v) {
    return static_cast<SlotKind>(v.index());
}

QMatrix induced_projector(const VectorCovector& p) {
    Rat pairing = dot(p.xi, p.eta);
    if (pairing == 0) throw SingularInput("vector-covector pairing vanishes");
    int n = static_cast<int>(p.xi.size());
    QMatrix m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m.at(i, j) = p.xi[i] * p.eta[j] / pairing;
    return m;
}

bool slot_equal(const SlotValue& a, const SlotValue& b) {
    if (a.index() != b.index()) return false;
    if (kind_of(a) == SlotKind::VectorCovector)
        return induced_projector(std::get<VectorCovector>(a)) ==
               induced_projector(std::get<VectorCovector>(b));
    return a == b;
}

std::string slot_str(const SlotValue& v) {
    switch (kind_of(v)) {
        case SlotKind::Scalar: return rat_str(std::get<Rat>(v));
        case SlotKind::ScalarPair: {
            const auto& p = std::get<ScalarPair>(v);
            return "(" + rat_str(p.first) + "," + rat_str(p.second) + ")";
        }
        case SlotKind::Vector: return vec_str(std::get<Vec>(v));
        case SlotKind::VectorCovector: {
            const auto& p = std::get<VectorCovector>(v);
            return "xi=" + vec_str(p.xi) + " eta=" + vec_str(p.eta);
        }
        case SlotKind::ProjectorPair: {
            const auto& p = std::get<ProjectorPair>(v);
            return "K=" + p.kernel.str() + " L=" + p.image.str();
        }
        case SlotKind::Tuple: return vec_str(std::get<TupleValue>(v).entries);
    }
    return "?";
}

} // namespace ybx
