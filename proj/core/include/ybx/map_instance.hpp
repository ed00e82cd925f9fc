#pragma once

#include "ybx/slot.hpp"

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace ybx {

using OptRat = std::optional<Rat>;
using SlotPair = std::pair<SlotValue, SlotValue>;

/// A parameter-dependent map R(lam, mu) on X x X together with its domain.
/// The rule is total on inputs accepted by in_domain and throws
/// SingularInput / ParameterCollision outside it. Values are immutable and
/// every rule is a pure function, so instances are freely shareable.
struct YbMap {
    std::string id;
    SlotKind kind = SlotKind::Scalar;
    int param_arity = 1; // 0 or 1 rationals per slot

    std::function<SlotPair(const OptRat& lam, const OptRat& mu, const SlotValue& x,
                           const SlotValue& y)>
        rule;
    std::function<bool(const OptRat& lam, const OptRat& mu, const SlotValue& x,
                       const SlotValue& y)>
        in_domain;
};

/// Apply R with explicit parameters; validates kinds and the domain predicate.
SlotPair apply(const YbMap& map, const OptRat& lam, const OptRat& mu, const SlotValue& x,
               const SlotValue& y);

/// n slots, each a value with an optional attached parameter. Parameters stay
/// attached to positions under every map action. Slot indices are 1-based in
/// the public API and 0-based in storage.
struct LabeledTuple {
    std::vector<SlotValue> values;
    std::vector<Rat> params; // empty when the map family is parameterless

    int size() const { return static_cast<int>(values.size()); }
    OptRat param(int i_1based) const {
        if (params.empty()) return std::nullopt;
        return params[i_1based - 1];
    }
};

bool tuple_equal(const LabeledTuple& a, const LabeledTuple& b);
std::string tuple_str(const LabeledTuple& t);

/// R acting on slots i and j of the tuple (identically on the others):
/// the first output lands in slot i, the second in slot j, parameters read
/// from slots (i, j) in that order. i != j, 1-based.
LabeledTuple apply_rij(const YbMap& map, int i, int j, const LabeledTuple& t);

/// Transfer map T_i on n slots: the composition
/// R_{i,i+n-1} R_{i,i+n-2} ... R_{i,i+1}, applied right to left (R_{i,i+1}
/// acts first), indices cyclic with n standing in for 0.
/// Throws SingularInput naming the failing step when a composition step
/// leaves the domain.
LabeledTuple transfer_map(const YbMap& map, int i, const LabeledTuple& t);

/// Braid form S_i = P_{i,i+1} R_{i,i+1}: apply R on slots (i, i+1), then swap
/// the slots, values and parameters together. S_i is an involution exactly
/// when R is reversible.
LabeledTuple braid_adjacent(const YbMap& map, int i, const LabeledTuple& t);

} // namespace ybx
