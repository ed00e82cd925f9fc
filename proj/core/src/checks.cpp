#include "ybx/checks.hpp"

#include "ybx/errors.hpp"

namespace ybx {

bool check_yang_baxter(const YbMap& map, const LabeledTuple& t) {
    if (t.size() != 3) throw Error("check_yang_baxter: need a 3-slot tuple");
    LabeledTuple lhs = apply_rij(map, 2, 3, apply_rij(map, 1, 3, apply_rij(map, 1, 2, t)));
    LabeledTuple rhs = apply_rij(map, 1, 2, apply_rij(map, 1, 3, apply_rij(map, 2, 3, t)));
    return tuple_equal(lhs, rhs);
}

bool check_reversibility(const YbMap& map, const LabeledTuple& t) {
    if (t.size() != 2) throw Error("check_reversibility: need a 2-slot tuple");
    LabeledTuple round = apply_rij(map, 2, 1, apply_rij(map, 1, 2, t));
    return tuple_equal(round, t);
}

bool check_transfer_commutativity(const YbMap& map, int i, int j, const LabeledTuple& t) {
    LabeledTuple a = transfer_map(map, i, transfer_map(map, j, t));
    LabeledTuple b = transfer_map(map, j, transfer_map(map, i, t));
    return tuple_equal(a, b);
}

bool check_transfer_product(const YbMap& map, const LabeledTuple& t) {
    LabeledTuple cur = t;
    for (int i = t.size(); i >= 1; --i) cur = transfer_map(map, i, cur);
    return tuple_equal(cur, t);
}

bool check_braid_involutive(const YbMap& map, int i, const LabeledTuple& t) {
    return tuple_equal(braid_adjacent(map, i, braid_adjacent(map, i, t)), t);
}

bool check_r21_equals_r(const YbMap& map, const LabeledTuple& t) {
    if (t.size() != 2) throw Error("check_r21_equals_r: need a 2-slot tuple");
    LabeledTuple direct = apply_rij(map, 1, 2, t);
    // R_21 = P R P: swap slots with parameters, apply R_12, swap back.
    LabeledTuple swapped = t;
    std::swap(swapped.values[0], swapped.values[1]);
    if (!swapped.params.empty()) std::swap(swapped.params[0], swapped.params[1]);
    LabeledTuple via = apply_rij(map, 1, 2, swapped);
    std::swap(via.values[0], via.values[1]);
    if (!via.params.empty()) std::swap(via.params[0], via.params[1]);
    return tuple_equal(direct, via);
}

} // namespace ybx
