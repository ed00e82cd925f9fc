#include "ybx/map_instance.hpp"

#include "ybx/errors.hpp"

namespace ybx {

SlotPair apply(const YbMap& map, const OptRat& lam, const OptRat& mu, const SlotValue& x,
               const SlotValue& y) {
    if (kind_of(x) != map.kind || kind_of(y) != map.kind)
        throw Error(map.id + ": slot kind mismatch, expected " + to_string(map.kind));
    if (map.param_arity == 1 && (!lam || !mu))
        throw Error(map.id + ": parameters required");
    if (map.in_domain && !map.in_domain(lam, mu, x, y))
        throw SingularInput(map.id + ": input outside domain");
    return map.rule(lam, mu, x, y);
}

bool tuple_equal(const LabeledTuple& a, const LabeledTuple& b) {
    if (a.size() != b.size() || a.params != b.params) return false;
    for (int k = 0; k < a.size(); ++k)
        if (!slot_equal(a.values[k], b.values[k])) return false;
    return true;
}

std::string tuple_str(const LabeledTuple& t) {
    std::string out;
    for (int k = 0; k < t.size(); ++k) {
        if (k) out += "; ";
        out += slot_str(t.values[k]);
        if (!t.params.empty()) out += " @ " + rat_str(t.params[k]);
    }
    return out;
}

LabeledTuple apply_rij(const YbMap& map, int i, int j, const LabeledTuple& t) {
    int n = t.size();
    if (i < 1 || j < 1 || i > n || j > n || i == j) throw Error("apply_rij: bad indices");
    auto [u, v] = apply(map, t.param(i), t.param(j), t.values[i - 1], t.values[j - 1]);
    LabeledTuple out = t;
    out.values[i - 1] = std::move(u);
    out.values[j - 1] = std::move(v);
    return out;
}

LabeledTuple transfer_map(const YbMap& map, int i, const LabeledTuple& t) {
    int n = t.size();
    if (n < 2) throw Error("transfer_map: need n >= 2");
    if (i < 1 || i > n) throw Error("transfer_map: index out of range");
    LabeledTuple cur = t;
    for (int k = 1; k < n; ++k) {
        int j = (i - 1 + k) % n + 1;
        try {
            cur = apply_rij(map, i, j, cur);
        } catch (const SampleRejected& e) {
            throw SingularInput("transfer T_" + std::to_string(i) + " step R_{" +
                                std::to_string(i) + "," + std::to_string(j) +
                                "} left the domain: " + e.what());
        }
    }
    return cur;
}

LabeledTuple braid_adjacent(const YbMap& map, int i, const LabeledTuple& t) {
    int n = t.size();
    if (i < 1 || i + 1 > n) throw Error("braid_adjacent: index out of range");
    LabeledTuple out = apply_rij(map, i, i + 1, t);
    std::swap(out.values[i - 1], out.values[i]);
    if (!out.params.empty()) std::swap(out.params[i - 1], out.params[i]);
    return out;
}

} // namespace ybx
