#include "ybx/suite.hpp"

#include "ybx/errors.hpp"

#include <algorithm>
#include <chrono>
#include <ostream>

namespace ybx {

Property property_from_string(const std::string& s) {
    if (s == "yb") return Property::YangBaxter;
    if (s == "reversibility") return Property::Reversibility;
    if (s == "transfer-comm") return Property::TransferComm;
    if (s == "transfer-prod") return Property::TransferProd;
    if (s == "refactor") return Property::Refactor;
    if (s == "spectral") return Property::Spectral;
    if (s == "lax-from-map") return Property::LaxFromMap;
    throw ParseError("unknown property: " + s);
}

std::string to_string(Property p) {
    switch (p) {
        case Property::YangBaxter: return "yb";
        case Property::Reversibility: return "reversibility";
        case Property::TransferComm: return "transfer-comm";
        case Property::TransferProd: return "transfer-prod";
        case Property::Refactor: return "refactor";
        case Property::Spectral: return "spectral";
        case Property::LaxFromMap: return "lax-from-map";
    }
    return "?";
}

bool property_needs_lax(Property p) {
    return p == Property::Refactor || p == Property::Spectral || p == Property::LaxFromMap;
}

int property_fixed_n(Property p) {
    switch (p) {
        case Property::YangBaxter:
        case Property::LaxFromMap: return 3;
        case Property::Reversibility:
        case Property::Refactor: return 2;
        default: return 0;
    }
}

namespace {

struct SampleOutcome {
    bool ok;
    std::string detail; // appended to the witness on failure
};

long attempts_cap(long samples) {
    return std::max(samples * 50, samples + 1000);
}

} // namespace

CheckReport run_property(const CatalogEntry& entry, const CatalogConfig& cfg, Property prop,
                         const RunOptions& opt) {
    if (opt.samples < 1) throw Error("run_property: samples must be >= 1");
    int n = property_fixed_n(prop);
    if (n == 0) {
        n = opt.n;
        if (n < 2) throw Error("run_property: transfer properties need n >= 2");
    }
    if (property_needs_lax(prop) && !entry.has_lax())
        throw Error("map '" + entry.id + "' has no Lax family; property '" + to_string(prop) +
                    "' is unavailable");

    YbMap map = entry.make(cfg);
    TupleSampler sampler = entry.sampler(cfg);
    LaxPack pack;
    if (entry.has_lax()) pack = entry.lax(cfg);

    auto evaluate = [&](const LabeledTuple& t) -> SampleOutcome {
        switch (prop) {
            case Property::YangBaxter:
                return {check_yang_baxter(map, t), ""};
            case Property::Reversibility:
                return {check_reversibility(map, t), ""};
            case Property::TransferComm:
                for (int i = 1; i <= n; ++i)
                    for (int j = i + 1; j <= n; ++j)
                        if (!check_transfer_commutativity(map, i, j, t))
                            return {false,
                                    " [T_" + std::to_string(i) + ", T_" + std::to_string(j) + "]"};
                return {true, ""};
            case Property::TransferProd:
                return {check_transfer_product(map, t), ""};
            case Property::Refactor: {
                LaxOutcome o = verify_refactorization(pack.mono, map, t, opt.mode);
                return {o.ok, o.strict_ok ? "" : " [strict comparison failed]"};
            }
            case Property::Spectral:
                for (int i = 1; i <= n; ++i)
                    if (!check_spectral_invariance(pack.mono, map, i, t, opt.mode))
                        return {false, " [T_" + std::to_string(i) + "]"};
                return {true, ""};
            case Property::LaxFromMap: {
                LaxOutcome o = verify_lax_from_map(pack, map, t, opt.mode);
                return {o.ok, o.strict_ok ? "" : " [strict comparison failed]"};
            }
        }
        throw Error("run_property: unreachable");
    };

    CheckReport report;
    report.property = to_string(prop);
    report.map_id = entry.id;
    report.n = n;
    report.seed = opt.seed;
    if (property_needs_lax(prop)) report.mode = to_string(opt.mode);

    auto start = std::chrono::steady_clock::now();
    SplitMix64 rng(opt.seed);
    long cap = attempts_cap(opt.samples);
    while (report.samples_checked < opt.samples) {
        if (report.samples_attempted >= cap)
            throw ExhaustedRejections("run_property: rejection cap hit for '" + entry.id + "' / " +
                                      to_string(prop));
        ++report.samples_attempted;
        LabeledTuple t = sample_tuple(sampler, rng, n);
        try {
            SampleOutcome o = evaluate(t);
            ++report.samples_checked;
            if (!o.ok) report.failures.push_back(tuple_str(t) + o.detail);
        } catch (const SampleRejected&) {
            ++report.samples_rejected;
        }
    }
    report.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - start)
                            .count();
    return report;
}

namespace {

void emit_components(const SlotValue& v,
                     const std::function<void(const std::string&, const Rat&)>& put) {
    switch (kind_of(v)) {
        case SlotKind::Scalar:
            put("x", std::get<Rat>(v));
            break;
        case SlotKind::ScalarPair: {
            const auto& p = std::get<ScalarPair>(v);
            put("first", p.first);
            put("second", p.second);
            break;
        }
        case SlotKind::Vector:
        case SlotKind::Tuple: {
            const Vec& vec =
                kind_of(v) == SlotKind::Vector ? std::get<Vec>(v) : std::get<TupleValue>(v).entries;
            for (size_t k = 0; k < vec.size(); ++k) put("x" + std::to_string(k + 1), vec[k]);
            break;
        }
        case SlotKind::VectorCovector: {
            const auto& p = std::get<VectorCovector>(v);
            for (size_t k = 0; k < p.xi.size(); ++k) put("xi" + std::to_string(k + 1), p.xi[k]);
            for (size_t k = 0; k < p.eta.size(); ++k) put("eta" + std::to_string(k + 1), p.eta[k]);
            break;
        }
        case SlotKind::ProjectorPair: {
            // the projector matrix is the canonical invariant content
            const auto& p = std::get<ProjectorPair>(v);
            QMatrix proj = projector_from_pair(p.kernel, p.image);
            for (int i = 0; i < proj.rows(); ++i)
                for (int j = 0; j < proj.cols(); ++j)
                    put("P" + std::to_string(i + 1) + std::to_string(j + 1), proj.at(i, j));
            break;
        }
    }
}

} // namespace

void write_orbit_csv(const CatalogEntry& entry, const CatalogConfig& cfg, const OrbitOptions& opt,
                     std::ostream& out) {
    if (opt.steps < 1) throw Error("orbit: steps must be >= 1");
    if (opt.n < 2) throw Error("orbit: n must be >= 2");
    if (entry.yang_baxter != std::optional<bool>(true) ||
        (entry.reversible.has_value() && !*entry.reversible))
        throw Error("orbit: map '" + entry.id + "' is not a reversible Yang-Baxter map per its descriptor");
    if (opt.transfer_index < 1 || opt.transfer_index > opt.n)
        throw Error("orbit: transfer index out of range");

    YbMap map = entry.make(cfg);
    TupleSampler sampler = entry.sampler(cfg);
    SplitMix64 rng(opt.seed);
    LabeledTuple t = sample_tuple(sampler, rng, opt.n);

    bool has_lax = entry.has_lax();
    LaxPack pack;
    int inv_count = 0;
    int degree_bound = 0;
    if (has_lax) {
        pack = entry.lax(cfg);
        for (int k = 1; k <= t.size(); ++k)
            degree_bound =
                std::max(degree_bound, pack.mono.build(t.values[k - 1], t.param(k)).max_degree());
        degree_bound *= opt.n;
        inv_count = static_cast<int>(
            monodromy_invariants(pack.mono, t, degree_bound).size());
    }

    out << "step,slot,component_name,value";
    for (int k = 0; k < inv_count; ++k) out << ",inv_" << k;
    out << "\n";

    for (long step = 1; step <= opt.steps; ++step) {
        try {
            t = transfer_map(map, opt.transfer_index, t);
        } catch (const SampleRejected& e) {
            throw SingularInput("orbit: singular input at step " + std::to_string(step) + ": " +
                                e.what());
        }
        std::string inv_suffix;
        if (has_lax) {
            for (const Rat& c : monodromy_invariants(pack.mono, t, degree_bound))
                inv_suffix += "," + rat_str(c);
        }
        for (int slot = 1; slot <= t.size(); ++slot) {
            emit_components(t.values[slot - 1], [&](const std::string& name, const Rat& val) {
                out << step << "," << slot << "," << name << "," << rat_str(val) << inv_suffix
                    << "\n";
            });
        }
    }
}

} // namespace ybx
