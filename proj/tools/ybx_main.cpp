// ybx: exact verification of Yang-Baxter maps, their transfer dynamics and
// Lax representations. Subcommands: check, orbit, catalog.

#include "CLI11.hpp"
#include "json.hpp"

#include "ybx/errors.hpp"
#include "ybx/suite.hpp"

#include <chrono>
#include <ctime>
#include <fstream>
#include <iostream>
#include <optional>

using json = nlohmann::ordered_json;
using namespace ybx;

namespace {

constexpr int kSchemaVersion = 1;

std::string utc_timestamp() {
    auto now = std::chrono::system_clock::now();
    std::time_t t = std::chrono::system_clock::to_time_t(now);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
    return buf;
}

struct Output {
    std::optional<std::string> path;

    template <typename Fn>
    int with_stream(Fn&& fn) const {
        if (!path) return fn(std::cout);
        std::ofstream f(*path);
        if (!f) {
            std::cerr << "ybx: cannot open output file: " << *path << "\n";
            return 2;
        }
        return fn(f);
    }
};

json report_to_json(const CheckReport& r) {
    json j;
    j["schema_version"] = kSchemaVersion;
    j["timestamp"] = utc_timestamp();
    j["map"] = r.map_id;
    j["property"] = r.property;
    j["n"] = r.n;
    j["samples_attempted"] = r.samples_attempted;
    j["samples_rejected"] = r.samples_rejected;
    j["samples_checked"] = r.samples_checked;
    j["failures"] = r.failures;
    j["seed"] = r.seed;
    j["mode"] = r.mode.empty() ? json(nullptr) : json(r.mode);
    j["pass"] = r.pass();
    return j;
}

void report_to_text(const CheckReport& r, std::ostream& out) {
    out << "map=" << r.map_id << " property=" << r.property << " n=" << r.n
        << " seed=" << r.seed;
    if (!r.mode.empty()) out << " mode=" << r.mode;
    out << " attempted=" << r.samples_attempted << " rejected=" << r.samples_rejected
        << " checked=" << r.samples_checked << " elapsed_ms=" << r.elapsed_ms
        << " pass=" << (r.pass() ? "yes" : "no") << "\n";
    for (const auto& w : r.failures) out << "  failure: " << w << "\n";
}

std::vector<Property> default_properties(const CatalogEntry& e) {
    std::vector<Property> props{Property::YangBaxter, Property::Reversibility,
                                Property::TransferComm, Property::TransferProd};
    if (e.has_lax()) {
        props.push_back(Property::Refactor);
        props.push_back(Property::Spectral);
        props.push_back(Property::LaxFromMap);
    }
    return props;
}

struct CheckArgs {
    std::string map_id;
    std::string file;
    std::vector<std::string> properties;
    int n = 3;
    long samples = 100;
    std::uint64_t seed = 1;
    int dim = 2;
    int rank = 1;
    std::string mode = "strict";
    std::string format = "text";
    std::string out_path;
};

int cmd_check(const CheckArgs& a) {
    CatalogEntry entry;
    if (!a.file.empty()) {
        entry = custom_entry(quadri_load(a.file));
    } else {
        const CatalogEntry* found = find_map(a.map_id);
        if (!found) {
            std::cerr << "ybx: unknown map '" << a.map_id << "' (see 'ybx catalog')\n";
            return 2;
        }
        entry = *found;
    }

    std::vector<Property> props;
    if (a.properties.empty()) {
        props = default_properties(entry);
    } else {
        for (const auto& s : a.properties) props.push_back(property_from_string(s));
    }

    RunOptions opt;
    opt.n = a.n;
    opt.samples = a.samples;
    opt.seed = a.seed;
    opt.mode = a.mode == "projective" ? LaxMode::Projective : LaxMode::Strict;
    CatalogConfig cfg{a.dim, a.rank};

    std::vector<CheckReport> reports;
    for (Property p : props) reports.push_back(run_property(entry, cfg, p, opt));

    bool all_pass = true;
    for (const auto& r : reports) all_pass &= r.pass();

    Output out{a.out_path.empty() ? std::nullopt : std::optional<std::string>(a.out_path)};
    int rc = out.with_stream([&](std::ostream& os) {
        if (a.format == "json") {
            if (reports.size() == 1) {
                os << report_to_json(reports[0]).dump(2) << "\n";
            } else {
                json arr = json::array();
                for (const auto& r : reports) arr.push_back(report_to_json(r));
                os << arr.dump(2) << "\n";
            }
        } else {
            for (const auto& r : reports) report_to_text(r, os);
        }
        return 0;
    });
    if (rc != 0) return rc;
    return all_pass ? 0 : 1;
}

struct OrbitArgs {
    std::string map_id;
    int n = 3;
    long steps = 50;
    std::uint64_t seed = 1;
    int index = 1;
    int dim = 2;
    int rank = 1;
    std::string out_path;
};

int cmd_orbit(const OrbitArgs& a) {
    const CatalogEntry* entry = find_map(a.map_id);
    if (!entry) {
        std::cerr << "ybx: unknown map '" << a.map_id << "'\n";
        return 2;
    }
    OrbitOptions opt;
    opt.n = a.n;
    opt.steps = a.steps;
    opt.seed = a.seed;
    opt.transfer_index = a.index;
    CatalogConfig cfg{a.dim, a.rank};
    Output out{a.out_path.empty() ? std::nullopt : std::optional<std::string>(a.out_path)};
    return out.with_stream([&](std::ostream& os) {
        try {
            write_orbit_csv(*entry, cfg, opt, os);
        } catch (const SampleRejected& e) {
            std::cerr << "ybx: " << e.what() << "\n";
            return 1;
        }
        return 0;
    });
}

struct CatalogArgs {
    std::string format = "text";
    std::string file;
};

json flag_json(const std::optional<bool>& f) {
    return f ? json(*f) : json(nullptr);
}

int cmd_catalog(const CatalogArgs& a) {
    if (!a.file.empty()) {
        QuadriMap q = quadri_load(a.file);
        if (a.format == "json") {
            json j;
            j["id"] = "custom";
            json coeffs;
            auto triple = [](const Poly& p) {
                return json::array({rat_str(p.coeff(2)), rat_str(p.coeff(1)), rat_str(p.coeff(0))});
            };
            coeffs["a"] = triple(q.a);
            coeffs["b"] = triple(q.b);
            coeffs["c"] = triple(q.c);
            coeffs["d"] = triple(q.d);
            coeffs["A"] = triple(q.A);
            coeffs["B"] = triple(q.B);
            coeffs["C"] = triple(q.C);
            coeffs["D"] = triple(q.D);
            j["coefficients"] = coeffs;
            j["bidegree"] = json::array({q.bidegree().first, q.bidegree().second});
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << "custom map from " << a.file << ":\n" << quadri_serialize(q);
        }
        return 0;
    }
    if (a.format == "json") {
        json arr = json::array();
        for (const auto& e : catalog()) {
            json j;
            j["id"] = e.id;
            j["slot"] = to_string(e.kind);
            j["param_arity"] = e.param_arity;
            j["yang_baxter"] = flag_json(e.yang_baxter);
            j["reversible"] = flag_json(e.reversible);
            j["parameters"] = e.param_note;
            j["has_lax"] = e.has_lax();
            j["summary"] = e.summary;
            arr.push_back(j);
        }
        std::cout << arr.dump(2) << "\n";
    } else {
        auto flag = [](const std::optional<bool>& f) {
            return f ? (*f ? "yes" : "no") : "unasserted";
        };
        for (const auto& e : catalog()) {
            std::cout << e.id << ": slot=" << to_string(e.kind) << " params=" << e.param_arity
                      << " yang_baxter=" << flag(e.yang_baxter)
                      << " reversible=" << flag(e.reversible) << " lax=" << (e.has_lax() ? "yes" : "no")
                      << "\n    " << e.summary;
            if (!e.param_note.empty()) std::cout << " (" << e.param_note << ")";
            std::cout << "\n";
        }
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact checks for Yang-Baxter maps, transfer dynamics and Lax matrices"};
    app.require_subcommand(1);

    CheckArgs check;
    CLI::App* c = app.add_subcommand("check", "run property suites and emit a report");
    auto* map_opt = c->add_option("--map", check.map_id, "catalog map id");
    auto* file_opt =
        c->add_option("--file", check.file, "custom quadrirational coefficient file");
    map_opt->excludes(file_opt);
    c->add_option("--property", check.properties,
                  "property selector: yb, reversibility, transfer-comm, transfer-prod, refactor, "
                  "spectral, lax-from-map (repeatable; default: all applicable)")
        ->check(CLI::IsMember({"yb", "reversibility", "transfer-comm", "transfer-prod", "refactor",
                               "spectral", "lax-from-map"}));
    c->add_option("--n", check.n, "tuple length for transfer/spectral properties")
        ->check(CLI::Range(2, 16));
    c->add_option("--samples", check.samples, "admissible samples per property")
        ->check(CLI::PositiveNumber);
    c->add_option("--seed", check.seed, "64-bit sampling seed");
    c->add_option("--dim", check.dim, "vector/ambient dimension for dimension-parametrized maps")
        ->check(CLI::Range(1, 16));
    c->add_option("--rank", check.rank, "projector rank for grassmann maps")->check(CLI::Range(1, 15));
    c->add_option("--mode", check.mode, "Lax comparison mode")
        ->check(CLI::IsMember({"strict", "projective"}));
    c->add_option("--format", check.format, "report format")->check(CLI::IsMember({"json", "text"}));
    c->add_option("--out", check.out_path, "output path (default: stdout)");

    OrbitArgs orbit;
    CLI::App* o = app.add_subcommand("orbit", "iterate a transfer map, write a CSV trajectory");
    o->add_option("--map", orbit.map_id, "catalog map id")->required();
    o->add_option("--n", orbit.n, "tuple length")->check(CLI::Range(2, 16));
    o->add_option("--steps", orbit.steps, "iteration count")->check(CLI::PositiveNumber);
    o->add_option("--seed", orbit.seed, "64-bit sampling seed");
    o->add_option("--i", orbit.index, "transfer map index T_i")->check(CLI::Range(1, 16));
    o->add_option("--dim", orbit.dim, "vector/ambient dimension")->check(CLI::Range(1, 16));
    o->add_option("--rank", orbit.rank, "projector rank")->check(CLI::Range(1, 15));
    o->add_option("--out", orbit.out_path, "output path (default: stdout)");

    CatalogArgs cat;
    CLI::App* k = app.add_subcommand("catalog", "list built-in maps or echo a custom map file");
    k->add_option("--format", cat.format, "listing format")->check(CLI::IsMember({"json", "text"}));
    k->add_option("--file", cat.file, "custom coefficient file to parse and echo");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (c->parsed()) {
            if (check.map_id.empty() && check.file.empty()) {
                std::cerr << "ybx check: one of --map or --file is required\n";
                return 2;
            }
            return cmd_check(check);
        }
        if (o->parsed()) return cmd_orbit(orbit);
        if (k->parsed()) return cmd_catalog(cat);
    } catch (const Error& e) {
        std::cerr << "ybx: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "ybx: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
