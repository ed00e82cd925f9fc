#pragma once

#include "ybx/catalog.hpp"
#include "ybx/checks.hpp"

#include <iosfwd>

namespace ybx {

enum class Property { YangBaxter, Reversibility, TransferComm, TransferProd, Refactor, Spectral, LaxFromMap };

Property property_from_string(const std::string& s);
std::string to_string(Property p);
/// Whether the property needs a Lax family.
bool property_needs_lax(Property p);
/// Tuple length a property works on; 0 means "taken from options".
int property_fixed_n(Property p);

struct RunOptions {
    int n = 3; // tuple length for transfer/spectral properties
    long samples = 100;
    std::uint64_t seed = 1;
    LaxMode mode = LaxMode::Strict;
};

/// Draw seeded samples and evaluate one property until `samples` admissible
/// ones have been checked. Samples whose evaluation leaves the map's domain
/// anywhere in a composition chain are rejected and counted, not failed.
/// Throws ExhaustedRejections when the rejection cap is hit.
CheckReport run_property(const CatalogEntry& entry, const CatalogConfig& cfg, Property prop,
                         const RunOptions& opt);

struct OrbitOptions {
    int n = 3;
    long steps = 50;
    std::uint64_t seed = 1;
    int transfer_index = 1;
};

/// Iterate T_i on a seeded initial tuple, one CSV row per (step, slot,
/// component). When the map carries a Lax family the flattened char_poly
/// coefficients of the monodromy are appended as inv_k columns; they are
/// constant down the file exactly when the spectral invariants hold.
/// Throws Error naming the step when an application becomes singular.
void write_orbit_csv(const CatalogEntry& entry, const CatalogConfig& cfg, const OrbitOptions& opt,
                     std::ostream& out);

} // namespace ybx
