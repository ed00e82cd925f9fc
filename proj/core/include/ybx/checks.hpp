#pragma once

#include "ybx/map_instance.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace ybx {

/// Outcome of running one property over a batch of seeded samples.
/// pass <=> no failures and at least one sample actually checked.
struct CheckReport {
    std::string property;
    std::string map_id;
    int n = 2;
    long samples_attempted = 0;
    long samples_rejected = 0;
    long samples_checked = 0;
    std::vector<std::string> failures; // witness inputs, in sample order
    std::uint64_t seed = 0;
    long elapsed_ms = 0;
    std::string mode; // strict/projective for Lax properties, empty otherwise

    bool pass() const { return failures.empty() && samples_checked > 0; }
};

// Single-sample property primitives. Each returns whether the identity holds
// on the given tuple and throws a SampleRejected subclass when any needed
// application leaves the map's domain (rejection, not failure).

/// Both composition chains of the parameter-dependent Yang-Baxter relation on
/// a 3-slot tuple: R12 then R13 then R23 against R23 then R13 then R12, all
/// three output slots compared exactly.
bool check_yang_baxter(const YbMap& map, const LabeledTuple& t3);

/// R applied on slots (1,2) then on slots (2,1) recovers the input exactly.
bool check_reversibility(const YbMap& map, const LabeledTuple& t2);

/// T_i T_j == T_j T_i on the tuple.
bool check_transfer_commutativity(const YbMap& map, int i, int j, const LabeledTuple& t);

/// T_1 T_2 ... T_n == Id on the tuple (T_n applied first).
bool check_transfer_product(const YbMap& map, const LabeledTuple& t);

/// S_i^2 == Id for the braid form S = P R; equivalent to reversibility.
bool check_braid_involutive(const YbMap& map, int i, const LabeledTuple& t);

/// Family identity R_21 = R on slots (1,2): applying R with swapped slot
/// order and swapping back agrees with the direct application.
bool check_r21_equals_r(const YbMap& map, const LabeledTuple& t2);

} // namespace ybx
