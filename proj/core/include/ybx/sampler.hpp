#pragma once

#include "ybx/map_instance.hpp"
#include "ybx/rng.hpp"

#include <functional>

namespace ybx {

// Seeded sampling of slot values. Rational components are drawn with
// numerator in [-9, 9] and denominator in [1, 4]; everything downstream is a
// deterministic function of the 64-bit seed.

Rat sample_rat(SplitMix64& rng);
Rat sample_rat_nonzero(SplitMix64& rng);

Vec sample_vec(SplitMix64& rng, int dim);
Vec sample_vec_nonzero_coords(SplitMix64& rng, int dim);

/// (xi, eta) with nonvanishing pairing.
VectorCovector sample_vector_covector(SplitMix64& rng, int dim);

/// Complementary pair (K, L) with dim L == rank, built from the columns of a
/// random invertible matrix; non-complementary draws are rejected internally.
ProjectorPair sample_projector_pair(SplitMix64& rng, int dim, int rank);

/// Pair (L^perp, L) under the standard form, rejecting L with L meeting its
/// own complement (cannot happen for the standard form over Q, kept as a
/// guard for alternative forms).
ProjectorPair sample_selfadjoint_pair(SplitMix64& rng, int dim, int rank);

/// Parameter vectors.
std::vector<Rat> sample_params_plain(SplitMix64& rng, int n);
std::vector<Rat> sample_params_nonzero_distinct_abs(SplitMix64& rng, int n);
/// Values avoiding the listed forbidden rationals, pairwise distinct.
std::vector<Rat> sample_params_avoiding(SplitMix64& rng, int n, const std::vector<Rat>& forbidden);

/// How a catalog entry draws one tuple.
struct TupleSampler {
    int param_arity = 1;
    std::function<SlotValue(SplitMix64&)> value;
    std::function<std::vector<Rat>(SplitMix64&, int)> params; // unused when arity == 0
};

LabeledTuple sample_tuple(const TupleSampler& s, SplitMix64& rng, int n);

/// Deterministic batch: same seed, same list. Tuples here satisfy only the
/// value-level constraints; map-domain rejection happens at check time.
std::vector<LabeledTuple> sample(const TupleSampler& s, std::uint64_t seed, int n, long count);

} // namespace ybx
