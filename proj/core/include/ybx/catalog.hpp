#pragma once

#include "ybx/lax.hpp"
#include "ybx/quadrirational.hpp"
#include "ybx/sampler.hpp"

#include <optional>

namespace ybx {

// Closed-form map rules. Each throws SingularInput / ParameterCollision /
// DegenerateOutput outside its domain and is exact otherwise.

/// f1~ = f2 - (b1 - b2)/(f1 + f2), f2~ = f1 - (b2 - b1)/(f1 + f2).
std::pair<Rat, Rat> adler(const Rat& beta1, const Rat& beta2, const Rat& f1, const Rat& f2);

/// Two-soliton polarization update; outputs are projective representatives.
std::pair<VectorCovector, VectorCovector> soliton_rank1(const Rat& lambda1, const Rat& lambda2,
                                                        const VectorCovector& p1,
                                                        const VectorCovector& p2);

/// Kernel/image update
///   K1~ = (I - 2 l2/(l1+l2) P2) K1,   L2~ = (I + 2 l1/(l2-l1) P1) L2,
///   K2~ = (I - 2 l1/(l1+l2) P1) K2,   L1~ = (I + 2 l2/(l1-l2) P2) L1.
std::pair<ProjectorPair, ProjectorPair> grassmann_projector(const Rat& lambda1, const Rat& lambda2,
                                                            const ProjectorPair& p1,
                                                            const ProjectorPair& p2);

/// Image-only variant: kernels recomputed as orthogonal complements w.r.t.
/// the given symmetric form. Throws IsotropicSubspace when a subspace meets
/// its own complement.
std::pair<Subspace, Subspace> grassmannian_selfadjoint(const Rat& lambda1, const Rat& lambda2,
                                                       const Subspace& image1,
                                                       const Subspace& image2,
                                                       const QMatrix& form);
std::pair<Subspace, Subspace> grassmannian_selfadjoint(const Rat& lambda1, const Rat& lambda2,
                                                       const Subspace& image1,
                                                       const Subspace& image2);

/// Geometric-crystal update x_j ~ = x_j P_j / P_{j-1}, y_j ~ = y_j P_{j-1} / P_j
/// with cyclic indices, P_0 meaning P_n. Preserves both coordinate products.
std::pair<Vec, Vec> crystal(const Vec& x, const Vec& y);

/// Configuration knobs for maps living in a family of spaces.
struct CatalogConfig {
    int dim = 2;  // vector dimension / ambient dimension
    int rank = 1; // projector rank where applicable
};

struct CatalogEntry {
    std::string id;
    std::string summary;
    SlotKind kind = SlotKind::Scalar;
    int param_arity = 1;
    // Expected flags as asserted in the literature, not computed facts;
    // nullopt when no assertion is made.
    std::optional<bool> yang_baxter;
    std::optional<bool> reversible;
    std::string param_note;
    bool uses_dim = false;
    bool uses_rank = false;

    std::function<YbMap(const CatalogConfig&)> make;
    std::function<TupleSampler(const CatalogConfig&)> sampler;
    std::function<LaxPack(const CatalogConfig&)> lax; // empty when no Lax family ships

    bool has_lax() const { return static_cast<bool>(lax); }
};

/// All built-in maps: adler, soliton-rank1, grassmann, grassmann-sa, crystal,
/// f1..f5, fv-negated, swap, identity.
const std::vector<CatalogEntry>& catalog();
const CatalogEntry* find_map(const std::string& id);

/// A custom quadrirational map wrapped as a parameterless catalog entry.
CatalogEntry custom_entry(const QuadriMap& q, const std::string& id = "custom");

/// YbMap built from an explicit coefficient table (parameterless).
YbMap quadri_to_map(const QuadriMap& q, const std::string& id);

/// YbMap wrapping a normal form with slot-attached parameters (alpha, beta).
YbMap quadri_form_to_map(QuadriForm form);

/// Conjugation of a scalar-slot parameterized map by four Moebius transforms:
/// substitute x -> sx(x), y -> sy(y), post-compose outputs with su, sv.
YbMap conjugate_map(const YbMap& base, const Moebius& sx, const Moebius& sy, const Moebius& su,
                    const Moebius& sv);

/// Diagonal change of variables z -> m(z) on all four coordinates.
YbMap conjugate_map_diagonal(const YbMap& base, const Moebius& m);

} // namespace ybx
