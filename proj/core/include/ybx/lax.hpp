#pragma once

#include "ybx/map_instance.hpp"
#include "ybx/polymatrix.hpp"
#include "ybx/subspace.hpp"

#include <functional>
#include <string>

namespace ybx {

enum class LaxMode { Strict, Projective };

std::string to_string(LaxMode m);

/// A rule slot value -> matrix polynomial in the spectral parameter.
/// is_inverse marks families whose build returns the inverse of the matrix
/// realizing the map's action; the refactorization identities then hold with
/// the factor order reversed.
struct LaxFamily {
    std::string id;
    int size = 2;
    LaxMode mode = LaxMode::Strict;
    bool is_inverse = false;
    std::function<PolyMatrix(const SlotValue&, const OptRat&)> build;
};

/// The 2x2 matrix [[f, f^2 + beta - zeta], [1, f]]; det == zeta - beta.
PolyMatrix lax_adler(const Rat& f, const Rat& beta);

/// Polynomial form (zeta - lambda) I + 2 lambda P for the projector with
/// kernel K and image L; lambda must be nonzero. The rational form is this
/// divided by (zeta - lambda).
PolyMatrix lax_projector(const Subspace& kernel, const Subspace& image, const Rat& lambda);

enum class CrystalSide { A, B };

/// The bidiagonal-with-corner matrices attached to the geometric-crystal map:
/// side B has the tuple on the diagonal, -1 above it and the spectral
/// parameter (negated) in the lower-left corner; side A is the transpose
/// pattern with the corner upper-right.
PolyMatrix lax_crystal(const Vec& tuple, CrystalSide side);

LaxFamily adler_lax_family();
LaxFamily projector_lax_family(int dim);
/// Projector family applied to the rank-1 projector induced by a
/// vector-covector slot.
LaxFamily soliton_lax_family(int dim);
LaxFamily crystal_lax_family(int dim, CrystalSide side);

/// Everything Lax-related a catalog map carries.
struct LaxPack {
    LaxFamily mono;  // forward refactorization family: refactor, spectral, orbit
    LaxFamily lax_a; // A-side of the two map-derived relations
    LaxFamily lax_b; // B-side
    bool crystal_embedding = false; // also check the projective action on embedded coordinates
};

struct LaxOutcome {
    bool ok = false;        // under the requested mode
    bool strict_ok = false; // the strict comparison, always computed first
};

/// A(x,lam) A(y,mu) == A(y~,mu) A(x~,lam) with (x~,y~) = R(lam,mu)(x,y),
/// compared coefficient-by-coefficient (strict) or up to one scalar rational
/// function of the spectral parameter (projective, by cross-multiplication).
LaxOutcome verify_refactorization(const LaxFamily& fam, const YbMap& map, const LabeledTuple& t2,
                                  LaxMode mode);

/// The two relations a map of the special action form induces: the A-relation
/// on slots (1,2) and the B-relation on slots (2,3), with the respective
/// third parameter playing the spectral role. For crystal families the
/// projective action on embedded coordinates is checked as well.
LaxOutcome verify_lax_from_map(const LaxPack& pack, const YbMap& map, const LabeledTuple& t3,
                               LaxMode mode);

/// M = A(x_n) A(x_{n-1}) ... A(x_1), factor of the last slot leftmost.
/// Families built from inverse matrices compose ascending instead, which is
/// the inverse of the direct family's monodromy and has the same invariants.
PolyMatrix monodromy(const LaxFamily& fam, const LabeledTuple& t);

/// char_poly coefficients of the monodromy before and after T_i, compared
/// exactly (strict) or with each coefficient ratio normalized by the
/// determinant (projective).
bool check_spectral_invariance(const LaxFamily& fam, const YbMap& map, int i,
                               const LabeledTuple& t, LaxMode mode);

/// Flattened char_poly coefficients of the monodromy: for each eta-power the
/// spectral-parameter coefficients up to the stated degree bound, in a fixed
/// documented order. These are the orbit invariant columns.
std::vector<Rat> monodromy_invariants(const LaxFamily& fam, const LabeledTuple& t, int zeta_degree_bound);

} // namespace ybx
