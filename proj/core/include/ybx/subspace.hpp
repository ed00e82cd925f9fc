#pragma once

#include "ybx/matrix.hpp"

#include <utility>

namespace ybx {

/// Linear subspace of Q^n held in reduced column echelon form, the unique
/// canonical representative of its column space. Two Subspace values are
/// equal iff their bases are entrywise equal, so subspace equality is
/// syntactic.
class Subspace {
public:
    Subspace() : ambient_(0) {}

    /// Span of the columns of m (dependent columns dropped).
    static Subspace span(const QMatrix& m);
    static Subspace span(const std::vector<Vec>& vectors, int ambient_dim);
    static Subspace zero(int ambient_dim) { return span(QMatrix(ambient_dim, 0)); }
    static Subspace full(int ambient_dim) { return span(QMatrix::identity(ambient_dim)); }

    int ambient_dim() const { return ambient_; }
    int dim() const { return basis_.cols(); }
    /// ambient_dim x dim matrix in reduced column echelon form.
    const QMatrix& basis() const { return basis_; }

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
    }
    friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

    bool contains(const Vec& v) const;

    std::string str() const;

private:
    int ambient_;
    QMatrix basis_;
};

/// Image of a subspace under a linear map.
Subspace apply(const QMatrix& m, const Subspace& s);

/// The projector P with Ker P = K and Im P = L.
/// Requires dim K + dim L == ambient and K complementary to L; otherwise
/// throws ComplementarityViolation.
QMatrix projector_from_pair(const Subspace& kernel, const Subspace& image);

/// Inverse of projector_from_pair: (image, kernel) of an idempotent matrix.
/// Throws NotAProjector if P*P != P.
std::pair<Subspace, Subspace> image_kernel(const QMatrix& p);

/// Orthogonal complement of s with respect to a symmetric bilinear form
/// (identity matrix = the standard form on Q^n).
Subspace orthogonal_complement(const Subspace& s, const QMatrix& form);
Subspace orthogonal_complement(const Subspace& s);

bool complementary(const Subspace& a, const Subspace& b);

} // namespace ybx
