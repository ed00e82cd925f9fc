#include "ybx/subspace.hpp"

#include "ybx/errors.hpp"

namespace ybx {

Subspace Subspace::span(const QMatrix& m) {
    Subspace s;
    s.ambient_ = m.rows();
    // Reduced column echelon form = transpose of the RREF of the transpose.
    int rank = 0;
    QMatrix r = m.transpose().rref(&rank);
    QMatrix basis(m.rows(), rank);
    for (int i = 0; i < rank; ++i)
        for (int j = 0; j < m.rows(); ++j) basis.at(j, i) = r.at(i, j);
    s.basis_ = std::move(basis);
    return s;
}

Subspace Subspace::span(const std::vector<Vec>& vectors, int ambient_dim) {
    if (vectors.empty()) return zero(ambient_dim);
    QMatrix m = QMatrix::from_columns(vectors);
    if (m.rows() != ambient_dim) throw Error("Subspace::span: ambient mismatch");
    return span(m);
}

bool Subspace::contains(const Vec& v) const {
    if (static_cast<int>(v.size()) != ambient_) throw Error("contains: size mismatch");
    QMatrix aug(ambient_, dim() + 1);
    for (int i = 0; i < ambient_; ++i) {
        for (int j = 0; j < dim(); ++j) aug.at(i, j) = basis_.at(i, j);
        aug.at(i, dim()) = v[i];
    }
    return aug.rank() == dim();
}

std::string Subspace::str() const {
    std::string out = "span{";
    for (int j = 0; j < dim(); ++j) {
        if (j) out += ", ";
        out += vec_str(basis_.column(j));
    }
    return out + "}";
}

Subspace apply(const QMatrix& m, const Subspace& s) {
    return Subspace::span(m * s.basis());
}

bool complementary(const Subspace& a, const Subspace& b) {
    if (a.ambient_dim() != b.ambient_dim()) return false;
    int n = a.ambient_dim();
    if (a.dim() + b.dim() != n) return false;
    QMatrix joint(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < a.dim(); ++j) joint.at(i, j) = a.basis().at(i, j);
        for (int j = 0; j < b.dim(); ++j) joint.at(i, a.dim() + j) = b.basis().at(i, j);
    }
    return joint.det() != 0;
}

QMatrix projector_from_pair(const Subspace& kernel, const Subspace& image) {
    int n = kernel.ambient_dim();
    if (image.ambient_dim() != n) throw Error("projector_from_pair: ambient mismatch");
    if (kernel.dim() + image.dim() != n || !complementary(kernel, image))
        throw ComplementarityViolation("projector_from_pair: K and L are not complementary");
    // Columns [L | K]; P maps L-coordinates to themselves, K-coordinates to 0.
    QMatrix c(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < image.dim(); ++j) c.at(i, j) = image.basis().at(i, j);
        for (int j = 0; j < kernel.dim(); ++j) c.at(i, image.dim() + j) = kernel.basis().at(i, j);
    }
    QMatrix d(n, n);
    for (int j = 0; j < image.dim(); ++j) d.at(j, j) = 1;
    return c * d * c.inverse();
}

std::pair<Subspace, Subspace> image_kernel(const QMatrix& p) {
    if (!p.is_square()) throw NotAProjector("image_kernel: not square");
    if (p * p != p) throw NotAProjector("image_kernel: P*P != P");
    Subspace image = Subspace::span(p);
    Subspace kernel = Subspace::span(kernel_basis(p));
    return {image, kernel};
}

Subspace orthogonal_complement(const Subspace& s, const QMatrix& form) {
    // v in complement iff basis^T * form * v == 0.
    return Subspace::span(kernel_basis(s.basis().transpose() * form));
}

Subspace orthogonal_complement(const Subspace& s) {
    return orthogonal_complement(s, QMatrix::identity(s.ambient_dim()));
}

} // namespace ybx
