#pragma once

#include "ybx/matrix.hpp"
#include "ybx/poly.hpp"

#include <vector>

namespace ybx {

/// Square matrix with entries polynomial in the spectral parameter.
class PolyMatrix {
public:
    PolyMatrix() : n_(0) {}
    explicit PolyMatrix(int n) : n_(n), a_(static_cast<size_t>(n) * n) {}

    static PolyMatrix identity(int n);
    /// Constant matrix lifted into the polynomial ring.
    static PolyMatrix constant(const QMatrix& m);
    /// c(zeta) * I.
    static PolyMatrix scalar(int n, const Poly& c);

    int size() const { return n_; }
    Poly& at(int i, int j) { return a_[static_cast<size_t>(i) * n_ + j]; }
    const Poly& at(int i, int j) const { return a_[static_cast<size_t>(i) * n_ + j]; }

    friend PolyMatrix operator+(const PolyMatrix& a, const PolyMatrix& b);
    friend PolyMatrix operator-(const PolyMatrix& a, const PolyMatrix& b);
    friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
    friend bool operator==(const PolyMatrix& a, const PolyMatrix& b) {
        return a.n_ == b.n_ && a.a_ == b.a_;
    }
    friend bool operator!=(const PolyMatrix& a, const PolyMatrix& b) { return !(a == b); }

    Poly trace() const;
    /// Specialize the spectral parameter.
    QMatrix eval(const Rat& zeta) const;
    int max_degree() const;

    std::string str() const;

private:
    int n_;
    std::vector<Poly> a_;
};

/// Coefficients of eta^k in det(M - eta I), k = 0..size, each a polynomial in
/// the spectral parameter. Computed by Faddeev-LeVerrier over the polynomial
/// ring, which stays fraction-free apart from exact division by integers.
std::vector<Poly> char_poly(const PolyMatrix& m);

/// True when a == c(zeta) * b for one nonzero rational function c; tested by
/// cross-multiplying all entries against the first nonzero entry.
bool proportional(const PolyMatrix& a, const PolyMatrix& b);

} // namespace ybx
