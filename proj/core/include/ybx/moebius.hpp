#pragma once

#include "ybx/rational.hpp"

#include <string>

namespace ybx {

/// Point of the projective line, a homogeneous pair (p : q), not both zero.
/// Equality is scale-equivalence, tested by cross-multiplication.
struct ProjectivePoint {
    Rat p, q;

    ProjectivePoint(Rat p_, Rat q_);
    static ProjectivePoint infinity() { return {1, 0}; }
    static ProjectivePoint affine(const Rat& x) { return {x, 1}; }

    bool is_infinity() const { return q == 0; }
    /// Affine value p/q; throws SingularInput at infinity.
    Rat value() const;

    friend bool operator==(const ProjectivePoint& a, const ProjectivePoint& b) {
        return a.p * b.q == b.p * a.q;
    }
    friend bool operator!=(const ProjectivePoint& a, const ProjectivePoint& b) { return !(a == b); }

    std::string str() const;
};

/// z -> (a z + b) / (c z + d) with ad - bc != 0.
class Moebius {
public:
    Moebius(Rat a, Rat b, Rat c, Rat d);

    static Moebius identity() { return {1, 0, 0, 1}; }
    static Moebius negation() { return {-1, 0, 0, 1}; }
    /// z -> 1/z.
    static Moebius inversion() { return {0, 1, 1, 0}; }

    const Rat& a() const { return a_; }
    const Rat& b() const { return b_; }
    const Rat& c() const { return c_; }
    const Rat& d() const { return d_; }

    Moebius inverse() const { return {d_, -b_, -c_, a_}; }
    /// Composition: (m1 * m2)(z) == m1(m2(z)).
    friend Moebius operator*(const Moebius& m1, const Moebius& m2);

    bool is_identity() const;

    /// Projective application (a p + b q : c p + d q); poles are absorbed.
    ProjectivePoint operator()(const ProjectivePoint& z) const;
    /// Affine application; throws SingularInput on a pole.
    Rat operator()(const Rat& z) const;

private:
    Rat a_, b_, c_, d_;
};

ProjectivePoint moebius_apply(const Moebius& m, const ProjectivePoint& z);

} // namespace ybx
