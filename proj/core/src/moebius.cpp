#include "ybx/moebius.hpp"

#include "ybx/errors.hpp"

namespace ybx {

ProjectivePoint::ProjectivePoint(Rat p_, Rat q_) : p(std::move(p_)), q(std::move(q_)) {
    if (p == 0 && q == 0) throw Error("ProjectivePoint: (0:0) is not a point");
}

Rat ProjectivePoint::value() const {
    if (q == 0) throw SingularInput("ProjectivePoint: point at infinity has no affine value");
    return p / q;
}

std::string ProjectivePoint::str() const {
    return "(" + rat_str(p) + ":" + rat_str(q) + ")";
}

Moebius::Moebius(Rat a, Rat b, Rat c, Rat d)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
    if (a_ * d_ - b_ * c_ == 0) throw Error("Moebius: ad - bc == 0");
}

Moebius operator*(const Moebius& m1, const Moebius& m2) {
    return {m1.a_ * m2.a_ + m1.b_ * m2.c_, m1.a_ * m2.b_ + m1.b_ * m2.d_,
            m1.c_ * m2.a_ + m1.d_ * m2.c_, m1.c_ * m2.b_ + m1.d_ * m2.d_};
}

bool Moebius::is_identity() const {
    return b_ == 0 && c_ == 0 && a_ == d_;
}

ProjectivePoint Moebius::operator()(const ProjectivePoint& z) const {
    return {a_ * z.p + b_ * z.q, c_ * z.p + d_ * z.q};
}

Rat Moebius::operator()(const Rat& z) const {
    Rat den = c_ * z + d_;
    if (den == 0) throw SingularInput("Moebius: pole at " + rat_str(z));
    return (a_ * z + b_) / den;
}

ProjectivePoint moebius_apply(const Moebius& m, const ProjectivePoint& z) {
    return m(z);
}

} // namespace ybx
