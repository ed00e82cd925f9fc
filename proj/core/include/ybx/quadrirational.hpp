#pragma once

#include "ybx/moebius.hpp"
#include "ybx/poly.hpp"

#include <array>
#include <iosfwd>
#include <string>
#include <utility>

namespace ybx {

/// A quadrirational map of the projective line squared,
///   u = (a(y) x + b(y)) / (c(y) x + d(y)),
///   v = (A(x) y + B(x)) / (C(x) y + D(x)),
/// with all eight coefficient polynomials of degree at most 2.
struct QuadriMap {
    // lowercase: polynomials in y, uppercase: polynomials in x
    Poly a, b, c, d;
    Poly A, B, C, D;

    /// Throws ParseError when a degree bound is violated or one of the two
    /// fractions is degenerate (numerator proportional to denominator).
    void validate() const;

    /// Highest coefficient degree of each fraction, e.g. {2,2} for the
    /// generic subclass.
    std::pair<int, int> bidegree() const;

    std::string str() const;
};

/// Forward application. Throws SingularInput on vanishing denominators.
std::pair<Rat, Rat> quadri_apply(const QuadriMap& q, const Rat& x, const Rat& y);

/// Companion map (x, v) -> (y, u): y recovered by inverting the second
/// fraction as a Moebius transformation in y, u then read from the first.
/// Throws DegenerateFiber when that inversion is singular at (x, v).
std::pair<Rat, Rat> companion(const QuadriMap& q, const Rat& x, const Rat& v);

/// Change of variables: substitute x -> sx(x), y -> sy(y) into the map and
/// post-compose the outputs with su, sv. Degree bounds are preserved.
QuadriMap conjugate(const QuadriMap& q, const Moebius& sx, const Moebius& sy, const Moebius& su,
                    const Moebius& sv);

/// The diagonal change of variables z -> m(z) applied to every one of
/// x, y, u, v, i.e. conjugate(q, m^-1, m^-1, m, m). This is the action that
/// preserves the Yang-Baxter property; pushing the same transform into all
/// four argument slots of conjugate() does not.
QuadriMap conjugate_diagonal(const QuadriMap& q, const Moebius& m);

/// Scale each fraction so its first nonzero coefficient equals 1; the map is
/// unchanged and structural comparison becomes meaningful.
QuadriMap normalized(const QuadriMap& q);

/// The five quadrirational normal forms.
enum class QuadriForm { FI, FII, FIII, FIV, FV };

QuadriForm quadri_form_from_string(const std::string& s); // "f1".."f5"
std::string to_string(QuadriForm f);

/// Closed-form evaluation of a normal form with parameters (alpha, beta).
std::pair<Rat, Rat> quadrirational(QuadriForm form, const Rat& alpha, const Rat& beta,
                                   const Rat& x, const Rat& y);

/// The same map as an explicit coefficient table.
QuadriMap quadri_form_map(QuadriForm form, const Rat& alpha, const Rat& beta);

/// u = -y - P, v = -x - P with P = (alpha-beta)/(x-y): the F_V variant with
/// negated inputs, which is quadrirational but not Yang-Baxter.
std::pair<Rat, Rat> fv_negated(const Rat& alpha, const Rat& beta, const Rat& x, const Rat& y);

/// Coefficient-file I/O. Format: eight lines "name: c2 c1 c0" with names
/// a b c d A B C D, coefficients rational strings, '#' comments allowed.
QuadriMap quadri_parse(std::istream& in);
QuadriMap quadri_load(const std::string& path);
std::string quadri_serialize(const QuadriMap& q);

} // namespace ybx
