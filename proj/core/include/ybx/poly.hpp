#pragma once

#include "ybx/rational.hpp"

#include <string>
#include <vector>

namespace ybx {

/// Univariate polynomial over Q, coefficients stored ascending and trimmed.
/// The variable is the spectral parameter unless stated otherwise.
class Poly {
public:
    Poly() = default;
    Poly(const Rat& c) { coeffs_.push_back(c); trim(); }          // NOLINT(google-explicit-constructor)
    Poly(long c) : Poly(Rat(c)) {}                                 // NOLINT(google-explicit-constructor)
    explicit Poly(std::vector<Rat> ascending) : coeffs_(std::move(ascending)) { trim(); }

    /// The monomial c * X^k.
    static Poly monomial(const Rat& c, int k);
    /// The variable X itself.
    static Poly var() { return monomial(1, 1); }

    bool is_zero() const { return coeffs_.empty(); }
    /// Degree; -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    Rat coeff(int k) const;
    const std::vector<Rat>& coeffs() const { return coeffs_; }

    Rat eval(const Rat& x) const;

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    Poly scaled(const Rat& c) const;
    /// Exact division by a scalar.
    Poly divided_by(const Rat& c) const;

    std::string str(const std::string& var = "z") const;

private:
    void trim();
    std::vector<Rat> coeffs_;
};

} // namespace ybx
