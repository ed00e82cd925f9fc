#include "ybx/poly.hpp"

#include "ybx/errors.hpp"

namespace ybx {

void Poly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Poly Poly::monomial(const Rat& c, int k) {
    Poly p;
    if (c != 0) {
        p.coeffs_.assign(k + 1, Rat(0));
        p.coeffs_[k] = c;
    }
    return p;
}

Rat Poly::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(coeffs_.size())) return 0;
    return coeffs_[k];
}

Rat Poly::eval(const Rat& x) const {
    Rat acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rat(0));
    for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rat(0));
    for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<Rat> c(a.coeffs_.size() + b.coeffs_.size() - 1, Rat(0));
    for (size_t i = 0; i < a.coeffs_.size(); ++i)
        for (size_t j = 0; j < b.coeffs_.size(); ++j)
            c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return Poly(std::move(c));
}

Poly Poly::scaled(const Rat& c) const {
    Poly r;
    if (c == 0) return r;
    r.coeffs_ = coeffs_;
    for (auto& x : r.coeffs_) x *= c;
    return r;
}

Poly Poly::divided_by(const Rat& c) const {
    if (c == 0) throw Error("Poly: division by zero scalar");
    Poly r = *this;
    for (auto& x : r.coeffs_) x /= c;
    return r;
}

std::string Poly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::string out;
    for (int k = degree(); k >= 0; --k) {
        Rat c = coeff(k);
        if (c == 0) continue;
        if (!out.empty()) {
            out += (c < 0) ? " - " : " + ";
            if (c < 0) c = -c;
        } else if (c < 0) {
            out += "-";
            c = -c;
        }
        if (k == 0 || c != 1) out += rat_str(c);
        if (k > 0) {
            if (c != 1) out += "*";
            out += var;
            if (k > 1) out += "^" + std::to_string(k);
        }
    }
    return out;
}

} // namespace ybx
