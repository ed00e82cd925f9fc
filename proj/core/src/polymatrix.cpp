#include "ybx/polymatrix.hpp"

#include "ybx/errors.hpp"

namespace ybx {

PolyMatrix PolyMatrix::identity(int n) {
    PolyMatrix m(n);
    for (int i = 0; i < n; ++i) m.at(i, i) = Poly(1);
    return m;
}

PolyMatrix PolyMatrix::constant(const QMatrix& q) {
    if (!q.is_square()) throw Error("PolyMatrix::constant: not square");
    PolyMatrix m(q.rows());
    for (int i = 0; i < q.rows(); ++i)
        for (int j = 0; j < q.cols(); ++j) m.at(i, j) = Poly(q.at(i, j));
    return m;
}

PolyMatrix PolyMatrix::scalar(int n, const Poly& c) {
    PolyMatrix m(n);
    for (int i = 0; i < n; ++i) m.at(i, i) = c;
    return m;
}

PolyMatrix operator+(const PolyMatrix& a, const PolyMatrix& b) {
    if (a.n_ != b.n_) throw Error("PolyMatrix+: size mismatch");
    PolyMatrix r = a;
    for (size_t i = 0; i < r.a_.size(); ++i) r.a_[i] += b.a_[i];
    return r;
}

PolyMatrix operator-(const PolyMatrix& a, const PolyMatrix& b) {
    if (a.n_ != b.n_) throw Error("PolyMatrix-: size mismatch");
    PolyMatrix r = a;
    for (size_t i = 0; i < r.a_.size(); ++i) r.a_[i] -= b.a_[i];
    return r;
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
    if (a.n_ != b.n_) throw Error("PolyMatrix*: size mismatch");
    PolyMatrix r(a.n_);
    for (int i = 0; i < a.n_; ++i)
        for (int k = 0; k < a.n_; ++k) {
            if (a.at(i, k).is_zero()) continue;
            for (int j = 0; j < a.n_; ++j) r.at(i, j) += a.at(i, k) * b.at(k, j);
        }
    return r;
}

Poly PolyMatrix::trace() const {
    Poly t;
    for (int i = 0; i < n_; ++i) t += at(i, i);
    return t;
}

QMatrix PolyMatrix::eval(const Rat& zeta) const {
    QMatrix m(n_, n_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) m.at(i, j) = at(i, j).eval(zeta);
    return m;
}

int PolyMatrix::max_degree() const {
    int d = -1;
    for (const auto& p : a_) d = std::max(d, p.degree());
    return d;
}

std::string PolyMatrix::str() const {
    std::string out = "[";
    for (int i = 0; i < n_; ++i) {
        if (i) out += "; ";
        for (int j = 0; j < n_; ++j) {
            if (j) out += ", ";
            out += at(i, j).str();
        }
    }
    return out + "]";
}

std::vector<Poly> char_poly(const PolyMatrix& m) {
    int n = m.size();
    // Faddeev-LeVerrier for p(eta) = det(eta I - M) = eta^n + c_{n-1} eta^{n-1} + ... + c_0:
    //   N_1 = M,  c_{n-1} = -tr N_1
    //   N_k = M (N_{k-1} + c_{n-k+1} I),  c_{n-k} = -tr(N_k) / k
    std::vector<Poly> c(n + 1);
    c[n] = Poly(1);
    if (n == 0) return c;
    PolyMatrix nk = m;
    c[n - 1] = -nk.trace();
    for (int k = 2; k <= n; ++k) {
        nk = m * (nk + PolyMatrix::scalar(n, c[n - k + 1]));
        c[n - k] = (-nk.trace()).divided_by(Rat(k));
    }
    // det(M - eta I) = (-1)^n det(eta I - M)
    if (n % 2 != 0)
        for (auto& p : c) p = -p;
    return c;
}

bool proportional(const PolyMatrix& a, const PolyMatrix& b) {
    if (a.size() != b.size()) return false;
    int n = a.size();
    const Poly* anchor_a = nullptr;
    const Poly* anchor_b = nullptr;
    for (int i = 0; i < n && !anchor_b; ++i)
        for (int j = 0; j < n; ++j)
            if (!b.at(i, j).is_zero()) {
                anchor_a = &a.at(i, j);
                anchor_b = &b.at(i, j);
                break;
            }
    if (!anchor_b) {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (!a.at(i, j).is_zero()) return false;
        return true;
    }
    if (anchor_a->is_zero()) return false;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (a.at(i, j) * *anchor_b != b.at(i, j) * *anchor_a) return false;
    return true;
}

} // namespace ybx
