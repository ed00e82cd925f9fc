#include "ybx/matrix.hpp"

#include "ybx/errors.hpp"

namespace ybx {

QMatrix::QMatrix(std::initializer_list<std::initializer_list<Rat>> rows) {
    rows_ = static_cast<int>(rows.size());
    cols_ = rows_ ? static_cast<int>(rows.begin()->size()) : 0;
    a_.reserve(static_cast<size_t>(rows_) * cols_);
    for (const auto& r : rows) {
        if (static_cast<int>(r.size()) != cols_) throw Error("QMatrix: ragged initializer");
        for (const auto& x : r) a_.push_back(x);
    }
}

QMatrix QMatrix::identity(int n) {
    QMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

QMatrix QMatrix::from_columns(const std::vector<Vec>& cols) {
    if (cols.empty()) return QMatrix(0, 0);
    int n = static_cast<int>(cols[0].size());
    QMatrix m(n, static_cast<int>(cols.size()));
    for (int j = 0; j < m.cols(); ++j) {
        if (static_cast<int>(cols[j].size()) != n) throw Error("from_columns: ragged input");
        for (int i = 0; i < n; ++i) m.at(i, j) = cols[j][i];
    }
    return m;
}

Vec QMatrix::column(int j) const {
    Vec v(rows_);
    for (int i = 0; i < rows_; ++i) v[i] = at(i, j);
    return v;
}

Vec QMatrix::row(int i) const {
    Vec v(cols_);
    for (int j = 0; j < cols_; ++j) v[j] = at(i, j);
    return v;
}

QMatrix QMatrix::transpose() const {
    QMatrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

QMatrix QMatrix::operator-() const {
    QMatrix r = *this;
    for (auto& x : r.a_) x = -x;
    return r;
}

QMatrix operator+(const QMatrix& a, const QMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error("QMatrix+: shape mismatch");
    QMatrix r = a;
    for (size_t i = 0; i < r.a_.size(); ++i) r.a_[i] += b.a_[i];
    return r;
}

QMatrix operator-(const QMatrix& a, const QMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error("QMatrix-: shape mismatch");
    QMatrix r = a;
    for (size_t i = 0; i < r.a_.size(); ++i) r.a_[i] -= b.a_[i];
    return r;
}

QMatrix operator*(const QMatrix& a, const QMatrix& b) {
    if (a.cols_ != b.rows_) throw Error("QMatrix*: inner dimensions disagree");
    QMatrix r(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
        for (int k = 0; k < a.cols_; ++k) {
            const Rat& aik = a.at(i, k);
            if (aik == 0) continue;
            for (int j = 0; j < b.cols_; ++j) r.at(i, j) += aik * b.at(k, j);
        }
    return r;
}

QMatrix QMatrix::scaled(const Rat& c) const {
    QMatrix r = *this;
    for (auto& x : r.a_) x *= c;
    return r;
}

Vec QMatrix::mul_vec(const Vec& v) const {
    if (static_cast<int>(v.size()) != cols_) throw Error("mul_vec: size mismatch");
    Vec r(rows_, Rat(0));
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r[i] += at(i, j) * v[j];
    return r;
}

bool operator==(const QMatrix& a, const QMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
}

bool QMatrix::is_zero() const {
    for (const auto& x : a_)
        if (x != 0) return false;
    return true;
}

Rat QMatrix::det() const {
    if (!is_square()) throw Error("det: not square");
    int n = rows_;
    if (n == 0) return 1;

    // Clear denominators row by row, then run integer Bareiss.
    std::vector<std::vector<Int>> m(n, std::vector<Int>(n));
    Int scale = 1;
    for (int i = 0; i < n; ++i) {
        Int l = 1;
        for (int j = 0; j < n; ++j) {
            Int d = at(i, j).get_den();
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
        }
        for (int j = 0; j < n; ++j) {
            Rat x = at(i, j) * Rat(l);
            m[i][j] = x.get_num();
        }
        scale *= l;
    }

    Int prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (m[k][k] == 0) {
            int p = -1;
            for (int r = k + 1; r < n; ++r)
                if (m[r][k] != 0) { p = r; break; }
            if (p < 0) return 0;
            std::swap(m[k], m[p]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) {
                Int t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
        prev = m[k][k];
    }
    Rat r(m[n - 1][n - 1] * sign, scale);
    r.canonicalize();
    return r;
}

QMatrix QMatrix::rref(int* rank_out, std::vector<int>* pivots_out) const {
    QMatrix m = *this;
    int r = 0;
    std::vector<int> pivots;
    for (int c = 0; c < cols_ && r < rows_; ++c) {
        int p = -1;
        for (int i = r; i < rows_; ++i)
            if (m.at(i, c) != 0) { p = i; break; }
        if (p < 0) continue;
        if (p != r)
            for (int j = 0; j < cols_; ++j) std::swap(m.at(p, j), m.at(r, j));
        Rat inv = m.at(r, c);
        for (int j = c; j < cols_; ++j) m.at(r, j) /= inv;
        for (int i = 0; i < rows_; ++i) {
            if (i == r || m.at(i, c) == 0) continue;
            Rat f = m.at(i, c);
            for (int j = c; j < cols_; ++j) m.at(i, j) -= f * m.at(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    if (rank_out) *rank_out = r;
    if (pivots_out) *pivots_out = pivots;
    return m;
}

int QMatrix::rank() const {
    int r = 0;
    rref(&r);
    return r;
}

QMatrix QMatrix::inverse() const {
    if (!is_square()) throw Error("inverse: not square");
    int n = rows_;
    QMatrix aug(n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug.at(i, j) = at(i, j);
        aug.at(i, n + i) = 1;
    }
    int r = 0;
    aug = aug.rref(&r);
    for (int i = 0; i < n; ++i)
        if (aug.at(i, i) != 1) throw SingularInput("inverse: singular matrix");
    QMatrix inv(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv.at(i, j) = aug.at(i, n + j);
    return inv;
}

std::string QMatrix::str() const {
    std::string out = "[";
    for (int i = 0; i < rows_; ++i) {
        if (i) out += "; ";
        for (int j = 0; j < cols_; ++j) {
            if (j) out += ",";
            out += rat_str(at(i, j));
        }
    }
    return out + "]";
}

QMatrix kernel_basis(const QMatrix& m) {
    int rank = 0;
    std::vector<int> pivots;
    QMatrix r = m.rref(&rank, &pivots);
    std::vector<bool> is_pivot(m.cols(), false);
    for (int c : pivots) is_pivot[c] = true;

    std::vector<Vec> cols;
    for (int c = 0; c < m.cols(); ++c) {
        if (is_pivot[c]) continue;
        Vec v(m.cols(), Rat(0));
        v[c] = 1;
        for (int i = 0; i < rank; ++i) v[pivots[i]] = -r.at(i, c);
        cols.push_back(std::move(v));
    }
    if (cols.empty()) return QMatrix(m.cols(), 0);
    return QMatrix::from_columns(cols);
}

namespace {
template <typename It>
bool proportional_range(It a_begin, It a_end, It b_begin) {
    // anchor on first nonzero entry of b, cross-multiply everything else
    It pa = a_begin, pb = b_begin;
    It anchor_a = a_end, anchor_b = a_end;
    for (; pa != a_end; ++pa, ++pb) {
        if (*pb != 0) { anchor_a = pa; anchor_b = pb; break; }
    }
    if (anchor_b == a_end) {
        // b is zero; proportional only if a is zero too
        for (It q = a_begin; q != a_end; ++q)
            if (*q != 0) return false;
        return true;
    }
    if (*anchor_a == 0) return false; // scalar would be zero
    pa = a_begin; pb = b_begin;
    for (; pa != a_end; ++pa, ++pb)
        if (*pa * *anchor_b != *pb * *anchor_a) return false;
    return true;
}
} // namespace

bool proportional(const QMatrix& a, const QMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    Vec fa, fb;
    fa.reserve(static_cast<size_t>(a.rows()) * a.cols());
    fb.reserve(fa.capacity());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) {
            fa.push_back(a.at(i, j));
            fb.push_back(b.at(i, j));
        }
    return proportional_range(fa.begin(), fa.end(), fb.begin());
}

bool proportional(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) return false;
    return proportional_range(a.begin(), a.end(), b.begin());
}

} // namespace ybx
