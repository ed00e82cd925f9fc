#pragma once

#include "ybx/rational.hpp"

#include <initializer_list>
#include <string>
#include <vector>

namespace ybx {

/// Dense matrix over Q. Immutable in spirit: operations return new values.
class QMatrix {
public:
    QMatrix() : rows_(0), cols_(0) {}
    QMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols, Rat(0)) {}
    QMatrix(std::initializer_list<std::initializer_list<Rat>> rows);

    static QMatrix identity(int n);
    /// Matrix whose columns are the given vectors.
    static QMatrix from_columns(const std::vector<Vec>& cols);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    Rat& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
    const Rat& at(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

    Vec column(int j) const;
    Vec row(int i) const;

    QMatrix transpose() const;
    QMatrix operator-() const;
    friend QMatrix operator+(const QMatrix& a, const QMatrix& b);
    friend QMatrix operator-(const QMatrix& a, const QMatrix& b);
    friend QMatrix operator*(const QMatrix& a, const QMatrix& b);
    QMatrix scaled(const Rat& c) const;
    Vec mul_vec(const Vec& v) const;

    friend bool operator==(const QMatrix& a, const QMatrix& b);
    friend bool operator!=(const QMatrix& a, const QMatrix& b) { return !(a == b); }

    bool is_zero() const;

    /// Determinant by fraction-free Bareiss elimination over Z after clearing
    /// row denominators; keeps intermediate operands small.
    Rat det() const;

    /// Inverse by exact Gauss-Jordan. Throws SingularInput if not invertible.
    QMatrix inverse() const;

    /// Reduced row echelon form; returns rank, pivot columns out-param optional.
    QMatrix rref(int* rank_out = nullptr, std::vector<int>* pivots_out = nullptr) const;

    int rank() const;

    std::string str() const;

private:
    int rows_, cols_;
    std::vector<Rat> a_;
};

/// Basis of the null space of M, as columns of the returned matrix
/// (cols == nullity; 0-column matrix for trivial kernel).
QMatrix kernel_basis(const QMatrix& m);

/// True when a == c*b for a single nonzero rational c; implemented by
/// cross-multiplying every entry pair against the first nonzero entry.
bool proportional(const QMatrix& a, const QMatrix& b);
bool proportional(const Vec& a, const Vec& b);

} // namespace ybx
