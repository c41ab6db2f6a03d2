#pragma once

#include "rinehart/poly.hpp"

#include <utility>
#include <vector>

namespace rinehart {

/// Dense matrix over Q[x_1..x_k].
class PolyMatrix {
public:
    PolyMatrix(int rows, int cols, int vars)
        : rows_(rows), cols_(cols), vars_(vars), data_(rows * cols, Poly::zero(vars)) {}

    static PolyMatrix identity(int n, int vars) {
        PolyMatrix m(n, n, vars);
        for (int i = 0; i < n; ++i) m.at(i, i) = Poly::one(vars);
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    int vars() const { return vars_; }
    Poly& at(int i, int j) { return data_[i * cols_ + j]; }
    const Poly& at(int i, int j) const { return data_[i * cols_ + j]; }

    PolyMatrix transpose() const {
        PolyMatrix t(cols_, rows_, vars_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
        return t;
    }

    PolyMatrix operator-() const {
        PolyMatrix t(rows_, cols_, vars_);
        for (int i = 0; i < rows_ * cols_; ++i) t.data_[i] = -data_[i];
        return t;
    }

    friend PolyMatrix operator+(const PolyMatrix& a, const PolyMatrix& b) {
        PolyMatrix r(a.rows_, a.cols_, a.vars_);
        for (int i = 0; i < a.rows_ * a.cols_; ++i) r.data_[i] = a.data_[i] + b.data_[i];
        return r;
    }
    friend PolyMatrix operator-(const PolyMatrix& a, const PolyMatrix& b) {
        PolyMatrix r(a.rows_, a.cols_, a.vars_);
        for (int i = 0; i < a.rows_ * a.cols_; ++i) r.data_[i] = a.data_[i] - b.data_[i];
        return r;
    }
    friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
        PolyMatrix r(a.rows_, b.cols_, a.vars_);
        for (int i = 0; i < a.rows_; ++i)
            for (int k = 0; k < a.cols_; ++k) {
                if (a.at(i, k).is_zero()) continue;
                for (int j = 0; j < b.cols_; ++j) r.at(i, j) += a.at(i, k) * b.at(k, j);
            }
        return r;
    }
    friend PolyMatrix operator*(const Poly& c, const PolyMatrix& a) {
        PolyMatrix r(a.rows_, a.cols_, a.vars_);
        for (int i = 0; i < a.rows_ * a.cols_; ++i) r.data_[i] = c * a.data_[i];
        return r;
    }
    friend bool operator==(const PolyMatrix& a, const PolyMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    PolyMatrix kron(const PolyMatrix& o) const {
        PolyMatrix r(rows_ * o.rows_, cols_ * o.cols_, vars_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) {
                if (at(i, j).is_zero()) continue;
                for (int p = 0; p < o.rows_; ++p)
                    for (int q = 0; q < o.cols_; ++q)
                        r.at(i * o.rows_ + p, j * o.cols_ + q) = at(i, j) * o.at(p, q);
            }
        return r;
    }

    PolyMatrix map_derivation(const Derivation& d) const {
        PolyMatrix r(rows_, cols_, vars_);
        for (int i = 0; i < rows_ * cols_; ++i) r.data_[i] = d.apply(data_[i]);
        return r;
    }

    bool is_zero() const {
        for (auto& p : data_)
            if (!p.is_zero()) return false;
        return true;
    }

private:
    int rows_, cols_, vars_;
    std::vector<Poly> data_;
};

/// Exact polynomial quotient; throws if the division is not exact. Only
/// used where exactness is guaranteed (Bareiss pivots).
inline Poly divide_exact(const Poly& p, const Poly& q) {
    if (q.is_zero()) throw Error("exact division by zero polynomial");
    Poly rem = p;
    Poly quot(p.vars());
    const auto& qlead = *q.terms().rbegin();
    while (!rem.is_zero()) {
        const auto& rlead = *rem.terms().rbegin();
        if (!mi_leq(qlead.first, rlead.first))
            throw Error("polynomial division is not exact");
        MultiIndex e = mi_sub(rlead.first, qlead.first);
        Rational c = rlead.second / qlead.second;
        Poly t = Poly::monomial(p.vars(), e, c);
        quot += t;
        rem -= t * q;
    }
    return quot;
}

/// Fraction-free Bareiss determinant.
inline Poly bareiss_det(PolyMatrix m) {
    if (m.rows() != m.cols()) throw Error("determinant of a non-square matrix");
    const int n = m.rows();
    if (n == 0) return Poly::one(m.vars());
    Poly prev = Poly::one(m.vars());
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        int pivot = -1;
        for (int r = k; r < n; ++r)
            if (!m.at(r, k).is_zero()) { pivot = r; break; }
        if (pivot < 0) return Poly::zero(m.vars());
        if (pivot != k) {
            for (int j = 0; j < n; ++j) std::swap(m.at(pivot, j), m.at(k, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j)
                m.at(i, j) =
                    divide_exact(m.at(k, k) * m.at(i, j) - m.at(i, k) * m.at(k, j), prev);
            m.at(i, k) = Poly::zero(m.vars());
        }
        prev = m.at(k, k);
    }
    Poly det = m.at(n - 1, n - 1);
    if (sign < 0) det = -det;
    return det;
}

/// Rank over the fraction field Frac(A), fraction-free elimination with
/// deterministic pivoting (first nonzero row, columns left to right).
inline int bareiss_rank(PolyMatrix m) {
    const int rows = m.rows(), cols = m.cols();
    Poly prev = Poly::one(m.vars());
    int rank = 0;
    int row = 0;
    for (int col = 0; col < cols && row < rows; ++col) {
        int pivot = -1;
        for (int r = row; r < rows; ++r)
            if (!m.at(r, col).is_zero()) { pivot = r; break; }
        if (pivot < 0) continue;
        if (pivot != row)
            for (int j = 0; j < cols; ++j) std::swap(m.at(pivot, j), m.at(row, j));
        for (int i = row + 1; i < rows; ++i) {
            for (int j = col + 1; j < cols; ++j)
                m.at(i, j) =
                    divide_exact(m.at(row, col) * m.at(i, j) - m.at(i, col) * m.at(row, j),
                                 prev);
            m.at(i, col) = Poly::zero(m.vars());
        }
        prev = m.at(row, col);
        ++rank;
        ++row;
    }
    return rank;
}

} // namespace rinehart
