#pragma once

// Dense exact linear algebra over Scalar: row reduction, rank, null spaces
// and coordinates with respect to a (not necessarily orthogonal) basis.

#include "acm5/scalar.hpp"

#include <cassert>
#include <optional>
#include <stdexcept>
#include <vector>

namespace acm5::linalg {

using Vec = std::vector<Scalar>;
using Mat = std::vector<Vec>; // row-major

inline bool is_zero(const Vec& v)
{
    for (const auto& x : v)
        if (sgn(x) != 0)
            return false;
    return true;
}

inline Scalar dot(const Vec& a, const Vec& b)
{
    assert(a.size() == b.size());
    Scalar s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (sgn(a[i]) != 0 && sgn(b[i]) != 0)
            s += a[i] * b[i];
    return s;
}

/// Reduced row echelon form in place; returns the pivot columns.
inline std::vector<std::size_t> rref(Mat& m)
{
    std::vector<std::size_t> pivots;
    if (m.empty())
        return pivots;
    const std::size_t cols = m.front().size();
    std::size_t row = 0;
    for (std::size_t c = 0; c < cols && row < m.size(); ++c) {
        std::size_t p = row;
        while (p < m.size() && sgn(m[p][c]) == 0)
            ++p;
        if (p == m.size())
            continue;
        std::swap(m[row], m[p]);
        Scalar inv = 1 / m[row][c];
        for (std::size_t j = c; j < cols; ++j)
            if (sgn(m[row][j]) != 0)
                m[row][j] *= inv;
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == row || sgn(m[r][c]) == 0)
                continue;
            Scalar f = m[r][c];
            for (std::size_t j = c; j < cols; ++j)
                if (sgn(m[row][j]) != 0)
                    m[r][j] -= f * m[row][j];
        }
        pivots.push_back(c);
        ++row;
    }
    return pivots;
}

inline std::size_t rank(Mat rows)
{
    return rref(rows).size();
}

/// Basis of {x : rows * x = 0}. One vector per free column in increasing
/// column order, with a 1 in that column (the lexicographic basis).
inline std::vector<Vec> null_space(Mat rows, std::size_t ncols)
{
    for (const auto& r : rows)
        if (r.size() != ncols)
            throw std::invalid_argument("null_space: row length mismatch");
    auto pivots = rref(rows);
    std::vector<bool> is_pivot(ncols, false);
    for (auto p : pivots)
        is_pivot[p] = true;
    std::vector<Vec> basis;
    for (std::size_t f = 0; f < ncols; ++f) {
        if (is_pivot[f])
            continue;
        Vec v(ncols, Scalar(0));
        v[f] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r)
            v[pivots[r]] = -rows[r][f];
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Reduce a spanning set to an independent one, keeping the first
/// occurrence of each new direction.
inline std::vector<Vec> independent_subset(const std::vector<Vec>& vs)
{
    std::vector<Vec> kept;
    Mat echelon;
    for (const auto& v : vs) {
        Mat trial = echelon;
        trial.push_back(v);
        if (rank(trial) > echelon.size()) {
            kept.push_back(v);
            echelon = std::move(trial);
        }
    }
    return kept;
}

/// Inverse of a square matrix by Gauss-Jordan. Throws on singular input.
inline Mat inverse(const Mat& a)
{
    const std::size_t n = a.size();
    Mat aug(n, Vec(2 * n, Scalar(0)));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            aug[i][j] = a[i][j];
        aug[i][n + i] = 1;
    }
    auto piv = rref(aug);
    if (piv.size() < n || piv[n - 1] != n - 1)
        throw std::domain_error("inverse: singular matrix");
    Mat inv(n, Vec(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            inv[i][j] = aug[i][n + j];
    return inv;
}

/// Coordinates with respect to a fixed linearly independent family
/// b_1..b_n in Q^m: coords(t) = (B^T B)^{-1} B^T t, with an exact
/// membership check. The family does not need to be orthogonal.
class SpanCoordinates {
public:
    SpanCoordinates() = default;

    explicit SpanCoordinates(std::vector<Vec> basis) : basis_(std::move(basis))
    {
        const std::size_t n = basis_.size();
        if (n == 0)
            return;
        Mat gram(n, Vec(n));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i; j < n; ++j)
                gram[i][j] = gram[j][i] = dot(basis_[i], basis_[j]);
        Mat ginv = inverse(gram); // throws if dependent
        const std::size_t m = basis_.front().size();
        dual_.assign(n, Vec(m, Scalar(0)));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t k = 0; k < n; ++k) {
                if (sgn(ginv[i][k]) == 0)
                    continue;
                for (std::size_t c = 0; c < m; ++c)
                    if (sgn(basis_[k][c]) != 0)
                        dual_[i][c] += ginv[i][k] * basis_[k][c];
            }
    }

    std::size_t size() const { return basis_.size(); }
    const std::vector<Vec>& basis() const { return basis_; }

    /// Coordinates of t, or nullopt when t is outside the span.
    std::optional<Vec> coords(const Vec& t) const
    {
        Vec c(basis_.size());
        for (std::size_t i = 0; i < basis_.size(); ++i)
            c[i] = dot(dual_[i], t);
        if (combine(c) != t)
            return std::nullopt;
        return c;
    }

    Vec combine(const Vec& c) const
    {
        Vec out(basis_.empty() ? 0 : basis_.front().size(), Scalar(0));
        for (std::size_t i = 0; i < basis_.size(); ++i) {
            if (sgn(c[i]) == 0)
                continue;
            for (std::size_t j = 0; j < out.size(); ++j)
                if (sgn(basis_[i][j]) != 0)
                    out[j] += c[i] * basis_[i][j];
        }
        return out;
    }

private:
    std::vector<Vec> basis_;
    Mat dual_;
};

/// dim(U) == dim(V) == dim(U + V).
inline bool same_span(const std::vector<Vec>& u, const std::vector<Vec>& v)
{
    Mat all = u;
    all.insert(all.end(), v.begin(), v.end());
    const auto ru = rank(u);
    return ru == rank(v) && ru == rank(all);
}

} // namespace acm5::linalg
