#pragma once

// Seeded generators shared by the test suites.

#include "acm5/catalog.hpp"

#include <random>
#include <vector>

namespace acm5::testing {

using Rng = std::mt19937;

/// p/q with |p| <= 3, q in {1, 2, 3}; zero with probability ~ zero_weight.
inline Scalar small_rational(Rng& rng, double zero_weight = 0.0)
{
    std::uniform_real_distribution<double> u(0.0, 1.0);
    if (u(rng) < zero_weight)
        return 0;
    std::uniform_int_distribution<int> num(-3, 3), den(1, 3);
    Scalar s(num(rng), den(rng));
    s.canonicalize();
    return s;
}

inline KForm random_form(Rng& rng, int degree, double zero_weight = 0.3)
{
    std::vector<Scalar> c(static_cast<std::size_t>(binomial5(degree)));
    for (auto& x : c)
        x = small_rational(rng, zero_weight);
    return KForm::from_coeffs(degree, std::move(c));
}

inline ThreeTensor random_tensor(Rng& rng, Shape s = Shape::General, double zero_weight = 0.5)
{
    std::vector<Scalar> c(ThreeTensor::kSize);
    for (auto& x : c)
        x = small_rational(rng, zero_weight);
    return ThreeTensor::from_coeffs(std::move(c), s);
}

/// Random element of Lambda^1 (x) Lambda^2.
inline ThreeTensor random_a(Rng& rng)
{
    ThreeTensor t(Shape::A);
    for (int i = 0; i < kDim; ++i)
        t += otimes(one_form(unit(i)), random_form(rng, 2, 0.5));
    return t.with_shape(Shape::A);
}

/// Random element of Lambda^2 (x) Lambda^1.
inline ThreeTensor random_t(Rng& rng)
{
    ThreeTensor t(Shape::T);
    for (int i = 0; i < kDim; ++i)
        t += otimes(random_form(rng, 2, 0.5), one_form(unit(i)));
    return t.with_shape(Shape::T);
}

inline ThreeTensor random_in_module(Rng& rng, const ModuleBasis& m)
{
    ThreeTensor t(Shape::General);
    for (const auto& b : m.basis)
        t += small_rational(rng) * b;
    return t;
}

/// Random Gamma in the sum of the listed W-modules; every listed component
/// is nonzero.
inline ThreeTensor random_gamma(Rng& rng, const std::vector<int>& classes)
{
    ThreeTensor g(Shape::W);
    for (int i : classes) {
        ThreeTensor part;
        do
            part = random_in_module(rng, w_decomposition().module("W" + std::to_string(i)));
        while (part.is_zero());
        g += part;
    }
    return g.with_shape(Shape::W);
}

/// Random tensor with every slice in u(2).
inline ThreeTensor random_u2_part(Rng& rng)
{
    ThreeTensor t(Shape::A);
    for (int i = 0; i < kDim; ++i) {
        KForm s(2);
        for (const auto& gen : u2_generators())
            s += small_rational(rng, 0.5) * gen;
        t += otimes(one_form(unit(i)), s);
    }
    return t.with_shape(Shape::A);
}

/// Pointwise frame with connection forms Gamma + (random u(2) part).
inline FrameSpec pointwise_frame(const ThreeTensor& omega, std::string name = "pointwise")
{
    Coeff3 w = zero_coeff3();
    for (int i = 0; i < kDim; ++i)
        for (int j = 0; j < kDim; ++j)
            for (int k = 0; k < kDim; ++k)
                w[i][j][k] = omega(k, i, j);
    return {std::move(name), std::nullopt, w};
}

/// Random subset of 1..10 (nonempty unless allow_empty).
inline std::vector<int> random_classes(Rng& rng, const std::vector<int>& from, bool allow_empty = false)
{
    std::bernoulli_distribution coin(0.4);
    std::vector<int> out;
    do {
        out.clear();
        for (int i : from)
            if (coin(rng))
                out.push_back(i);
    } while (out.empty() && !allow_empty);
    return out;
}

using Mat5 = linalg::Mat;

inline Mat5 identity5()
{
    Mat5 m(kDim, linalg::Vec(kDim, Scalar(0)));
    for (int i = 0; i < kDim; ++i)
        m[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
    return m;
}

inline Mat5 mat_mul(const Mat5& a, const Mat5& b)
{
    Mat5 r(kDim, linalg::Vec(kDim, Scalar(0)));
    for (std::size_t i = 0; i < kDim; ++i)
        for (std::size_t j = 0; j < kDim; ++j)
            for (std::size_t k = 0; k < kDim; ++k)
                r[i][j] += a[i][k] * b[k][j];
    return r;
}

/// Cayley transform (I - S)(I + S)^{-1} of the skew matrix S_ij = w(e_i, e_j).
inline Mat5 cayley(const KForm& w)
{
    Mat5 minus = identity5(), plus = identity5();
    for (int i = 0; i < kDim; ++i)
        for (int j = 0; j < kDim; ++j) {
            const Scalar s = w.value({i, j});
            minus[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] -= s;
            plus[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] += s;
        }
    return mat_mul(minus, linalg::inverse(plus));
}

/// Random rational element of U(2) (orthogonal, commutes with phi, fixes e5).
inline Mat5 random_u2(Rng& rng)
{
    KForm w(2);
    for (const auto& gen : u2_generators())
        w += small_rational(rng, 0.3) * gen;
    return cayley(w);
}

inline Mat5 random_so5(Rng& rng) { return cayley(random_form(rng, 2, 0.3)); }

/// (Q.x)(a, b, c) = sum Q_ai Q_bj Q_ck x(i, j, k).
inline ThreeTensor act(const Mat5& q, const ThreeTensor& x)
{
    ThreeTensor t1(x.shape()), t2(x.shape()), t3(x.shape());
    for (int a = 0; a < kDim; ++a)
        for (int j = 0; j < kDim; ++j)
            for (int k = 0; k < kDim; ++k) {
                Scalar s = 0;
                for (int i = 0; i < kDim; ++i)
                    if (sgn(q[static_cast<std::size_t>(a)][static_cast<std::size_t>(i)]) != 0)
                        s += q[static_cast<std::size_t>(a)][static_cast<std::size_t>(i)] * x(i, j, k);
                t1(a, j, k) = s;
            }
    for (int a = 0; a < kDim; ++a)
        for (int b = 0; b < kDim; ++b)
            for (int k = 0; k < kDim; ++k) {
                Scalar s = 0;
                for (int j = 0; j < kDim; ++j)
                    if (sgn(q[static_cast<std::size_t>(b)][static_cast<std::size_t>(j)]) != 0)
                        s += q[static_cast<std::size_t>(b)][static_cast<std::size_t>(j)] * t1(a, j, k);
                t2(a, b, k) = s;
            }
    for (int a = 0; a < kDim; ++a)
        for (int b = 0; b < kDim; ++b)
            for (int c = 0; c < kDim; ++c) {
                Scalar s = 0;
                for (int k = 0; k < kDim; ++k)
                    if (sgn(q[static_cast<std::size_t>(c)][static_cast<std::size_t>(k)]) != 0)
                        s += q[static_cast<std::size_t>(c)][static_cast<std::size_t>(k)] * t2(a, b, k);
                t3(a, b, c) = s;
            }
    return t3;
}

/// Bracket table in the rotated orthonormal frame f_i = sum_a Q_ai e_a.
inline Coeff3 rotate_brackets(const Coeff3& c, const Mat5& q)
{
    Coeff3 out = zero_coeff3();
    for (int i = 0; i < kDim; ++i)
        for (int j = 0; j < kDim; ++j)
            for (int k = 0; k < kDim; ++k) {
                Scalar s = 0;
                for (int a = 0; a < kDim; ++a)
                    for (int b = 0; b < kDim; ++b)
                        for (int d = 0; d < kDim; ++d) {
                            const auto& x = c[a][b][d];
                            if (sgn(x) == 0)
                                continue;
                            s += q[static_cast<std::size_t>(a)][static_cast<std::size_t>(i)] *
                                 q[static_cast<std::size_t>(b)][static_cast<std::size_t>(j)] * x *
                                 q[static_cast<std::size_t>(d)][static_cast<std::size_t>(k)];
                        }
                out[i][j][k] = s;
            }
    return out;
}

/// Random Jacobi-valid Lie algebra: alternately 2-step nilpotent (brackets
/// into a 1- or 2-dimensional centre) or R x| R^4 with a random derivation,
/// rotated by a random rational orthogonal matrix.
inline FrameSpec random_lie_algebra(Rng& rng, int n)
{
    Coeff3 c = zero_coeff3();
    if (n % 2 == 0) {
        const int centre = 1 + n % 4 / 2; // 1 or 2 central directions
        for (int i = 0; i < kDim - centre; ++i)
            for (int j = i + 1; j < kDim - centre; ++j)
                for (int k = kDim - centre; k < kDim; ++k) {
                    const Scalar v = small_rational(rng, 0.5);
                    c[i][j][k] = v;
                    c[j][i][k] = -v;
                }
    } else {
        for (int a = 0; a < 4; ++a)
            for (int b = 0; b < 4; ++b) {
                const Scalar v = small_rational(rng, 0.5);
                c[4][a][b] = v;
                c[a][4][b] = -v;
            }
    }
    return {"random_" + std::to_string(n), rotate_brackets(c, random_so5(rng)), std::nullopt};
}

} // namespace acm5::testing
