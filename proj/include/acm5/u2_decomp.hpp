#pragma once

// The fixed U(2)-structure on R^5 (xi = e5, eta, phi, Phi) and the
// decomposition of Lambda^1..Lambda^4 into the irreducible U(2)-modules
// Lambda^k_i. Every component basis is built once from its defining
// equations and cached.

#include "acm5/exterior.hpp"
#include "acm5/linalg.hpp"

#include <array>
#include <bit>
#include <cstdint>
#include <string>
#include <map>
#include <stdexcept>
#include <vector>

namespace acm5 {

/// 5x5 matrix; phi(e_j) = sum_i m[i][j] e_i.
using Matrix5 = std::array<std::array<Scalar, kDim>, kDim>;

inline Matrix5 zero_matrix5()
{
    Matrix5 r;
    for (auto& row : r)
        for (auto& x : row)
            x = 0;
    return r;
}

inline const Matrix5& phi_matrix()
{
    static const Matrix5 m = [] {
        Matrix5 r = zero_matrix5();
        r[0][1] = 1;
        r[1][0] = -1;
        r[2][3] = 1;
        r[3][2] = -1;
        return r;
    }();
    return m;
}

inline Vector apply_phi(const Vector& v)
{
    const auto& m = phi_matrix();
    Vector out;
    for (int i = 0; i < kDim; ++i) {
        out[i] = 0;
        for (int j = 0; j < kDim; ++j)
            if (sgn(m[i][j]) != 0 && sgn(v[j]) != 0)
                out[i] += m[i][j] * v[j];
    }
    return out;
}

inline Vector xi() { return unit(4); }
inline KForm eta() { return e(5); }
/// Fundamental form Phi(X, Y) = <X, phi Y> = e12 + e34.
inline KForm fundamental_form() { return e(1, 2) + e(3, 4); }
inline KForm omega1() { return e(1, 2) - e(3, 4); }
inline KForm omega2() { return e(1, 3) + e(2, 4); }
inline KForm omega3() { return e(1, 4) - e(2, 3); }

/// Phi, omega1, omega2, omega3: a basis of u(2) = Lambda^2_1 + Lambda^2_3.
inline std::array<KForm, 4> u2_generators()
{
    return {fundamental_form(), omega1(), omega2(), omega3()};
}

struct LambdaComponent {
    int degree;            ///< k in Lambda^k
    int label;             ///< i in Lambda^k_i
    std::vector<KForm> basis;

    int dim() const { return static_cast<int>(basis.size()); }
};

namespace detail {

/// Matrix rows of a linear map on Lambda^k, one row per output coefficient.
template <typename Op>
linalg::Mat map_rows(int k, Op&& op)
{
    const std::size_t n = basis_masks(k).size();
    std::vector<KForm> images;
    for (std::size_t c = 0; c < n; ++c) {
        std::vector<Scalar> v(n, Scalar(0));
        v[c] = 1;
        images.push_back(op(KForm::from_coeffs(k, v)));
    }
    const std::size_t m = images.front().coeffs().size();
    linalg::Mat rows(m, linalg::Vec(n));
    for (std::size_t r = 0; r < m; ++r)
        for (std::size_t c = 0; c < n; ++c)
            rows[r][c] = images[c].coeffs()[r];
    return rows;
}

/// Solution space of the stacked conditions, as the reduced echelon
/// basis of the null space (deterministic, lexicographic leading terms).
inline std::vector<KForm> solve_forms(int k, linalg::Mat rows)
{
    auto ns = linalg::null_space(std::move(rows), basis_masks(k).size());
    linalg::rref(ns);
    std::vector<KForm> out;
    for (auto& v : ns)
        if (!linalg::is_zero(v))
            out.push_back(KForm::from_coeffs(k, v));
    return out;
}

inline void append(linalg::Mat& a, const linalg::Mat& b) { a.insert(a.end(), b.begin(), b.end()); }

inline std::vector<LambdaComponent> build_components()
{
    const KForm Phi = fundamental_form();
    const KForm eta1 = eta();
    std::vector<LambdaComponent> out;

    out.push_back({1, 1, {eta1}});
    out.push_back({1, 2, solve_forms(1, map_rows(1, [](const KForm& a) { return interior(xi(), a); }))});

    out.push_back({2, 1, {Phi}});
    {
        linalg::Mat rows = map_rows(2, [&](const KForm& a) { return wedge(Phi, a); });
        append(rows, map_rows(2, [&](const KForm& a) { return hodge(a) - wedge(eta1, a); }));
        out.push_back({2, 2, solve_forms(2, rows)});
    }
    out.push_back({2, 3, {omega1(), omega2(), omega3()}});
    out.push_back({2, 4, solve_forms(2, map_rows(2, [&](const KForm& a) { return wedge(eta1, a); }))});

    for (int i = 1; i <= 4; ++i) {
        LambdaComponent c{3, i, {}};
        for (const auto& b : out[static_cast<std::size_t>(1 + i)].basis)
            c.basis.push_back(hodge(b));
        out.push_back(std::move(c));
    }
    for (int i = 1; i <= 2; ++i) {
        LambdaComponent c{4, i, {}};
        for (const auto& b : out[static_cast<std::size_t>(i - 1)].basis)
            c.basis.push_back(hodge(b));
        out.push_back(std::move(c));
    }
    return out;
}

} // namespace detail

/// The 12 components in the order Lambda^1_1, Lambda^1_2, Lambda^2_1..4,
/// Lambda^3_1..4, Lambda^4_1, Lambda^4_2.
inline const std::vector<LambdaComponent>& lambda_decomposition()
{
    static const std::vector<LambdaComponent> comps = detail::build_components();
    return comps;
}

inline const LambdaComponent& lambda_component(int degree, int label)
{
    for (const auto& c : lambda_decomposition())
        if (c.degree == degree && c.label == label)
            return c;
    throw std::out_of_range("no component Lambda^" + std::to_string(degree) + "_" + std::to_string(label));
}

namespace detail {

struct LambdaProjector {
    std::vector<int> labels; // label of each basis vector
    std::vector<KForm> basis;
    linalg::SpanCoordinates coords;
};

inline const LambdaProjector& lambda_projector(int degree)
{
    static const std::array<LambdaProjector, 4> projectors = [] {
        std::array<LambdaProjector, 4> p;
        for (int k = 1; k <= 4; ++k) {
            auto& pr = p[static_cast<std::size_t>(k - 1)];
            std::vector<linalg::Vec> vs;
            for (const auto& c : lambda_decomposition()) {
                if (c.degree != k)
                    continue;
                for (const auto& b : c.basis) {
                    pr.labels.push_back(c.label);
                    pr.basis.push_back(b);
                    vs.push_back(b.coeffs());
                }
            }
            pr.coords = linalg::SpanCoordinates(std::move(vs));
        }
        return p;
    }();
    return projectors.at(static_cast<std::size_t>(degree - 1));
}

} // namespace detail

/// Components of a in Lambda^k = sum_i Lambda^k_i, keyed by i. All labels
/// are present (zero forms where a has no component). Rejects degrees 0, 5.
inline std::map<int, KForm> project_lambda(const KForm& a)
{
    if (a.degree() < 1 || a.degree() > 4)
        throw std::invalid_argument("project_lambda: degree must be 1..4");
    const auto& pr = detail::lambda_projector(a.degree());
    auto c = pr.coords.coords(a.coeffs());
    if (!c)
        throw std::logic_error("project_lambda: decomposition does not span");
    std::map<int, KForm> out;
    for (std::size_t n = 0; n < pr.basis.size(); ++n) {
        auto [it, inserted] = out.try_emplace(pr.labels[n], KForm(a.degree()));
        if (sgn((*c)[n]) != 0)
            it->second += (*c)[n] * pr.basis[n];
    }
    return out;
}

/// (X, Y) -> a(phi X, phi Y).
inline KForm phi_pullback(const KForm& a)
{
    if (a.degree() != 2)
        throw std::invalid_argument("phi_pullback: expected a 2-form");
    const auto& m = phi_matrix();
    KForm out(2);
    for (std::uint8_t mask : basis_masks(2)) {
        int i = std::countr_zero(static_cast<unsigned>(mask));
        int j = std::countr_zero(static_cast<unsigned>(mask & (mask - 1)));
        Scalar s = 0;
        for (int k = 0; k < kDim; ++k)
            for (int l = 0; l < kDim; ++l)
                if (k != l && sgn(m[k][i]) != 0 && sgn(m[l][j]) != 0)
                    s += m[k][i] * m[l][j] * a.value({k, l});
        out.coeff(mask) = s;
    }
    return out;
}

/// Orthogonal projection of so(5) onto m = Lambda^2_2 + Lambda^2_4.
inline KForm pr_m(const KForm& w)
{
    if (w.degree() != 2)
        throw std::invalid_argument("pr_m: expected a 2-form");
    auto parts = project_lambda(w);
    return parts.at(2) + parts.at(4);
}

/// Orthogonal projection of so(5) onto u(2) = Lambda^2_1 + Lambda^2_3.
inline KForm pr_u2(const KForm& w)
{
    if (w.degree() != 2)
        throw std::invalid_argument("pr_u2: expected a 2-form");
    auto parts = project_lambda(w);
    return parts.at(1) + parts.at(3);
}

} // namespace acm5
