#pragma once

// Metric connections g(nabla_X Y, Z) = g(nabla^g_X Y, Z) + A(X, Y, Z) that
// preserve (xi, eta, phi): the vectorial, totally skew-symmetric and
// traceless cyclic solutions of Gamma + pr_W(A) = 0, their torsion types,
// curvature, Ricci tensor, infinitesimal holonomy and nabla T.

#include "acm5/manifold.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace acm5 {

enum class ConnectionKind { LeviCivita, Vectorial, Skew, TracelessCyclic };

inline const char* connection_kind_name(ConnectionKind k)
{
    switch (k) {
    case ConnectionKind::LeviCivita: return "levi-civita";
    case ConnectionKind::Vectorial: return "vectorial";
    case ConnectionKind::Skew: return "skew";
    case ConnectionKind::TracelessCyclic: return "traceless-cyclic";
    }
    return "?";
}

/// W-classes that admit a compatible connection of each torsion type.
inline const std::vector<int>& admissible_class(ConnectionKind k)
{
    static const std::vector<int> vec = {1, 2};
    static const std::vector<int> skew = {3, 4, 5, 6};
    static const std::vector<int> tc = {2, 3, 5, 6, 7, 8, 9, 10};
    static const std::vector<int> all = {1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
    switch (k) {
    case ConnectionKind::Vectorial: return vec;
    case ConnectionKind::Skew: return skew;
    case ConnectionKind::TracelessCyclic: return tc;
    case ConnectionKind::LeviCivita: return all;
    }
    return all;
}

struct Admissibility {
    bool vectorial;
    bool skew;
    bool traceless_cyclic;
};

inline Admissibility admits(const FrameGeometry& g)
{
    return {g.in_class(admissible_class(ConnectionKind::Vectorial)), g.in_class(admissible_class(ConnectionKind::Skew)),
            g.in_class(admissible_class(ConnectionKind::TracelessCyclic))};
}

/// A requested connection does not exist for the class of the frame.
class NotAdmissible : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct MetricConnection {
    ConnectionKind kind = ConnectionKind::LeviCivita;
    ThreeTensor A{Shape::A};
    ConnectionForms omega;   ///< omega^c_ij(e_k) = omega_ij(e_k) + A(e_k, e_i, e_j)
    ThreeTensor torsion{Shape::T};
    Coeff3 brackets;
    bool pointwise = false;
    /// Closed formula equals the independent solve of Gamma + pr_W(A) = 0.
    bool formula_matches_solve = true;
};

inline MetricConnection make_connection(const FrameGeometry& g, ConnectionKind kind, const ThreeTensor& a)
{
    MetricConnection c;
    c.kind = kind;
    c.A = a.with_shape(Shape::A);
    c.omega = g.omega;
    for (int i = 0; i < kDim; ++i)
        for (int j = 0; j < kDim; ++j)
            for (int k = 0; k < kDim; ++k)
                c.omega[i][j][k] += a(k, i, j);
    c.torsion = tau(c.A);
    c.brackets = g.brackets;
    c.pointwise = g.frame.pointwise();
    return c;
}

inline MetricConnection levi_civita_connection(const FrameGeometry& g)
{
    return make_connection(g, ConnectionKind::LeviCivita, ThreeTensor(Shape::A));
}

namespace detail {

inline void require_admissible(const FrameGeometry& g, ConnectionKind kind)
{
    const auto& allowed = admissible_class(kind);
    std::string blocking;
    for (int i : g.strict_class())
        if (std::find(allowed.begin(), allowed.end(), i) == allowed.end())
            blocking += (blocking.empty() ? "W" : ", W") + std::to_string(i);
    if (!blocking.empty())
        throw NotAdmissible(std::string("no compatible connection with ") + connection_kind_name(kind) +
                            " torsion: Gamma has nonzero components " + blocking);
}

/// Module labels spanning the search space of each torsion type. The
/// traceless cyclic space omits A_{3,9} = ker pr_W on A_3.
inline std::vector<std::string> search_modules(ConnectionKind kind)
{
    switch (kind) {
    case ConnectionKind::Vectorial: return {"A_{1,1}", "A_{1,2}"};
    case ConnectionKind::Skew: return {"A_{2,1}", "A_{2,2}", "A_{2,3}", "A_{2,4}"};
    case ConnectionKind::TracelessCyclic:
        return {"A_{3,1}", "A_{3,2}", "A_{3,3}", "A_{3,4}", "A_{3,5}", "A_{3,6}", "A_{3,7}", "A_{3,8}"};
    case ConnectionKind::LeviCivita: break;
    }
    return {};
}

struct SolveSpace {
    std::vector<ThreeTensor> basis;
    linalg::SpanCoordinates images; ///< pr_W of the basis, independent
};

inline const SolveSpace& solve_space(ConnectionKind kind)
{
    auto build = [](ConnectionKind k) {
        SolveSpace s;
        std::vector<linalg::Vec> imgs;
        for (const auto& label : search_modules(k))
            for (const auto& b : a_decomposition().module(label).basis) {
                s.basis.push_back(b);
                imgs.push_back(pr_W(b).coeffs());
            }
        s.images = linalg::SpanCoordinates(std::move(imgs)); // throws unless pr_W is injective here
        return s;
    };
    static const SolveSpace vec = build(ConnectionKind::Vectorial);
    static const SolveSpace skew = build(ConnectionKind::Skew);
    static const SolveSpace tc = build(ConnectionKind::TracelessCyclic);
    switch (kind) {
    case ConnectionKind::Vectorial: return vec;
    case ConnectionKind::Skew: return skew;
    default: return tc;
    }
}

} // namespace detail

/// Independent solution of Gamma + pr_W(A) = 0 with A in A_1, A_2 or
/// A_3 minus A_{3,9}; nullopt when no solution exists there.
inline std::optional<ThreeTensor> solve_compatible(const FrameGeometry& g, ConnectionKind kind)
{
    if (kind == ConnectionKind::LeviCivita)
        throw std::invalid_argument("solve_compatible: Levi-Civita is not a torsion type");
    const auto& s = detail::solve_space(kind);
    auto c = s.images.coords((-g.gamma).coeffs());
    if (!c)
        return std::nullopt;
    ThreeTensor a(Shape::A);
    for (std::size_t n = 0; n < s.basis.size(); ++n)
        if (sgn((*c)[n]) != 0)
            a += (*c)[n] * s.basis[n];
    return a.with_shape(Shape::A);
}

/// Dimension of the kernel of pr_W on the full O(5) piece A_1, A_2 or A_3.
inline int compatible_solution_freedom(ConnectionKind kind)
{
    const char prefix = kind == ConnectionKind::Vectorial ? '1' : kind == ConnectionKind::Skew ? '2' : '3';
    int dim = 0;
    std::vector<linalg::Vec> imgs;
    for (const auto& m : a_decomposition().modules())
        if (m.label[3] == prefix)
            for (const auto& b : m.basis) {
                ++dim;
                imgs.push_back(pr_W(b).coeffs());
            }
    return dim - static_cast<int>(linalg::rank(imgs));
}

/// A = -theta_1(1/4 delta eta eta + xi _| d eta).
inline MetricConnection connection_vectorial(const FrameGeometry& g)
{
    detail::require_admissible(g, ConnectionKind::Vectorial);
    KForm a = Scalar(g.delta_eta / 4) * eta() + interior(xi(), g.d_eta);
    auto c = make_connection(g, ConnectionKind::Vectorial, -theta1(a));
    auto solved = solve_compatible(g, ConnectionKind::Vectorial);
    c.formula_matches_solve = solved && *solved == c.A;
    return c;
}

/// The 3-form d eta ^ eta + xi _| (*d Phi ^ Phi); the skew connection has
/// A = 1/2 of it and torsion equal to it.
inline KForm skew_torsion_form(const FrameGeometry& g)
{
    return wedge(g.d_eta, eta()) + interior(xi(), wedge(hodge(g.d_phi), fundamental_form()));
}

inline MetricConnection connection_skew(const FrameGeometry& g)
{
    detail::require_admissible(g, ConnectionKind::Skew);
    auto c = make_connection(g, ConnectionKind::Skew, Scalar(1, 2) * theta2(skew_torsion_form(g)));
    auto solved = solve_compatible(g, ConnectionKind::Skew);
    c.formula_matches_solve = solved && *solved == c.A;
    return c;
}

/// The seven-term closed formula
///   A = -1/2 theta_3(d eta + (xi _| d eta) ^ eta) + 1/4 theta_4(*(delta Phi ^ Phi ^ eta) - 3 xi _| d eta)
///     + 1/3 theta_5(xi _| d eta) + 1/2 theta_3(*d Phi)(phi X, Y, Z) - 1/4 N(phi^2 X, phi Y, phi Z)
///     + 1/2 eta(Y) N(phi X, xi, phi Z) + 1/2 eta(Z) N(phi X, phi Y, xi).
inline ThreeTensor traceless_cyclic_formula(const FrameGeometry& g)
{
    const KForm Phi = fundamental_form();
    const KForm xde = interior(xi(), g.d_eta);
    ThreeTensor a = Scalar(-1, 2) * theta3(g.d_eta + wedge(xde, eta()));
    a += Scalar(1, 4) * theta4(hodge(wedge(wedge(g.delta_phi, Phi), eta())) - Scalar(3) * xde);
    a += Scalar(1, 3) * theta5(xde);
    a += Scalar(1, 2) * compose_phi(theta3_extended(hodge(g.d_phi)), true, false, false);
    a += Scalar(-1, 4) * compose_phi(compose_phi(g.nij, true, true, true), true, false, false);
    const ThreeTensor n1 = compose_phi(g.nij, true, false, true);
    const ThreeTensor n2 = compose_phi(g.nij, true, true, false);
    for (int x = 0; x < kDim; ++x)
        for (int y = 0; y < kDim; ++y)
            for (int z = 0; z < kDim; ++z) {
                if (y == 4)
                    a(x, y, z) += n1(x, 4, z) / 2;
                if (z == 4)
                    a(x, y, z) += n2(x, y, 4) / 2;
            }
    return a.with_shape(Shape::A);
}

inline MetricConnection connection_traceless_cyclic(const FrameGeometry& g)
{
    detail::require_admissible(g, ConnectionKind::TracelessCyclic);
    auto c = make_connection(g, ConnectionKind::TracelessCyclic, traceless_cyclic_formula(g));
    auto solved = solve_compatible(g, ConnectionKind::TracelessCyclic);
    c.formula_matches_solve = solved && *solved == c.A;
    return c;
}

inline MetricConnection build_connection(const FrameGeometry& g, ConnectionKind kind)
{
    switch (kind) {
    case ConnectionKind::Vectorial: return connection_vectorial(g);
    case ConnectionKind::Skew: return connection_skew(g);
    case ConnectionKind::TracelessCyclic: return connection_traceless_cyclic(g);
    case ConnectionKind::LeviCivita: break;
    }
    return levi_civita_connection(g);
}

/// nabla xi = 0, nabla eta = 0 and nabla phi = 0 (via nabla Phi = 0),
/// checked on the connection coefficients.
inline bool preserves_structure(const MetricConnection& c)
{
    for (int k = 0; k < kDim; ++k) {
        if (!covariant_derivative(eta(), k, c.omega).is_zero())
            return false;
        if (!covariant_derivative(fundamental_form(), k, c.omega).is_zero())
            return false;
    }
    return true;
}

/// Gamma + pr_W(A) = 0.
inline bool satisfies_compatibility(const FrameGeometry& g, const MetricConnection& c)
{
    return (g.gamma + pr_W(c.A)).is_zero();
}

/// One subtype characterization: a differential condition that should hold
/// exactly when the Gamma-component W_i vanishes.
struct SubtypeCheck {
    std::string name;      ///< e.g. "a"
    std::string condition; ///< the differential condition, as text
    int component;         ///< i of W_i
    bool condition_holds;
    bool component_zero;

    bool consistent() const { return condition_holds == component_zero; }
};

namespace detail {

inline bool all_zero_over(const std::function<Scalar(int, int, int)>& f)
{
    for (int x = 0; x < kDim; ++x)
        for (int y = 0; y < kDim; ++y)
            for (int z = 0; z < kDim; ++z)
                if (sgn(f(x, y, z)) != 0)
                    return false;
    return true;
}

} // namespace detail

/// Subtype characterizations for the frame class of the given torsion type.
/// Only meaningful when the frame admits that connection.
inline std::vector<SubtypeCheck> subtype_checks(const FrameGeometry& g, ConnectionKind kind)
{
    std::vector<SubtypeCheck> out;
    auto add = [&](std::string name, std::string cond, int comp, bool holds) {
        out.push_back({std::move(name), std::move(cond), comp, holds, g.component(comp).is_zero()});
    };
    const KForm Phi = fundamental_form();
    const KForm xde = interior(xi(), g.d_eta);
    const Scalar xi_delta_phi = g.delta_phi.value({4});
    switch (kind) {
    case ConnectionKind::Vectorial:
        add("a", "d eta = 0", 2, g.d_eta.is_zero());
        add("b", "delta eta = 0", 1, sgn(g.delta_eta) == 0);
        break;
    case ConnectionKind::Skew:
        add("a", "xi _| (*d Phi ^ Phi) = 0", 6, interior(xi(), wedge(hodge(g.d_phi), Phi)).is_zero());
        add("b", "d eta ^ eta = *d eta", 5, wedge(g.d_eta, eta()) == hodge(g.d_eta));
        add("c", "N = 0", 4, g.nij.is_zero());
        add("d", "xi _| delta Phi = 0", 3, sgn(xi_delta_phi) == 0);
        break;
    case ConnectionKind::TracelessCyclic: {
        const ThreeTensor& N = g.nij;
        const ThreeTensor Npp = compose_phi(N, true, true, false);
        const ThreeTensor Nppp = compose_phi(N, true, true, true);
        const ThreeTensor Nxpp = compose_phi(N, false, true, true);
        add("a", "N(phi X, phi Y, xi) + N(phi Y, phi X, xi) = 0", 10,
            detail::all_zero_over([&](int x, int y, int) { return Scalar(Npp(x, y, 4) + Npp(y, x, 4)); }));
        add("b", "N(phi X, phi Y, phi Z) = 0", 9, Nppp.is_zero());
        const KForm sdp = hodge(g.d_phi);
        bool c_holds = true;
        for (int x = 0; x < kDim; ++x)
            for (int y = 0; y < kDim; ++y) {
                Vector X = unit(x), Y = unit(y);
                Scalar s = pair_value(sdp, apply_phi(X), apply_phi(apply_phi(Y))) +
                           pair_value(sdp, apply_phi(Y), apply_phi(apply_phi(X)));
                if (sgn(s) != 0)
                    c_holds = false;
            }
        add("c", "(*d Phi)(phi X, phi^2 Y) + (*d Phi)(phi Y, phi^2 X) = 0", 8, c_holds);
        add("d", "N(xi, phi X, phi Y) = 0", 7,
            detail::all_zero_over([&](int x, int y, int) { return Scalar(Nxpp(4, x, y)); }));
        add("e", "*(delta Phi ^ Phi ^ eta) - 3 xi _| d eta = 0", 6,
            (hodge(wedge(wedge(g.delta_phi, Phi), eta())) - Scalar(3) * xde).is_zero());
        add("f", "d eta + (xi _| d eta) ^ eta = *(d eta ^ eta)", 5,
            g.d_eta + wedge(xde, eta()) == hodge(wedge(g.d_eta, eta())));
        add("g", "xi _| delta Phi = 0", 3, sgn(xi_delta_phi) == 0);
        add("h", "xi _| d eta = 0", 2, xde.is_zero());
        break;
    }
    case ConnectionKind::LeviCivita: break;
    }
    return out;
}

/// (*d Phi ^ Phi)(xi, X, Y, Z) = -d Phi(phi X, phi Y, phi Z) + N(Z, X, Y)
///                              - cyclic sum eta(X) N(xi, Y, Z),
/// checked for all basis triples.
inline bool skew_remark_identity(const FrameGeometry& g)
{
    const KForm lhs = interior(xi(), wedge(hodge(g.d_phi), fundamental_form()));
    const ThreeTensor& N = g.nij;
    for (int x = 0; x < kDim; ++x)
        for (int y = 0; y < kDim; ++y)
            for (int z = 0; z < kDim; ++z) {
                const Vector X = unit(x), Y = unit(y), Z = unit(z);
                Scalar rhs = -evaluate(g.d_phi, {apply_phi(X), apply_phi(Y), apply_phi(Z)}) + N(z, x, y);
                if (x == 4)
                    rhs -= N(4, y, z);
                if (y == 4)
                    rhs -= N(4, z, x);
                if (z == 4)
                    rhs -= N(4, x, y);
                if (lhs.value({x, y, z}) != rhs)
                    return false;
            }
    return true;
}

/// The four Lambda^3_i parts of 2 (d eta ^ eta + xi _| (*d Phi ^ Phi)):
/// (xi _| delta Phi) Phi ^ eta, d eta ^ eta + *d eta - (xi _| delta Phi) Phi ^ eta,
/// d eta ^ eta - *d eta and 2 xi _| (*d Phi ^ Phi).
inline std::array<KForm, 4> skew_torsion_split(const FrameGeometry& g)
{
    const KForm Phi = fundamental_form();
    const Scalar s = g.delta_phi.value({4});
    const KForm pe = wedge(Phi, eta());
    const KForm de_e = wedge(g.d_eta, eta());
    const KForm sde = hodge(g.d_eta);
    return {s * pe, de_e + sde - s * pe, de_e - sde,
            Scalar(2) * interior(xi(), wedge(hodge(g.d_phi), Phi))};
}

/// Curvature R(X, Y, Z, V) = g(nabla_X nabla_Y Z - nabla_Y nabla_X Z - nabla_[X,Y] Z, V)
/// as a 10 x 10 matrix over e12, e13, e14, e15, e23, e24, e25, e34, e35, e45:
/// entry ((ij), (kl)) = R(e_i, e_j, e_k, e_l).
struct CurvatureTensor {
    std::array<std::array<Scalar, 10>, 10> m;

    bool is_zero() const
    {
        for (const auto& r : m)
            for (const auto& x : r)
                if (sgn(x) != 0)
                    return false;
        return true;
    }
    friend bool operator==(const CurvatureTensor& a, const CurvatureTensor& b) { return a.m == b.m; }

    /// Row (ij) as the 2-form sum_{k<l} R(e_i, e_j, e_k, e_l) e_kl.
    KForm row(int r) const
    {
        std::vector<Scalar> c(m[static_cast<std::size_t>(r)].begin(), m[static_cast<std::size_t>(r)].end());
        return KForm::from_coeffs(2, std::move(c));
    }

    /// R(e_a, e_b, e_c, e_d), 0-based.
    Scalar operator()(int a, int b, int c, int d) const
    {
        if (a == b || c == d)
            return 0;
        int s = 1;
        if (a > b) {
            std::swap(a, b);
            s = -s;
        }
        if (c > d) {
            std::swap(c, d);
            s = -s;
        }
        Scalar v = m[static_cast<std::size_t>(pair_index(a, b))][static_cast<std::size_t>(pair_index(c, d))];
        return s < 0 ? Scalar(-v) : v;
    }

    static int pair_index(int i, int j)
    {
        static constexpr int offs[5] = {0, 4, 7, 9, 10};
        return offs[i] + (j - i - 1);
    }

    /// "e12 (x) (e12 + e34) + ..." over nonzero rows.
    std::string to_string() const
    {
        std::string out;
        int r = 0;
        for (int i = 0; i < kDim; ++i)
            for (int j = i + 1; j < kDim; ++j, ++r) {
                KForm f = row(r);
                if (f.is_zero())
                    continue;
                if (!out.empty())
                    out += " + ";
                out += "e" + std::to_string(i + 1) + std::to_string(j + 1) + " (x) (" + f.to_string() + ")";
            }
        return out.empty() ? "0" : out;
    }
};

/// Curvature from constant connection coefficients and structure constants.
/// Rejects pointwise frames (their brackets need not satisfy Jacobi).
inline CurvatureTensor curvature(const MetricConnection& c)
{
    if (c.pointwise)
        throw std::invalid_argument("curvature: frame has no bracket table");
    // G[a][b][x] = omega_bx(e_a): nabla_{e_a} e_b = sum_x G[a][b][x] e_x.
    auto G = [&](int a, int b, int x) -> const Scalar& { return c.omega[b][x][a]; };
    CurvatureTensor R;
    for (int i = 0; i < kDim; ++i)
        for (int j = i + 1; j < kDim; ++j)
            for (int k = 0; k < kDim; ++k)
                for (int l = k + 1; l < kDim; ++l) {
                    Scalar s = 0;
                    for (int x = 0; x < kDim; ++x) {
                        s += G(j, k, x) * G(i, x, l);
                        s -= G(i, k, x) * G(j, x, l);
                        s -= c.brackets[i][j][x] * G(x, k, l);
                    }
                    R.m[static_cast<std::size_t>(CurvatureTensor::pair_index(i, j))]
                       [static_cast<std::size_t>(CurvatureTensor::pair_index(k, l))] = s;
                }
    return R;
}

using Matrix5x5 = std::array<std::array<Scalar, kDim>, kDim>;

/// Ric(X, Y) = sum_i R(e_i, X, Y, e_i).
inline Matrix5x5 ricci(const CurvatureTensor& R)
{
    Matrix5x5 ric;
    for (int x = 0; x < kDim; ++x)
        for (int y = 0; y < kDim; ++y) {
            Scalar s = 0;
            for (int i = 0; i < kDim; ++i)
                s += R(i, x, y, i);
            ric[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] = s;
        }
    return ric;
}

/// so(5) bracket of 2-forms, [a, b] = rho_*(a)(b).
inline KForm lie_bracket(const KForm& a, const KForm& b) { return rho_star(a, b); }

struct HolonomyAlgebra {
    std::vector<KForm> basis;
    bool inside_u2 = false;
    bool equals_u2 = false;
    bool equals_su2_lambda23 = false;
    bool is_su2 = false;   ///< dim 3 and [h, h] = h
    bool inside_so4 = false; ///< every element kills e5
    bool equals_so4 = false;
    bool equals_so5 = false;
    bool equals_u1 = false; ///< dim 1 and inside u(2)
    bool trivial = false;

    int dim() const { return static_cast<int>(basis.size()); }

    /// Short name: "0", "u(1)", "su(2)=Lambda^2_3", "su(2)", "u(2)", "so(4)", "so(5)" or "dim n".
    std::string name() const
    {
        if (trivial)
            return "0";
        if (equals_so5)
            return "so(5)";
        if (equals_so4)
            return "so(4)";
        if (equals_u2)
            return "u(2)";
        if (equals_su2_lambda23)
            return "su(2)=Lambda^2_3";
        if (is_su2)
            return "su(2)";
        if (equals_u1)
            return "u(1)";
        return "dim " + std::to_string(dim());
    }
};

namespace detail {

inline std::vector<linalg::Vec> coeff_rows(const std::vector<KForm>& fs)
{
    std::vector<linalg::Vec> out;
    for (const auto& f : fs)
        out.push_back(f.coeffs());
    return out;
}

inline std::vector<KForm> forms_of(const std::vector<linalg::Vec>& vs)
{
    std::vector<KForm> out;
    for (const auto& v : vs)
        out.push_back(KForm::from_coeffs(2, v));
    return out;
}

/// Appends v to an echelon-reduced span when independent.
inline bool extend_span(std::vector<linalg::Vec>& span, const linalg::Vec& v)
{
    if (linalg::is_zero(v))
        return false;
    auto trial = span;
    trial.push_back(v);
    if (linalg::rank(trial) == span.size())
        return false;
    span.push_back(v);
    return true;
}

} // namespace detail

/// Infinitesimal holonomy algebra: the span of the curvature values
/// R(e_i, e_j), closed under [Lambda(e_k), .] with Lambda(e_k) = Omega^c(e_k)
/// and under the so(5) bracket. The basis is returned in reduced echelon form.
inline HolonomyAlgebra holonomy(const MetricConnection& c)
{
    const CurvatureTensor R = curvature(c);
    std::vector<linalg::Vec> span;
    for (int r = 0; r < 10; ++r)
        detail::extend_span(span, R.row(r).coeffs());
    std::vector<KForm> lam;
    for (int k = 0; k < kDim; ++k)
        lam.push_back(connection_slice(c.omega, k));
    for (int iter = 0; iter < 12; ++iter) {
        bool changed = false;
        auto cur = detail::forms_of(span);
        for (const auto& L : lam)
            for (const auto& h : cur)
                changed = detail::extend_span(span, lie_bracket(L, h).coeffs()) || changed;
        cur = detail::forms_of(span);
        for (std::size_t a = 0; a < cur.size(); ++a)
            for (std::size_t b = a + 1; b < cur.size(); ++b)
                changed = detail::extend_span(span, lie_bracket(cur[a], cur[b]).coeffs()) || changed;
        if (!changed)
            break;
        if (iter == 11)
            throw std::logic_error("holonomy: span did not stabilize");
    }
    linalg::rref(span);
    std::vector<linalg::Vec> reduced;
    for (auto& v : span)
        if (!linalg::is_zero(v))
            reduced.push_back(v);

    HolonomyAlgebra h;
    h.basis = detail::forms_of(reduced);
    const int d = h.dim();
    std::vector<linalg::Vec> u2;
    for (const auto& gen : u2_generators())
        u2.push_back(gen.coeffs());
    std::vector<linalg::Vec> l23 = detail::coeff_rows(lambda_component(2, 3).basis);
    auto contained_in = [&](const std::vector<linalg::Vec>& big) {
        auto all = big;
        all.insert(all.end(), reduced.begin(), reduced.end());
        return linalg::rank(all) == linalg::rank(big);
    };
    h.trivial = d == 0;
    h.inside_u2 = contained_in(u2);
    h.equals_u2 = h.inside_u2 && d == 4;
    h.equals_su2_lambda23 = d == 3 && contained_in(l23);
    if (d == 3) {
        std::vector<linalg::Vec> br;
        for (std::size_t a = 0; a < h.basis.size(); ++a)
            for (std::size_t b = a + 1; b < h.basis.size(); ++b)
                br.push_back(lie_bracket(h.basis[a], h.basis[b]).coeffs());
        h.is_su2 = linalg::rank(br) == 3;
    }
    h.inside_so4 = true;
    for (const auto& f : h.basis)
        for (int i = 0; i < 4; ++i)
            if (sgn(f.value({i, 4})) != 0)
                h.inside_so4 = false;
    h.equals_so4 = h.inside_so4 && d == 6;
    h.equals_so5 = d == 10;
    h.equals_u1 = d == 1 && h.inside_u2;
    return h;
}

/// (nabla_{e_k} T)(e_a, e_b, e_c) = -sum_m (omega_am T(m, b, c) + omega_bm T(a, m, c) + omega_cm T(a, b, m)).
inline std::array<ThreeTensor, kDim> nabla_torsion(const MetricConnection& c)
{
    std::array<ThreeTensor, kDim> out;
    const ThreeTensor& T = c.torsion;
    for (int k = 0; k < kDim; ++k) {
        ThreeTensor d(Shape::T);
        for (int a = 0; a < kDim; ++a)
            for (int b = 0; b < kDim; ++b)
                for (int e = 0; e < kDim; ++e) {
                    Scalar s = 0;
                    for (int m = 0; m < kDim; ++m) {
                        if (sgn(c.omega[a][m][k]) != 0)
                            s -= c.omega[a][m][k] * T(m, b, e);
                        if (sgn(c.omega[b][m][k]) != 0)
                            s -= c.omega[b][m][k] * T(a, m, e);
                        if (sgn(c.omega[e][m][k]) != 0)
                            s -= c.omega[e][m][k] * T(a, b, m);
                    }
                    d(a, b, e) = s;
                }
        out[static_cast<std::size_t>(k)] = d;
    }
    return out;
}

inline bool torsion_parallel(const MetricConnection& c)
{
    for (const auto& d : nabla_torsion(c))
        if (!d.is_zero())
            return false;
    return true;
}

} // namespace acm5
