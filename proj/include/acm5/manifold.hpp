#pragma once

// Frame-level geometry of an almost contact metric 5-manifold: Levi-Civita
// connection, intrinsic torsion Gamma = pr_m(Omega^g), covariant derivative,
// d and delta, the Nijenhuis tensor, the strict class W_{i1} + ... + W_{ik}
// and the named structure types.

#include "acm5/frame.hpp"
#include "acm5/torsion_alg.hpp"

#include <algorithm>
#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace acm5 {

/// w[i][j][k] = omega_ij(e_k).
using ConnectionForms = Coeff3;

/// Levi-Civita connection forms. Validates the frame first; a given
/// connection is returned as is.
inline ConnectionForms levi_civita(const FrameSpec& f)
{
    validate(f);
    if (f.connection)
        return *f.connection;
    return koszul(*f.brackets);
}

/// The brackets of the frame, derived from the connection for pointwise frames.
inline Coeff3 structure_constants(const FrameSpec& f)
{
    if (f.brackets)
        return *f.brackets;
    validate(f);
    return brackets_from_connection(*f.connection);
}

/// The 2-form sum_{i<j} omega_ij(e_k) e_ij, i.e. Omega(e_k).
inline KForm connection_slice(const ConnectionForms& w, int k)
{
    KForm f(2);
    for (std::uint8_t m : basis_masks(2)) {
        unsigned rest = m & (m - 1u);
        int i = std::countr_zero(static_cast<unsigned>(m));
        int j = std::countr_zero(rest);
        f.coeff(m) = w[i][j][k];
    }
    return f;
}

/// Omega as an element of A: Omega(e_k, e_i, e_j) = omega_ij(e_k).
inline ThreeTensor connection_tensor(const ConnectionForms& w)
{
    ThreeTensor t(Shape::A);
    for (int k = 0; k < kDim; ++k)
        for (int i = 0; i < kDim; ++i)
            for (int j = 0; j < kDim; ++j)
                t(k, i, j) = w[i][j][k];
    return t;
}

inline ThreeTensor intrinsic_torsion(const ConnectionForms& w) { return pr_W(connection_tensor(w)); }
inline ThreeTensor intrinsic_torsion(const FrameSpec& f) { return intrinsic_torsion(levi_civita(f)); }

namespace detail {

inline std::vector<int> mask_indices(std::uint8_t m)
{
    std::vector<int> out;
    for (int i = 0; i < kDim; ++i)
        if (m & (1u << i))
            out.push_back(i);
    return out;
}

} // namespace detail

/// nabla_{e_k} a for a form with constant frame coefficients:
/// (nabla_k a)(e_j1, ...) = -sum_s a(..., nabla_k e_js, ...), nabla_k e_j = sum_m omega_jm(e_k) e_m.
inline KForm covariant_derivative(const KForm& a, int k, const ConnectionForms& w)
{
    KForm out(a.degree());
    for (std::uint8_t mask : basis_masks(a.degree())) {
        auto idx = detail::mask_indices(mask);
        Scalar s = 0;
        for (std::size_t p = 0; p < idx.size(); ++p)
            for (int m = 0; m < kDim; ++m) {
                const Scalar& c = w[idx[p]][m][k];
                if (sgn(c) == 0)
                    continue;
                auto args = idx;
                args[p] = m;
                Scalar v = a.value(std::span<const int>(args));
                if (sgn(v) != 0)
                    s -= c * v;
            }
        out.coeff(mask) = s;
    }
    return out;
}

/// nabla_v a = sum_k v_k nabla_{e_k} a.
inline KForm covariant_derivative(const KForm& a, const Vector& v, const ConnectionForms& w)
{
    KForm out(a.degree());
    for (int k = 0; k < kDim; ++k)
        if (sgn(v[k]) != 0)
            out += v[k] * covariant_derivative(a, k, w);
    return out;
}

/// d a = sum_i e_i ^ nabla_{e_i} a.
inline KForm d_form(const KForm& a, const ConnectionForms& w)
{
    if (a.degree() >= kDim)
        return KForm::degenerate_zero();
    KForm out(a.degree() + 1);
    for (int i = 0; i < kDim; ++i)
        out += wedge(one_form(unit(i)), covariant_derivative(a, i, w));
    return out;
}

/// delta a = -sum_i e_i _| nabla_{e_i} a.
inline KForm delta_form(const KForm& a, const ConnectionForms& w)
{
    if (a.degree() == 0)
        return KForm::degenerate_zero();
    KForm out(a.degree() - 1);
    for (int i = 0; i < kDim; ++i)
        out -= interior(i, covariant_derivative(a, i, w));
    return out;
}

/// Bilinear value a(u, v) of a 2-form.
inline Scalar pair_value(const KForm& a, const Vector& u, const Vector& v)
{
    return evaluate(a, {u, v});
}

/// Nijenhuis tensor N(X, Y, Z) = g(X, N(Y, Z)) from the brackets,
/// N(Y, Z) = [phi Y, phi Z] + phi^2 [Y, Z] - phi[phi Y, Z] - phi[Y, phi Z] + d eta(Y, Z) xi,
/// with d eta(Y, Z) = -eta([Y, Z]) for left-invariant fields.
inline ThreeTensor nijenhuis_from_brackets(const Coeff3& c)
{
    auto bracket = [&](const Vector& u, const Vector& v) {
        Vector r;
        for (int k = 0; k < kDim; ++k) {
            r[k] = 0;
            for (int i = 0; i < kDim; ++i) {
                if (sgn(u[i]) == 0)
                    continue;
                for (int j = 0; j < kDim; ++j)
                    if (sgn(v[j]) != 0 && sgn(c[i][j][k]) != 0)
                        r[k] += u[i] * v[j] * c[i][j][k];
            }
        }
        return r;
    };
    ThreeTensor t(Shape::N);
    for (int y = 0; y < kDim; ++y)
        for (int z = 0; z < kDim; ++z) {
            const Vector Y = unit(y), Z = unit(z);
            Vector a = bracket(apply_phi(Y), apply_phi(Z));
            Vector b = apply_phi(apply_phi(bracket(Y, Z)));
            Vector p = apply_phi(bracket(apply_phi(Y), Z));
            Vector q = apply_phi(bracket(Y, apply_phi(Z)));
            for (int x = 0; x < kDim; ++x)
                t(x, y, z) = a[x] + b[x] - p[x] - q[x];
            t(4, y, z) -= c[y][z][4];
        }
    return t;
}

/// Nijenhuis tensor through nabla Phi:
/// N(X, Y, Z) = (nabla_{phi Y} Phi)(X, Z) - (nabla_{phi Z} Phi)(X, Y) + (nabla_Y Phi)(phi X, Z)
///            - (nabla_Z Phi)(phi X, Y) + eta(X) ((nabla_Y Phi)(xi, phi Z) - (nabla_Z Phi)(xi, phi Y)).
inline ThreeTensor nijenhuis(const ConnectionForms& w)
{
    const KForm Phi = fundamental_form();
    std::array<KForm, kDim> nP{KForm(2), KForm(2), KForm(2), KForm(2), KForm(2)};
    for (int k = 0; k < kDim; ++k)
        nP[static_cast<std::size_t>(k)] = covariant_derivative(Phi, k, w);
    auto nab = [&](const Vector& v, const Vector& a, const Vector& b) {
        Scalar s = 0;
        for (int k = 0; k < kDim; ++k)
            if (sgn(v[k]) != 0)
                s += v[k] * pair_value(nP[static_cast<std::size_t>(k)], a, b);
        return s;
    };
    ThreeTensor t(Shape::N);
    for (int x = 0; x < kDim; ++x)
        for (int y = 0; y < kDim; ++y)
            for (int z = 0; z < kDim; ++z) {
                const Vector X = unit(x), Y = unit(y), Z = unit(z);
                Scalar s = nab(apply_phi(Y), X, Z) - nab(apply_phi(Z), X, Y) + nab(Y, apply_phi(X), Z) -
                           nab(Z, apply_phi(X), Y);
                if (x == 4)
                    s += nab(Y, xi(), apply_phi(Z)) - nab(Z, xi(), apply_phi(Y));
                t(x, y, z) = s;
            }
    return t;
}

inline ThreeTensor nijenhuis(const FrameSpec& f) { return nijenhuis(levi_civita(f)); }

/// Everything derived from the Levi-Civita connection that classification
/// and the compatible connections need.
struct FrameGeometry {
    FrameSpec frame;
    Coeff3 brackets;
    ConnectionForms omega;
    ThreeTensor gamma{Shape::W};
    Components gamma_parts;
    std::array<KForm, kDim> nabla_phi{KForm(2), KForm(2), KForm(2), KForm(2), KForm(2)};
    std::array<KForm, kDim> nabla_eta{KForm(1), KForm(1), KForm(1), KForm(1), KForm(1)};
    KForm d_phi{3};
    KForm d_eta{2};
    KForm delta_phi{1};
    Scalar delta_eta;
    ThreeTensor nij{Shape::N};

    /// Gamma_i, i = 1..10.
    const ThreeTensor& component(int i) const { return gamma_parts.at(static_cast<std::size_t>(i - 1)).second; }
    /// Strict class: indices i with Gamma_i != 0.
    std::vector<int> strict_class() const
    {
        std::vector<int> out;
        for (int i = 1; i <= 10; ++i)
            if (!component(i).is_zero())
                out.push_back(i);
        return out;
    }
    /// Gamma in the sum of the listed W_i.
    bool in_class(std::initializer_list<int> ws) const
    {
        for (int i : strict_class())
            if (std::find(ws.begin(), ws.end(), i) == ws.end())
                return false;
        return true;
    }
    bool in_class(const std::vector<int>& ws) const
    {
        for (int i : strict_class())
            if (std::find(ws.begin(), ws.end(), i) == ws.end())
                return false;
        return true;
    }
};

inline FrameGeometry frame_geometry(const FrameSpec& f)
{
    FrameGeometry g;
    g.frame = f;
    g.omega = levi_civita(f);
    g.brackets = structure_constants(f);
    g.gamma = intrinsic_torsion(g.omega);
    g.gamma_parts = project_W(g.gamma);
    const KForm Phi = fundamental_form();
    for (int k = 0; k < kDim; ++k) {
        g.nabla_phi[static_cast<std::size_t>(k)] = covariant_derivative(Phi, k, g.omega);
        g.nabla_eta[static_cast<std::size_t>(k)] = covariant_derivative(eta(), k, g.omega);
    }
    g.d_phi = d_form(Phi, g.omega);
    g.d_eta = d_form(eta(), g.omega);
    g.delta_phi = delta_form(Phi, g.omega);
    g.delta_eta = delta_form(eta(), g.omega).coeff(0);
    g.nij = nijenhuis(g.omega);
    return g;
}

/// Exact scalar t with b = t * a, if any (a != 0).
inline std::optional<Scalar> proportionality(const KForm& b, const KForm& a)
{
    std::optional<Scalar> t;
    for (std::size_t n = 0; n < a.coeffs().size(); ++n) {
        const Scalar& x = a.coeffs()[n];
        const Scalar& y = b.coeffs()[n];
        if (sgn(x) == 0) {
            if (sgn(y) != 0)
                return std::nullopt;
            continue;
        }
        Scalar r = y / x;
        if (t && *t != r)
            return std::nullopt;
        t = r;
    }
    return t;
}

/// Named types, in report order.
inline const std::vector<std::string>& named_type_names()
{
    static const std::vector<std::string> names = {
        "normal",          "almost_cosymplectic", "cosymplectic",   "nearly_cosymplectic",
        "semi_cosymplectic", "quasi_cosymplectic", "almost_alpha_kenmotsu", "alpha_kenmotsu",
        "almost_kenmotsu", "kenmotsu",            "almost_alpha_sasaki", "alpha_sasaki",
        "contact_metric",  "sasaki",              "quasi_sasaki",   "nearly_sasaki",
        "trans_sasaki",    "k_contact",
    };
    return names;
}

struct NamedTypes {
    std::vector<std::pair<std::string, bool>> flags;
    std::optional<Scalar> kenmotsu_alpha; ///< alpha of an almost alpha-Kenmotsu structure
    std::optional<Scalar> sasaki_alpha;   ///< alpha of an almost alpha-Sasaki structure

    bool operator[](std::string_view name) const
    {
        for (const auto& [n, v] : flags)
            if (n == name)
                return v;
        throw std::out_of_range("unknown named type " + std::string(name));
    }
};

namespace detail {

/// B(i, j, z) = g((nabla_{e_i} phi)(e_j), e_z) = (nabla_{e_i} Phi)(e_z, e_j).
inline Scalar nabla_phi_endo(const FrameGeometry& g, int i, int j, int z)
{
    return g.nabla_phi[static_cast<std::size_t>(i)].value({z, j});
}

/// (nabla_V Phi)(a, b) for vectors.
inline Scalar nabla_phi_at(const FrameGeometry& g, const Vector& v, const Vector& a, const Vector& b)
{
    Scalar s = 0;
    for (int k = 0; k < kDim; ++k)
        if (sgn(v[k]) != 0)
            s += v[k] * pair_value(g.nabla_phi[static_cast<std::size_t>(k)], a, b);
    return s;
}

inline Scalar delta_kron(int a, int b) { return a == b ? 1 : 0; }

} // namespace detail

/// Named types evaluated from their defining differential conditions.
inline NamedTypes named_types(const FrameGeometry& g)
{
    using detail::delta_kron;
    using detail::nabla_phi_endo;
    const KForm Phi = fundamental_form();
    const KForm phi_eta = wedge(Phi, eta());
    NamedTypes r;

    const bool normal = g.nij.is_zero();
    const bool d_phi0 = g.d_phi.is_zero();
    const bool d_eta0 = g.d_eta.is_zero();

    bool cosym = true;
    for (const auto& np : g.nabla_phi)
        cosym = cosym && np.is_zero();

    bool nearly_cosym = true, nearly_sasaki = true;
    for (int i = 0; i < kDim; ++i)
        for (int j = 0; j < kDim; ++j)
            for (int z = 0; z < kDim; ++z) {
                Scalar sym = nabla_phi_endo(g, i, j, z) + nabla_phi_endo(g, j, i, z);
                if (sgn(sym) != 0)
                    nearly_cosym = false;
                Scalar rhs = 2 * delta_kron(i, j) * delta_kron(z, 4) - delta_kron(i, 4) * delta_kron(j, z) -
                             delta_kron(j, 4) * delta_kron(i, z);
                if (sym != rhs)
                    nearly_sasaki = false;
            }

    // (nabla_X phi)(Y) + (nabla_{phi X} phi)(phi Y) = eta(Y) nabla_{phi X} xi, paired with Z.
    bool quasi_cosym = true;
    for (int x = 0; x < kDim && quasi_cosym; ++x)
        for (int y = 0; y < kDim && quasi_cosym; ++y)
            for (int z = 0; z < kDim; ++z) {
                const Vector X = unit(x), Y = unit(y), Z = unit(z);
                const Vector pX = apply_phi(X);
                Scalar lhs = detail::nabla_phi_at(g, X, Z, Y) + detail::nabla_phi_at(g, pX, Z, apply_phi(Y));
                Scalar rhs = 0;
                if (y == 4)
                    for (int k = 0; k < kDim; ++k)
                        if (sgn(pX[k]) != 0)
                            rhs += pX[k] * g.nabla_eta[static_cast<std::size_t>(k)].value({z});
                if (lhs != rhs) {
                    quasi_cosym = false;
                    break;
                }
            }

    const bool semi_cosym = g.delta_phi.is_zero() && sgn(g.delta_eta) == 0;

    if (d_eta0) {
        auto t = proportionality(g.d_phi, phi_eta);
        if (t && sgn(*t) != 0)
            r.kenmotsu_alpha = Scalar(*t / 2);
    }
    if (d_phi0) {
        auto t = proportionality(g.d_eta, Phi);
        if (t && sgn(*t) != 0)
            r.sasaki_alpha = Scalar(*t / 2);
    }
    const bool almost_ak = r.kenmotsu_alpha.has_value();
    const bool almost_as = r.sasaki_alpha.has_value();
    const bool contact_metric = almost_as && *r.sasaki_alpha == 1;

    // 4 (nabla_X Phi)(Y, Z) = g(X, s Z + t phi Z) eta(Y) - g(X, s Y + t phi Y) eta(Z),
    // s = (delta Phi)(xi), t = delta eta.
    bool trans = true;
    const Scalar s = g.delta_phi.value({4});
    for (int x = 0; x < kDim && trans; ++x)
        for (int y = 0; y < kDim && trans; ++y)
            for (int z = 0; z < kDim; ++z) {
                auto gx = [&](int v) -> Scalar {
                    Vector pv = apply_phi(unit(v));
                    return s * delta_kron(x, v) + g.delta_eta * pv[x];
                };
                Scalar rhs = gx(z) * delta_kron(y, 4) - gx(y) * delta_kron(z, 4);
                if (4 * g.nabla_phi[static_cast<std::size_t>(x)].value({y, z}) != rhs) {
                    trans = false;
                    break;
                }
            }

    // xi Killing: g(nabla_X xi, Y) + g(nabla_Y xi, X) = 0.
    bool killing = true;
    for (int x = 0; x < kDim; ++x)
        for (int y = 0; y < kDim; ++y)
            if (g.nabla_eta[static_cast<std::size_t>(x)].value({y}) + g.nabla_eta[static_cast<std::size_t>(y)].value({x}) != 0)
                killing = false;

    r.flags = {
        {"normal", normal},
        {"almost_cosymplectic", d_phi0 && d_eta0},
        {"cosymplectic", cosym},
        {"nearly_cosymplectic", nearly_cosym},
        {"semi_cosymplectic", semi_cosym},
        {"quasi_cosymplectic", quasi_cosym},
        {"almost_alpha_kenmotsu", almost_ak},
        {"alpha_kenmotsu", almost_ak && normal},
        {"almost_kenmotsu", almost_ak && *r.kenmotsu_alpha == 1},
        {"kenmotsu", almost_ak && normal && *r.kenmotsu_alpha == 1},
        {"almost_alpha_sasaki", almost_as},
        {"alpha_sasaki", almost_as && normal},
        {"contact_metric", contact_metric},
        {"sasaki", contact_metric && normal},
        {"quasi_sasaki", normal && d_phi0},
        {"nearly_sasaki", nearly_sasaki},
        {"trans_sasaki", trans},
        {"k_contact", contact_metric && killing},
    };
    return r;
}

/// A row of an implication table between a condition and a W-class.
struct ClassRow {
    std::string name;
    std::vector<int> classes;
};

/// Named type => class.
inline const std::vector<ClassRow>& type_implies_class()
{
    static const std::vector<ClassRow> rows = {
        {"normal", {1, 3, 5, 6, 8}},
        {"almost_cosymplectic", {9, 10}},
        {"nearly_cosymplectic", {4, 7}},
        {"semi_cosymplectic", {2, 4, 5, 6, 7, 8, 9, 10}},
        {"quasi_cosymplectic", {4, 7, 9, 10}},
        {"normal+semi_cosymplectic", {5, 8}},
        {"almost_alpha_kenmotsu", {1, 9, 10}},
        {"almost_alpha_sasaki", {3, 9, 10}},
        {"quasi_sasaki", {3, 5}},
        {"nearly_sasaki", {3, 4, 7}},
        {"trans_sasaki", {1, 3}},
        {"k_contact", {3, 9}},
    };
    return rows;
}

/// Class => named types (each name may be a conjunction joined by '+').
inline const std::vector<ClassRow>& class_implies_type()
{
    static const std::vector<ClassRow> rows = {
        {"normal", {1, 3, 5, 6, 8}},
        {"quasi_cosymplectic+almost_cosymplectic", {9, 10}},
        {"semi_cosymplectic", {4, 5, 7, 8, 9, 10}},
        {"quasi_sasaki", {3, 5}},
        {"trans_sasaki", {1, 3}},
    };
    return rows;
}

/// Chinea-Gonzalez classes C_i in terms of W-classes (equivalences).
inline const std::vector<ClassRow>& cg_table()
{
    static const std::vector<ClassRow> rows = {
        {"C2", {9}}, {"C4", {6}}, {"C5", {1}}, {"C6", {3}}, {"C7", {5}},
        {"C8", {8}}, {"C9", {10}}, {"C10+C11", {4, 7}}, {"C4+C12", {2, 6}},
    };
    return rows;
}

/// Chinea-Marrero classes N_i in terms of W-classes (equivalences).
inline const std::vector<ClassRow>& cm_table()
{
    static const std::vector<ClassRow> rows = {
        {"N2", {1, 3, 5, 6, 8, 9}},
        {"N3", {1, 3, 5, 6, 8, 10}},
        {"N4+N5", {1, 3, 4, 5, 6, 7, 8}},
        {"N6", {1, 2, 3, 5, 6, 8}},
    };
    return rows;
}

struct ClassReport {
    ThreeTensor gamma{Shape::W};
    Components components;                ///< Gamma_1..Gamma_10
    std::array<Scalar, 10> component_norms; ///< squared coefficient norms
    std::vector<int> strict_class;
    NamedTypes named;
    std::vector<std::string> cg_classes; ///< rows of the C-table containing the class
    std::vector<std::string> cm_classes; ///< rows of the N-table containing the class
    bool integrable() const { return strict_class.empty(); }
};

inline std::vector<std::string> matching_rows(const std::vector<ClassRow>& table, const std::vector<int>& strict)
{
    std::vector<std::string> out;
    for (const auto& row : table) {
        bool ok = true;
        for (int i : strict)
            ok = ok && std::find(row.classes.begin(), row.classes.end(), i) != row.classes.end();
        if (ok)
            out.push_back(row.name);
    }
    return out;
}

inline ClassReport classify(const FrameGeometry& g)
{
    ClassReport r;
    r.gamma = g.gamma;
    r.components = g.gamma_parts;
    for (int i = 0; i < 10; ++i) {
        const auto& c = r.components[static_cast<std::size_t>(i)].second.coeffs();
        r.component_norms[static_cast<std::size_t>(i)] = linalg::dot(c, c);
    }
    r.strict_class = g.strict_class();
    r.named = named_types(g);
    r.cg_classes = matching_rows(cg_table(), r.strict_class);
    r.cm_classes = matching_rows(cm_table(), r.strict_class);
    return r;
}

inline ClassReport classify(const FrameSpec& f) { return classify(frame_geometry(f)); }

namespace detail {

inline bool subset(const std::vector<int>& a, const std::vector<int>& b)
{
    for (int i : a)
        if (std::find(b.begin(), b.end(), i) == b.end())
            return false;
    return true;
}

inline bool all_flags(const NamedTypes& n, const std::string& conj)
{
    std::size_t start = 0;
    while (start <= conj.size()) {
        auto end = conj.find('+', start);
        if (end == std::string::npos)
            end = conj.size();
        if (!n[conj.substr(start, end - start)])
            return false;
        start = end + 1;
    }
    return true;
}

} // namespace detail

/// Violations of the type/class implication tables for one report; also
/// cosymplectic <=> integrable and the non-integrability of the almost
/// alpha-Kenmotsu, almost alpha-Sasaki, nearly Sasaki and K-contact types.
inline std::vector<std::string> type_table_violations(const ClassReport& r)
{
    std::vector<std::string> out;
    for (const auto& row : type_implies_class())
        if (detail::all_flags(r.named, row.name) && !detail::subset(r.strict_class, row.classes))
            out.push_back(row.name + " but not of the implied class");
    for (const auto& row : class_implies_type())
        if (detail::subset(r.strict_class, row.classes) && !detail::all_flags(r.named, row.name))
            out.push_back("class implies " + row.name + " but it fails");
    if (r.named["cosymplectic"] != r.integrable())
        out.push_back("cosymplectic differs from integrable");
    for (const char* t : {"almost_alpha_kenmotsu", "almost_alpha_sasaki", "nearly_sasaki", "k_contact"})
        if (r.named[t] && r.integrable())
            out.push_back(std::string(t) + " on an integrable structure");
    return out;
}

/// Type intersections that cannot occur: normal and (K-contact or nearly
/// Sasaki) forces Sasaki; the listed pairs force integrability.
inline std::vector<std::string> type_exclusion_violations(const ClassReport& r)
{
    std::vector<std::string> out;
    const auto& n = r.named;
    if (n["normal"] && (n["k_contact"] || n["nearly_sasaki"]) && !n["sasaki"])
        out.push_back("normal and K-contact/nearly Sasaki but not Sasaki");
    const std::pair<const char*, const char*> pairs[] = {
        {"nearly_cosymplectic", "quasi_cosymplectic"}, {"almost_alpha_kenmotsu", "semi_cosymplectic"},
        {"almost_alpha_sasaki", "semi_cosymplectic"}, {"nearly_sasaki", "semi_cosymplectic"},
        {"k_contact", "semi_cosymplectic"},
    };
    for (const auto& [a, b] : pairs)
        if (!r.integrable() && n[a] && n[b])
            out.push_back(std::string(a) + " and " + b + " on a non-integrable structure");
    return out;
}

/// The three differential characterizations of the classes W1+W2,
/// W3+W4+W5+W6 and W2+W3+W5+...+W10.
struct ClassConditions {
    bool vectorial_class;        ///< N = eta (x) d eta and d Phi = -2 (1/4 delta eta eta + xi _| d eta) ^ Phi
    bool skew_class;             ///< N(X,Y,Z) + N(Z,Y,X) = 0 and d Phi(X,Y,xi) + d Phi(phi X, phi Y, xi) = 0
    bool traceless_cyclic_class; ///< cyclic sum of N = 0 and d Phi ^ Phi = 0
};

inline ClassConditions class_conditions(const FrameGeometry& g)
{
    const KForm Phi = fundamental_form();
    ClassConditions r{true, true, true};

    for (int x = 0; x < kDim; ++x)
        for (int y = 0; y < kDim; ++y)
            for (int z = 0; z < kDim; ++z) {
                Scalar rhs = x == 4 ? g.d_eta.value({y, z}) : Scalar(0);
                if (g.nij(x, y, z) != rhs)
                    r.vectorial_class = false;
                if (g.nij(x, y, z) + g.nij(z, y, x) != 0)
                    r.skew_class = false;
                if (g.nij(x, y, z) + g.nij(y, z, x) + g.nij(z, x, y) != 0)
                    r.traceless_cyclic_class = false;
            }
    KForm a = Scalar(g.delta_eta / 4) * eta() + interior(xi(), g.d_eta);
    if (!(g.d_phi == Scalar(-2) * wedge(a, Phi)))
        r.vectorial_class = false;

    for (int x = 0; x < kDim; ++x)
        for (int y = 0; y < kDim; ++y) {
            Vector X = unit(x), Y = unit(y);
            Scalar s = evaluate(g.d_phi, {X, Y, xi()}) + evaluate(g.d_phi, {apply_phi(X), apply_phi(Y), xi()});
            if (sgn(s) != 0)
                r.skew_class = false;
        }
    if (!wedge(g.d_phi, Phi).is_zero())
        r.traceless_cyclic_class = false;
    return r;
}

} // namespace acm5
