#pragma once

// The eight left-invariant example structures with their expected results,
// and a verifier that recomputes everything from the bracket table alone.

#include "acm5/connections.hpp"

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace acm5 {

/// One expected identity between a computed form and a fixed form.
struct FormFact {
    std::string label; ///< e.g. "d Phi"
    std::function<KForm(const FrameGeometry&)> lhs;
    KForm rhs;
};

struct ExpectedConnection {
    ConnectionKind kind = ConnectionKind::LeviCivita;
    ThreeTensor torsion{Shape::T};
    std::string torsion_type;                      ///< e.g. "T_{2,1}"
    std::optional<ConnectionForms> connection_forms; ///< omega^c table
    std::optional<CurvatureTensor> curvature;
    std::optional<Matrix5x5> ricci;
    std::optional<std::string> holonomy;           ///< see holonomy_matches
    std::optional<bool> parallel_torsion;
};

struct Expected {
    ThreeTensor gamma{Shape::W};
    std::vector<int> strict_class;
    std::vector<std::string> named_flags; ///< exactly the flags that hold
    ConnectionForms levi_civita_table;
    std::vector<FormFact> d_delta_facts;
    bool nijenhuis_zero = false;
    std::optional<CurvatureTensor> curvature_g;
    std::optional<Matrix5x5> ricci_g;
    std::optional<std::string> holonomy_g;
    std::vector<ExpectedConnection> connections;
};

struct ExampleRecord {
    std::string title;
    FrameSpec frame;
    Expected expected;

    const std::string& name() const { return frame.name; }
};

/// Holonomy labels used in records: "0", "u(1) in u(2)", "su(2)",
/// "su(2) in u(2)", "u(2)", "so(4)", "so(5)".
inline bool holonomy_matches(const HolonomyAlgebra& h, const std::string& label)
{
    if (label == "0")
        return h.trivial;
    if (label == "u(1) in u(2)")
        return h.equals_u1;
    if (label == "su(2)")
        return h.is_su2;
    if (label == "su(2) in u(2)")
        return h.is_su2 && h.inside_u2;
    if (label == "u(2)")
        return h.equals_u2;
    if (label == "so(4)")
        return h.equals_so4;
    if (label == "so(5)")
        return h.equals_so5;
    throw std::invalid_argument("unknown holonomy label '" + label + "'");
}

/// sum over terms of a (x) b, as a curvature matrix (row = a, column = b).
inline CurvatureTensor curvature_from_terms(std::initializer_list<std::pair<KForm, KForm>> terms)
{
    CurvatureTensor r;
    for (auto& row : r.m)
        for (auto& x : row)
            x = 0;
    for (const auto& [a, b] : terms)
        for (std::size_t i = 0; i < 10; ++i)
            for (std::size_t j = 0; j < 10; ++j)
                if (sgn(a.coeffs()[i]) != 0 && sgn(b.coeffs()[j]) != 0)
                    r.m[i][j] += a.coeffs()[i] * b.coeffs()[j];
    return r;
}

inline CurvatureTensor scaled(const Scalar& s, CurvatureTensor r)
{
    for (auto& row : r.m)
        for (auto& x : row)
            x *= s;
    return r;
}

inline CurvatureTensor identity_curvature()
{
    CurvatureTensor r = curvature_from_terms({});
    for (std::size_t i = 0; i < 10; ++i)
        r.m[i][i] = 1;
    return r;
}

inline Matrix5x5 diag(std::initializer_list<Scalar> d)
{
    Matrix5x5 m;
    for (auto& row : m)
        for (auto& x : row)
            x = 0;
    std::size_t i = 0;
    for (const auto& x : d)
        m[i][i] = x, ++i;
    return m;
}

inline std::string format_matrix(const Matrix5x5& m)
{
    bool diagonal = true;
    for (int i = 0; i < kDim; ++i)
        for (int j = 0; j < kDim; ++j)
            if (i != j && sgn(m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) != 0)
                diagonal = false;
    std::string out = diagonal ? "diag(" : "[";
    for (int i = 0; i < kDim; ++i) {
        if (i)
            out += diagonal ? ", " : "; ";
        if (diagonal) {
            out += format_scalar(m[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)]);
            continue;
        }
        for (int j = 0; j < kDim; ++j)
            out += (j ? " " : "") + format_scalar(m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
    }
    return out + (diagonal ? ")" : "]");
}

namespace detail {

inline ThreeTensor a_sum(std::initializer_list<std::pair<KForm, KForm>> terms)
{
    ThreeTensor t(Shape::A);
    for (const auto& [a, b] : terms)
        t += otimes(a, b);
    return t.with_shape(Shape::A);
}

inline ThreeTensor t_sum(std::initializer_list<std::pair<KForm, KForm>> terms)
{
    ThreeTensor t(Shape::T);
    for (const auto& [a, b] : terms)
        t += otimes(a, b);
    return t.with_shape(Shape::T);
}

inline ThreeTensor w_sum(std::initializer_list<std::pair<KForm, KForm>> terms)
{
    return a_sum(terms).with_shape(Shape::W);
}

inline KForm scalar_form(const Scalar& s) { return KForm::constant(s); }

inline FormFact fact(std::string label, std::function<KForm(const FrameGeometry&)> lhs, KForm rhs)
{
    return {std::move(label), std::move(lhs), std::move(rhs)};
}

inline KForm get_d_phi(const FrameGeometry& g) { return g.d_phi; }
inline KForm get_d_eta(const FrameGeometry& g) { return g.d_eta; }
inline KForm get_delta_phi(const FrameGeometry& g) { return g.delta_phi; }
inline KForm get_delta_eta(const FrameGeometry& g) { return KForm::constant(g.delta_eta); }

inline std::vector<ExampleRecord> build_examples()
{
    const KForm Phi = fundamental_form();
    const KForm et = eta();
    const Scalar h(1, 2), q(1, 4);
    std::vector<ExampleRecord> out;

    {
        ExampleRecord r;
        r.title = "Kenmotsu structure on the warped product R x_f R^4";
        r.frame = frame_from_brackets("kenmotsu_w1", {{1, 5, 1, 1}, {2, 5, 2, 1}, {3, 5, 3, 1}, {4, 5, 4, 1}});
        auto& x = r.expected;
        x.levi_civita_table = antisymmetric_table({{1, 5, 1, -1}, {2, 5, 2, -1}, {3, 5, 3, -1}, {4, 5, 4, -1}});
        x.gamma = w_sum({{-e(1), e(1, 5)}, {-e(2), e(2, 5)}, {-e(3), e(3, 5)}, {-e(4), e(4, 5)}});
        x.strict_class = {1};
        x.named_flags = {"normal", "almost_alpha_kenmotsu", "alpha_kenmotsu", "almost_kenmotsu", "kenmotsu",
                         "trans_sasaki"};
        x.nijenhuis_zero = true;
        x.d_delta_facts = {fact("d Phi", get_d_phi, Scalar(2) * wedge(Phi, et)),
                           fact("delta Phi", get_delta_phi, KForm(1)), fact("d eta", get_d_eta, KForm(2))};
        x.curvature_g = identity_curvature();
        x.holonomy_g = "so(5)";
        ExpectedConnection c;
        c.kind = ConnectionKind::Vectorial;
        c.torsion = t_sum({{-e(1, 5), e(1)}, {-e(2, 5), e(2)}, {-e(3, 5), e(3)}, {-e(4, 5), e(4)}});
        c.torsion_type = "T_{1,1}";
        c.curvature = curvature_from_terms({});
        c.holonomy = "0";
        c.parallel_torsion = true;
        x.connections.push_back(c);
        out.push_back(std::move(r));
    }
    {
        ExampleRecord r;
        r.title = "Warped product R x_f R^4 with xi tangent to the fibre";
        r.frame = frame_from_brackets("warped_w2", {{1, 2, 2, 1}, {1, 3, 3, 1}, {1, 4, 4, 1}, {1, 5, 5, 1}});
        auto& x = r.expected;
        x.levi_civita_table = antisymmetric_table({{1, 2, 2, -1}, {1, 3, 3, -1}, {1, 4, 4, -1}, {1, 5, 5, -1}});
        x.gamma = w_sum({{Scalar(-h) * e(3), e(1, 3) - e(2, 4)}, {Scalar(-h) * e(4), e(1, 4) + e(2, 3)}, {-e(5), e(1, 5)}});
        x.strict_class = {2};
        x.named_flags = {};
        x.nijenhuis_zero = false;
        x.d_delta_facts = {
            fact("d Phi + 2 (xi _| d eta) ^ Phi",
                 [](const FrameGeometry& g) {
                     return g.d_phi + Scalar(2) * wedge(interior(xi(), g.d_eta), fundamental_form());
                 },
                 KForm(3)),
            fact("delta eta", get_delta_eta, scalar_form(0))};
        ExpectedConnection c1;
        c1.kind = ConnectionKind::Vectorial;
        c1.torsion = t_sum({{-e(1, 2), e(2)}, {-e(1, 3), e(3)}, {-e(1, 4), e(4)}, {-e(1, 5), e(5)}});
        c1.torsion_type = "T_{1,2}";
        c1.curvature = curvature_from_terms({});
        c1.holonomy = "0";
        c1.parallel_torsion = true;
        x.connections.push_back(c1);
        ExpectedConnection c2;
        c2.kind = ConnectionKind::TracelessCyclic;
        const Scalar t3(1, 3);
        c2.torsion = t_sum({{t3 * (Scalar(5) * e(1, 2) + Scalar(4) * e(3, 4)), e(2)},
                            {Scalar(-t3) * (e(1, 3) - Scalar(2) * e(2, 4)), e(3)},
                            {Scalar(-t3) * (e(1, 4) + Scalar(2) * e(2, 3)), e(4)},
                            {-e(1, 5), e(5)}});
        c2.torsion_type = "T_{3,5}";
        c2.curvature = curvature_from_terms(
            {{Scalar(4, 3) * e(1, 2), Scalar(2) * e(1, 2) + e(3, 4)},
             {Scalar(2, 9) * (Scalar(3) * e(1, 3) + Scalar(4) * e(2, 4)), e(1, 3) + e(2, 4)},
             {Scalar(-8, 9) * e(3, 4), e(1, 2) - e(3, 4)},
             {Scalar(2, 9) * (Scalar(3) * e(1, 4) - Scalar(4) * e(2, 3)), e(1, 4) - e(2, 3)}});
        c2.ricci = diag({-4, Scalar(-40, 9), Scalar(-22, 9), Scalar(-22, 9), 0});
        c2.holonomy = "u(2)";
        c2.parallel_torsion = false;
        x.connections.push_back(c2);
        out.push_back(std::move(r));
    }
    {
        ExampleRecord r;
        r.title = "Standard Sasakian structure on the Heisenberg group";
        r.frame = frame_from_brackets("heisenberg_sasaki_w3", {{1, 2, 5, -2}, {3, 4, 5, -2}});
        auto& x = r.expected;
        x.levi_civita_table = antisymmetric_table(
            {{1, 2, 5, 1}, {3, 4, 5, 1}, {1, 5, 2, 1}, {2, 5, 1, -1}, {3, 5, 4, 1}, {4, 5, 3, -1}});
        x.gamma = w_sum({{-e(1), e(2, 5)}, {e(2), e(1, 5)}, {-e(3), e(4, 5)}, {e(4), e(3, 5)}});
        x.strict_class = {3};
        x.named_flags = {"normal",       "almost_alpha_sasaki", "alpha_sasaki",  "contact_metric", "sasaki",
                         "quasi_sasaki", "nearly_sasaki",       "trans_sasaki", "k_contact"};
        x.nijenhuis_zero = true;
        x.d_delta_facts = {fact("d Phi", get_d_phi, KForm(3)), fact("delta Phi", get_delta_phi, Scalar(4) * et),
                           fact("d eta", get_d_eta, Scalar(2) * Phi),
                           fact("delta eta", get_delta_eta, scalar_form(0))};
        x.curvature_g = curvature_from_terms(
            {{Scalar(3) * e(1, 2), e(1, 2)}, {Scalar(3) * e(3, 4), e(3, 4)}, {Scalar(2) * e(1, 2), e(3, 4)},
             {Scalar(2) * e(3, 4), e(1, 2)}, {e(1, 3), e(2, 4)}, {e(2, 4), e(1, 3)}, {-e(1, 4), e(2, 3)},
             {-e(2, 3), e(1, 4)}, {-e(1, 5), e(1, 5)}, {-e(2, 5), e(2, 5)}, {-e(3, 5), e(3, 5)},
             {-e(4, 5), e(4, 5)}});
        x.ricci_g = diag({-2, -2, -2, -2, 4});
        x.holonomy_g = "so(5)";
        ExpectedConnection c1;
        c1.kind = ConnectionKind::Skew;
        c1.torsion = Scalar(2) * t_sum({{e(2, 5), e(1)}, {-e(1, 5), e(2)}, {e(4, 5), e(3)}, {-e(3, 5), e(4)}, {Phi, e(5)}});
        c1.torsion_type = "T_{2,1}";
        c1.curvature = curvature_from_terms({{Scalar(4) * Phi, Phi}});
        c1.ricci = diag({-4, -4, -4, -4, 0});
        c1.holonomy = "u(1) in u(2)";
        c1.parallel_torsion = true;
        x.connections.push_back(c1);
        ExpectedConnection c2;
        c2.kind = ConnectionKind::TracelessCyclic;
        c2.torsion = t_sum({{-e(2, 5), e(1)}, {e(1, 5), e(2)}, {-e(4, 5), e(3)}, {e(3, 5), e(4)}, {Scalar(2) * Phi, e(5)}});
        c2.torsion_type = "T_{3,1}";
        c2.curvature = curvature_from_terms({{Scalar(-2) * Phi, Phi}});
        c2.ricci = diag({2, 2, 2, 2, 0});
        c2.holonomy = "u(1) in u(2)";
        c2.parallel_torsion = true;
        x.connections.push_back(c2);
        out.push_back(std::move(r));
    }
    {
        ExampleRecord r;
        r.title = "Heisenberg group with the permuted adapted frame";
        r.frame = frame_from_brackets("heisenberg_w5", {{1, 3, 5, 2}, {2, 4, 5, 2}});
        auto& x = r.expected;
        x.levi_civita_table = antisymmetric_table(
            {{1, 3, 5, -1}, {2, 4, 5, -1}, {1, 5, 3, -1}, {2, 5, 4, -1}, {3, 5, 1, 1}, {4, 5, 2, 1}});
        x.gamma = w_sum({{e(1), e(3, 5)}, {e(2), e(4, 5)}, {-e(3), e(1, 5)}, {-e(4), e(2, 5)}});
        x.strict_class = {5};
        x.named_flags = {"normal", "semi_cosymplectic", "quasi_sasaki"};
        x.nijenhuis_zero = true;
        x.d_delta_facts = {fact("d Phi", get_d_phi, KForm(3)), fact("delta Phi", get_delta_phi, KForm(1)),
                           fact("d eta ^ Phi", [](const FrameGeometry& g) { return wedge(g.d_eta, fundamental_form()); },
                                KForm(4)),
                           fact("delta eta", get_delta_eta, scalar_form(0))};
        x.curvature_g = curvature_from_terms(
            {{Scalar(3) * e(1, 3), e(1, 3)}, {Scalar(3) * e(2, 4), e(2, 4)}, {Scalar(2) * e(1, 3), e(2, 4)},
             {Scalar(2) * e(2, 4), e(1, 3)}, {e(1, 2), e(3, 4)}, {e(3, 4), e(1, 2)}, {e(1, 4), e(2, 3)},
             {e(2, 3), e(1, 4)}, {-e(1, 5), e(1, 5)}, {-e(2, 5), e(2, 5)}, {-e(3, 5), e(3, 5)},
             {-e(4, 5), e(4, 5)}});
        const KForm w = e(1, 3) + e(2, 4);
        ExpectedConnection c1;
        c1.kind = ConnectionKind::Skew;
        c1.torsion = Scalar(-2) * t_sum({{e(3, 5), e(1)}, {e(4, 5), e(2)}, {-e(1, 5), e(3)}, {-e(2, 5), e(4)}, {w, e(5)}});
        c1.torsion_type = "T_{2,3}";
        c1.curvature = curvature_from_terms({{Scalar(4) * w, w}});
        c1.ricci = diag({-4, -4, -4, -4, 0});
        c1.holonomy = "u(1) in u(2)";
        c1.parallel_torsion = true;
        x.connections.push_back(c1);
        ExpectedConnection c2;
        c2.kind = ConnectionKind::TracelessCyclic;
        c2.torsion = t_sum({{e(3, 5), e(1)}, {e(4, 5), e(2)}, {-e(1, 5), e(3)}, {-e(2, 5), e(4)}, {Scalar(-2) * w, e(5)}});
        c2.torsion_type = "T_{3,3}";
        c2.curvature = curvature_from_terms({{Scalar(-2) * w, w}});
        c2.ricci = diag({2, 2, 2, 2, 0});
        c2.holonomy = "u(1) in u(2)";
        c2.parallel_torsion = true;
        x.connections.push_back(c2);
        out.push_back(std::move(r));
    }
    {
        ExampleRecord r;
        r.title = "Product of a solvable 4-dimensional Lie group with R";
        r.frame = frame_from_brackets("kowalski_tricerri_w6", {{1, 4, 1, -1}, {2, 4, 2, -1}, {3, 4, 3, 2}});
        auto& x = r.expected;
        x.levi_civita_table = antisymmetric_table({{1, 4, 1, 1}, {2, 4, 2, 1}, {3, 4, 3, -2}});
        x.gamma = w_sum({{h * e(1), e(1, 4) + e(2, 3)}, {Scalar(-h) * e(2), e(1, 3) - e(2, 4)}});
        x.strict_class = {6};
        x.named_flags = {"normal"};
        x.nijenhuis_zero = true;
        x.d_delta_facts = {
            fact("d Phi ^ delta Phi", [](const FrameGeometry& g) { return wedge(g.d_phi, g.delta_phi); },
                 Scalar(-2) * wedge(Phi, Phi)),
            fact("d eta", get_d_eta, KForm(2)), fact("delta eta", get_delta_eta, scalar_form(0))};
        x.curvature_g = curvature_from_terms({{e(1, 2), e(1, 2)},
                                              {Scalar(-2) * e(1, 3), e(1, 3)},
                                              {e(1, 4), e(1, 4)},
                                              {Scalar(-2) * e(2, 3), e(2, 3)},
                                              {e(2, 4), e(2, 4)},
                                              {Scalar(4) * e(3, 4), e(3, 4)}});
        x.ricci_g = diag({0, 0, 0, -6, 0});
        x.holonomy_g = "so(4)";
        ExpectedConnection c1;
        c1.kind = ConnectionKind::Skew;
        c1.torsion = Scalar(-2) * t_sum({{e(2, 3), e(1)}, {-e(1, 3), e(2)}, {e(1, 2), e(3)}});
        c1.torsion_type = "T_{2,4}";
        c1.curvature = curvature_from_terms({{Scalar(2) * (e(1, 2) + e(3, 4)), e(1, 2) - e(3, 4)},
                                             {e(1, 4) + e(2, 3), e(1, 4) - e(2, 3)},
                                             {-(e(1, 3) - e(2, 4)), e(1, 3) + e(2, 4)},
                                             {Scalar(6) * e(3, 4), e(3, 4)}});
        c1.ricci = diag({-2, -2, -2, -6, 0});
        c1.holonomy = "u(2)";
        c1.parallel_torsion = false;
        x.connections.push_back(c1);
        ExpectedConnection c2;
        c2.kind = ConnectionKind::TracelessCyclic;
        c2.torsion = t_sum({{h * (e(1, 4) + e(2, 3)), e(1)}, {Scalar(-h) * (e(1, 3) - e(2, 4)), e(2)}, {-Phi, e(3)}});
        c2.torsion_type = "T_{3,4}";
        c2.curvature = scaled(h, curvature_from_terms({{e(1, 2) - Scalar(4) * e(3, 4), e(1, 2) - e(3, 4)},
                                                       {e(1, 4) + Scalar(2) * e(2, 3), e(1, 4) - e(2, 3)},
                                                       {-(Scalar(2) * e(1, 3) - e(2, 4)), e(1, 3) + e(2, 4)}}));
        c2.ricci = diag({0, 0, 0, -3, 0});
        c2.holonomy = "su(2) in u(2)";
        c2.parallel_torsion = false;
        x.connections.push_back(c2);
        out.push_back(std::move(r));
    }
    {
        ExampleRecord r;
        r.title = "Product of the Heisenberg group, S^1 and R";
        r.frame = frame_from_brackets("abbena_product_w9", {{2, 3, 4, 1}});
        auto& x = r.expected;
        x.levi_civita_table = antisymmetric_table({{2, 3, 4, -h}, {2, 4, 3, -h}, {3, 4, 2, h}});
        x.gamma = w_sum({{q * e(3), e(1, 3) - e(2, 4)}, {Scalar(-q) * e(4), e(1, 4) + e(2, 3)}});
        x.strict_class = {9};
        x.named_flags = {"almost_cosymplectic", "semi_cosymplectic", "quasi_cosymplectic"};
        x.nijenhuis_zero = false;
        x.d_delta_facts = {fact("d Phi", get_d_phi, KForm(3)), fact("delta Phi", get_delta_phi, KForm(1)),
                           fact("d eta", get_d_eta, KForm(2)), fact("delta eta", get_delta_eta, scalar_form(0))};
        x.curvature_g = scaled(Scalar(-q), curvature_from_terms({{e(2, 4), e(2, 4)},
                                                                  {e(3, 4), e(3, 4)},
                                                                  {Scalar(-3) * e(2, 3), e(2, 3)}}));
        x.ricci_g = diag({0, Scalar(-h), Scalar(-h), h, 0});
        x.holonomy_g = "su(2)";
        ExpectedConnection c;
        c.kind = ConnectionKind::TracelessCyclic;
        c.torsion = t_sum({{q * (e(1, 3) - e(2, 4)), e(3)}, {Scalar(-q) * (e(1, 4) + e(2, 3)), e(4)}});
        c.torsion_type = "T_{3,7}";
        c.curvature = scaled(Scalar(-1, 8), curvature_from_terms({{e(2, 4), e(1, 3) + e(2, 4)},
                                                                   {-e(3, 4), e(1, 2) - e(3, 4)},
                                                                   {Scalar(3) * e(2, 3), e(1, 4) - e(2, 3)}}));
        c.ricci = diag({0, Scalar(-q), Scalar(-q), q, 0});
        c.holonomy = "su(2) in u(2)";
        c.parallel_torsion = false;
        x.connections.push_back(c);
        out.push_back(std::move(r));
    }
    {
        ExampleRecord r;
        r.title = "Generalized symmetric space, first adapted frame";
        r.frame = frame_from_brackets("gss_w8", {{1, 5, 3, -2}, {2, 5, 4, -2}});
        auto& x = r.expected;
        x.levi_civita_table = antisymmetric_table(
            {{1, 3, 5, 1}, {2, 4, 5, 1}, {1, 5, 3, 1}, {2, 5, 4, 1}, {3, 5, 1, 1}, {4, 5, 2, 1}});
        x.gamma = w_sum({{e(1), e(3, 5)}, {e(2), e(4, 5)}, {e(3), e(1, 5)}, {e(4), e(2, 5)}});
        x.strict_class = {8};
        x.named_flags = {"normal", "semi_cosymplectic"};
        x.nijenhuis_zero = true;
        x.d_delta_facts = {
            fact("d Phi ^ Phi", [](const FrameGeometry& g) { return wedge(g.d_phi, fundamental_form()); }, KForm(5)),
            fact("delta Phi", get_delta_phi, KForm(1)), fact("d eta", get_d_eta, KForm(2)),
            fact("delta eta", get_delta_eta, scalar_form(0))};
        x.curvature_g = curvature_from_terms(
            {{e(1, 2), e(3, 4)}, {e(3, 4), e(1, 2)}, {-e(1, 4), e(2, 3)}, {-e(2, 3), e(1, 4)}, {-e(1, 3), e(1, 3)},
             {-e(2, 4), e(2, 4)}, {Scalar(3) * e(1, 5), e(1, 5)}, {Scalar(3) * e(2, 5), e(2, 5)},
             {-e(3, 5), e(3, 5)}, {-e(4, 5), e(4, 5)}});
        x.ricci_g = diag({-2, -2, 2, 2, -4});
        x.holonomy_g = "so(5)";
        ExpectedConnection c;
        c.kind = ConnectionKind::TracelessCyclic;
        c.torsion = t_sum({{e(3, 5), e(1)}, {e(4, 5), e(2)}, {e(1, 5), e(3)}, {e(2, 5), e(4)}});
        c.torsion_type = "T_{3,6}";
        c.connection_forms = antisymmetric_table({{1, 3, 5, 1}, {2, 4, 5, 1}});
        c.curvature = curvature_from_terms({});
        c.holonomy = "0";
        c.parallel_torsion = true;
        x.connections.push_back(c);
        out.push_back(std::move(r));
    }
    {
        ExampleRecord r;
        r.title = "Generalized symmetric space, second adapted frame";
        r.frame = frame_from_brackets("gss_w10", {{1, 5, 2, -2}, {3, 5, 4, -2}});
        auto& x = r.expected;
        x.levi_civita_table = antisymmetric_table(
            {{1, 2, 5, 1}, {3, 4, 5, 1}, {1, 5, 2, 1}, {2, 5, 1, 1}, {3, 5, 4, 1}, {4, 5, 3, 1}});
        x.gamma = w_sum({{e(1), e(2, 5)}, {e(2), e(1, 5)}, {e(3), e(4, 5)}, {e(4), e(3, 5)}});
        x.strict_class = {10};
        x.named_flags = {"almost_cosymplectic", "semi_cosymplectic", "quasi_cosymplectic"};
        x.nijenhuis_zero = false;
        x.d_delta_facts = {fact("d Phi", get_d_phi, KForm(3)), fact("delta Phi", get_delta_phi, KForm(1)),
                           fact("d eta", get_d_eta, KForm(2)), fact("delta eta", get_delta_eta, scalar_form(0))};
        x.curvature_g = curvature_from_terms(
            {{e(1, 3), e(2, 4)}, {e(2, 4), e(1, 3)}, {e(1, 4), e(2, 3)}, {e(2, 3), e(1, 4)}, {-e(1, 2), e(1, 2)},
             {-e(3, 4), e(3, 4)}, {Scalar(3) * e(1, 5), e(1, 5)}, {-e(2, 5), e(2, 5)},
             {Scalar(3) * e(3, 5), e(3, 5)}, {-e(4, 5), e(4, 5)}});
        x.ricci_g = diag({-2, 2, -2, 2, -4});
        ExpectedConnection c;
        c.kind = ConnectionKind::TracelessCyclic;
        c.torsion = t_sum({{e(2, 5), e(1)}, {e(1, 5), e(2)}, {e(4, 5), e(3)}, {e(3, 5), e(4)}});
        c.torsion_type = "T_{3,8}";
        c.connection_forms = antisymmetric_table({{1, 2, 5, 1}, {3, 4, 5, 1}});
        c.curvature = curvature_from_terms({});
        c.holonomy = "0";
        c.parallel_torsion = true;
        x.connections.push_back(c);
        out.push_back(std::move(r));
    }
    return out;
}

} // namespace detail

inline const std::vector<ExampleRecord>& examples()
{
    static const std::vector<ExampleRecord> records = detail::build_examples();
    return records;
}

inline std::vector<std::string> example_names()
{
    std::vector<std::string> out;
    for (const auto& r : examples())
        out.push_back(r.name());
    return out;
}

class UnknownExample : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

inline const ExampleRecord& find_example(const std::string& name)
{
    for (const auto& r : examples())
        if (r.name() == name)
            return r;
    std::string valid;
    for (const auto& n : example_names())
        valid += (valid.empty() ? "" : ", ") + n;
    throw UnknownExample("unknown example '" + name + "'; valid names: " + valid);
}

/// Relabels a bracket table: out[i][j][k] = c[p[i]][p[j]][p[k]] (0-based p).
inline Coeff3 permute_brackets(const Coeff3& c, const std::array<int, kDim>& p)
{
    Coeff3 out = zero_coeff3();
    for (int i = 0; i < kDim; ++i)
        for (int j = 0; j < kDim; ++j)
            for (int k = 0; k < kDim; ++k)
                out[i][j][k] = c[p[i]][p[j]][p[k]];
    return out;
}

/// heisenberg_w5 frame in terms of the heisenberg_sasaki_w3 frame:
/// (e1, e2, e3, e4, e5) -> (e2, e4, e1, e3, e5).
inline constexpr std::array<int, kDim> kHeisenbergPermutation = {1, 3, 0, 2, 4};

struct FieldResult {
    std::string field;
    bool pass;
    std::string expected;
    std::string actual;
};

struct VerificationReport {
    std::string name;
    std::vector<FieldResult> fields;

    bool passed() const
    {
        for (const auto& f : fields)
            if (!f.pass)
                return false;
        return true;
    }
    std::vector<std::string> failed_fields() const
    {
        std::vector<std::string> out;
        for (const auto& f : fields)
            if (!f.pass)
                out.push_back(f.field);
        return out;
    }
};

namespace detail {

inline std::string format_table(const Coeff3& w)
{
    std::string out;
    for (int i = 0; i < kDim; ++i)
        for (int j = i + 1; j < kDim; ++j) {
            KForm f(1);
            for (int k = 0; k < kDim; ++k)
                f.coeff(static_cast<std::uint8_t>(1u << k)) = w[i][j][k];
            if (f.is_zero())
                continue;
            if (!out.empty())
                out += ", ";
            out += "omega_" + std::to_string(i + 1) + std::to_string(j + 1) + " = " + f.to_string();
        }
    return out.empty() ? "0" : out;
}

inline std::string join(const std::vector<std::string>& v, const char* sep = " ")
{
    std::string out;
    for (const auto& s : v)
        out += (out.empty() ? "" : sep) + s;
    return out;
}

inline std::string class_string(const std::vector<int>& c)
{
    std::vector<std::string> v;
    for (int i : c)
        v.push_back("W" + std::to_string(i));
    return v.empty() ? "integrable" : join(v, "+");
}

inline std::string holonomy_string(const HolonomyAlgebra& h)
{
    std::string out = h.name() + " [";
    for (std::size_t i = 0; i < h.basis.size(); ++i)
        out += (i ? ", " : "") + h.basis[i].to_string();
    return out + "]";
}

} // namespace detail

/// Recomputes every expected field of a record from its bracket table.
inline VerificationReport run_example(const ExampleRecord& rec)
{
    VerificationReport rep{rec.name(), {}};
    auto add = [&](std::string field, bool pass, std::string exp, std::string act) {
        rep.fields.push_back({std::move(field), pass, std::move(exp), std::move(act)});
    };
    const auto& x = rec.expected;
    const FrameGeometry g = frame_geometry(rec.frame);

    add("levi_civita_table", g.omega == x.levi_civita_table, detail::format_table(x.levi_civita_table),
        detail::format_table(g.omega));
    const Coeff3 round = brackets_from_connection(g.omega);
    add("structure_round_trip", round == g.brackets, "identity", round == g.brackets ? "identity" : "differs");
    add("gamma", g.gamma == x.gamma, x.gamma.to_string(), g.gamma.to_string());
    const ClassReport cr = classify(g);
    add("strict_class", cr.strict_class == x.strict_class, detail::class_string(x.strict_class),
        detail::class_string(cr.strict_class));
    std::vector<std::string> flags;
    for (const auto& [n, v] : cr.named.flags)
        if (v)
            flags.push_back(n);
    add("named_flags", flags == x.named_flags, detail::join(x.named_flags), detail::join(flags));
    for (const auto& f : x.d_delta_facts) {
        const KForm lhs = f.lhs(g);
        add("form: " + f.label, lhs == f.rhs, f.rhs.to_string(), lhs.to_string());
    }
    add("nijenhuis_zero", g.nij.is_zero() == x.nijenhuis_zero, x.nijenhuis_zero ? "true" : "false",
        g.nij.is_zero() ? "true" : "false");

    const MetricConnection lc = levi_civita_connection(g);
    if (x.curvature_g) {
        const CurvatureTensor R = curvature(lc);
        add("curvature_g", R == *x.curvature_g, x.curvature_g->to_string(), R.to_string());
    }
    if (x.ricci_g) {
        const Matrix5x5 ric = ricci(curvature(lc));
        add("ricci_g", ric == *x.ricci_g, format_matrix(*x.ricci_g), format_matrix(ric));
    }
    if (x.holonomy_g) {
        const HolonomyAlgebra h = holonomy(lc);
        add("holonomy_g", holonomy_matches(h, *x.holonomy_g), *x.holonomy_g, detail::holonomy_string(h));
    }

    for (const auto& ec : x.connections) {
        const std::string p = std::string(connection_kind_name(ec.kind)) + ".";
        MetricConnection c;
        try {
            c = build_connection(g, ec.kind);
        } catch (const NotAdmissible& e) {
            add(p + "exists", false, "admissible", e.what());
            continue;
        }
        add(p + "compatible", preserves_structure(c) && satisfies_compatibility(g, c), "true",
            preserves_structure(c) && satisfies_compatibility(g, c) ? "true" : "false");
        add(p + "unique_solve", c.formula_matches_solve, "formula = linear solve",
            c.formula_matches_solve ? "formula = linear solve" : "differs");
        add(p + "torsion", c.torsion == ec.torsion, ec.torsion.to_string(), c.torsion.to_string());
        const TorsionType tt = torsion_type(c.torsion);
        add(p + "torsion_type", tt.labels == std::vector<std::string>{ec.torsion_type}, ec.torsion_type,
            detail::join(tt.labels, "+"));
        if (ec.connection_forms)
            add(p + "connection_forms", c.omega == *ec.connection_forms, detail::format_table(*ec.connection_forms),
                detail::format_table(c.omega));
        if (ec.curvature) {
            const CurvatureTensor R = curvature(c);
            add(p + "curvature", R == *ec.curvature, ec.curvature->to_string(), R.to_string());
        }
        if (ec.ricci) {
            const Matrix5x5 ric = ricci(curvature(c));
            add(p + "ricci", ric == *ec.ricci, format_matrix(*ec.ricci), format_matrix(ric));
        }
        if (ec.holonomy) {
            const HolonomyAlgebra h = holonomy(c);
            add(p + "holonomy", holonomy_matches(h, *ec.holonomy), *ec.holonomy, detail::holonomy_string(h));
        }
        if (ec.parallel_torsion) {
            const bool par = torsion_parallel(c);
            add(p + "parallel_torsion", par == *ec.parallel_torsion, *ec.parallel_torsion ? "true" : "false",
                par ? "true" : "false");
        }
    }
    return rep;
}

inline VerificationReport run_example(const std::string& name) { return run_example(find_example(name)); }

} // namespace acm5
