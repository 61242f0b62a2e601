#pragma once

// Report documents for the command-line tool: one ordered JSON tree per
// report, rendered either as indented text or as JSON.

#include "acm5/catalog.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace acm5::cli {

using Doc = nlohmann::ordered_json;

struct AnalyzeOptions {
    std::vector<ConnectionKind> connections;
    bool explicit_connections = false; ///< inadmissible requests are errors
    bool curvature = false;
    bool holonomy = false;
};

inline std::vector<std::string> bracket_lines(const Coeff3& c)
{
    std::vector<std::string> out;
    for (int i = 0; i < kDim; ++i)
        for (int j = i + 1; j < kDim; ++j) {
            KForm f(1);
            for (int k = 0; k < kDim; ++k)
                f.coeff(static_cast<std::uint8_t>(1u << k)) = c[i][j][k];
            if (!f.is_zero())
                out.push_back("[e" + std::to_string(i + 1) + ", e" + std::to_string(j + 1) + "] = " + f.to_string());
        }
    return out;
}

inline std::string class_name(const std::vector<int>& strict)
{
    if (strict.empty())
        return "integrable (cosymplectic)";
    std::string out;
    for (int i : strict)
        out += (out.empty() ? "W" : "+W") + std::to_string(i);
    return out;
}

inline Doc matrix_doc(const Matrix5x5& m) { return format_matrix(m); }

inline Doc holonomy_doc(const HolonomyAlgebra& h)
{
    Doc d;
    d["name"] = h.name();
    d["dim"] = h.dim();
    Doc basis = Doc::array();
    for (const auto& b : h.basis)
        basis.push_back(b.to_string());
    d["basis"] = basis;
    d["inside_u2"] = h.inside_u2;
    d["inside_so4"] = h.inside_so4;
    d["is_su2"] = h.is_su2;
    d["equals_su2_lambda23"] = h.equals_su2_lambda23;
    return d;
}

inline Doc connection_doc(const FrameGeometry& g, const MetricConnection& c, const AnalyzeOptions& opt)
{
    Doc d;
    d["kind"] = connection_kind_name(c.kind);
    d["A"] = c.A.to_string();
    d["torsion"] = c.torsion.to_string();
    std::string type;
    for (const auto& l : torsion_type(c.torsion).labels)
        type += (type.empty() ? "" : "+") + l;
    d["torsion_type"] = type.empty() ? "0" : type;
    d["compatible"] = preserves_structure(c) && satisfies_compatibility(g, c);
    d["formula_matches_solve"] = c.formula_matches_solve;
    Doc subs = Doc::array();
    for (const auto& s : subtype_checks(g, c.kind)) {
        subs.push_back(s.name + ") " + s.condition + ": " + (s.condition_holds ? "holds" : "fails") +
                       (s.consistent() ? "" : " (INCONSISTENT with W" + std::to_string(s.component) + ")"));
    }
    d["subtypes"] = subs;
    d["parallel_torsion"] = torsion_parallel(c);
    if (!c.pointwise) {
        if (opt.curvature) {
            const CurvatureTensor R = curvature(c);
            d["curvature"] = R.to_string();
            d["ricci"] = matrix_doc(ricci(R));
        }
        if (opt.holonomy)
            d["holonomy"] = holonomy_doc(holonomy(c));
    }
    return d;
}

/// Thrown for an explicitly requested connection that does not exist.
class RequestError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline Doc analyze_doc(const FrameSpec& f, const std::string& source, const AnalyzeOptions& opt)
{
    const FrameGeometry g = frame_geometry(f);
    const ClassReport r = classify(g);
    Doc d;

    Doc fr;
    fr["name"] = f.name;
    fr["source"] = source;
    fr["pointwise"] = f.pointwise();
    fr["brackets"] = bracket_lines(g.brackets);
    d["frame"] = fr;

    Doc cl;
    cl["strict_class"] = class_name(r.strict_class);
    cl["gamma"] = g.gamma.to_string();
    Doc comps;
    for (int i = 1; i <= 10; ++i)
        if (!g.component(i).is_zero())
            comps["W" + std::to_string(i)] = g.component(i).to_string();
    cl["components"] = comps.is_null() ? Doc::object() : comps;
    cl["chinea_gonzalez"] = r.cg_classes;
    cl["chinea_marrero"] = r.cm_classes;
    d["class"] = cl;

    Doc fo;
    fo["d Phi"] = g.d_phi.to_string();
    fo["delta Phi"] = g.delta_phi.to_string();
    fo["d eta"] = g.d_eta.to_string();
    fo["delta eta"] = format_scalar(g.delta_eta);
    fo["nijenhuis"] = g.nij.to_string();
    fo["nijenhuis_zero"] = g.nij.is_zero();
    d["forms"] = fo;

    Doc nt = Doc::array();
    for (const auto& [n, v] : r.named.flags)
        if (v)
            nt.push_back(n);
    d["named_types"] = nt;

    const Admissibility adm = admits(g);
    Doc ad;
    ad["vectorial"] = adm.vectorial;
    ad["skew"] = adm.skew;
    ad["traceless-cyclic"] = adm.traceless_cyclic;
    d["admissible"] = ad;

    if (opt.curvature || opt.holonomy) {
        Doc lc;
        if (f.pointwise()) {
            lc["note"] = "curvature unavailable: pointwise frame (no bracket table)";
        } else {
            const MetricConnection c = levi_civita_connection(g);
            if (opt.curvature) {
                const CurvatureTensor R = curvature(c);
                lc["curvature"] = R.to_string();
                lc["ricci"] = matrix_doc(ricci(R));
            }
            if (opt.holonomy)
                lc["holonomy"] = holonomy_doc(holonomy(c));
        }
        d["levi_civita"] = lc;
    }

    Doc cs = Doc::array();
    for (ConnectionKind k : opt.connections) {
        try {
            cs.push_back(connection_doc(g, build_connection(g, k), opt));
        } catch (const NotAdmissible& e) {
            if (opt.explicit_connections)
                throw RequestError(e.what());
            Doc skip;
            skip["kind"] = connection_kind_name(k);
            skip["status"] = e.what();
            cs.push_back(skip);
        }
    }
    if (!opt.connections.empty())
        d["connections"] = cs;
    return d;
}

inline Doc verify_doc(const VerificationReport& rep, bool include_passing)
{
    Doc d;
    d["name"] = rep.name;
    d["result"] = rep.passed() ? "PASS" : "FAIL";
    d["fields"] = rep.fields.size();
    Doc fs = Doc::array();
    for (const auto& f : rep.fields) {
        if (f.pass && !include_passing)
            continue;
        Doc x;
        x["field"] = f.field;
        x["pass"] = f.pass;
        x["expected"] = f.expected;
        x["actual"] = f.actual;
        fs.push_back(x);
    }
    d["details"] = fs;
    return d;
}

namespace detail {

inline std::string scalar_text(const Doc& v)
{
    if (v.is_string())
        return v.get<std::string>();
    return v.dump();
}

inline void render(const Doc& d, int indent, std::string& out)
{
    const std::string pad(static_cast<std::size_t>(indent), ' ');
    if (d.is_object()) {
        for (const auto& [k, v] : d.items()) {
            if (v.is_structured() && !v.empty()) {
                out += pad + k + ":\n";
                render(v, indent + 2, out);
            } else if (v.is_structured()) {
                out += pad + k + ": -\n";
            } else {
                out += pad + k + ": " + scalar_text(v) + "\n";
            }
        }
    } else if (d.is_array()) {
        for (const auto& v : d) {
            if (v.is_structured()) {
                out += pad + "-\n";
                render(v, indent + 2, out);
            } else {
                out += pad + "- " + scalar_text(v) + "\n";
            }
        }
    } else {
        out += pad + scalar_text(d) + "\n";
    }
}

} // namespace detail

inline std::string render_text(const Doc& d)
{
    std::string out;
    detail::render(d, 0, out);
    return out;
}

inline std::string render_machine(const Doc& d) { return d.dump(2) + "\n"; }

} // namespace acm5::cli
