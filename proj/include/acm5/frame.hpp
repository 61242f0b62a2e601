#pragma once

// Left-invariant frames: an orthonormal adapted frame e_1..e_5 (xi = e_5,
// Phi = e12 + e34) given by constant structure constants and/or constant
// Levi-Civita connection forms.
//
//   brackets:   c[i][j][k] = c^k_ij,        [e_i, e_j] = sum_k c^k_ij e_k
//   connection: w[i][j][k] = omega_ij(e_k) = g(nabla_{e_k} e_i, e_j)
//
// All indices are 0-based in code and 1-based in text.

#include "acm5/scalar.hpp"
#include "acm5/exterior.hpp"

#include <array>
#include <optional>
#include <stdexcept>
#include <string>

namespace acm5 {

using Coeff3 = std::array<std::array<std::array<Scalar, kDim>, kDim>, kDim>;

inline Coeff3 zero_coeff3()
{
    Coeff3 c;
    for (auto& a : c)
        for (auto& b : a)
            for (auto& x : b)
                x = 0;
    return c;
}

inline bool is_zero(const Coeff3& c)
{
    for (const auto& a : c)
        for (const auto& b : a)
            for (const auto& x : b)
                if (sgn(x) != 0)
                    return false;
    return true;
}

/// Invalid frame data (bad indices, broken symmetry, Jacobi failure,
/// inconsistent brackets and connection, unparseable input).
class FrameError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct FrameSpec {
    std::string name;
    std::optional<Coeff3> brackets;
    std::optional<Coeff3> connection;

    /// True when only connection forms are given. Brackets are then derived
    /// from the first structure equation and carry no Jacobi guarantee, so
    /// the frame describes the structure at a point only.
    bool pointwise() const { return !brackets.has_value(); }
};

/// One 1-based table entry: [e_i, e_j] has coefficient value on e_k, or
/// omega_ij(e_k) = value.
struct Entry {
    int i, j, k;
    Scalar value;
};

namespace detail {

inline void check_entry(const Entry& en, const char* what)
{
    auto ok = [](int n) { return n >= 1 && n <= kDim; };
    if (!ok(en.i) || !ok(en.j) || !ok(en.k))
        throw FrameError(std::string(what) + ": index out of range 1..5");
    if (en.i == en.j && sgn(en.value) != 0)
        throw FrameError(std::string(what) + ": nonzero entry with i = j");
}

} // namespace detail

/// Antisymmetric table from entries with i < j or i > j (each pair once).
inline Coeff3 antisymmetric_table(std::initializer_list<Entry> entries, const char* what = "table")
{
    Coeff3 c = zero_coeff3();
    for (const auto& en : entries) {
        detail::check_entry(en, what);
        c[en.i - 1][en.j - 1][en.k - 1] += en.value;
        c[en.j - 1][en.i - 1][en.k - 1] -= en.value;
    }
    return c;
}

inline FrameSpec frame_from_brackets(std::string name, std::initializer_list<Entry> brackets)
{
    return {std::move(name), antisymmetric_table(brackets, "brackets"), std::nullopt};
}

struct JacobiViolation {
    int i, j, k;    ///< 1-based triple
    int component;  ///< 1-based output index
    Scalar value;
};

/// First triple i < j < k with [[e_i, e_j], e_k] + cyclic != 0.
inline std::optional<JacobiViolation> jacobi_violation(const Coeff3& c)
{
    for (int i = 0; i < kDim; ++i)
        for (int j = i + 1; j < kDim; ++j)
            for (int k = j + 1; k < kDim; ++k)
                for (int n = 0; n < kDim; ++n) {
                    Scalar s = 0;
                    for (int m = 0; m < kDim; ++m) {
                        s += c[i][j][m] * c[m][k][n];
                        s += c[j][k][m] * c[m][i][n];
                        s += c[k][i][m] * c[m][j][n];
                    }
                    if (sgn(s) != 0)
                        return JacobiViolation{i + 1, j + 1, k + 1, n + 1, s};
                }
    return std::nullopt;
}

/// Koszul formula for a left-invariant orthonormal frame:
/// omega_ij(e_k) = 1/2 (c^j_ki - c^k_ij + c^i_jk).
inline Coeff3 koszul(const Coeff3& c)
{
    Coeff3 w = zero_coeff3();
    for (int i = 0; i < kDim; ++i)
        for (int j = 0; j < kDim; ++j)
            for (int k = 0; k < kDim; ++k)
                w[i][j][k] = (c[k][i][j] - c[i][j][k] + c[j][k][i]) / 2;
    return w;
}

/// First structure equation of a torsion-free connection:
/// c^k_ij = omega_jk(e_i) - omega_ik(e_j).
inline Coeff3 brackets_from_connection(const Coeff3& w)
{
    Coeff3 c = zero_coeff3();
    for (int i = 0; i < kDim; ++i)
        for (int j = 0; j < kDim; ++j)
            for (int k = 0; k < kDim; ++k)
                c[i][j][k] = w[j][k][i] - w[i][k][j];
    return c;
}

/// Throws FrameError describing the first defect found.
inline void validate(const FrameSpec& f)
{
    if (!f.brackets && !f.connection)
        throw FrameError("frame '" + f.name + "': neither brackets nor connection given");
    if (f.brackets) {
        const auto& c = *f.brackets;
        for (int i = 0; i < kDim; ++i)
            for (int j = 0; j < kDim; ++j)
                for (int k = 0; k < kDim; ++k)
                    if (c[i][j][k] + c[j][i][k] != 0)
                        throw FrameError("frame '" + f.name + "': brackets not antisymmetric in (i, j)");
        if (auto v = jacobi_violation(c))
            throw FrameError("frame '" + f.name + "': Jacobi identity fails for (e" + std::to_string(v->i) + ", e" +
                             std::to_string(v->j) + ", e" + std::to_string(v->k) + "), component e" +
                             std::to_string(v->component) + " = " + format_scalar(v->value));
    }
    if (f.connection) {
        const auto& w = *f.connection;
        for (int i = 0; i < kDim; ++i)
            for (int j = 0; j < kDim; ++j)
                for (int k = 0; k < kDim; ++k)
                    if (w[i][j][k] + w[j][i][k] != 0)
                        throw FrameError("frame '" + f.name + "': connection not antisymmetric in (i, j)");
    }
    if (f.brackets && f.connection && koszul(*f.brackets) != *f.connection)
        throw FrameError("frame '" + f.name + "': connection does not match the Levi-Civita connection of the brackets");
}

} // namespace acm5
