#pragma once

// Exterior algebra of the oriented Euclidean model space R^5.
//
// Basis k-forms are e_{i1...ik} = e_{i1} ^ ... ^ e_{ik} with i1 < ... < ik.
// Internally an index set is a 5-bit mask (bit i <-> e_{i+1}); coefficients
// of a k-form are stored densely in lexicographic order of the index tuples,
// e.g. degree 2: e12, e13, e14, e15, e23, e24, e25, e34, e35, e45.
// A form evaluates on basis vectors with the determinant convention
// (e1 ^ e2)(e1, e2) = 1. The positive orientation is e12345.

#include "acm5/scalar.hpp"

#include <array>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace acm5 {

inline constexpr int kDim = 5;

/// A vector of R^5, identified with its dual 1-form through the metric.
using Vector = std::array<Scalar, kDim>;

inline Vector unit(int i)
{
    Vector v;
    for (auto& x : v)
        x = 0;
    v[i] = 1;
    return v;
}

namespace detail {

struct MaskTables {
    std::array<std::vector<std::uint8_t>, kDim + 1> by_degree;
    std::array<int, 32> position{};

    MaskTables()
    {
        // Lexicographic order of sorted index tuples per degree.
        for (int k = 0; k <= kDim; ++k) {
            std::vector<std::vector<int>> tuples;
            std::vector<int> cur;
            auto rec = [&](auto&& self, int start) -> void {
                if (static_cast<int>(cur.size()) == k) {
                    tuples.push_back(cur);
                    return;
                }
                for (int i = start; i < kDim; ++i) {
                    cur.push_back(i);
                    self(self, i + 1);
                    cur.pop_back();
                }
            };
            rec(rec, 0);
            for (const auto& t : tuples) {
                std::uint8_t m = 0;
                for (int i : t)
                    m |= static_cast<std::uint8_t>(1u << i);
                position[m] = static_cast<int>(by_degree[k].size());
                by_degree[k].push_back(m);
            }
        }
    }
};

inline const MaskTables& masks()
{
    static const MaskTables tables;
    return tables;
}

/// Sign of e_a ^ e_b for disjoint index sets: (-1)^{#{(i,j): i in a, j in b, i > j}}.
inline int wedge_sign(std::uint8_t a, std::uint8_t b)
{
    int inversions = 0;
    for (int j = 0; j < kDim; ++j)
        if (b & (1u << j))
            inversions += std::popcount(static_cast<unsigned>(a) >> (j + 1));
    return (inversions & 1) ? -1 : 1;
}

} // namespace detail

inline const std::vector<std::uint8_t>& basis_masks(int degree)
{
    return detail::masks().by_degree.at(degree);
}

inline int binomial5(int k)
{
    static constexpr int b[] = {1, 5, 10, 10, 5, 1};
    return b[k];
}

class KForm {
public:
    KForm() : KForm(0) {}

    explicit KForm(int degree) : degree_(degree)
    {
        if (degree < 0 || degree > kDim)
            throw std::out_of_range("KForm degree must lie in 0..5");
        coeffs_.assign(binomial5(degree), Scalar(0));
    }

    /// The constant 0-form c.
    static KForm constant(const Scalar& c)
    {
        KForm f(0);
        f.coeffs_[0] = c;
        return f;
    }

    /// Zero 0-form returned when a wedge product overflows degree 5.
    static KForm degenerate_zero()
    {
        KForm f(0);
        f.degenerate_ = true;
        return f;
    }

    static KForm from_coeffs(int degree, std::vector<Scalar> coeffs)
    {
        KForm f(degree);
        if (coeffs.size() != f.coeffs_.size())
            throw std::invalid_argument("KForm::from_coeffs: wrong coefficient count");
        f.coeffs_ = std::move(coeffs);
        return f;
    }

    int degree() const { return degree_; }
    bool degenerate() const { return degenerate_; }
    const std::vector<Scalar>& coeffs() const { return coeffs_; }

    const Scalar& coeff(std::uint8_t mask) const
    {
        check_mask(mask);
        return coeffs_[detail::masks().position[mask]];
    }
    Scalar& coeff(std::uint8_t mask)
    {
        check_mask(mask);
        return coeffs_[detail::masks().position[mask]];
    }

    /// Value on basis vectors e_{args[0]}, e_{args[1]}, ... (0-based indices).
    Scalar value(std::span<const int> args) const
    {
        if (static_cast<int>(args.size()) != degree_)
            throw std::invalid_argument("KForm::value: argument count must equal degree");
        std::uint8_t m = 0;
        int inversions = 0;
        for (std::size_t a = 0; a < args.size(); ++a) {
            if (m & (1u << args[a]))
                return 0;
            m |= static_cast<std::uint8_t>(1u << args[a]);
            for (std::size_t b = 0; b < a; ++b)
                if (args[b] > args[a])
                    ++inversions;
        }
        Scalar v = coeff(m);
        if (inversions & 1)
            v = -v;
        return v;
    }
    Scalar value(std::initializer_list<int> args) const
    {
        return value(std::span<const int>(args.begin(), args.size()));
    }

    /// Multilinear evaluation on arbitrary vectors.
    Scalar evaluate(std::span<const Vector> vs) const;

    bool is_zero() const
    {
        for (const auto& c : coeffs_)
            if (sgn(c) != 0)
                return false;
        return true;
    }

    KForm& operator+=(const KForm& o)
    {
        check_same(o);
        for (std::size_t i = 0; i < coeffs_.size(); ++i)
            coeffs_[i] += o.coeffs_[i];
        return *this;
    }
    KForm& operator-=(const KForm& o)
    {
        check_same(o);
        for (std::size_t i = 0; i < coeffs_.size(); ++i)
            coeffs_[i] -= o.coeffs_[i];
        return *this;
    }
    KForm& operator*=(const Scalar& s)
    {
        for (auto& c : coeffs_)
            c *= s;
        return *this;
    }

    friend KForm operator+(KForm a, const KForm& b) { return a += b; }
    friend KForm operator-(KForm a, const KForm& b) { return a -= b; }
    friend KForm operator-(KForm a)
    {
        for (auto& c : a.coeffs_)
            c = -c;
        return a;
    }
    friend KForm operator*(const Scalar& s, KForm a) { return a *= s; }
    friend KForm operator*(KForm a, const Scalar& s) { return a *= s; }
    friend KForm operator*(int s, KForm a) { return a *= Scalar(s); }

    friend bool operator==(const KForm& a, const KForm& b)
    {
        return a.degree_ == b.degree_ && a.coeffs_ == b.coeffs_;
    }

    /// "2*e125 - 1/3*e34"; "0" for the zero form.
    std::string to_string() const
    {
        std::string out;
        const auto& ms = basis_masks(degree_);
        for (std::size_t i = 0; i < ms.size(); ++i) {
            const Scalar& c = coeffs_[i];
            if (sgn(c) == 0)
                continue;
            std::string label = "e";
            for (int b = 0; b < kDim; ++b)
                if (ms[i] & (1u << b))
                    label += static_cast<char>('1' + b);
            if (degree_ == 0)
                label = "1";
            Scalar mag = abs(c);
            std::string term = mag == 1 ? label : format_scalar(mag) + "*" + label;
            if (out.empty())
                out = sgn(c) < 0 ? "-" + term : term;
            else
                out += (sgn(c) < 0 ? " - " : " + ") + term;
        }
        return out.empty() ? "0" : out;
    }

private:
    void check_mask(std::uint8_t mask) const
    {
        if (mask >= 32 || std::popcount(static_cast<unsigned>(mask)) != degree_)
            throw std::invalid_argument("KForm: index set does not match degree");
    }
    void check_same(const KForm& o) const
    {
        if (o.degree_ != degree_)
            throw std::invalid_argument("KForm: degree mismatch in linear combination");
    }

    int degree_ = 0;
    bool degenerate_ = false;
    std::vector<Scalar> coeffs_;
};

/// Basis monomial e_{i1} ^ ... ^ e_{ik} with 1-based labels as in the
/// usual notation; unsorted labels pick up the permutation sign and
/// repeated labels give zero. e() is the unit 0-form.
template <typename... I>
KForm e(I... labels)
{
    const int idx[] = {0, static_cast<int>(labels)...};
    constexpr int k = sizeof...(I);
    KForm f(k);
    std::uint8_t m = 0;
    int inversions = 0;
    for (int a = 1; a <= k; ++a) {
        const int i = idx[a] - 1;
        if (i < 0 || i >= kDim)
            throw std::out_of_range("e(): labels are 1..5");
        if (m & (1u << i))
            return f;
        for (int b = 1; b < a; ++b)
            if (idx[b] > idx[a])
                ++inversions;
        m |= static_cast<std::uint8_t>(1u << i);
    }
    f.coeff(m) = (inversions & 1) ? -1 : 1;
    return f;
}

inline KForm one_form(const Vector& v)
{
    KForm f(1);
    for (int i = 0; i < kDim; ++i)
        f.coeff(static_cast<std::uint8_t>(1u << i)) = v[i];
    return f;
}

inline Vector to_vector(const KForm& a)
{
    if (a.degree() != 1)
        throw std::invalid_argument("to_vector: expected a 1-form");
    Vector v;
    for (int i = 0; i < kDim; ++i)
        v[i] = a.coeff(static_cast<std::uint8_t>(1u << i));
    return v;
}

/// a ^ b. Degree overflow (deg a + deg b > 5) returns
/// KForm::degenerate_zero() instead of throwing.
inline KForm wedge(const KForm& a, const KForm& b)
{
    const int k = a.degree() + b.degree();
    if (k > kDim)
        return KForm::degenerate_zero();
    KForm out(k);
    const auto& ma = basis_masks(a.degree());
    const auto& mb = basis_masks(b.degree());
    for (std::size_t i = 0; i < ma.size(); ++i) {
        if (sgn(a.coeffs()[i]) == 0)
            continue;
        for (std::size_t j = 0; j < mb.size(); ++j) {
            if (sgn(b.coeffs()[j]) == 0 || (ma[i] & mb[j]))
                continue;
            Scalar term = a.coeffs()[i] * b.coeffs()[j];
            if (detail::wedge_sign(ma[i], mb[j]) < 0)
                out.coeff(ma[i] | mb[j]) -= term;
            else
                out.coeff(ma[i] | mb[j]) += term;
        }
    }
    return out;
}

/// Interior product e_i -| a (0-based i). Zero 0-form for a 0-form input.
inline KForm interior(int i, const KForm& a)
{
    if (a.degree() == 0)
        return KForm(0);
    KForm out(a.degree() - 1);
    const auto& ms = basis_masks(a.degree());
    const std::uint8_t bit = static_cast<std::uint8_t>(1u << i);
    for (std::size_t n = 0; n < ms.size(); ++n) {
        if (!(ms[n] & bit) || sgn(a.coeffs()[n]) == 0)
            continue;
        // sign = (-1)^{number of indices before i}
        const int before = std::popcount(static_cast<unsigned>(ms[n] & (bit - 1)));
        if (before & 1)
            out.coeff(ms[n] ^ bit) -= a.coeffs()[n];
        else
            out.coeff(ms[n] ^ bit) += a.coeffs()[n];
    }
    return out;
}

/// v -| a for an arbitrary vector v.
inline KForm interior(const Vector& v, const KForm& a)
{
    if (a.degree() == 0)
        return KForm(0);
    KForm out(a.degree() - 1);
    for (int i = 0; i < kDim; ++i)
        if (sgn(v[i]) != 0)
            out += v[i] * interior(i, a);
    return out;
}

/// Hodge star for the Euclidean metric and orientation e12345:
/// a ^ *b = <a, b> e12345.
inline KForm hodge(const KForm& a)
{
    KForm out(kDim - a.degree());
    const auto& ms = basis_masks(a.degree());
    for (std::size_t n = 0; n < ms.size(); ++n) {
        if (sgn(a.coeffs()[n]) == 0)
            continue;
        const std::uint8_t comp = static_cast<std::uint8_t>(0x1f ^ ms[n]);
        if (detail::wedge_sign(ms[n], comp) < 0)
            out.coeff(comp) -= a.coeffs()[n];
        else
            out.coeff(comp) += a.coeffs()[n];
    }
    return out;
}

/// sigma_j(a, b) = sum_{i1<...<ij} (e_i1 -| ... -| e_ij -| a) ^ (e_i1 -| ... -| e_ij -| b).
/// Throws std::out_of_range unless 0 <= j <= min(deg a, deg b).
inline KForm sigma(int j, const KForm& a, const KForm& b)
{
    if (j < 0 || j > a.degree() || j > b.degree())
        throw std::out_of_range("sigma: j must satisfy 0 <= j <= min(deg a, deg b)");
    KForm out(a.degree() + b.degree() - 2 * j);
    if (out.degree() > kDim)
        return KForm::degenerate_zero();
    for (std::uint8_t m : basis_masks(j)) {
        KForm ca = a, cb = b;
        for (int i = kDim - 1; i >= 0; --i)
            if (m & (1u << i)) {
                ca = interior(i, ca);
                cb = interior(i, cb);
            }
        KForm w = wedge(ca, cb);
        if (!w.degenerate())
            out += w;
    }
    return out;
}

/// <a, b> = sigma_k(a, b); the standard basis of each degree is orthonormal.
inline Scalar inner(const KForm& a, const KForm& b)
{
    if (a.degree() != b.degree())
        throw std::invalid_argument("inner: degree mismatch");
    Scalar s = 0;
    for (std::size_t i = 0; i < a.coeffs().size(); ++i)
        if (sgn(a.coeffs()[i]) != 0 && sgn(b.coeffs()[i]) != 0)
            s += a.coeffs()[i] * b.coeffs()[i];
    return s;
}

inline Scalar norm_squared(const KForm& a) { return inner(a, a); }

/// Action of so(5) = Lambda^2 on forms: rho_*(w)(a) = sigma_1(w, a).
/// On 1-forms, e_i ^ e_j sends e_i to e_j and e_j to -e_i.
inline KForm rho_star(const KForm& w, const KForm& a)
{
    if (w.degree() != 2)
        throw std::invalid_argument("rho_star: first argument must be a 2-form");
    if (a.degree() == 0)
        return KForm(0);
    return sigma(1, w, a);
}

inline Scalar KForm::evaluate(std::span<const Vector> vs) const
{
    if (static_cast<int>(vs.size()) != degree_)
        throw std::invalid_argument("KForm::evaluate: argument count must equal degree");
    if (degree_ == 0)
        return coeffs_[0];
    // Contract the first argument and recurse.
    KForm rest = interior(vs[0], *this);
    return rest.evaluate(vs.subspan(1));
}

inline Scalar evaluate(const KForm& a, std::initializer_list<Vector> vs)
{
    return a.evaluate(std::span<const Vector>(vs.begin(), vs.size()));
}

} // namespace acm5
