#pragma once

// Three-tensors on R^5 and the torsion spaces
//   A = Lambda^1 (x) Lambda^2   (differences of metric connections),
//   T = Lambda^2 (x) Lambda^1   (torsion tensors),
//   W = Lambda^1 (x) m          (intrinsic torsion),
// with the bijection tau : A -> T, the maps theta_1..theta_5, the 15
// U(2)-modules A_{i,j} (T_{i,j} = tau(A_{i,j})), pr_W and the 10 modules W_i.
//
// Module bases are mutually orthogonal except for two pairs of isomorphic
// modules (A_{3,4}, A_{3,5}) and (W_2, W_6); all projections are therefore
// coordinate solves in the concatenated basis, which only needs the sum to
// be direct.

#include "acm5/u2_decomp.hpp"

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace acm5 {

/// Symmetry tag of a ThreeTensor.
enum class Shape {
    A,      ///< antisymmetric in the last two slots
    T,      ///< antisymmetric in the first two slots
    W,      ///< A-shape with every slice A(e_i, ., .) in m
    N,      ///< Nijenhuis tensor N(X, Y, Z) = g(X, N(Y, Z))
    General,
};

inline const char* shape_name(Shape s)
{
    switch (s) {
    case Shape::A: return "A";
    case Shape::T: return "T";
    case Shape::W: return "W";
    case Shape::N: return "N";
    case Shape::General: return "general";
    }
    return "?";
}

/// Element of (x)^3 Lambda^1: x(i, j, k) is the value on (e_i, e_j, e_k),
/// 0-based indices.
class ThreeTensor {
public:
    static constexpr int kSize = kDim * kDim * kDim;

    explicit ThreeTensor(Shape shape = Shape::General) : shape_(shape), c_(kSize, Scalar(0)) {}

    static ThreeTensor from_coeffs(std::vector<Scalar> c, Shape shape = Shape::General)
    {
        if (c.size() != kSize)
            throw std::invalid_argument("ThreeTensor: expected 125 coefficients");
        ThreeTensor t(shape);
        t.c_ = std::move(c);
        return t;
    }

    static constexpr int index(int i, int j, int k) { return 25 * i + 5 * j + k; }

    Shape shape() const { return shape_; }
    ThreeTensor with_shape(Shape s) const
    {
        ThreeTensor t = *this;
        t.shape_ = s;
        return t;
    }

    const Scalar& operator()(int i, int j, int k) const { return c_[static_cast<std::size_t>(index(i, j, k))]; }
    Scalar& operator()(int i, int j, int k) { return c_[static_cast<std::size_t>(index(i, j, k))]; }
    const std::vector<Scalar>& coeffs() const { return c_; }

    bool is_zero() const { return linalg::is_zero(c_); }

    /// (Y, Z) -> x(e_i, Y, Z). Reads the upper triangle; meaningful for
    /// tensors antisymmetric in the last two slots.
    KForm slice(int i) const
    {
        KForm f(2);
        for (std::uint8_t m : basis_masks(2)) {
            int j = std::countr_zero(static_cast<unsigned>(m));
            int k = std::countr_zero(static_cast<unsigned>(m & (m - 1)));
            f.coeff(m) = (*this)(i, j, k);
        }
        return f;
    }

    /// (X, Y) -> x(X, Y, e_k), for tensors antisymmetric in the first two slots.
    KForm last_slice(int k) const
    {
        KForm f(2);
        for (std::uint8_t m : basis_masks(2)) {
            int i = std::countr_zero(static_cast<unsigned>(m));
            int j = std::countr_zero(static_cast<unsigned>(m & (m - 1)));
            f.coeff(m) = (*this)(i, j, k);
        }
        return f;
    }

    ThreeTensor& operator+=(const ThreeTensor& o)
    {
        for (std::size_t n = 0; n < c_.size(); ++n)
            if (sgn(o.c_[n]) != 0)
                c_[n] += o.c_[n];
        return *this;
    }
    ThreeTensor& operator-=(const ThreeTensor& o)
    {
        for (std::size_t n = 0; n < c_.size(); ++n)
            if (sgn(o.c_[n]) != 0)
                c_[n] -= o.c_[n];
        return *this;
    }
    ThreeTensor& operator*=(const Scalar& s)
    {
        for (auto& x : c_)
            if (sgn(x) != 0)
                x *= s;
        return *this;
    }
    friend ThreeTensor operator+(ThreeTensor a, const ThreeTensor& b) { return a += b; }
    friend ThreeTensor operator-(ThreeTensor a, const ThreeTensor& b) { return a -= b; }
    friend ThreeTensor operator-(ThreeTensor a) { return a *= Scalar(-1); }
    friend ThreeTensor operator*(const Scalar& s, ThreeTensor a) { return a *= s; }
    /// Coefficient equality; the shape tag is not compared.
    friend bool operator==(const ThreeTensor& a, const ThreeTensor& b) { return a.c_ == b.c_; }

    /// A-style "e1 (x) (e25) + ...", T-style "(e12 + e34) (x) e5 + ...",
    /// otherwise a list of nonzero entries.
    std::string to_string() const;

private:
    Shape shape_;
    std::vector<Scalar> c_;
};

/// Exact test of the symmetry behind a shape tag. W additionally requires
/// every slice to lie in m; N uses the same antisymmetry as A.
inline bool has_shape(const ThreeTensor& x, Shape s)
{
    auto anti_last = [&] {
        for (int i = 0; i < kDim; ++i)
            for (int j = 0; j < kDim; ++j)
                for (int k = j; k < kDim; ++k)
                    if (x(i, j, k) + x(i, k, j) != 0)
                        return false;
        return true;
    };
    switch (s) {
    case Shape::A:
    case Shape::N:
        return anti_last();
    case Shape::T:
        for (int i = 0; i < kDim; ++i)
            for (int j = i; j < kDim; ++j)
                for (int k = 0; k < kDim; ++k)
                    if (x(i, j, k) + x(j, i, k) != 0)
                        return false;
        return true;
    case Shape::W:
        if (!anti_last())
            return false;
        for (int i = 0; i < kDim; ++i) {
            KForm sl = x.slice(i);
            if (!(pr_m(sl) == sl))
                return false;
        }
        return true;
    case Shape::General:
        return true;
    }
    return false;
}

inline std::string ThreeTensor::to_string() const
{
    std::string out;
    auto add = [&](std::string term) {
        if (!out.empty())
            out += " + ";
        out += term;
    };
    if (shape_ == Shape::T && has_shape(*this, Shape::T)) {
        for (int k = 0; k < kDim; ++k) {
            KForm f = last_slice(k);
            if (!f.is_zero())
                add("(" + f.to_string() + ") (x) e" + std::to_string(k + 1));
        }
    } else if (shape_ != Shape::General && has_shape(*this, Shape::A)) {
        for (int i = 0; i < kDim; ++i) {
            KForm f = slice(i);
            if (!f.is_zero())
                add("e" + std::to_string(i + 1) + " (x) (" + f.to_string() + ")");
        }
    } else {
        for (int i = 0; i < kDim; ++i)
            for (int j = 0; j < kDim; ++j)
                for (int k = 0; k < kDim; ++k)
                    if (sgn((*this)(i, j, k)) != 0)
                        add(format_scalar((*this)(i, j, k)) + "*e" + std::to_string(i + 1) + "(x)e" +
                            std::to_string(j + 1) + "(x)e" + std::to_string(k + 1));
    }
    return out.empty() ? "0" : out;
}

/// a (x) b for a 1-form a and 2-form b: (X, Y, Z) -> a(X) b(Y, Z) (A-shape);
/// for a 2-form a and 1-form b: (X, Y, Z) -> a(X, Y) b(Z) (T-shape).
inline ThreeTensor otimes(const KForm& a, const KForm& b)
{
    if (a.degree() == 1 && b.degree() == 2) {
        ThreeTensor t(Shape::A);
        for (int i = 0; i < kDim; ++i) {
            const Scalar& ai = a.coeff(static_cast<std::uint8_t>(1u << i));
            if (sgn(ai) == 0)
                continue;
            for (int j = 0; j < kDim; ++j)
                for (int k = 0; k < kDim; ++k)
                    if (j != k)
                        t(i, j, k) = ai * b.value({j, k});
        }
        return t;
    }
    if (a.degree() == 2 && b.degree() == 1) {
        ThreeTensor t(Shape::T);
        for (int k = 0; k < kDim; ++k) {
            const Scalar& bk = b.coeff(static_cast<std::uint8_t>(1u << k));
            if (sgn(bk) == 0)
                continue;
            for (int i = 0; i < kDim; ++i)
                for (int j = 0; j < kDim; ++j)
                    if (i != j)
                        t(i, j, k) = a.value({i, j}) * bk;
        }
        return t;
    }
    throw std::invalid_argument("otimes: expected degrees (1, 2) or (2, 1)");
}

/// Identity inclusion of a 3-form, T(X, Y, Z) = a(X, Y, Z).
inline ThreeTensor embed_three_form(const KForm& a)
{
    if (a.degree() != 3)
        throw std::invalid_argument("embed_three_form: expected a 3-form");
    ThreeTensor t(Shape::T);
    for (int i = 0; i < kDim; ++i)
        for (int j = 0; j < kDim; ++j)
            for (int k = 0; k < kDim; ++k)
                if (i != j && j != k && i != k)
                    t(i, j, k) = a.value({i, j, k});
    return t;
}

/// The 3-form of a totally antisymmetric tensor. Throws otherwise.
inline KForm three_form_of(const ThreeTensor& x)
{
    KForm a(3);
    for (std::uint8_t m : basis_masks(3)) {
        int i = std::countr_zero(static_cast<unsigned>(m));
        unsigned rest = m & (m - 1u);
        int j = std::countr_zero(rest);
        int k = std::countr_zero(rest & (rest - 1u));
        a.coeff(m) = x(i, j, k);
    }
    if (!(embed_three_form(a) == x))
        throw std::invalid_argument("three_form_of: tensor is not totally antisymmetric");
    return a;
}

/// (X, Y, Z) -> x(f1 X, f2 Y, f3 Z) where f is phi in the flagged slots and
/// the identity elsewhere.
inline ThreeTensor compose_phi(const ThreeTensor& x, bool p1, bool p2, bool p3)
{
    const auto& m = phi_matrix();
    auto column = [&](bool flag, int i) {
        std::vector<std::pair<int, Scalar>> col;
        for (int r = 0; r < kDim; ++r) {
            Scalar v = flag ? m[r][i] : Scalar(r == i ? 1 : 0);
            if (sgn(v) != 0)
                col.emplace_back(r, v);
        }
        return col;
    };
    ThreeTensor t(x.shape() == Shape::W ? Shape::A : x.shape());
    for (int i = 0; i < kDim; ++i) {
        auto ci = column(p1, i);
        for (int j = 0; j < kDim; ++j) {
            auto cj = column(p2, j);
            for (int k = 0; k < kDim; ++k) {
                auto ck = column(p3, k);
                Scalar s = 0;
                for (const auto& [a, va] : ci)
                    for (const auto& [b, vb] : cj)
                        for (const auto& [c, vc] : ck)
                            if (sgn(x(a, b, c)) != 0)
                                s += va * vb * vc * x(a, b, c);
                t(i, j, k) = s;
            }
        }
    }
    return t;
}

/// tau(A)(X, Y, Z) = A(X, Y, Z) - A(Y, X, Z).
inline ThreeTensor tau(const ThreeTensor& a)
{
    if (!has_shape(a, Shape::A))
        throw std::invalid_argument("tau: argument is not antisymmetric in the last two slots");
    ThreeTensor t(Shape::T);
    for (int i = 0; i < kDim; ++i)
        for (int j = 0; j < kDim; ++j)
            for (int k = 0; k < kDim; ++k)
                t(i, j, k) = a(i, j, k) - a(j, i, k);
    return t;
}

/// 2 tau^{-1}(T)(X, Y, Z) = T(X, Y, Z) - T(Y, Z, X) + T(Z, X, Y).
inline ThreeTensor tau_inv(const ThreeTensor& t)
{
    if (!has_shape(t, Shape::T))
        throw std::invalid_argument("tau_inv: argument is not antisymmetric in the first two slots");
    ThreeTensor a(Shape::A);
    for (int i = 0; i < kDim; ++i)
        for (int j = 0; j < kDim; ++j)
            for (int k = 0; k < kDim; ++k)
                a(i, j, k) = (t(i, j, k) - t(j, k, i) + t(k, i, j)) / 2;
    return a;
}

namespace detail {

inline KForm basis_one_form(int i) { return one_form(unit(i)); }

inline bool in_lambda(const KForm& a, std::initializer_list<int> labels)
{
    auto parts = project_lambda(a);
    for (const auto& [label, part] : parts) {
        bool allowed = false;
        for (int l : labels)
            allowed = allowed || l == label;
        if (!allowed && !part.is_zero())
            return false;
    }
    return true;
}

inline ThreeTensor theta45(const KForm& a, const Scalar& c1, const Scalar& c2, const Scalar& c3);

} // namespace detail

/// theta_1(a)(X, Y, Z) = a(Z)<X, Y> - a(Y)<X, Z>.
inline ThreeTensor theta1(const KForm& a)
{
    if (a.degree() != 1)
        throw std::invalid_argument("theta1: expected a 1-form");
    ThreeTensor t(Shape::A);
    for (int x = 0; x < kDim; ++x)
        for (int y = 0; y < kDim; ++y)
            for (int z = 0; z < kDim; ++z) {
                Scalar s = 0;
                if (x == y)
                    s += a.value({z});
                if (x == z)
                    s -= a.value({y});
                t(x, y, z) = s;
            }
    return t;
}

/// theta_2(a) = sum_i e_i (x) (e_i _| a); as a tensor this is a itself.
inline ThreeTensor theta2(const KForm& a)
{
    if (a.degree() != 3)
        throw std::invalid_argument("theta2: expected a 3-form");
    ThreeTensor t(Shape::A);
    for (int i = 0; i < kDim; ++i)
        t += otimes(detail::basis_one_form(i), interior(i, a));
    return t.with_shape(Shape::A);
}

/// 3 eta (x) a - theta_2(eta ^ a) for any 2-form a.
inline ThreeTensor theta3_extended(const KForm& a)
{
    if (a.degree() != 2)
        throw std::invalid_argument("theta3_extended: expected a 2-form");
    ThreeTensor t = Scalar(3) * otimes(eta(), a);
    t -= theta2(wedge(eta(), a));
    return t.with_shape(Shape::A);
}

/// theta_3(a) = 3 eta (x) a - theta_2(eta ^ a), for a in Lambda^2_1 + Lambda^2_2 + Lambda^2_3.
inline ThreeTensor theta3(const KForm& a)
{
    if (a.degree() != 2 || !detail::in_lambda(a, {1, 2, 3}))
        throw std::invalid_argument("theta3: expected a 2-form in Lambda^2_1 + Lambda^2_2 + Lambda^2_3");
    return theta3_extended(a);
}

/// theta_4(a) = sum_i e_i (x) (a ^ e_i) + 1/2 theta_2(a _| Phi^2) - 3 (a _| Phi) (x) Phi - eta (x) (a ^ eta).
inline ThreeTensor theta4(const KForm& a)
{
    return detail::theta45(a, Scalar(1, 2), Scalar(-3), Scalar(-1));
}

/// theta_5(a) = sum_i e_i (x) (a ^ e_i) + theta_2(a _| Phi^2) - 6 (a _| Phi) (x) Phi + 2 eta (x) (a ^ eta).
inline ThreeTensor theta5(const KForm& a)
{
    return detail::theta45(a, Scalar(1), Scalar(-6), Scalar(2));
}

inline ThreeTensor detail::theta45(const KForm& a, const Scalar& c1, const Scalar& c2, const Scalar& c3)
{
    if (a.degree() != 1 || !in_lambda(a, {2}))
        throw std::invalid_argument("theta4/theta5: expected a 1-form in Lambda^1_2");
    const KForm Phi = fundamental_form();
    const Vector v = to_vector(a);
    ThreeTensor t(Shape::A);
    for (int i = 0; i < kDim; ++i)
        t += otimes(basis_one_form(i), wedge(a, basis_one_form(i)));
    t += c1 * theta2(interior(v, wedge(Phi, Phi)));
    t += c2 * otimes(interior(v, Phi), Phi);
    t += c3 * otimes(eta(), wedge(a, eta()));
    return t.with_shape(Shape::A);
}

/// theta_k for k = 1..5.
inline ThreeTensor theta(int k, const KForm& a)
{
    switch (k) {
    case 1: return theta1(a);
    case 2: return theta2(a);
    case 3: return theta3(a);
    case 4: return theta4(a);
    case 5: return theta5(a);
    }
    throw std::out_of_range("theta: index must be 1..5");
}

/// pr_W(a (x) b) = a (x) pr_m(b), applied slicewise.
inline ThreeTensor pr_W(const ThreeTensor& x)
{
    if (!has_shape(x, Shape::A))
        throw std::invalid_argument("pr_W: argument is not A-shaped");
    ThreeTensor t(Shape::W);
    for (int i = 0; i < kDim; ++i) {
        KForm s = pr_m(x.slice(i));
        if (!s.is_zero())
            t += otimes(detail::basis_one_form(i), s);
    }
    return t.with_shape(Shape::W);
}

/// One irreducible submodule with its basis.
struct ModuleBasis {
    std::string label;
    std::vector<ThreeTensor> basis;

    int dim() const { return static_cast<int>(basis.size()); }
};

/// (label, component) pairs in module order.
using Components = std::vector<std::pair<std::string, ThreeTensor>>;

inline const ThreeTensor* find_component(const Components& c, std::string_view label)
{
    for (const auto& [l, t] : c)
        if (l == label)
            return &t;
    return nullptr;
}

/// A direct sum of modules with oblique projections onto the summands.
class Decomposition {
public:
    Decomposition() = default;

    Decomposition(std::vector<ModuleBasis> modules, Shape shape) : modules_(std::move(modules)), shape_(shape)
    {
        std::vector<linalg::Vec> vs;
        for (std::size_t m = 0; m < modules_.size(); ++m)
            for (const auto& b : modules_[m].basis) {
                owner_.push_back(m);
                vs.push_back(b.coeffs());
            }
        coords_ = linalg::SpanCoordinates(std::move(vs)); // throws if the sum is not direct
    }

    const std::vector<ModuleBasis>& modules() const { return modules_; }
    int dim() const { return static_cast<int>(coords_.size()); }

    const ModuleBasis& module(std::string_view label) const
    {
        for (const auto& m : modules_)
            if (m.label == label)
                return m;
        throw std::out_of_range("unknown module label " + std::string(label));
    }

    /// Components of x, or nullopt when x is outside the total space.
    std::optional<Components> try_project(const ThreeTensor& x) const
    {
        auto c = coords_.coords(x.coeffs());
        if (!c)
            return std::nullopt;
        Components out;
        for (const auto& m : modules_)
            out.emplace_back(m.label, ThreeTensor(shape_));
        std::size_t n = 0;
        for (std::size_t m = 0; m < modules_.size(); ++m)
            for (const auto& b : modules_[m].basis) {
                if (sgn((*c)[n]) != 0)
                    out[m].second += (*c)[n] * b;
                ++n;
            }
        return out;
    }

    Components project(const ThreeTensor& x) const
    {
        auto c = try_project(x);
        if (!c)
            throw std::invalid_argument(std::string("tensor is not in the ") + shape_name(shape_) + " space");
        return *c;
    }

private:
    std::vector<ModuleBasis> modules_;
    std::vector<std::size_t> owner_;
    Shape shape_ = Shape::General;
    linalg::SpanCoordinates coords_;
};

namespace detail {

/// Matrix of a linear map on (x)^3 R^5, rows indexed by output coefficient.
inline linalg::Mat tensor_map_rows(const std::function<ThreeTensor(const ThreeTensor&)>& f)
{
    linalg::Mat rows(ThreeTensor::kSize, linalg::Vec(ThreeTensor::kSize, Scalar(0)));
    for (int n = 0; n < ThreeTensor::kSize; ++n) {
        ThreeTensor u;
        u(n / 25, (n / 5) % 5, n % 5) = 1;
        ThreeTensor img = f(u);
        for (int m = 0; m < ThreeTensor::kSize; ++m)
            rows[static_cast<std::size_t>(m)][static_cast<std::size_t>(n)] = img.coeffs()[static_cast<std::size_t>(m)];
    }
    return rows;
}

/// Linear conditions cutting out A_3 inside (x)^3 R^5.
inline linalg::Mat a3_condition_rows()
{
    linalg::Mat rows;
    auto row = [] { return linalg::Vec(ThreeTensor::kSize, Scalar(0)); };
    for (int x = 0; x < kDim; ++x)
        for (int y = 0; y < kDim; ++y)
            for (int z = y; z < kDim; ++z) {
                auto r = row();
                r[ThreeTensor::index(x, y, z)] += 1;
                r[ThreeTensor::index(x, z, y)] += 1;
                rows.push_back(std::move(r));
            }
    for (int x = 0; x < kDim; ++x)
        for (int y = 0; y < kDim; ++y)
            for (int z = 0; z < kDim; ++z) {
                auto r = row();
                r[ThreeTensor::index(x, y, z)] += 1;
                r[ThreeTensor::index(y, z, x)] += 1;
                r[ThreeTensor::index(z, x, y)] += 1;
                rows.push_back(std::move(r));
            }
    for (int x = 0; x < kDim; ++x) {
        auto r = row();
        for (int i = 0; i < kDim; ++i)
            r[ThreeTensor::index(i, i, x)] += 1;
        rows.push_back(std::move(r));
    }
    return rows;
}

/// Basis of {A in A_3 : A = f(A)}.
inline std::vector<ThreeTensor> a3_fixed_space(const std::function<ThreeTensor(const ThreeTensor&)>& f)
{
    linalg::Mat rows = a3_condition_rows();
    linalg::Mat m = tensor_map_rows(f);
    for (std::size_t r = 0; r < m.size(); ++r) {
        for (auto& v : m[r])
            v = -v;
        m[r][r] += 1;
        rows.push_back(std::move(m[r]));
    }
    auto ns = linalg::null_space(std::move(rows), ThreeTensor::kSize);
    linalg::rref(ns);
    std::vector<ThreeTensor> out;
    for (auto& v : ns)
        if (!linalg::is_zero(v))
            out.push_back(ThreeTensor::from_coeffs(std::move(v), Shape::A));
    return out;
}

template <typename F>
std::vector<ThreeTensor> map_basis(const std::vector<KForm>& forms, F&& f)
{
    std::vector<ThreeTensor> out;
    for (const auto& b : forms)
        out.push_back(f(b));
    return out;
}

inline std::vector<ModuleBasis> build_a_modules()
{
    std::vector<ModuleBasis> mods;
    auto lam = [](int k, int i) { return lambda_component(k, i).basis; };
    for (int i = 1; i <= 2; ++i)
        mods.push_back({"A_{1," + std::to_string(i) + "}", map_basis(lam(1, i), theta1)});
    for (int i = 1; i <= 4; ++i)
        mods.push_back({"A_{2," + std::to_string(i) + "}", map_basis(lam(3, i), theta2)});
    for (int i = 1; i <= 3; ++i)
        mods.push_back({"A_{3," + std::to_string(i) + "}", map_basis(lam(2, i), theta3)});
    mods.push_back({"A_{3,4}", map_basis(lam(1, 2), theta4)});
    mods.push_back({"A_{3,5}", map_basis(lam(1, 2), theta5)});
    auto pb = compose_phi;
    mods.push_back({"A_{3,6}", a3_fixed_space([&](const ThreeTensor& a) {
                        return pb(a, true, false, true) + pb(a, true, true, false);
                    })});
    mods.push_back({"A_{3,7}", a3_fixed_space([&](const ThreeTensor& a) { return -pb(a, false, true, true); })});
    mods.push_back({"A_{3,8}", a3_fixed_space([&](const ThreeTensor& a) {
                        return -(pb(a, true, false, true) + pb(a, true, true, false));
                    })});
    mods.push_back({"A_{3,9}", a3_fixed_space([&](const ThreeTensor& a) { return pb(a, false, true, true); })});
    return mods;
}

} // namespace detail

/// The 15 modules A_{1,1}, A_{1,2}, A_{2,1..4}, A_{3,1..9} of A.
inline const Decomposition& a_decomposition()
{
    static const Decomposition d(detail::build_a_modules(), Shape::A);
    return d;
}

/// T_{i,j} = tau(A_{i,j}).
inline const Decomposition& t_decomposition()
{
    static const Decomposition d = [] {
        std::vector<ModuleBasis> mods;
        for (const auto& m : a_decomposition().modules()) {
            ModuleBasis t{"T" + m.label.substr(1), {}};
            for (const auto& b : m.basis)
                t.basis.push_back(tau(b));
            mods.push_back(std::move(t));
        }
        return Decomposition(std::move(mods), Shape::T);
    }();
    return d;
}

/// W_1 = A_{1,1}, W_2 = pr_W(A_{1,2}), W_3 = pr_W(A_{2,1}), W_4 = A_{2,2},
/// W_5 = pr_W(A_{2,3}), W_6 = pr_W(A_{2,4}), W_7 = A_{3,2}, W_8 = A_{3,6},
/// W_9 = A_{3,7}, W_10 = A_{3,8}.
inline const Decomposition& w_decomposition()
{
    static const Decomposition d = [] {
        const auto& a = a_decomposition();
        const std::pair<const char*, const char*> src[] = {
            {"W1", "A_{1,1}"}, {"W2", "A_{1,2}"}, {"W3", "A_{2,1}"}, {"W4", "A_{2,2}"}, {"W5", "A_{2,3}"},
            {"W6", "A_{2,4}"}, {"W7", "A_{3,2}"}, {"W8", "A_{3,6}"}, {"W9", "A_{3,7}"}, {"W10", "A_{3,8}"},
        };
        std::vector<ModuleBasis> mods;
        for (const auto& [w, label] : src) {
            ModuleBasis m{w, {}};
            for (const auto& b : a.module(label).basis)
                m.basis.push_back(pr_W(b));
            mods.push_back(std::move(m));
        }
        return Decomposition(std::move(mods), Shape::W);
    }();
    return d;
}

/// Components in the 15 modules, chosen by the shape tag (A or T).
inline Components project_15(const ThreeTensor& x)
{
    if (x.shape() == Shape::T)
        return t_decomposition().project(x);
    if (x.shape() == Shape::A || x.shape() == Shape::W)
        return a_decomposition().project(x);
    throw std::invalid_argument("project_15: tensor must be tagged A or T");
}

inline Components project_W(const ThreeTensor& g)
{
    return w_decomposition().project(g);
}

/// O(5) split x = x_1 + x_2 + x_3 into A_1 + A_2 + A_3 (or T_1 + T_2 + T_3).
inline std::array<ThreeTensor, 3> split_O5(const ThreeTensor& x)
{
    const Shape s = x.shape() == Shape::T ? Shape::T : Shape::A;
    std::array<ThreeTensor, 3> parts{ThreeTensor(s), ThreeTensor(s), ThreeTensor(s)};
    for (const auto& [label, t] : project_15(x)) {
        const int group = label[3] - '1';
        parts[static_cast<std::size_t>(group)] += t;
    }
    return parts;
}

/// Nonzero modules of a torsion (T-tagged) or connection difference
/// (A-tagged), plus the coarse O(5) types.
struct TorsionType {
    std::vector<std::string> labels;
    bool vectorial = false;        ///< in T_1
    bool skew = false;             ///< in T_2
    bool cyclic = false;           ///< in T_1 + T_3
    bool traceless_cyclic = false; ///< in T_3
};

inline TorsionType torsion_type(const ThreeTensor& x)
{
    TorsionType r;
    bool has[3] = {false, false, false};
    for (const auto& [label, t] : project_15(x))
        if (!t.is_zero()) {
            r.labels.push_back(label);
            has[label[3] - '1'] = true;
        }
    r.vectorial = !has[1] && !has[2];
    r.skew = !has[0] && !has[2];
    r.cyclic = !has[1];
    r.traceless_cyclic = !has[0] && !has[1];
    return r;
}

} // namespace acm5
