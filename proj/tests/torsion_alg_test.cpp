#include "support.hpp"

#include <gtest/gtest.h>

#include <set>

namespace acm5 {
namespace {

using testing::Rng;
using testing::random_a;
using testing::random_form;
using testing::random_t;

std::vector<linalg::Vec> rows_of(const std::vector<ThreeTensor>& ts)
{
    std::vector<linalg::Vec> out;
    for (const auto& t : ts)
        out.push_back(t.coeffs());
    return out;
}

std::vector<ThreeTensor> pr_w_images(const std::string& label)
{
    std::vector<ThreeTensor> out;
    for (const auto& b : a_decomposition().module(label).basis)
        out.push_back(pr_W(b));
    return out;
}

std::size_t rank_of(const std::vector<ThreeTensor>& ts)
{
    return ts.empty() ? 0 : linalg::rank(rows_of(ts));
}

bool same_span(const std::vector<ThreeTensor>& a, const std::vector<ThreeTensor>& b)
{
    std::vector<ThreeTensor> both = a;
    both.insert(both.end(), b.begin(), b.end());
    const std::size_t r = rank_of(both);
    return rank_of(a) == r && rank_of(b) == r;
}

std::vector<std::string> nonzero_labels(const ThreeTensor& x)
{
    std::vector<std::string> out;
    for (const auto& [l, t] : project_15(x))
        if (!t.is_zero())
            out.push_back(l);
    return out;
}

bool labels_within(const ThreeTensor& x, const std::vector<std::string>& allowed)
{
    for (const auto& l : nonzero_labels(x))
        if (std::find(allowed.begin(), allowed.end(), l) == allowed.end())
            return false;
    return true;
}

KForm random_in_lambda(Rng& rng, int k, std::initializer_list<int> labels)
{
    KForm f(k);
    for (int l : labels)
        for (const auto& b : lambda_component(k, l).basis)
            f += testing::small_rational(rng, 0.3) * b;
    return f;
}

// Direct O(5) conditions: A_2 is totally skew, A_3 is cyclic-free and traceless.
bool totally_skew(const ThreeTensor& a)
{
    for (int i = 0; i < kDim; ++i)
        for (int j = 0; j < kDim; ++j)
            for (int k = 0; k < kDim; ++k)
                if (a(i, j, k) + a(j, i, k) != 0)
                    return false;
    return true;
}

bool cyclic_free_traceless(const ThreeTensor& a)
{
    for (int i = 0; i < kDim; ++i)
        for (int j = 0; j < kDim; ++j)
            for (int k = 0; k < kDim; ++k)
                if (a(i, j, k) + a(j, k, i) + a(k, i, j) != 0)
                    return false;
    for (int z = 0; z < kDim; ++z) {
        Scalar tr = 0;
        for (int i = 0; i < kDim; ++i)
            tr += a(i, i, z);
        if (tr != 0)
            return false;
    }
    return true;
}

TEST(TorsionAlg, ThetaOneExample)
{
    // theta_1(e5)(X, Y, Z) = e5(Z)<X, Y> - e5(Y)<X, Z>
    const ThreeTensor t = theta1(e(5));
    EXPECT_EQ(t(0, 0, 4), 1);
    EXPECT_EQ(t(0, 4, 0), -1);
    EXPECT_EQ(t(4, 4, 4), 0);
    EXPECT_EQ(nonzero_labels(t), std::vector<std::string>{"A_{1,1}"});
    EXPECT_EQ(nonzero_labels(tau(t)), std::vector<std::string>{"T_{1,1}"});
}

TEST(TorsionAlg, ThetaThreeOfOmegaTwo)
{
    EXPECT_EQ(nonzero_labels(theta3(omega2())), std::vector<std::string>{"A_{3,3}"});
    EXPECT_EQ(nonzero_labels(theta3(fundamental_form())), std::vector<std::string>{"A_{3,1}"});
}

TEST(TorsionAlg, ModuleDimensions)
{
    const std::vector<int> a_dims = {1, 4, 1, 2, 3, 4, 1, 2, 3, 4, 4, 3, 4, 6, 8};
    const auto& mods = a_decomposition().modules();
    ASSERT_EQ(mods.size(), a_dims.size());
    int sum = 0;
    for (std::size_t i = 0; i < mods.size(); ++i) {
        EXPECT_EQ(mods[i].dim(), a_dims[i]) << mods[i].label;
        sum += mods[i].dim();
    }
    EXPECT_EQ(sum, 50);
    EXPECT_EQ(a_decomposition().dim(), 50);
    EXPECT_EQ(t_decomposition().dim(), 50);

    const std::vector<int> w_dims = {1, 4, 1, 2, 3, 4, 2, 3, 4, 6};
    const auto& w = w_decomposition().modules();
    ASSERT_EQ(w.size(), 10u);
    int wsum = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
        EXPECT_EQ(w[i].label, "W" + std::to_string(i + 1));
        EXPECT_EQ(w[i].dim(), w_dims[i]) << w[i].label;
        wsum += w[i].dim();
    }
    EXPECT_EQ(wsum, 30);
}

TEST(TorsionAlg, PrWImageTable)
{
    for (const char* l : {"A_{1,1}", "A_{2,2}", "A_{3,2}", "A_{3,6}", "A_{3,7}", "A_{3,8}"})
        for (const auto& b : a_decomposition().module(l).basis)
            EXPECT_EQ(pr_W(b), b.with_shape(Shape::W)) << l;
    for (const auto& b : pr_w_images("A_{3,9}"))
        EXPECT_TRUE(b.is_zero());
    const std::pair<const char*, const char*> equal[] = {
        {"A_{1,2}", "A_{3,5}"}, {"A_{2,1}", "A_{3,1}"}, {"A_{2,3}", "A_{3,3}"}, {"A_{2,4}", "A_{3,4}"}};
    for (const auto& [x, y] : equal) {
        EXPECT_TRUE(same_span(pr_w_images(x), pr_w_images(y))) << x << " vs " << y;
        EXPECT_EQ(rank_of(pr_w_images(x)), a_decomposition().module(x).basis.size()) << x;
    }
    // Negative control: distinct rows do not coincide.
    EXPECT_FALSE(same_span(pr_w_images("A_{1,2}"), pr_w_images("A_{3,4}")));
}

TEST(TorsionAlg, WModulesAreTheImages)
{
    const std::pair<const char*, const char*> src[] = {
        {"W1", "A_{1,1}"}, {"W2", "A_{1,2}"}, {"W3", "A_{2,1}"}, {"W4", "A_{2,2}"}, {"W5", "A_{2,3}"},
        {"W6", "A_{2,4}"}, {"W7", "A_{3,2}"}, {"W8", "A_{3,6}"}, {"W9", "A_{3,7}"}, {"W10", "A_{3,8}"}};
    for (const auto& [w, a] : src)
        EXPECT_TRUE(same_span(w_decomposition().module(w).basis, pr_w_images(a))) << w;
}

TEST(TorsionAlg, ModuleBasesAreOrthogonalExceptIsomorphicPairs)
{
    // A_{3,4}/A_{3,5} and W2/W6 are isomorphic pairs whose chosen bases are
    // not orthogonal; all other distinct modules are.
    auto check = [](const Decomposition& d, std::set<std::pair<std::string, std::string>> skip) {
        const auto& ms = d.modules();
        for (std::size_t a = 0; a < ms.size(); ++a)
            for (std::size_t b = a + 1; b < ms.size(); ++b) {
                if (skip.count({ms[a].label, ms[b].label}))
                    continue;
                for (const auto& x : ms[a].basis)
                    for (const auto& y : ms[b].basis)
                        EXPECT_EQ(linalg::dot(x.coeffs(), y.coeffs()), 0) << ms[a].label << " " << ms[b].label;
            }
    };
    check(a_decomposition(), {{"A_{3,4}", "A_{3,5}"}});
    check(w_decomposition(), {{"W2", "W6"}});
}

TEST(TorsionAlg, ThetaDomainErrors)
{
    EXPECT_THROW(theta1(e(1, 2)), std::invalid_argument);
    EXPECT_THROW(theta2(e(1, 2)), std::invalid_argument);
    EXPECT_THROW(theta3(e(1, 5)), std::invalid_argument); // Lambda^2_4
    EXPECT_THROW(theta4(e(5)), std::invalid_argument);    // Lambda^1_1
    EXPECT_THROW(theta5(e(1, 2)), std::invalid_argument);
    EXPECT_THROW(theta(6, e(1)), std::out_of_range);
    Rng rng(1);
    EXPECT_THROW(tau(testing::random_tensor(rng)), std::invalid_argument);
    EXPECT_THROW(tau_inv(random_a(rng)), std::invalid_argument);
}

TEST(TorsionAlgProperty, TauRoundTrip)
{
    Rng rng(31);
    for (int n = 0; n < 120; ++n) {
        const ThreeTensor a = random_a(rng), t = random_t(rng);
        EXPECT_EQ(tau_inv(tau(a)), a);
        EXPECT_EQ(tau(tau_inv(t)), t);
    }
}

TEST(TorsionAlgProperty, ThetaCodomains)
{
    Rng rng(32);
    for (int n = 0; n < 120; ++n) {
        const ThreeTensor t1 = theta1(random_form(rng, 1));
        EXPECT_TRUE(labels_within(t1, {"A_{1,1}", "A_{1,2}"}));
        EXPECT_TRUE(torsion_type(tau(t1)).vectorial);

        const ThreeTensor t2 = theta2(random_form(rng, 3));
        EXPECT_TRUE(totally_skew(t2));
        EXPECT_TRUE(labels_within(t2, {"A_{2,1}", "A_{2,2}", "A_{2,3}", "A_{2,4}"}));

        const ThreeTensor t3 = theta3(random_in_lambda(rng, 2, {1, 2, 3}));
        EXPECT_TRUE(cyclic_free_traceless(t3));
        EXPECT_TRUE(labels_within(t3, {"A_{3,1}", "A_{3,2}", "A_{3,3}"}));

        const KForm v = random_in_lambda(rng, 1, {2});
        EXPECT_TRUE(cyclic_free_traceless(theta4(v)));
        EXPECT_TRUE(labels_within(theta4(v), {"A_{3,4}"}));
        EXPECT_TRUE(cyclic_free_traceless(theta5(v)));
        EXPECT_TRUE(labels_within(theta5(v), {"A_{3,5}"}));
    }
}

TEST(TorsionAlgProperty, FifteenModulesSumBack)
{
    Rng rng(33);
    for (int n = 0; n < 40; ++n) {
        const ThreeTensor a = random_a(rng);
        ThreeTensor sum(Shape::A);
        for (const auto& [l, part] : project_15(a))
            sum += part;
        EXPECT_EQ(sum, a);
        const auto parts = split_O5(a);
        EXPECT_TRUE(totally_skew(parts[1]));
        EXPECT_TRUE(cyclic_free_traceless(parts[2]));
    }
}

TEST(TorsionAlgProperty, PrWIsU2Equivariant)
{
    Rng rng(34);
    for (int n = 0; n < 12; ++n) {
        const auto q = testing::random_u2(rng);
        const ThreeTensor a = random_a(rng);
        EXPECT_EQ(pr_W(testing::act(q, a).with_shape(Shape::A)), testing::act(q, pr_W(a)).with_shape(Shape::W));
    }
}

TEST(TorsionAlgProperty, WModulesAreU2Invariant)
{
    Rng rng(35);
    const auto q = testing::random_u2(rng);
    for (const auto& m : w_decomposition().modules()) {
        const linalg::SpanCoordinates span(rows_of(m.basis));
        for (const auto& b : m.basis)
            EXPECT_TRUE(span.coords(testing::act(q, b).coeffs())) << m.label;
    }
}

TEST(TorsionAlgProperty, WProjectionSumsBack)
{
    Rng rng(36);
    for (int n = 0; n < 40; ++n) {
        const ThreeTensor g = pr_W(random_a(rng));
        ThreeTensor sum(Shape::W);
        for (const auto& [l, part] : project_W(g))
            sum += part;
        EXPECT_EQ(sum, g);
    }
}

} // namespace
} // namespace acm5
