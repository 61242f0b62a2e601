#include "support.hpp"

#include <gtest/gtest.h>

namespace acm5 {
namespace {

using testing::Rng;
using testing::random_form;

TEST(U2Decomp, StructureTensors)
{
    EXPECT_EQ(apply_phi(unit(0)), (Vector{0, -1, 0, 0, 0}));
    EXPECT_EQ(apply_phi(unit(4)), (Vector{0, 0, 0, 0, 0}));
    EXPECT_EQ(fundamental_form(), e(1, 2) + e(3, 4));
    // Phi(X, Y) = <X, phi Y>
    for (int i = 0; i < kDim; ++i)
        for (int j = 0; j < kDim; ++j) {
            const Vector py = apply_phi(unit(j));
            EXPECT_EQ(fundamental_form().value({i, j}), py[static_cast<std::size_t>(i)]);
        }
}

TEST(U2Decomp, ComponentDimensions)
{
    const std::vector<std::pair<int, std::vector<int>>> dims = {
        {1, {1, 4}}, {2, {1, 2, 3, 4}}, {3, {1, 2, 3, 4}}, {4, {1, 4}}};
    for (const auto& [k, ds] : dims)
        for (std::size_t i = 0; i < ds.size(); ++i)
            EXPECT_EQ(lambda_component(k, static_cast<int>(i) + 1).dim(), ds[i]) << k << "," << i + 1;
}

TEST(U2Decomp, KnownProjections)
{
    auto parts = project_lambda(e(1, 2));
    EXPECT_EQ(parts.at(1), Scalar(1, 2) * fundamental_form());
    EXPECT_EQ(parts.at(3), Scalar(1, 2) * omega1());
    EXPECT_TRUE(parts.at(2).is_zero());
    EXPECT_TRUE(project_lambda(e(1, 5)).at(4) == e(1, 5));
    EXPECT_EQ(pr_u2(e(1, 5)), KForm(2));
    EXPECT_EQ(pr_m(e(1, 3) - e(2, 4)), e(1, 3) - e(2, 4));
}

TEST(U2Decomp, RejectsDegreesZeroAndFive)
{
    EXPECT_THROW(project_lambda(KForm::constant(1)), std::invalid_argument);
    EXPECT_THROW(project_lambda(e(1, 2, 3, 4, 5)), std::invalid_argument);
}

TEST(U2DecompProperty, ProjectionsSumBack)
{
    Rng rng(21);
    for (int n = 0; n < 40; ++n) {
        const int k = 1 + n % 4;
        const KForm a = random_form(rng, k);
        KForm sum(k);
        for (const auto& [label, part] : project_lambda(a))
            sum += part;
        EXPECT_EQ(sum, a);
        const KForm w = random_form(rng, 2);
        EXPECT_EQ(pr_m(w) + pr_u2(w), w);
        EXPECT_EQ(inner(pr_m(w), pr_u2(w)), 0);
    }
}

TEST(U2DecompProperty, ComponentsAreU2Invariant)
{
    for (const auto& comp : lambda_decomposition()) {
        std::vector<linalg::Vec> span;
        for (const auto& b : comp.basis)
            span.push_back(b.coeffs());
        const linalg::SpanCoordinates coords(span);
        for (const auto& gen : u2_generators())
            for (const auto& b : comp.basis)
                EXPECT_TRUE(coords.coords(rho_star(gen, b).coeffs()))
                    << "Lambda^" << comp.degree << "_" << comp.label;
    }
}

TEST(U2DecompProperty, M2IsNotInvariantUnderSo5)
{
    // Sanity check that the invariance test can fail: e15 in so(5) moves
    // Lambda^2_3 out of itself.
    const auto& c = lambda_component(2, 3);
    std::vector<linalg::Vec> span;
    for (const auto& b : c.basis)
        span.push_back(b.coeffs());
    const linalg::SpanCoordinates coords(span);
    bool left = false;
    for (const auto& b : c.basis)
        left = left || !coords.coords(rho_star(e(1, 5), b).coeffs());
    EXPECT_TRUE(left);
}

TEST(U2DecompProperty, ProjectionIsU2Equivariant)
{
    Rng rng(22);
    for (int n = 0; n < 30; ++n) {
        const KForm w = random_form(rng, 2);
        const KForm gen = u2_generators()[static_cast<std::size_t>(n % 4)];
        EXPECT_EQ(pr_m(rho_star(gen, w)), rho_star(gen, pr_m(w)));
        EXPECT_EQ(pr_u2(rho_star(gen, w)), rho_star(gen, pr_u2(w)));
    }
}

TEST(U2DecompProperty, ComponentsAreMutuallyOrthogonal)
{
    const auto& comps = lambda_decomposition();
    for (std::size_t a = 0; a < comps.size(); ++a)
        for (std::size_t b = a + 1; b < comps.size(); ++b) {
            if (comps[a].degree != comps[b].degree)
                continue;
            for (const auto& x : comps[a].basis)
                for (const auto& y : comps[b].basis)
                    EXPECT_EQ(inner(x, y), 0);
        }
}

} // namespace
} // namespace acm5
