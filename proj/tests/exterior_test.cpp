#include "support.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

namespace acm5 {
namespace {

using testing::Rng;
using testing::random_form;

// Brute-force oracles: forms as alternating multilinear maps evaluated on
// basis vectors, wedge by the shuffle-free permutation sum.

int perm_sign(const std::vector<int>& p)
{
    int inv = 0;
    for (std::size_t a = 0; a < p.size(); ++a)
        for (std::size_t b = a + 1; b < p.size(); ++b)
            if (p[a] > p[b])
                ++inv;
    return inv % 2 ? -1 : 1;
}

Scalar factorial(int n) { return n <= 1 ? Scalar(1) : Scalar(n) * factorial(n - 1); }

KForm wedge_oracle(const KForm& a, const KForm& b)
{
    const int p = a.degree(), q = b.degree();
    KForm out(p + q);
    for (std::uint8_t m : basis_masks(p + q)) {
        std::vector<int> idx;
        for (int i = 0; i < kDim; ++i)
            if (m & (1u << i))
                idx.push_back(i);
        std::vector<int> perm(idx.size());
        std::iota(perm.begin(), perm.end(), 0);
        Scalar s = 0;
        do {
            std::vector<int> av, bv;
            for (int n = 0; n < p; ++n)
                av.push_back(idx[static_cast<std::size_t>(perm[static_cast<std::size_t>(n)])]);
            for (int n = p; n < p + q; ++n)
                bv.push_back(idx[static_cast<std::size_t>(perm[static_cast<std::size_t>(n)])]);
            s += perm_sign(perm) * a.value(av) * b.value(bv);
        } while (std::next_permutation(perm.begin(), perm.end()));
        out.coeff(m) = s / (factorial(p) * factorial(q));
    }
    return out;
}

TEST(Exterior, BasisMonomials)
{
    EXPECT_EQ(e(2, 1), -e(1, 2));
    EXPECT_TRUE(e(1, 1).is_zero());
    EXPECT_EQ(e(1, 2).value({1, 0}), -1);
    EXPECT_EQ(wedge(e(1), e(2)), e(1, 2));
    EXPECT_EQ(wedge(e(3, 4), e(1, 2)), e(1, 2, 3, 4));
    EXPECT_EQ(e(1, 2).to_string(), "e12");
}

TEST(Exterior, HodgeOfBasisForms)
{
    EXPECT_EQ(hodge(e(1, 2)), e(3, 4, 5));
    EXPECT_EQ(hodge(e(5)), e(1, 2, 3, 4));
    EXPECT_EQ(hodge(KForm::constant(1)), e(1, 2, 3, 4, 5));
    EXPECT_EQ(hodge(e(1, 3)), -e(2, 4, 5));
}

TEST(Exterior, InteriorProduct)
{
    EXPECT_EQ(interior(0, e(1, 2)), e(2));
    EXPECT_EQ(interior(1, e(1, 2)), -e(1));
    EXPECT_EQ(interior(4, e(1, 2)), KForm(1));
}

TEST(Exterior, RhoStarOnOneForms)
{
    EXPECT_EQ(rho_star(e(1, 2), e(1)), e(2));
    EXPECT_EQ(rho_star(e(1, 2), e(2)), -e(1));
    EXPECT_TRUE(rho_star(e(1, 2), e(3)).is_zero());
}

TEST(ExteriorProperty, WedgeMatchesPermutationSum)
{
    Rng rng(11);
    for (int n = 0; n < 60; ++n) {
        const int p = n % 4, q = (n / 4) % (kDim - p + 1);
        const KForm a = random_form(rng, p), b = random_form(rng, q);
        EXPECT_EQ(wedge(a, b), wedge_oracle(a, b)) << p << "," << q;
    }
}

TEST(ExteriorProperty, GradedCommutativityAndAssociativity)
{
    Rng rng(12);
    for (int n = 0; n < 50; ++n) {
        const int p = 1 + n % 3, q = 1 + (n / 3) % 2;
        const KForm a = random_form(rng, p), b = random_form(rng, q), c = random_form(rng, 1);
        const int s = (p * q) % 2 ? -1 : 1;
        EXPECT_EQ(wedge(a, b), s * wedge(b, a));
        if (p + q + 1 <= kDim) {
            EXPECT_EQ(wedge(wedge(a, b), c), wedge(a, wedge(b, c)));
        }
    }
}

TEST(ExteriorProperty, HodgeDefiningIdentity)
{
    Rng rng(13);
    const KForm vol = e(1, 2, 3, 4, 5);
    for (int n = 0; n < 60; ++n) {
        const int k = n % 6;
        const KForm a = random_form(rng, k), b = random_form(rng, k);
        EXPECT_EQ(wedge(a, hodge(b)), inner(a, b) * vol);
        EXPECT_EQ(hodge(hodge(a)), a);
    }
}

TEST(ExteriorProperty, InteriorIsEvaluationInFirstSlot)
{
    Rng rng(14);
    for (int n = 0; n < 40; ++n) {
        const int k = 1 + n % 4;
        const KForm a = random_form(rng, k);
        const Vector v{testing::small_rational(rng), testing::small_rational(rng), testing::small_rational(rng),
                       testing::small_rational(rng), testing::small_rational(rng)};
        const KForm i = interior(v, a);
        std::vector<int> rest(static_cast<std::size_t>(k - 1));
        for (std::uint8_t m : basis_masks(k - 1)) {
            std::size_t r = 0;
            for (int b = 0; b < kDim; ++b)
                if (m & (1u << b))
                    rest[r++] = b;
            Scalar s = 0;
            for (int j = 0; j < kDim; ++j) {
                std::vector<int> args{j};
                args.insert(args.end(), rest.begin(), rest.end());
                s += v[static_cast<std::size_t>(j)] * a.value(args);
            }
            EXPECT_EQ(i.coeff(m), s);
        }
    }
}

TEST(ExteriorProperty, RhoStarIsADerivation)
{
    Rng rng(15);
    for (int n = 0; n < 40; ++n) {
        const KForm w = random_form(rng, 2);
        const int p = 1 + n % 2, q = 1 + (n / 2) % 2;
        const KForm a = random_form(rng, p), b = random_form(rng, q);
        EXPECT_EQ(rho_star(w, wedge(a, b)), wedge(rho_star(w, a), b) + wedge(a, rho_star(w, b)));
    }
}

TEST(ExteriorProperty, RhoStarIsTheCommutatorOnTwoForms)
{
    Rng rng(16);
    for (int n = 0; n < 30; ++n) {
        const KForm a = random_form(rng, 2), b = random_form(rng, 2), c = random_form(rng, 1);
        // Representation property: [rho(a), rho(b)] = rho(rho(a) b).
        EXPECT_EQ(rho_star(a, rho_star(b, c)) - rho_star(b, rho_star(a, c)), rho_star(rho_star(a, b), c));
    }
}

TEST(Exterior, RejectsBadArguments)
{
    EXPECT_THROW(rho_star(e(1), e(2)), std::invalid_argument);
    EXPECT_THROW(e(6), std::out_of_range);
}

} // namespace
} // namespace acm5
