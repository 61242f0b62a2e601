#include "support.hpp"

#include <gtest/gtest.h>

namespace acm5 {
namespace {

using testing::Rng;

FrameGeometry sasaki_heisenberg()
{
    return frame_geometry(frame_from_brackets("sasaki", {{1, 2, 5, 2}, {3, 4, 5, 2}}));
}

FrameGeometry random_pointwise(Rng& rng, const std::vector<int>& from)
{
    const auto cls = testing::random_classes(rng, from, true);
    const ThreeTensor omega = testing::random_gamma(rng, cls) + testing::random_u2_part(rng);
    return frame_geometry(testing::pointwise_frame(omega.with_shape(Shape::A)));
}

void expect_torsion_type(const MetricConnection& c)
{
    const TorsionType t = torsion_type(c.torsion);
    switch (c.kind) {
    case ConnectionKind::Vectorial: EXPECT_TRUE(t.vectorial) << c.torsion.to_string(); break;
    case ConnectionKind::Skew: EXPECT_TRUE(t.skew) << c.torsion.to_string(); break;
    case ConnectionKind::TracelessCyclic: EXPECT_TRUE(t.traceless_cyclic) << c.torsion.to_string(); break;
    case ConnectionKind::LeviCivita: EXPECT_TRUE(c.torsion.is_zero()); break;
    }
}

TEST(Connections, SasakiCharacteristicConnection)
{
    const FrameGeometry g = sasaki_heisenberg();
    ASSERT_EQ(g.strict_class(), std::vector<int>{3});
    const MetricConnection c = connection_skew(g);
    EXPECT_EQ(c.torsion, embed_three_form(wedge(eta(), g.d_eta)));
    EXPECT_TRUE(c.formula_matches_solve);
    EXPECT_TRUE(preserves_structure(c));
    EXPECT_TRUE(torsion_parallel(c));
    EXPECT_TRUE(holonomy(c).inside_u2);
    EXPECT_THROW(connection_vectorial(g), NotAdmissible);
    EXPECT_NO_THROW(connection_traceless_cyclic(g));
}

TEST(Connections, SasakiRicciInReebDirection)
{
    // Ric(xi, xi) = 2n on a Sasaki manifold of dimension 2n + 1.
    const MetricConnection lc = levi_civita_connection(sasaki_heisenberg());
    const Matrix5x5 ric = ricci(curvature(lc));
    EXPECT_EQ(ric[4][4], 4);
    for (int i = 0; i < 4; ++i)
        EXPECT_EQ(ric[static_cast<std::size_t>(i)][4], 0);
}

TEST(Connections, AbelianIsFlat)
{
    const FrameGeometry g = frame_geometry(FrameSpec{"abelian", zero_coeff3(), std::nullopt});
    const MetricConnection lc = levi_civita_connection(g);
    EXPECT_TRUE(curvature(lc).is_zero());
    EXPECT_TRUE(holonomy(lc).trivial);
    EXPECT_EQ(holonomy(lc).name(), "0");
    for (ConnectionKind k : {ConnectionKind::Vectorial, ConnectionKind::Skew, ConnectionKind::TracelessCyclic})
        EXPECT_TRUE(build_connection(g, k).A.is_zero());
}

TEST(Connections, NotAdmissibleNamesComponents)
{
    Rng rng(51);
    const ThreeTensor gamma = testing::random_gamma(rng, {1, 4, 7});
    const FrameGeometry g = frame_geometry(testing::pointwise_frame(gamma.with_shape(Shape::A)));
    try {
        connection_vectorial(g);
        FAIL() << "expected NotAdmissible";
    } catch (const NotAdmissible& e) {
        EXPECT_EQ(std::string(e.what()),
                  "no compatible connection with vectorial torsion: Gamma has nonzero components W4, W7");
    }
    try {
        connection_traceless_cyclic(g);
        FAIL() << "expected NotAdmissible";
    } catch (const NotAdmissible& e) {
        EXPECT_EQ(std::string(e.what()),
                  "no compatible connection with traceless-cyclic torsion: Gamma has nonzero components W1, W4");
    }
    const Admissibility a = admits(g);
    EXPECT_FALSE(a.vectorial || a.skew || a.traceless_cyclic);
    EXPECT_FALSE(solve_compatible(g, ConnectionKind::Skew));
}

TEST(Connections, SolutionFreedom)
{
    EXPECT_EQ(compatible_solution_freedom(ConnectionKind::Vectorial), 0);
    EXPECT_EQ(compatible_solution_freedom(ConnectionKind::Skew), 0);
    EXPECT_EQ(compatible_solution_freedom(ConnectionKind::TracelessCyclic), 8);
}

TEST(Connections, CurvatureRejectsPointwiseFrames)
{
    Rng rng(52);
    const FrameGeometry g = random_pointwise(rng, {3});
    EXPECT_THROW(curvature(levi_civita_connection(g)), std::invalid_argument);
    EXPECT_THROW(holonomy(connection_skew(g)), std::invalid_argument);
}

TEST(ConnectionsProperty, RandomAdmissibleFrames)
{
    Rng rng(53);
    for (ConnectionKind k : {ConnectionKind::Vectorial, ConnectionKind::Skew, ConnectionKind::TracelessCyclic}) {
        for (int n = 0; n < 25; ++n) {
            const FrameGeometry g = random_pointwise(rng, admissible_class(k));
            const MetricConnection c = build_connection(g, k);
            EXPECT_TRUE(c.formula_matches_solve) << connection_kind_name(k) << " " << g.gamma.to_string();
            EXPECT_TRUE(preserves_structure(c));
            EXPECT_TRUE(satisfies_compatibility(g, c));
            expect_torsion_type(c);
            for (const auto& s : subtype_checks(g, k))
                EXPECT_TRUE(s.consistent()) << connection_kind_name(k) << " " << s.name << ") " << s.condition;
        }
    }
}

TEST(ConnectionsProperty, InadmissibleFramesHaveNoSolution)
{
    Rng rng(54);
    for (ConnectionKind k : {ConnectionKind::Vectorial, ConnectionKind::Skew, ConnectionKind::TracelessCyclic}) {
        const auto& allowed = admissible_class(k);
        std::vector<int> blocked;
        for (int i = 1; i <= 10; ++i)
            if (std::find(allowed.begin(), allowed.end(), i) == allowed.end())
                blocked.push_back(i);
        for (int n = 0; n < 10; ++n) {
            auto cls = testing::random_classes(rng, allowed, true);
            cls.push_back(blocked[static_cast<std::size_t>(n) % blocked.size()]);
            std::sort(cls.begin(), cls.end());
            cls.erase(std::unique(cls.begin(), cls.end()), cls.end());
            const ThreeTensor gamma = testing::random_gamma(rng, cls);
            const FrameGeometry g = frame_geometry(testing::pointwise_frame(gamma.with_shape(Shape::A)));
            EXPECT_FALSE(solve_compatible(g, k));
            EXPECT_THROW(build_connection(g, k), NotAdmissible);
        }
    }
}

TEST(ConnectionsProperty, SkewTorsionSplit)
{
    Rng rng(55);
    for (int n = 0; n < 25; ++n) {
        const FrameGeometry g = random_pointwise(rng, {3, 4, 5, 6});
        const auto split = skew_torsion_split(g);
        const auto parts = project_lambda(Scalar(2) * skew_torsion_form(g));
        for (int i = 0; i < 4; ++i)
            EXPECT_EQ(split[static_cast<std::size_t>(i)], parts.at(i + 1)) << i + 1;
        EXPECT_TRUE(skew_remark_identity(g));
    }
}

TEST(ConnectionsProperty, LeviCivitaCurvatureSymmetries)
{
    Rng rng(56);
    for (int n = 0; n < 30; ++n) {
        const FrameSpec f = testing::random_lie_algebra(rng, n);
        const CurvatureTensor R = curvature(levi_civita_connection(frame_geometry(f)));
        for (int a = 0; a < kDim; ++a)
            for (int b = 0; b < kDim; ++b)
                for (int c = 0; c < kDim; ++c)
                    for (int d = 0; d < kDim; ++d) {
                        EXPECT_EQ(R(a, b, c, d), R(c, d, a, b));
                        EXPECT_EQ(R(a, b, c, d) + R(b, c, a, d) + R(c, a, b, d), 0) << n;
                    }
        const Matrix5x5 ric = ricci(R);
        for (std::size_t i = 0; i < kDim; ++i)
            for (std::size_t j = 0; j < kDim; ++j)
                EXPECT_EQ(ric[i][j], ric[j][i]);
    }
}

TEST(ConnectionsProperty, HolonomyIsAClosedSubalgebra)
{
    for (const auto& r : examples()) {
        const FrameGeometry g = frame_geometry(r.frame);
        std::vector<MetricConnection> cs = {levi_civita_connection(g)};
        for (ConnectionKind k : {ConnectionKind::Vectorial, ConnectionKind::Skew, ConnectionKind::TracelessCyclic})
            if (solve_compatible(g, k))
                cs.push_back(build_connection(g, k));
        for (const auto& c : cs) {
            const HolonomyAlgebra h = holonomy(c);
            if (h.trivial) {
                EXPECT_TRUE(curvature(c).is_zero()) << r.name();
                continue;
            }
            std::vector<linalg::Vec> rows;
            for (const auto& b : h.basis)
                rows.push_back(b.coeffs());
            const linalg::SpanCoordinates span(rows);
            const CurvatureTensor R = curvature(c);
            for (int i = 0; i < 10; ++i)
                EXPECT_TRUE(span.coords(R.row(i).coeffs())) << r.name();
            for (const auto& a : h.basis)
                for (const auto& b : h.basis)
                    EXPECT_TRUE(span.coords(lie_bracket(a, b).coeffs())) << r.name();
            // A compatible connection has holonomy inside u(2).
            if (c.kind != ConnectionKind::LeviCivita)
                EXPECT_TRUE(h.inside_u2) << r.name() << " " << connection_kind_name(c.kind);
        }
    }
}

} // namespace
} // namespace acm5
