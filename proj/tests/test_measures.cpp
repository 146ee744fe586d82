#include <random>
#include <vector>

#include <gtest/gtest.h>

#include <ballkrall/harmonics.hpp>
#include <ballkrall/measures.hpp>

#include "moment_oracles.hpp"
#include "random_poly.hpp"

using namespace ballkrall;
namespace bk_test = ballkrall::testing;

TEST(SphereMoment, Examples) {
    EXPECT_EQ(sphere_moment(Monomial{0, 0, 0}), 1);
    EXPECT_EQ(sphere_moment(Monomial{2, 0, 0}), rat(1, 3));
    EXPECT_EQ(sphere_moment(Monomial{4, 0}), rat(3, 8));
    EXPECT_EQ(sphere_moment(Monomial{1, 2}), 0);
}

TEST(SphereMoment, MatchesWallisRecursionOnCircle) {
    for (unsigned a = 0; a <= 10; ++a)
        for (unsigned b = 0; a + b <= 10; ++b)
            EXPECT_EQ(sphere_moment(Monomial{a, b}), bk_test::circle_moment_wallis(a, b));
}

TEST(SphereMoment, UnitSphereConsistency) {
    // sum_i xi_i^2 = 1 on the sphere.
    for (std::size_t d = 2; d <= 4; ++d)
        for (unsigned total = 0; total <= 6; ++total)
            for (const auto& nu : monomials_of_degree(d, total)) {
                Rational sum = 0;
                for (std::size_t i = 0; i < d; ++i) sum += sphere_moment(nu * Monomial::unit(d, i, 2));
                EXPECT_EQ(sum, sphere_moment(nu));
            }
}

TEST(BallMoment, Examples) {
    const MeasureParams lebesgue{2, rat(1, 2), 0};
    EXPECT_EQ(ball_moment(Monomial{0, 0}, lebesgue), 1);
    EXPECT_EQ(ball_moment(Monomial{3, 0}, lebesgue), 0);
    EXPECT_EQ(ball_moment(Monomial{2, 0}, lebesgue), rat(1, 4));
    EXPECT_THROW(ball_moment(Monomial{0, 0}, {2, rat(-1, 2), 0}), ParameterError);
    EXPECT_THROW(ball_moment(Monomial{0, 0, 0}, lebesgue), DimensionMismatch);
}

TEST(BallMoment, PolarFactorizationAgreesWithCartesianOracle) {
    for (unsigned alpha = 0; alpha <= 2; ++alpha) {
        const MeasureParams params{2, Rational(alpha) + rat(1, 2), 0};
        for (unsigned a = 0; a <= 8; ++a)
            for (unsigned b = 0; a + b <= 8; ++b)
                EXPECT_EQ(ball_moment(Monomial{a, b}, params),
                          bk_test::disk_ball_moment_oracle(a, b, alpha))
                    << "alpha=" << alpha << " nu=(" << a << "," << b << ")";
    }
}

TEST(SigmaOverOmega, Values) {
    for (std::size_t d = 2; d <= 6; ++d)
        EXPECT_EQ(sigma_over_omega({d, rat(1, 2), 0}), static_cast<long>(d));
    EXPECT_EQ(sigma_over_omega({2, rat(3, 2), 0}), 4);
    // d even: Gamma(mu+1/2+1)/Gamma(mu+1/2) = mu+1/2 for any rational mu.
    EXPECT_EQ(sigma_over_omega({2, rat(1, 3), 0}), 2 * (rat(1, 3) + rat(1, 2)));
    // d = 3, mu = 1: 2 Gamma(3)/Gamma(3/2)^2 = 16/pi.
    EXPECT_THROW(sigma_over_omega({3, rat(1), 0}), UnsupportedExact);
}

TEST(InnerProducts, Examples) {
    const MeasureParams p{2, rat(1, 2), rat(1, 4)};
    const auto one = MultiPoly::constant(2, 1);
    const auto x1 = MultiPoly::variable(2, 0);
    const auto x2 = MultiPoly::variable(2, 1);
    EXPECT_EQ(inner_ball(one, one, p), 1);
    EXPECT_EQ(inner_ball(x1, x2, p), 0);
    EXPECT_EQ(inner_sphere(one, one, 2), 1);
    EXPECT_EQ(inner_sphere(MultiPoly::term({2, 0, 0}, 1), MultiPoly::constant(3, 1), 3), rat(1, 3));
    EXPECT_EQ(inner_lambda(one, one, p), 1 + p.lambda);
    EXPECT_THROW(inner_ball(one, MultiPoly::constant(3, 1), p), DimensionMismatch);
}

TEST(InnerProducts, HarmonicsOfDifferentDegreesAreSphereOrthogonal) {
    for (std::size_t d = 2; d <= 3; ++d)
        for (unsigned m1 = 0; m1 <= 4; ++m1)
            for (unsigned m2 = m1 + 1; m2 <= 4; ++m2)
                for (const auto& y1 : harmonic_basis(d, m1).elements)
                    for (const auto& y2 : harmonic_basis(d, m2).elements)
                        EXPECT_EQ(inner_sphere(y1, y2, d), 0);
}

TEST(InnerProductsProperty, SymmetryBilinearityPositivity) {
    std::mt19937 rng(42);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t d = 2 + trial % 2;
        const MeasureParams p{d, trial % 3 == 0 ? rat(1, 2) : rat(3, 2), rat(1, 3)};
        MomentTable table(p);
        const MultiPoly f = bk_test::random_multipoly(rng, d, 4);
        const MultiPoly g = bk_test::random_multipoly(rng, d, 4);
        const MultiPoly h = bk_test::random_multipoly(rng, d, 4);
        const Rational s = bk_test::random_rational(rng);
        EXPECT_EQ(table.inner_ball(f, g), table.inner_ball(g, f));
        EXPECT_EQ(table.inner_sphere(f, g), table.inner_sphere(g, f));
        EXPECT_EQ(table.inner_lambda(f, g), table.inner_lambda(g, f));
        EXPECT_EQ(table.inner_lambda(f * s + h, g),
                  s * table.inner_lambda(f, g) + table.inner_lambda(h, g));
        EXPECT_EQ(table.inner_ball(f * s + h, g),
                  s * table.inner_ball(f, g) + table.inner_ball(h, g));
        // lambda = 0 degrades to the ball product.
        EXPECT_EQ(inner_lambda(f, g, {d, p.mu, 0}), table.inner_ball(f, g));
    }
    for (std::size_t d = 2; d <= 3; ++d) {
        MomentTable table({d, rat(1, 2), rat(1, 4)});
        for (unsigned total = 0; total <= 4; ++total)
            for (const auto& m : monomials_of_degree(d, total)) {
                const auto f = MultiPoly::term(m, 1);
                EXPECT_GT(table.inner_lambda(f, f), 0);
                EXPECT_GT(table.inner_ball(f, f), 0);
            }
    }
}
