#include "tps/holonomy.hpp"
#include "tps/region.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace tps;

namespace {

Rational q(long long a, long long b = 1) { return Rational(BigInt(a), BigInt(b)); }

CQ random_modulus(std::mt19937& g) {
    std::uniform_int_distribution<int> re(-30, 30), im(1, 30), den(1, 6);
    return CQ(q(re(g), den(g)), q(im(g), den(g)));
}

}  // namespace

TEST(Holonomy, RejectsLowerHalfPlane) {
    EXPECT_THROW(CuspModulus<Rational>(CQ(1)), std::domain_error);
    EXPECT_THROW(CuspModulus<Rational>(CQ(0, -1)), std::domain_error);
}

TEST(Holonomy, GeneratorExamples) {
    auto g = build_generators(CuspModulus<Rational>(CQ(0, 2)), CuspModulus<Rational>(CQ(0, 2)));
    EXPECT_EQ(g.z.b(), CQ(0, -1));
    EXPECT_EQ(g.w.c(), CQ(0, 4));
    EXPECT_EQ(g.x.b(), CQ(2));
    EXPECT_EQ(g.y.c(), CQ(2));
    auto h = build_generators(CuspModulus<Rational>(CQ(0, 1)), CuspModulus<Rational>(CQ(0, 1)));
    EXPECT_EQ(h.z.b(), CQ(0, -2));
    EXPECT_TRUE(h.x == g.x && h.y == g.y);
}

TEST(Holonomy, GeneratorsAreParabolic) {
    std::mt19937 gen(21);
    for (int k = 0; k < 50; ++k) {
        auto g = build_generators(CuspModulus<Rational>(random_modulus(gen)), CuspModulus<Rational>(random_modulus(gen)));
        for (const auto* m : {&g.x, &g.y, &g.z, &g.w}) EXPECT_EQ(classify_element(*m), ElementClass::parabolic);
    }
}

TEST(Holonomy, MeridianNormalization) {
    EXPECT_EQ(solve_meridian_normalization(), Rational(2));
    Moebius<Rational> x(CQ(1), CQ(2), CQ(0), CQ(1)), y(CQ(1), CQ(0), CQ(2), CQ(1));
    EXPECT_EQ(classify_element(x * y.inverse()), ElementClass::parabolic);
    EXPECT_EQ((x * y.inverse()).trace(), CQ(-2));
}

TEST(Holonomy, ResidualExamples) {
    using CM = CuspModulus<Rational>;
    EXPECT_EQ(modulus_equality_residual(CM(CQ(0, 2)), CM(CQ(0, 2))), CQ(-4));
    EXPECT_TRUE(modulus_parabolic(CM(CQ(0, 2)), CM(CQ(0, 2))));
    // (i, 2i): trace 2 - 8 = -6
    EXPECT_EQ(modulus_equality_residual(CM(CQ(0, 1)), CM(CQ(0, 2))) + CQ(2), CQ(-6));
    EXPECT_FALSE(modulus_parabolic(CM(CQ(0, 1)), CM(CQ(0, 2))));
}

TEST(Holonomy, ParabolicIffEqualModuli) {
    std::mt19937 gen(22);
    using CM = CuspModulus<Rational>;
    for (int k = 0; k < 100; ++k) {
        CQ t = random_modulus(gen), u = random_modulus(gen);
        EXPECT_EQ(modulus_equality_residual(CM(t), CM(u)), CQ(-4) * u / t);
        EXPECT_TRUE(modulus_parabolic(CM(t), CM(t)));
        EXPECT_EQ(modulus_parabolic(CM(t), CM(u)), t == u);
    }
}

TEST(Holonomy, CommutatorTraceIdentity) {
    std::mt19937 gen(23);
    for (int k = 0; k < 20; ++k) {
        CQ t = random_modulus(gen);
        CQ s = CQ(1) / t;
        auto m = b_type_commutator(t);
        EXPECT_EQ(m.trace(), CQ(2) + CQ(16) * s * s);
        auto f = b_type_commutator_formula(t);
        EXPECT_EQ(m.a(), f[0]);
        EXPECT_EQ(m.b(), f[1]);
        EXPECT_EQ(m.c(), f[2]);
        EXPECT_EQ(m.d(), f[3]);
    }
}

TEST(Holonomy, BTypeModulus) {
    CQ tau = b_type_modulus();
    EXPECT_EQ(tau, CQ(0, 2));
    EXPECT_EQ(b_type_commutator(tau).trace(), CQ(-2));
    EXPECT_EQ(membership(tau).verdict, Membership::inside);
}

TEST(Holonomy, FloatBackendTolerance) {
    CuspModulus<double> a(CF(0.3, 1.7)), b(CF(0.3 + 1e-12, 1.7));
    EXPECT_TRUE(modulus_parabolic(a, b, 1e-9));
    EXPECT_FALSE(modulus_parabolic(a, CuspModulus<double>(CF(0.3, 1.8)), 1e-9));
}
