#include "tps/bounds.hpp"

#include <gtest/gtest.h>

#include <algorithm>

using namespace tps;

TEST(Bounds, VolumeConstants) {
    EXPECT_NEAR(v_oct(), kVOctPrinted, kPrintedTol);
    EXPECT_NEAR(v_3(), kV3Printed, kPrintedTol);
    EXPECT_NEAR(v_oct(), 8.0 * lobachevsky(std::numbers::pi / 4), 0.0);
}

TEST(Bounds, MaxDisjointPants) {
    EXPECT_EQ(max_disjoint_pants(Volume::of_oct(2)), 2);
    EXPECT_EQ(max_disjoint_pants(0.99 * v_oct()), 0);
    EXPECT_EQ(max_disjoint_pants(catalog_volume("M3")), 1);
    EXPECT_THROW(max_disjoint_pants(0.0), std::domain_error);
    EXPECT_THROW(max_disjoint_pants(-1.0), std::domain_error);
}

TEST(Bounds, CountingExamples) {
    // Tet_8 in M4: k = 8 against 2 V_oct
    auto tet8 = special_catalog(4);
    auto it = std::find_if(tet8.begin(), tet8.end(), [](const CatalogEntry& e) { return e.type == "Tet_8"; });
    ASSERT_NE(it, tet8.end());
    auto r = catalog_bound(*it);
    EXPECT_EQ(it->k, 8);
    EXPECT_DOUBLE_EQ(r.bound, 8.0);
    EXPECT_TRUE(r.equality);

    TypeCensus a1;
    a1.a[1] = 1;
    auto s = counting_bound_check(a1, Volume::of_oct(1));
    EXPECT_EQ(s.k, 1);
    EXPECT_TRUE(s.ok);

    TypeCensus t4;
    t4.t4 = 1;
    auto t = counting_bound_check(t4, Volume::of_oct(3));
    EXPECT_EQ(t.k, 4);
    EXPECT_EQ(t.disjoint_lb, 3);
    EXPECT_TRUE(t.termwise);
    EXPECT_TRUE(t.ok);
    EXPECT_THROW(counting_bound_check(t4, Volume::of_oct(2)), std::domain_error);
    EXPECT_THROW(counting_bound_check(t4, Volume::of_printed(2.0 * v_oct(), 1e-4)), std::domain_error);
}

TEST(Bounds, TermwiseForSingleTypes) {
    for (long long n = 1; n <= 100; ++n) {
        TypeCensus a, b;
        a.a[n] = 1;
        b.b[n] = 1;
        EXPECT_GT(4 * census_disjoint_lb(a), census_k(a)) << n;
        EXPECT_GT(4 * census_disjoint_lb(b), census_k(b)) << n;
    }
    TypeCensus t3, t4;
    t3.t3 = 1;
    t4.t4 = 1;
    EXPECT_GT(4 * census_disjoint_lb(t3), census_k(t3));
    EXPECT_GT(4 * census_disjoint_lb(t4), census_k(t4));
}

TEST(Bounds, CatalogEquality) {
    int equalities = 0;
    for (const auto& e : special_catalog(8)) {
        auto r = catalog_bound(e);
        EXPECT_TRUE(r.ok) << e.type;
        if (r.equality) {
            ++equalities;
            EXPECT_EQ(e.manifold, "M4");
        }
    }
    EXPECT_EQ(equalities, 1);
}

TEST(Bounds, CatalogVolumes) {
    for (long long n = 1; n <= 10; ++n) {
        EXPECT_EQ(catalog_volume("W", n).oct, n);
        EXPECT_TRUE(catalog_volume("W", n).is_oct_multiple());
        EXPECT_EQ(catalog_volume("WPrime", n).oct, n);
    }
    EXPECT_NEAR(catalog_volume("W", 3).value(), 10.9916, 1e-4);
    EXPECT_EQ(catalog_volume("M5").v3, 10);
    EXPECT_NEAR(catalog_volume("M5").value(), 10.1494, 1e-4);
    auto m3 = catalog_volume("M3");
    EXPECT_TRUE(m3.printed.has_value());
    EXPECT_DOUBLE_EQ(m3.tol, 1e-4);
    EXPECT_THROW(catalog_volume("M9"), std::invalid_argument);
    EXPECT_THROW(catalog_volume("W", 0), std::domain_error);
}

TEST(Bounds, NormalizedLength) {
    for (long long n = 1; n <= 50; ++n) {
        auto lb = normalized_length_lower_bound(n, Rational(0));
        EXPECT_EQ(lb.length_sq, Rational(BigInt(n + 1), BigInt(4)));
        EXPECT_EQ(lb.length_sq * lb.meridian_sq, Rational(1));
    }
    EXPECT_EQ(normalized_length_lower_bound(3, Rational(0)).length_sq, Rational(1));
    EXPECT_EQ(normalized_length_lower_bound(2, Rational::parse("5/3")).length_sq * normalized_length_lower_bound(2, Rational::parse("5/3")).meridian_sq, Rational(1));
    EXPECT_THROW(normalized_length_lower_bound(0, Rational(0)), std::domain_error);
    EXPECT_THROW(normalized_length_lower_bound(2, Rational(-1)), std::domain_error);
}

TEST(Bounds, CoreLength) {
    const double pi = std::numbers::pi;
    EXPECT_NEAR(core_length_bound(4 * std::sqrt(2.0) * pi), 1.0 / (8 * pi), 1e-12);
    EXPECT_THROW(core_length_bound(4 * pi), std::domain_error);
    double prev = core_length_bound(filling_threshold());
    for (double L = filling_threshold() + 0.5; L < 200; L += 0.5) {
        double v = core_length_bound(L);
        EXPECT_LT(v, prev);
        prev = v;
    }
}

TEST(Bounds, Montesinos) {
    auto R = [](const char* s) { return std::optional<Rational>(Rational::parse(s)); };
    for (const char* s : {"-2", "-3/2", "-1"}) EXPECT_FALSE(montesinos_hyperbolic(2, R(s)));
    EXPECT_FALSE(montesinos_hyperbolic(2, std::nullopt));
    EXPECT_FALSE(montesinos_hyperbolic(3, R("-2")));
    EXPECT_FALSE(montesinos_hyperbolic(3, std::nullopt));
    EXPECT_TRUE(montesinos_hyperbolic(3, R("-3/2")));
    EXPECT_TRUE(montesinos_hyperbolic(5, R("1/2")));
    EXPECT_FALSE(montesinos_hyperbolic(7, std::nullopt));
    EXPECT_TRUE(montesinos_hyperbolic(4, R("-2")));
    for (long long n = 2; n <= 20; ++n)
        for (long long r = 0; r <= 20; ++r) EXPECT_TRUE(montesinos_hyperbolic(n, Rational(r)));
    EXPECT_THROW(montesinos_hyperbolic(1, R("0")), std::domain_error);
}

TEST(Bounds, Convergence) {
    auto a = convergence_report(1023);
    EXPECT_DOUBLE_EQ(a.L_min, 16.0);
    EXPECT_FALSE(a.core_bound.has_value());
    auto b = convergence_report(1500);
    ASSERT_TRUE(b.core_bound.has_value());
    EXPECT_NEAR(b.L_min, std::sqrt(1501.0) / 2, 1e-12);
    const double pi = std::numbers::pi;
    EXPECT_NEAR(*b.core_bound, 2 * pi / (1501.0 / 4 - 16 * pi * pi), 1e-12);
    EXPECT_NEAR(*b.core_bound, 0.02891, 1e-5);
    EXPECT_LT(convergence_report(3000).core_bound.value(), *b.core_bound);
    EXPECT_THROW(convergence_report(1), std::domain_error);
}
