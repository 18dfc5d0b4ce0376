#include "tps/homology.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

using namespace tps;

namespace {

std::vector<long long> random_vec(std::mt19937& g, std::size_t n, int h = 6) {
    std::uniform_int_distribution<int> d(-h, h);
    std::vector<long long> v(n);
    for (auto& x : v) x = d(g);
    return v;
}

BoundaryClass bc(std::vector<std::pair<long long, long long>> v) { return BoundaryClass{std::move(v)}; }

}  // namespace

TEST(Homology, BoundaryExamplesM4) {
    EXPECT_EQ(boundary_class(IntegerClass(Manifold::M4, {1, 0, 0, 0})), bc({{0, 1}, {1, 0}, {0, 0}, {-1, 0}}));
    // Sigma_3 = z: m2 + l3 + m4
    EXPECT_EQ(boundary_class(IntegerClass(Manifold::M4, {0, 0, 1, 0})), bc({{0, 0}, {1, 0}, {0, 1}, {1, 0}}));
    // Sigma_5 = y + z + w: (m2 + l2) + (2 m3 + l3) + (m4 + l4)
    EXPECT_EQ(boundary_class(IntegerClass(Manifold::M4, {0, 1, 1, 1})), bc({{0, 0}, {1, 1}, {2, 1}, {1, 1}}));
    EXPECT_THROW(IntegerClass(Manifold::M4, {1, 2, 3}), std::invalid_argument);
    EXPECT_THROW(boundary_class(IntegerClass(Manifold::M3, {1, 0, 0})), std::invalid_argument);
}

TEST(Homology, BoundaryLinear) {
    std::mt19937 g(41);
    for (Manifold m : {Manifold::M4, Manifold::W3, Manifold::M6}) {
        for (int k = 0; k < 50; ++k) {
            auto a = random_vec(g, basis_rank(m)), b = random_vec(g, basis_rank(m));
            std::vector<long long> s(a.size());
            for (std::size_t i = 0; i < a.size(); ++i) s[i] = a[i] + b[i];
            EXPECT_EQ(boundary_class(IntegerClass(m, s)), boundary_class(IntegerClass(m, a)) + boundary_class(IntegerClass(m, b)));
        }
    }
}

TEST(Homology, M4FirstCuspMeridian) {
    std::mt19937 g(42);
    for (int k = 0; k < 100; ++k) {
        auto v = random_vec(g, 4);
        auto b = boundary_class(IntegerClass(Manifold::M4, v));
        EXPECT_EQ(b.cusps[0].first == 0, v[1] == v[3]);
        EXPECT_EQ(b.cusps[0].second, v[0]);
    }
}

TEST(Homology, SlopeIntersection) {
    for (long long a = -3; a <= 3; ++a)
        for (long long b = -3; b <= 3; ++b)
            if (a || b) { EXPECT_EQ(slope_intersection(a, b, 1, 0), std::abs(b)); }
    EXPECT_EQ(slope_intersection(1, 0, 1, 0), 0);
    EXPECT_EQ(slope_intersection(0, 1, 1, 0), 1);
    EXPECT_THROW(slope_intersection(0, 0, 1, 0), std::invalid_argument);
}

TEST(Homology, Whi3Enumeration) {
    auto s = enumerate_whi3();
    std::set<Triple> want{{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, 1}, {0, 0, -1}};
    EXPECT_EQ(s, want);
    EXPECT_FALSE(s.count({1, 1, -1}));
    EXPECT_FALSE(s.count({0, 0, 0}));
    EXPECT_EQ(enumerate_whi3(5), want);
}

TEST(Homology, Tet2Enumeration) {
    auto r = enumerate_tet2(3);
    for (Quad t : {Quad{0, 0, 1, 0}, Quad{0, 0, -1, 0}, Quad{0, 1, 1, 1}, Quad{0, -1, -1, -1}}) {
        EXPECT_TRUE(r.zero_case.count(t));
        EXPECT_TRUE(r.zero_case_odd.count(t));
    }
    const std::set<Quad> printed{{-1, 0, -1, -2}, {-1, 2, 1, 0}, {1, 2, 1, -2},  {1, 2, -1, -2},
                                 {3, 0, -1, -2},  {3, 2, 1, 0},  {3, 2, 1, -2}, {3, 2, -1, -2}};
    std::set<Quad> filtered;
    for (const auto& c : r.filtered) filtered.insert(c.t);
    for (const auto& t : printed) {
        EXPECT_TRUE(r.nonzero_case.count(t));
        EXPECT_TRUE(filtered.count(t));
    }
    auto c = tet2_case({-1, 0, -1, -2});
    EXPECT_EQ(c.cusp_classes[0], (std::pair<long long, long long>{-2, 0}));
    EXPECT_EQ(c.cusp_classes[1], (std::pair<long long, long long>{-2, -1}));
    EXPECT_EQ(c.cusp_classes[2], (std::pair<long long, long long>{0, -2}));
    EXPECT_GE(c.components_off_filled, 5);
    EXPECT_EQ(filtered, printed);
    // the case split is stable; the raw box saturates at 4, so bound 3 misses +-(4, 2, 0, -2)
    auto r5 = enumerate_tet2(5), r9 = enumerate_tet2(9);
    std::set<Quad> filtered5;
    for (const auto& c5 : r5.filtered) filtered5.insert(c5.t);
    EXPECT_EQ(filtered5, filtered);
    EXPECT_EQ(r5.zero_case, r.zero_case);
    EXPECT_EQ(r5.raw, r9.raw);
    EXPECT_TRUE(std::includes(r5.raw.begin(), r5.raw.end(), r.raw.begin(), r.raw.end()));
    EXPECT_EQ(r5.raw.size() - r.raw.size(), 2u);
    EXPECT_THROW(enumerate_tet2(2), std::invalid_argument);
}

TEST(Homology, M6Parity) {
    auto p = m6_parity_obstruction(IntegerClass(Manifold::M6, {1, 0, 0, 0, 0, 0}));
    EXPECT_EQ(p.sum, 0);
    EXPECT_TRUE(p.even);
    EXPECT_EQ(m6_parity_obstruction(IntegerClass(Manifold::M6, {0, 0, 0, 0, 1, 1})).sum, 4);
    std::mt19937 g(43);
    for (int k = 0; k < 100; ++k) {
        auto v = random_vec(g, 6);
        auto r = m6_parity_obstruction(IntegerClass(Manifold::M6, v));
        EXPECT_EQ(r.sum, 2 * (v[4] + v[5]));
        EXPECT_TRUE(r.even);
    }
    EXPECT_THROW(m6_parity_obstruction(IntegerClass(Manifold::M4, {1, 0, 0, 0})), std::invalid_argument);
}

TEST(Homology, NormBalls) {
    EXPECT_EQ(catalog_norm_ball(Manifold::WPrime2).vertices.size(), 6u);
    EXPECT_EQ(catalog_norm_ball(Manifold::ChainFilled).vertices.size(), 4u);
    auto m4 = catalog_norm_ball(Manifold::M4);
    EXPECT_EQ(m4.vertices.size(), 16u);
    for (const auto& v : m4.vertices)
        for (long long x : v) EXPECT_EQ(std::abs(x), 1);
    for (Manifold m : {Manifold::W2, Manifold::WPrime2, Manifold::M3, Manifold::M4, Manifold::ChainFilled}) {
        auto P = catalog_norm_ball(m);
        for (const auto& v : P.vertices) {
            auto w = v;
            for (auto& x : w) x = -x;
            EXPECT_NE(std::find(P.vertices.begin(), P.vertices.end(), w), P.vertices.end());
        }
    }
    EXPECT_THROW(catalog_norm_ball(Manifold::M6), std::invalid_argument);
}

TEST(Homology, NormExamples) {
    auto oct = catalog_norm_ball(Manifold::WPrime2);
    EXPECT_EQ(thurston_norm(oct, std::vector<long long>{1, 1, 1}), Rational(3));
    auto m4 = catalog_norm_ball(Manifold::M4);
    EXPECT_EQ(thurston_norm(m4, std::vector<long long>{1, 0, 0, 0}), Rational(1));
    for (const auto& v : m4.vertices) EXPECT_EQ(thurston_norm(m4, v), Rational(1));
    for (Manifold m : {Manifold::W2, Manifold::M3, Manifold::M4}) {
        auto P = catalog_norm_ball(m);
        EXPECT_EQ(thurston_norm(P, std::vector<long long>(P.vertices[0].size(), 0)), Rational(0));
    }
    EXPECT_THROW(thurston_norm(oct, std::vector<long long>{1, 1}), std::invalid_argument);
    // tet2 parallelepiped: x + y + z is a vertex
    EXPECT_EQ(thurston_norm(catalog_norm_ball(Manifold::M3), std::vector<long long>{1, 1, 1}), Rational(1));
}

TEST(Homology, NormIsANorm) {
    std::mt19937 g(44);
    std::uniform_int_distribution<int> kd(-4, 4);
    for (Manifold m : {Manifold::W2, Manifold::WPrime2, Manifold::M3, Manifold::M4, Manifold::ChainFilled}) {
        auto P = catalog_norm_ball(m);
        std::size_t n = P.vertices[0].size();
        for (int t = 0; t < 40; ++t) {
            auto a = random_vec(g, n), b = random_vec(g, n);
            long long k = kd(g);
            std::vector<long long> ka(n), ab(n);
            for (std::size_t i = 0; i < n; ++i) {
                ka[i] = k * a[i];
                ab[i] = a[i] + b[i];
            }
            Rational na = thurston_norm(P, a), nb = thurston_norm(P, b);
            EXPECT_EQ(thurston_norm(P, ka), Rational(std::abs(k)) * na);
            EXPECT_LE(thurston_norm(P, ab), na + nb);
        }
    }
}

TEST(Homology, NormClosedForms) {
    std::mt19937 g(45);
    auto m4 = catalog_norm_ball(Manifold::M4);
    auto oct = catalog_norm_ball(Manifold::WPrime2);
    for (int t = 0; t < 200; ++t) {
        auto v = random_vec(g, 4, 9);
        long long linf = 0;
        for (long long x : v) linf = std::max(linf, std::abs(x));
        EXPECT_EQ(thurston_norm(m4, v), Rational(linf));
        auto w = random_vec(g, 3, 9);
        EXPECT_EQ(thurston_norm(oct, w), Rational(std::abs(w[0]) + std::abs(w[1]) + std::abs(w[2])));
    }
}

TEST(Homology, M4UCoordinates) {
    EXPECT_EQ(m4_u_coordinates({1, 0, 0, 0}), (std::vector<long long>{1, -1, 1, 1}));
    EXPECT_EQ(m4_u_coordinates({0, 1, 0, 0}), (std::vector<long long>{1, 1, -1, -1}));
}
