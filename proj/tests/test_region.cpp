#include "tps/region.hpp"

#include <gtest/gtest.h>

#include <random>
#include <regex>

using namespace tps;

namespace {

Rational q(long long a, long long b = 1) { return Rational(BigInt(a), BigInt(b)); }

CQuad witness() { return CQuad(QuadExt(q(93, 128)), QuadExt(Rational(0), q(1, 128), 55)); }

}  // namespace

TEST(Region, ReducedSet) {
    auto cs = reduced_constraints();
    ASSERT_EQ(cs.size(), 26u);
    for (const auto& c : cs) {
        if (c.m == 1 && c.n == 0) continue;
        EXPECT_NE(std::find(cs.begin(), cs.end(), c.reflected()), cs.end()) << c.str();
    }
    EXPECT_THROW(RegionConstraint(ConstraintKind::direct, 0, 0), std::domain_error);
}

TEST(Region, MembershipExamples) {
    EXPECT_EQ(membership(CQ(0, 2)).verdict, Membership::inside);
    EXPECT_EQ(membership(CQ(Rational(0), q(1, 8))).verdict, Membership::outside);
    auto w = membership(witness());
    EXPECT_EQ(w.verdict, Membership::boundary);
    std::vector<std::string> tight;
    for (const auto& c : w.tight) tight.push_back(c.str());
    EXPECT_NE(std::find(tight.begin(), tight.end(), "direct(3,-2)"), tight.end());
    EXPECT_NE(std::find(tight.begin(), tight.end(), "direct(4,-3)"), tight.end());
    auto far = membership(CQ(Rational(-1), q(1, 8)));
    EXPECT_EQ(far.verdict, Membership::outside);
    EXPECT_THROW(membership(CQ(1)), std::domain_error);
}

TEST(Region, FloatBandIsIndeterminate) {
    CF w(93.0 / 128, std::sqrt(55.0) / 128);
    EXPECT_EQ(membership(w, 1e-9).verdict, Membership::indeterminate);
    EXPECT_EQ(membership(CF(0, 2), 1e-9).verdict, Membership::inside);
}

TEST(Region, ReflectionAndInversionSymmetry) {
    std::mt19937 g(31);
    std::uniform_int_distribution<int> x(-45, 45), y(1, 45);
    for (int k = 0; k < 400; ++k) {
        CQ t(q(x(g), 10), q(y(g), 10));
        auto m = membership(t).verdict;
        EXPECT_EQ(membership(CQ(-t.re, t.im)).verdict, m);
        // tau -> -1/tau maps direct constraints to inverted ones
        CQ inv = CQ(-1) / t;
        EXPECT_EQ(membership(inv).verdict, m);
        if (m == Membership::inside) {
            EXPECT_GE(t.norm2(), q(1, 16));
            EXPECT_LE(t.norm2(), Rational(16));
        }
    }
    // the inverted constraint of (m, n) is the direct one of (m, -n)... evaluated at -1/tau
    for (const auto& c : reduced_constraints()) {
        RegionConstraint other(c.kind == ConstraintKind::direct ? ConstraintKind::inverted : ConstraintKind::direct, c.m, c.n);
        auto cs = reduced_constraints();
        EXPECT_NE(std::find(cs.begin(), cs.end(), other), cs.end());
    }
}

TEST(Region, ReductionSmallRuns) {
    EXPECT_TRUE(verify_reduction(60, 5));
    EXPECT_TRUE(verify_reduction(40, 8));
    EXPECT_THROW(verify_reduction(10, 4), std::domain_error);
}

TEST(Region, BoundaryArcs) {
    auto arcs = boundary_arcs();
    ASSERT_EQ(arcs.size(), 26u);
    std::set<std::string> names;
    for (const auto& a : arcs) {
        names.insert(a.constraint.str());
        EXPECT_GT(a.start.point.y2.sign(), 0);
        EXPECT_GT(a.end.point.y2.sign(), 0);
        if (a.constraint.kind == ConstraintKind::direct && a.constraint.m != 0) {
            EXPECT_EQ(a.radius, q(1, 4 * std::abs(a.constraint.m)));
        }
        EXPECT_GE(a.start.through.size(), 2u);
        EXPECT_GE(a.end.through.size(), 2u);
    }
    EXPECT_EQ(names.size(), 26u);
    for (const auto& a : arcs) EXPECT_TRUE(names.count(a.constraint.reflected().str()) || a.constraint.n == 0);
    // inner and outer circles
    for (const auto& a : arcs) {
        if (a.constraint.m == 1 && a.constraint.n == 0) {
            EXPECT_EQ(a.radius, a.constraint.kind == ConstraintKind::direct ? q(1, 4) : Rational(4));
        }
    }
}

TEST(Region, ArgumentExtremes) {
    auto mn = min_argument();
    auto mx = max_argument();
    EXPECT_EQ(mn.witness.x, q(93, 128));
    EXPECT_EQ(mn.witness.y2, q(55, 16384));
    EXPECT_GT(mn.value, 0.079);
    EXPECT_NEAR(mn.value, std::atan(std::sqrt(55.0) / 93), 1e-15);
    EXPECT_NEAR(mx.value, std::numbers::pi - mn.value, 1e-12);
    // (3*93/128 - 2)^2 + 9*55/128^2 = 1/16 and the same for (4, -3)
    auto w = witness();
    for (auto [m, n] : {std::pair{3, -2}, {4, -3}}) {
        QuadExt re = QuadExt(Rational(m)) * w.re + QuadExt(Rational(n));
        QuadExt im = QuadExt(Rational(m)) * w.im;
        EXPECT_EQ(re * re + im * im, QuadExt(q(1, 16)));
    }
}

TEST(Region, SvgDeterministic) {
    std::string a = render_svg(400), b = render_svg(400);
    EXPECT_EQ(a, b);
    std::regex arc("class=\"constraint-arc\"");
    EXPECT_EQ(std::distance(std::sregex_iterator(a.begin(), a.end(), arc), std::sregex_iterator()), 26);
    EXPECT_NE(a.find("class=\"witness\""), std::string::npos);
    EXPECT_NE(a.find("class=\"unit-circle\""), std::string::npos);
    EXPECT_NE(a.find("class=\"imaginary-axis\""), std::string::npos);
    EXPECT_THROW(render_svg(99), std::domain_error);
}
