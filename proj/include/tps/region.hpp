#pragma once
// Feasible region for the cusp modulus: |m tau + n| >= 1/4 and |m/tau + n| >= 1/4.
// Every constraint is a circle with real center, written as the form
//   q(tau) = A|tau|^2 + 2 B Re(tau) + C >= 0
// with A, B, C rational (inverted constraints are multiplied through by |tau|^2).

#include "tps/scalars.hpp"

#include <algorithm>
#include <cstdio>
#include <mutex>
#include <thread>
#include <vector>

namespace tps {

enum class ConstraintKind { direct, inverted };

inline const char* to_string(ConstraintKind k) { return k == ConstraintKind::direct ? "direct" : "inverted"; }

struct RegionConstraint {
    ConstraintKind kind = ConstraintKind::direct;
    long m = 0, n = 0;

    RegionConstraint() = default;
    RegionConstraint(ConstraintKind k, long m_, long n_) : kind(k), m(m_), n(n_) {
        if (m == 0 && n == 0) throw std::domain_error("region constraint: (m, n) = (0, 0)");
    }

    Rational A() const {
        return kind == ConstraintKind::direct ? Rational(m * m) : Rational(n * n) - Rational(1, 16);
    }
    Rational B() const { return Rational(m * n); }
    Rational C() const {
        return kind == ConstraintKind::direct ? Rational(n * n) - Rational(1, 16) : Rational(m * m);
    }
    // Circle q = 0 (A != 0 always holds except for trivial constraints with m = 0).
    Rational center() const { return -B() / A(); }
    Rational radius_sq() const { return (B() * B() - A() * C()) / (A() * A()); }

    template <class F>
    F eval(const F& x, const F& y) const {
        if constexpr (std::is_same_v<F, double>) return eval_double(x, y);
        else return F(A()) * (x * x + y * y) + F(2) * F(B()) * x + F(C());
    }
    double eval_double(double x, double y) const {
        double a = kind == ConstraintKind::direct ? double(m) * m : double(n) * n - 1.0 / 16;
        double c = kind == ConstraintKind::direct ? double(n) * n - 1.0 / 16 : double(m) * m;
        return a * (x * x + y * y) + 2.0 * double(m) * n * x + c;
    }
    // Reflection tau -> -conj(tau) sends (m, n) to (m, -n).
    RegionConstraint reflected() const { return {kind, m, -n}; }

    std::string str() const { return std::string(to_string(kind)) + "(" + std::to_string(m) + "," + std::to_string(n) + ")"; }
    friend bool operator==(const RegionConstraint& a, const RegionConstraint& b) {
        return a.kind == b.kind && a.m == b.m && a.n == b.n;
    }
};

inline std::vector<RegionConstraint> reduced_constraints() {
    static const long pairs[13][2] = {{1, 0}, {4, 1}, {4, -1}, {3, 1}, {3, -1}, {2, 1}, {2, -1},
                                      {3, 2}, {3, -2}, {4, 3}, {4, -3}, {1, 1}, {1, -1}};
    std::vector<RegionConstraint> out;
    for (auto kind : {ConstraintKind::direct, ConstraintKind::inverted})
        for (const auto& p : pairs) out.emplace_back(kind, p[0], p[1]);
    return out;
}

enum class Membership { inside, boundary, outside, indeterminate };

inline const char* to_string(Membership m) {
    switch (m) {
        case Membership::inside: return "inside";
        case Membership::boundary: return "boundary";
        case Membership::outside: return "outside";
        case Membership::indeterminate: return "indeterminate";
    }
    return "?";
}

struct MembershipResult {
    Membership verdict = Membership::inside;
    std::vector<RegionConstraint> violated;
    // Constraints holding with equality (exact) or inside the tolerance band (float).
    std::vector<RegionConstraint> tight;
};

// Exact backends decide the boundary; the float backend reports a band of width tol as
// indeterminate instead.
template <class F>
MembershipResult membership(const Complex<F>& tau, double tol = kDefaultTol) {
    if (sgn(tau.im, 0.0) <= 0) throw std::domain_error("membership: Im(tau) must be positive");
    MembershipResult r;
    for (const auto& c : reduced_constraints()) {
        int s = sgn(c.eval(tau.re, tau.im), tol);
        if (s < 0) r.violated.push_back(c);
        else if (s == 0) r.tight.push_back(c);
    }
    if (!r.violated.empty()) r.verdict = Membership::outside;
    else if (!r.tight.empty()) r.verdict = is_exact_v<F> ? Membership::boundary : Membership::indeterminate;
    return r;
}

struct ReductionReport {
    bool ok = true;
    long points = 0;
    long feasible = 0;
    long exact_fallbacks = 0;
    // first counterexample in grid order
    long i = -1, j = -1;
    RegionConstraint witness;
};

namespace detail {

// Sign of the constraint at the exact grid point when the float value is within the band.
inline int grid_sign(const RegionConstraint& c, double x, double y, const Rational& xq, const Rational& yq, long& fallbacks) {
    double v = c.eval_double(x, y);
    double scale = 1.0 + std::abs(c.eval_double(0, 0)) + (double(c.m) * c.m + double(c.n) * c.n) * (x * x + y * y + 1);
    if (std::abs(v) > 1e-12 * scale) return v > 0 ? 1 : -1;
    ++fallbacks;
    return c.eval(xq, yq).sign();
}

}  // namespace detail

// Grid of density x density points, x_i = -4.5 + 9 i/(density-1), y_j = 4.5 (j+1)/density.
// At every point satisfying the reduced set, checks all constraints with |m|, |n| <= mn_bound.
inline ReductionReport verify_reduction_report(long density, long mn_bound, unsigned threads = 0) {
    if (mn_bound < 5) throw std::domain_error("verify_reduction: mn_bound must be >= 5");
    if (density < 2) throw std::domain_error("verify_reduction: density must be >= 2");
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    const auto reduced = reduced_constraints();
    std::vector<RegionConstraint> full;
    full.reserve(2 * (2 * mn_bound + 1) * (2 * mn_bound + 1));
    for (auto kind : {ConstraintKind::direct, ConstraintKind::inverted})
        for (long m = -mn_bound; m <= mn_bound; ++m)
            for (long n = -mn_bound; n <= mn_bound; ++n)
                if (m != 0 || n != 0) full.emplace_back(kind, m, n);

    std::vector<ReductionReport> rows(density);
    auto work = [&](long i) {
        ReductionReport& r = rows[i];
        Rational xq = Rational(-9, 2) + Rational(9 * i, density - 1);
        double x = xq.to_double();
        for (long j = 0; j < density; ++j) {
            Rational yq = Rational(9 * (j + 1), 2 * density);
            double y = yq.to_double();
            ++r.points;
            bool feasible = true;
            for (const auto& c : reduced)
                if (detail::grid_sign(c, x, y, xq, yq, r.exact_fallbacks) < 0) { feasible = false; break; }
            if (!feasible) continue;
            ++r.feasible;
            for (const auto& c : full) {
                if (detail::grid_sign(c, x, y, xq, yq, r.exact_fallbacks) < 0) {
                    if (r.ok) { r.ok = false; r.i = i; r.j = j; r.witness = c; }
                    break;
                }
            }
        }
    };
    std::vector<std::thread> pool;
    std::mutex mu;
    long next = 0;
    for (unsigned t = 0; t < threads; ++t)
        pool.emplace_back([&] {
            for (;;) {
                long i;
                {
                    std::lock_guard<std::mutex> lock(mu);
                    if (next >= density) return;
                    i = next++;
                }
                work(i);
            }
        });
    for (auto& th : pool) th.join();

    ReductionReport total;
    for (const auto& r : rows) {
        total.points += r.points;
        total.feasible += r.feasible;
        total.exact_fallbacks += r.exact_fallbacks;
        if (!r.ok && total.ok) {
            total.ok = false;
            total.i = r.i;
            total.j = r.j;
            total.witness = r.witness;
        }
    }
    return total;
}

inline bool verify_reduction(long density, long mn_bound) { return verify_reduction_report(density, mn_bound).ok; }

// A point of the upper half-plane with rational real part and y = sqrt(y2).
struct ArcPoint {
    Rational x, y2;
    CQuad exact() const {
        auto [f, s] = squarefree_split(y2.num() * y2.den());
        Rational coef = Rational(s, y2.den());
        if (f == 1) return {QuadExt(x), QuadExt(coef)};
        return {QuadExt(x), QuadExt(Rational(0), coef, f)};
    }
    double xd() const { return x.to_double(); }
    double yd() const { return std::sqrt(y2.to_double()); }
    friend bool operator==(const ArcPoint& a, const ArcPoint& b) { return a.x == b.x && a.y2 == b.y2; }
};

struct ArcEndpoint {
    ArcPoint point;
    // indices into reduced_constraints() of every circle through the point
    std::vector<int> through;
};

struct BoundaryArc {
    RegionConstraint constraint;
    int index = 0;
    Rational center, radius;
    // start has the larger real part (smaller angle about the center)
    ArcEndpoint start, end;
    double angle_start = 0, angle_end = 0;
};

namespace detail {

inline std::vector<ArcPoint> circle_crossings(const RegionConstraint& a, const RegionConstraint& b) {
    Rational c1 = a.center(), c2 = b.center(), r1 = a.radius_sq(), r2 = b.radius_sq();
    if (c1 == c2) return {};
    Rational x = (r1 - r2 + c2 * c2 - c1 * c1) / (Rational(2) * (c2 - c1));
    Rational y2 = r1 - (x - c1) * (x - c1);
    if (y2.sign() <= 0) return {};
    return {ArcPoint{x, y2}};
}

inline bool feasible_exact(const std::vector<RegionConstraint>& cs, const Rational& x, const Rational& y2) {
    for (const auto& c : cs)
        if ((c.A() * (x * x + y2) + Rational(2) * c.B() * x + c.C()).sign() < 0) return false;
    return true;
}

inline bool on_circle(const RegionConstraint& c, const ArcPoint& p) {
    return (c.A() * (p.x * p.x + p.y2) + Rational(2) * c.B() * p.x + c.C()).is_zero();
}

}  // namespace detail

// Each reduced constraint circle is cut at its crossings with the others; a sub-arc is
// kept when an exact rational point strictly inside it satisfies every constraint.
// Adjacent kept sub-arcs are merged.
inline std::vector<BoundaryArc> boundary_arcs() {
    const auto cs = reduced_constraints();
    const int N = static_cast<int>(cs.size());
    std::vector<BoundaryArc> arcs;
    for (int i = 0; i < N; ++i) {
        Rational c = cs[i].center();
        Rational r2 = cs[i].radius_sq();
        auto r = exact_sqrt(r2);
        if (!r) throw std::logic_error("boundary_arcs: irrational radius");
        // breakpoints ordered by decreasing x, i.e. increasing angle in (0, pi)
        std::vector<ArcPoint> br;
        for (int j = 0; j < N; ++j) {
            if (j == i) continue;
            for (const auto& p : detail::circle_crossings(cs[i], cs[j]))
                if (std::find(br.begin(), br.end(), p) == br.end()) br.push_back(p);
        }
        std::sort(br.begin(), br.end(), [](const ArcPoint& a, const ArcPoint& b) { return a.x > b.x; });
        // angles of the cuts, including the two feet on the real axis
        std::vector<double> phi{0.0};
        for (const auto& p : br) phi.push_back(std::acos(std::clamp(((p.x - c) / *r).to_double(), -1.0, 1.0)));
        phi.push_back(std::numbers::pi);

        std::vector<bool> keep(br.size() + 1);
        for (std::size_t k = 0; k + 1 < phi.size(); ++k) {
            // rational point via t = tan(phi/2): c + r((1-t^2)/(1+t^2), 2t/(1+t^2))
            Rational t = rational_from_double(std::tan(0.25 * (phi[k] + phi[k + 1])));
            Rational den = Rational(1) + t * t;
            Rational x = c + *r * (Rational(1) - t * t) / den;
            Rational y = *r * Rational(2) * t / den;
            keep[k] = detail::feasible_exact(cs, x, y * y);
        }
        for (std::size_t k = 0; k < keep.size(); ++k) {
            if (!keep[k] || (k > 0 && keep[k - 1])) continue;
            std::size_t e = k;
            while (e + 1 < keep.size() && keep[e + 1]) ++e;
            if (k == 0 || e + 1 == keep.size()) throw std::logic_error("boundary_arcs: arc reaches the real axis");
            BoundaryArc a;
            a.constraint = cs[i];
            a.index = i;
            a.center = c;
            a.radius = *r;
            a.start.point = br[k - 1];
            a.end.point = br[e];
            a.angle_start = phi[k];
            a.angle_end = phi[e + 1];
            for (int j = 0; j < N; ++j) {
                if (detail::on_circle(cs[j], a.start.point)) a.start.through.push_back(j);
                if (detail::on_circle(cs[j], a.end.point)) a.end.through.push_back(j);
            }
            arcs.push_back(std::move(a));
        }
    }
    return arcs;
}

struct ArgumentExtreme {
    double value = 0;
    ArcPoint witness;
    // constraints meeting at the witness
    std::vector<RegionConstraint> through;
};

namespace detail {

inline double arg_of(const ArcPoint& p) { return std::atan2(p.yd(), p.xd()); }

// Candidates for the extreme argument along an arc: its endpoints and, if interior to
// the arc, the point where a ray from 0 is tangent to the circle.
inline std::vector<ArcPoint> arg_candidates(const BoundaryArc& a) {
    std::vector<ArcPoint> out{a.start.point, a.end.point};
    const Rational& c = a.center;
    Rational r2 = a.radius * a.radius;
    if (!c.is_zero() && r2 < c * c) {
        Rational t2 = c * c - r2;  // |tangent point|^2
        Rational x = t2 / c;
        Rational y2 = t2 - x * x;
        if (y2.sign() > 0 && a.end.point.x <= x && x <= a.start.point.x) out.push_back({x, y2});
    }
    return out;
}

template <class Better>
ArgumentExtreme arg_extreme(Better better) {
    auto arcs = boundary_arcs();
    auto cs = reduced_constraints();
    ArgumentExtreme best;
    bool have = false;
    for (const auto& a : arcs)
        for (const auto& p : arg_candidates(a)) {
            double v = arg_of(p);
            if (!have || better(v, best.value)) { best.value = v; best.witness = p; have = true; }
        }
    for (const auto& c : cs)
        if (on_circle(c, best.witness)) best.through.push_back(c);
    return best;
}

}  // namespace detail

inline ArgumentExtreme min_argument() {
    return detail::arg_extreme([](double a, double b) { return a < b; });
}
inline ArgumentExtreme max_argument() {
    return detail::arg_extreme([](double a, double b) { return a > b; });
}

// Plot of the boundary in the window [-4.5, 4.5] x [0, 4.5]; resolution is the width in
// pixels. Output depends only on resolution.
inline std::string render_svg(int resolution) {
    if (resolution < 100) throw std::domain_error("render_svg: resolution must be >= 100");
    const double W = resolution, H = resolution / 2.0, s = resolution / 9.0;
    auto px = [&](double x) { return (x + 4.5) * s; };
    auto py = [&](double y) { return (4.5 - y) * s; };
    char buf[512];
    std::string out;
    auto emit = [&](const char* fmt, auto... args) {
        std::snprintf(buf, sizeof buf, fmt, args...);
        out += buf;
    };
    out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    emit("<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"%d\" height=\"%d\" viewBox=\"0 0 %.6f %.6f\">\n",
         resolution, resolution / 2, W, H);
    emit("<rect x=\"0\" y=\"0\" width=\"%.6f\" height=\"%.6f\" fill=\"white\"/>\n", W, H);
    emit("<line class=\"imaginary-axis\" x1=\"%.6f\" y1=\"%.6f\" x2=\"%.6f\" y2=\"%.6f\" stroke=\"gray\" stroke-dasharray=\"4 4\"/>\n",
         px(0), py(0), px(0), py(4.5));
    emit("<line class=\"real-axis\" x1=\"%.6f\" y1=\"%.6f\" x2=\"%.6f\" y2=\"%.6f\" stroke=\"gray\"/>\n", px(-4.5), py(0), px(4.5), py(0));
    emit("<path class=\"unit-circle\" d=\"M %.6f %.6f A %.6f %.6f 0 0 0 %.6f %.6f\" fill=\"none\" stroke=\"gray\" stroke-dasharray=\"2 3\"/>\n",
         px(1), py(0), s, s, px(-1), py(0));
    for (const auto& a : boundary_arcs()) {
        double r = a.radius.to_double() * s;
        emit("<path class=\"constraint-arc\" data-constraint=\"%s\" d=\"M %.6f %.6f A %.6f %.6f 0 0 0 %.6f %.6f\" fill=\"none\" stroke=\"black\"/>\n",
             a.constraint.str().c_str(), px(a.start.point.xd()), py(a.start.point.yd()), r, r, px(a.end.point.xd()),
             py(a.end.point.yd()));
    }
    auto w = min_argument().witness;
    emit("<circle class=\"witness\" cx=\"%.6f\" cy=\"%.6f\" r=\"3\" fill=\"red\"/>\n", px(w.xd()), py(w.yd()));
    out += "</svg>\n";
    return out;
}

}  // namespace tps
