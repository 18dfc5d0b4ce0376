#pragma once
// PSL(2,C) elements and geodesic planes of upper half-space, the latter stored by
// their ideal boundary circle as a Hermitian form.

#include "tps/scalars.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <set>
#include <vector>

namespace tps {

template <class F>
class Moebius {
public:
    using C = Complex<F>;

    Moebius(C a, C b, C c, C d, double tol = kDefaultTol) : m_{std::move(a), std::move(b), std::move(c), std::move(d)} {
        C det = m_[0] * m_[3] - m_[1] * m_[2];
        if (!near(det, C(1), tol)) throw std::domain_error("moebius: determinant must be 1, got " + det.str());
    }
    static Moebius identity() { return Moebius(C(1), C(0), C(0), C(1)); }

    const C& a() const { return m_[0]; }
    const C& b() const { return m_[1]; }
    const C& c() const { return m_[2]; }
    const C& d() const { return m_[3]; }
    C trace() const { return m_[0] + m_[3]; }

    Moebius inverse() const { return raw(m_[3], -m_[1], -m_[2], m_[0]); }
    friend Moebius operator*(const Moebius& x, const Moebius& y) {
        return raw(x.a() * y.a() + x.b() * y.c(), x.a() * y.b() + x.b() * y.d(),
                   x.c() * y.a() + x.d() * y.c(), x.c() * y.b() + x.d() * y.d());
    }

    // Sign representative: first nonzero entry has Re > 0, or Re = 0 and Im > 0.
    Moebius canonical(double tol = kDefaultTol) const {
        for (const C& e : m_) {
            int s = sgn(e.re, tol);
            if (s == 0) s = sgn(e.im, tol);
            if (s == 0) continue;
            return s > 0 ? *this : raw(-m_[0], -m_[1], -m_[2], -m_[3]);
        }
        return *this;
    }
    bool equals(const Moebius& o, double tol = kDefaultTol) const {
        Moebius x = canonical(tol), y = o.canonical(tol);
        for (int k = 0; k < 4; ++k)
            if (!near(x.m_[k], y.m_[k], tol)) return false;
        return true;
    }
    friend bool operator==(const Moebius& x, const Moebius& y) { return x.equals(y); }

    bool is_identity(double tol = kDefaultTol) const {
        return m_[1].is_zero(tol) && m_[2].is_zero(tol) && near(m_[0], m_[3], tol) &&
               (near(m_[0], C(1), tol) || near(m_[0], C(-1), tol));
    }

    std::string str() const {
        return "[[" + m_[0].str() + ", " + m_[1].str() + "], [" + m_[2].str() + ", " + m_[3].str() + "]]";
    }

private:
    struct NoCheck {};
    Moebius(NoCheck, C a, C b, C c, C d) : m_{std::move(a), std::move(b), std::move(c), std::move(d)} {}
    static Moebius raw(C a, C b, C c, C d) { return Moebius(NoCheck{}, std::move(a), std::move(b), std::move(c), std::move(d)); }

    std::array<C, 4> m_;
};

enum class ElementClass { identity, parabolic, elliptic, loxodromic };

inline const char* to_string(ElementClass k) {
    switch (k) {
        case ElementClass::identity: return "identity";
        case ElementClass::parabolic: return "parabolic";
        case ElementClass::elliptic: return "elliptic";
        case ElementClass::loxodromic: return "loxodromic";
    }
    return "?";
}

template <class F>
ElementClass classify_element(const Moebius<F>& g, double tol = kDefaultTol) {
    if (g.is_identity(tol)) return ElementClass::identity;
    Complex<F> t = g.trace();
    Complex<F> t2 = t * t;
    if (near(t2, Complex<F>(4), tol)) return ElementClass::parabolic;
    if (sgn(t2.im, tol) == 0 && sgn(t2.re, tol) >= 0 && sgn(F(t2.re - F(4)), tol) < 0) return ElementClass::elliptic;
    return ElementClass::loxodromic;
}

// A point of C u {inf}.
template <class F>
struct IdealPoint {
    bool inf = false;
    Complex<F> z{};

    static IdealPoint infinity() { return {true, {}}; }
    IdealPoint() = default;
    IdealPoint(bool i, Complex<F> w) : inf(i), z(std::move(w)) {}
    IdealPoint(Complex<F> w) : inf(false), z(std::move(w)) {}

    bool equals(const IdealPoint& o, double tol = kDefaultTol) const {
        if (inf || o.inf) return inf == o.inf;
        return near(z, o.z, tol);
    }
    std::string str() const { return inf ? "inf" : z.str(); }
};

template <class F>
IdealPoint<F> apply(const Moebius<F>& g, const IdealPoint<F>& p, double tol = kDefaultTol) {
    using C = Complex<F>;
    if (p.inf) {
        if (g.c().is_zero(tol)) return IdealPoint<F>::infinity();
        return IdealPoint<F>(g.a() / g.c());
    }
    C den = g.c() * p.z + g.d();
    if (den.is_zero(tol)) return IdealPoint<F>::infinity();
    return IdealPoint<F>((g.a() * p.z + g.b()) / den);
}

// Boundary of a geodesic plane: the zero set of A|z|^2 + B z + conj(B z) + C with
// A, C real. A = 0 is a line (the plane is vertical), otherwise a circle.
template <class F>
struct GeodesicPlane {
    F A{}, C{};
    Complex<F> B{};

    bool is_line(double tol = kDefaultTol) const { return sgn(A, tol) == 0; }
    // |B|^2 - AC; positive for a genuine circle or line.
    F disc() const { return B.norm2() - A * C; }
    F eval(const Complex<F>& z) const { return A * z.norm2() + F(2) * (B * z).re + C; }
    bool contains(const IdealPoint<F>& p, double tol = kDefaultTol) const {
        if (p.inf) return sgn(A, tol) == 0;
        return sgn(eval(p.z), tol) == 0;
    }

    static GeodesicPlane line(const Complex<F>& point, const Complex<F>& dir) {
        if (dir.is_zero(0.0)) throw std::domain_error("plane: zero direction");
        // normal n = i*dir; Re(conj(n)(z - p)) = 0, i.e. 2Re(B z) + C = 0 with B = conj(n)/2
        Complex<F> n = Complex<F>::i() * dir;
        GeodesicPlane P;
        P.A = F(0);
        P.B = Complex<F>(n.re / F(2), -n.im / F(2));
        P.C = -F(2) * (P.B * point).re;
        return P;
    }
    static GeodesicPlane circle(const Complex<F>& center, const F& radius_sq) {
        if (sgn(radius_sq, 0.0) <= 0) throw std::domain_error("plane: radius must be positive");
        GeodesicPlane P;
        P.A = F(1);
        P.B = -center.conj();
        P.C = center.norm2() - radius_sq;
        return P;
    }

    Complex<F> center() const { return -B.conj() / Complex<F>(A); }
    F radius_sq() const { return disc() / (A * A); }

    // Same circle up to a real scale factor.
    bool equals(const GeodesicPlane& o, double tol = kDefaultTol) const {
        std::array<F, 4> u{A, B.re, B.im, C}, v{o.A, o.B.re, o.B.im, o.C};
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j)
                if (sgn(F(u[i] * v[j] - u[j] * v[i]), tol) != 0) return false;
        return true;
    }

    std::string str() const {
        if (is_line()) return "line{" + to_cf(B).str() + "," + std::to_string(to_double(C)) + "}";
        return "circle{" + center().str() + ",r2=" + std::to_string(to_double(radius_sq())) + "}";
    }
};

// Image of the plane under g: the form transforms as g^{-*} H g^{-1}.
template <class F>
GeodesicPlane<F> apply(const Moebius<F>& g, const GeodesicPlane<F>& P) {
    using C = Complex<F>;
    Moebius<F> h = g.inverse();
    // H = [[A, conj(B)], [B, C]] in the basis (z, 1): v* H v = A|z|^2 + conj(B)conj(z) + B z + C
    C h00(P.A), h01 = P.B.conj(), h10 = P.B, h11(P.C);
    // K = h* H h
    C t00 = h00 * h.a() + h01 * h.c(), t01 = h00 * h.b() + h01 * h.d();
    C t10 = h10 * h.a() + h11 * h.c(), t11 = h10 * h.b() + h11 * h.d();
    C k00 = h.a().conj() * t00 + h.c().conj() * t10;
    C k10 = h.b().conj() * t00 + h.d().conj() * t10;
    C k11 = h.b().conj() * t01 + h.d().conj() * t11;
    GeodesicPlane<F> Q;
    Q.A = k00.re;
    Q.B = k10;
    Q.C = k11.re;
    return Q;
}

template <class F>
GeodesicPlane<F> plane_through(const IdealPoint<F>& p, const IdealPoint<F>& q, const IdealPoint<F>& r,
                               double tol = kDefaultTol) {
    if (p.equals(q, tol) || p.equals(r, tol) || q.equals(r, tol))
        throw std::domain_error("plane_through: coincident points");
    // Rows [|z|^2, 2x, -2y, 1] (or [1,0,0,0] at infinity); unknowns (A, Re B, Im B, C).
    auto row = [](const IdealPoint<F>& t) -> std::array<F, 4> {
        if (t.inf) return {F(1), F(0), F(0), F(0)};
        return {t.z.norm2(), F(2) * t.z.re, -F(2) * t.z.im, F(1)};
    };
    std::array<std::array<F, 4>, 3> M{row(p), row(q), row(r)};
    auto minor = [&](int skip) {
        std::array<int, 3> c{};
        for (int k = 0, j = 0; k < 4; ++k)
            if (k != skip) c[j++] = k;
        return M[0][c[0]] * (M[1][c[1]] * M[2][c[2]] - M[1][c[2]] * M[2][c[1]]) -
               M[0][c[1]] * (M[1][c[0]] * M[2][c[2]] - M[1][c[2]] * M[2][c[0]]) +
               M[0][c[2]] * (M[1][c[0]] * M[2][c[1]] - M[1][c[1]] * M[2][c[0]]);
    };
    GeodesicPlane<F> P;
    P.A = minor(0);
    P.B = Complex<F>(-minor(1), minor(2));
    P.C = -minor(3);
    if (sgn(P.disc(), tol) <= 0) throw std::domain_error("plane_through: degenerate points");
    return P;
}

enum class RelationKind { disjoint, ideal_tangent, intersect };

inline const char* to_string(RelationKind k) {
    switch (k) {
        case RelationKind::disjoint: return "disjoint";
        case RelationKind::ideal_tangent: return "ideal-tangent";
        case RelationKind::intersect: return "intersect";
    }
    return "?";
}

template <class F>
struct PlaneRelation {
    RelationKind kind;
    // I^2 for the inversive distance I; for intersecting planes cos^2 of the angle.
    F inversive_sq;
    // Angle in [0, pi/2] for intersecting planes; 0 otherwise.
    double angle = 0.0;
    // Exact test cos(angle) = 0.
    bool orthogonal = false;
    // Planes meeting only at infinity or tangent at an ideal point do not meet in H^3.
    bool meets_in_h3() const { return kind == RelationKind::intersect; }
};

template <class F>
F pairing(const GeodesicPlane<F>& P, const GeodesicPlane<F>& Q) {
    return (P.B * Q.B.conj()).re - (P.A * Q.C + Q.A * P.C) / F(2);
}

// Parallel boundary lines count as tangent at infinity, like any pair of tangent circles.
template <class F>
PlaneRelation<F> planes_relation(const GeodesicPlane<F>& P, const GeodesicPlane<F>& Q, double tol = kDefaultTol) {
    if (P.equals(Q, tol)) throw std::domain_error("planes_relation: planes are equal");
    F pq = pairing(P, Q);
    F dd = P.disc() * Q.disc();
    F isq = pq * pq / dd;
    int s = sgn(F(pq * pq - dd), tol);
    PlaneRelation<F> r{RelationKind::intersect, isq};
    if (s > 0) r.kind = RelationKind::disjoint;
    else if (s == 0) r.kind = RelationKind::ideal_tangent;
    else {
        r.orthogonal = sgn(pq, tol) == 0;
        r.angle = r.orthogonal ? std::numbers::pi / 2 : std::acos(std::min(1.0, std::sqrt(to_double(isq))));
    }
    return r;
}

// Ideal points common to both boundaries. Exact backends need the intersection to be
// defined over F; otherwise throws.
template <class F>
std::vector<IdealPoint<F>> common_points(const GeodesicPlane<F>& P, const GeodesicPlane<F>& Q, double tol = kDefaultTol) {
    using C = Complex<F>;
    std::vector<IdealPoint<F>> out;
    bool lp = P.is_line(tol), lq = Q.is_line(tol);
    if (lp && lq) out.push_back(IdealPoint<F>::infinity());
    // radical axis: a line, or the single line when one is already a line
    GeodesicPlane<F> L, K;
    if (lp && lq) {
        F cr = P.B.re * Q.B.im - P.B.im * Q.B.re;
        if (sgn(cr, tol) == 0) return out;  // parallel
        // solve 2Re(B z) + C = 0 for both: Re(Bz) = Br x - Bi y
        F x = (-P.C / F(2) * -Q.B.im - -Q.C / F(2) * -P.B.im) / (P.B.re * -Q.B.im - -P.B.im * Q.B.re);
        F y = (P.B.re * -Q.C / F(2) - Q.B.re * -P.C / F(2)) / (P.B.re * -Q.B.im - -P.B.im * Q.B.re);
        out.emplace_back(C(x, y));
        return out;
    }
    if (lp) { L = P; K = Q; }
    else if (lq) { L = Q; K = P; }
    else {
        L.A = F(0);
        L.B = P.B * C(Q.A) - Q.B * C(P.A);
        L.C = P.C * Q.A - Q.C * P.A;
        K = P;
        if (L.B.is_zero(tol)) return out;  // concentric
    }
    // points of L: z = p0 + t * d with d = i conj(B), p0 = -C conj(B) / (2|B|^2)
    F bb = L.B.norm2();
    C d = C::i() * L.B.conj();
    C p0 = L.B.conj() * C(-L.C / (F(2) * bb));
    // K(p0 + t d) = K.A|d|^2 t^2 + (2 K.A Re(p0 conj d) + 2 Re(K.B d)) t + K(p0)
    F qa = K.A * d.norm2();
    F qb = F(2) * K.A * (p0 * d.conj()).re + F(2) * (K.B * d).re;
    F qc = K.eval(p0);
    F disc = qb * qb - F(4) * qa * qc;
    int s = sgn(disc, tol);
    if (s < 0) return out;
    if (s == 0) {
        F t = -qb / (F(2) * qa);
        out.emplace_back(p0 + d * C(t));
        return out;
    }
    auto root = try_sqrt(disc);
    if (!root) throw std::domain_error("common_points: intersection not defined over the scalar field");
    for (int sign : {-1, 1}) {
        F t = (-qb + F(sign) * *root) / (F(2) * qa);
        out.emplace_back(p0 + d * C(t));
    }
    return out;
}

template <class F>
struct OctahedronCheck {
    bool ok = false;
    std::vector<IdealPoint<F>> vertices;
    double dihedral = 0.0;
    std::string reason;
};

// Checks that 8 planes are the face planes of a regular ideal octahedron: 6 vertices in
// 3 antipodal pairs, faces are the 8 transversals, adjacent faces meet at right angles,
// faces sharing one vertex are tangent there, opposite faces are disjoint.
template <class F>
OctahedronCheck<F> verify_octahedron(const std::vector<GeodesicPlane<F>>& planes, double tol = kDefaultTol) {
    if (planes.size() != 8) throw std::domain_error("verify_octahedron: degenerate plane set (need 8 planes)");
    for (std::size_t i = 0; i < 8; ++i)
        for (std::size_t j = i + 1; j < 8; ++j)
            if (planes[i].equals(planes[j], tol)) throw std::domain_error("verify_octahedron: repeated plane");

    OctahedronCheck<F> res;
    auto add_vertex = [&](const IdealPoint<F>& p) {
        for (const auto& v : res.vertices)
            if (v.equals(p, tol)) return;
        res.vertices.push_back(p);
    };
    std::vector<std::vector<PlaneRelation<F>>> rel(8);
    bool undefined = false;
    for (std::size_t i = 0; i < 8; ++i) {
        for (std::size_t j = 0; j < 8; ++j) {
            if (i == j) { rel[i].push_back({RelationKind::intersect, F(0)}); continue; }
            rel[i].push_back(planes_relation(planes[i], planes[j], tol));
            if (j > i && rel[i][j].kind != RelationKind::disjoint) {
                try {
                    for (const auto& p : common_points(planes[i], planes[j], tol)) add_vertex(p);
                } catch (const std::domain_error&) {
                    undefined = true;
                }
            }
        }
    }
    if (res.vertices.size() < 6 && !undefined)
        throw std::domain_error("verify_octahedron: degenerate plane set (fewer than 6 vertices)");
    auto fail = [&](std::string why) { res.ok = false; res.reason = std::move(why); return res; };
    for (int i = 0; i < 8; ++i)
        for (int j = i + 1; j < 8; ++j)
            if (rel[i][j].kind == RelationKind::intersect && !rel[i][j].orthogonal)
                return fail("planes " + std::to_string(i) + " and " + std::to_string(j) + " meet at a non-right angle");
    if (undefined) return fail("an intersection point is not defined over the scalar field");
    if (res.vertices.size() != 6) return fail("expected 6 ideal vertices, found " + std::to_string(res.vertices.size()));

    std::vector<std::set<int>> face(8);
    for (int i = 0; i < 8; ++i) {
        for (int v = 0; v < 6; ++v)
            if (planes[i].contains(res.vertices[v], tol)) face[i].insert(v);
        if (face[i].size() != 3) return fail("plane " + std::to_string(i) + " does not carry exactly 3 vertices");
    }
    std::array<int, 6> antipode{};
    for (int v = 0; v < 6; ++v) {
        int count = 0;
        for (int u = 0; u < 6; ++u) {
            if (u == v) continue;
            bool shared = false;
            for (const auto& f : face) shared |= f.count(u) && f.count(v);
            if (!shared) { antipode[v] = u; ++count; }
        }
        if (count != 1) return fail("vertex link is not a square");
    }
    std::set<std::set<int>> faces(face.begin(), face.end());
    if (faces.size() != 8) return fail("repeated vertex triple");
    for (const auto& f : face)
        for (int v : f)
            if (f.count(antipode[v])) return fail("face contains an antipodal pair");

    for (int i = 0; i < 8; ++i) {
        for (int j = i + 1; j < 8; ++j) {
            std::size_t shared = 0;
            for (int v : face[i]) shared += face[j].count(v);
            const auto& r = rel[i][j];
            if (shared == 2 && !(r.kind == RelationKind::intersect && r.orthogonal))
                return fail("adjacent faces not orthogonal");
            if (shared == 1 && r.kind != RelationKind::ideal_tangent) return fail("faces sharing a vertex not tangent");
            if (shared == 0 && r.kind != RelationKind::disjoint) return fail("opposite faces not disjoint");
        }
    }
    res.ok = true;
    res.dihedral = std::numbers::pi / 2;
    return res;
}

// The lifted face planes around the cusp for modulus parameter a (a = 1 gives the
// regular octahedron). Order: Im=0, Im=a, circle(ai/2), circle(1+ai/2),
// Re=0, Re=1, circle(1/2), circle(1/2+ai).
template <class F>
std::vector<GeodesicPlane<F>> octahedron_lift_planes(const F& a) {
    using C = Complex<F>;
    using P = GeodesicPlane<F>;
    F half = F(1) / F(2);
    return {
        P::line(C(0), C(1)),
        P::line(C(F(0), a), C(1)),
        P::circle(C(F(0), a * half), a * a * half * half),
        P::circle(C(F(1), a * half), a * a * half * half),
        P::line(C(0), C::i()),
        P::line(C(1), C::i()),
        P::circle(C(half), half * half),
        P::circle(C(half, a), half * half),
    };
}

}  // namespace tps
