#pragma once
// Holonomy of the two-pants subgroup: generators x, y, z, w and the trace
// conditions forcing c = 2, tau = tau' and, for the B-type neighbourhood, tau = 2i.

#include "tps/moebius.hpp"

#include <optional>
#include <vector>

namespace tps {

template <class F>
class CuspModulus {
public:
    explicit CuspModulus(Complex<F> tau, double tol = kDefaultTol) : tau_(std::move(tau)) {
        if (sgn(tau_.im, tol) <= 0) throw std::domain_error("cusp modulus: Im(tau) must be positive, got " + tau_.str());
    }
    const Complex<F>& value() const { return tau_; }

private:
    Complex<F> tau_;
};

template <class F>
struct HolonomyQuad {
    Moebius<F> x, y, z, w;
};

template <class F>
Moebius<F> upper_unipotent(const Complex<F>& t) { return Moebius<F>(Complex<F>(1), t, Complex<F>(0), Complex<F>(1)); }
template <class F>
Moebius<F> lower_unipotent(const Complex<F>& t) { return Moebius<F>(Complex<F>(1), Complex<F>(0), t, Complex<F>(1)); }

template <class F>
HolonomyQuad<F> build_generators(const CuspModulus<F>& tau, const CuspModulus<F>& tau_prime) {
    using C = Complex<F>;
    return {upper_unipotent(C(2)), lower_unipotent(C(2)), upper_unipotent(C(2) / tau.value()),
            lower_unipotent(C(2) * tau_prime.value())};
}

namespace detail {

// Square root in Q(i) when it exists there.
inline std::optional<CQ> gaussian_sqrt(const CQ& w) {
    auto r = exact_sqrt(w.norm2());
    if (!r) return std::nullopt;
    auto re = exact_sqrt((*r + w.re) / Rational(2));
    auto im = exact_sqrt((*r - w.re) / Rational(2));
    if (!re || !im) return std::nullopt;
    CQ s(*re, w.im.sign() < 0 ? -*im : *im);
    if (!(s * s == w)) return std::nullopt;
    return s;
}

// Roots in Q(i) of p0 + p1 s + p2 s^2 = 0 (p2 may vanish).
inline std::vector<CQ> gaussian_roots(const CQ& p0, const CQ& p1, const CQ& p2) {
    if (p2.is_zero()) {
        if (p1.is_zero()) return {};
        return {-p0 / p1};
    }
    auto sq = gaussian_sqrt(p1 * p1 - CQ(4) * p2 * p0);
    if (!sq) return {};
    std::vector<CQ> out{(-p1 + *sq) / (CQ(2) * p2)};
    if (!sq->is_zero()) out.push_back((-p1 - *sq) / (CQ(2) * p2));
    return out;
}

}  // namespace detail

// tr(x y^-1) for y = [[1,0],[c,1]].
inline CQ meridian_trace(const CQ& c) {
    Moebius<Rational> x = upper_unipotent(CQ(2));
    return (x * lower_unipotent(c).inverse()).trace();
}

// The trace of x y^-1 is affine in c; recover its coefficients from the matrices and
// solve tr = +-2 (parabolicity) for the nonzero real root.
inline Rational solve_meridian_normalization() {
    CQ t0 = meridian_trace(CQ(0));
    CQ t1 = meridian_trace(CQ(1)) - t0;
    if (!(meridian_trace(CQ(2)) == t0 + CQ(2) * t1)) throw std::logic_error("meridian trace is not affine in c");
    std::vector<Rational> roots;
    for (int target : {2, -2})
        for (const CQ& c : detail::gaussian_roots(t0 - CQ(target), t1, CQ(0)))
            if (c.im.is_zero() && !c.re.is_zero()) roots.push_back(c.re);
    if (roots.size() != 1) throw std::logic_error("meridian normalization: expected a unique nonzero root");
    return roots.front();
}

// tr(z w^-1) - 2, which equals -4 tau'/tau.
template <class F>
Complex<F> modulus_equality_residual(const CuspModulus<F>& tau, const CuspModulus<F>& tau_prime) {
    auto g = build_generators(tau, tau_prime);
    return (g.z * g.w.inverse()).trace() - Complex<F>(2);
}

template <class F>
bool modulus_parabolic(const CuspModulus<F>& tau, const CuspModulus<F>& tau_prime, double tol = kDefaultTol) {
    auto g = build_generators(tau, tau_prime);
    return classify_element(g.z * g.w.inverse(), tol) == ElementClass::parabolic;
}

// y z y^-1 z^-1 with z built from tau.
template <class F>
Moebius<F> b_type_commutator(const Complex<F>& tau) {
    Moebius<F> y = lower_unipotent(Complex<F>(2));
    Moebius<F> z = upper_unipotent(Complex<F>(2) / tau);
    return y * z * y.inverse() * z.inverse();
}

// Closed form [[1-4s, 8s^2], [-8s, 1+4s+16s^2]] with s = 1/tau.
template <class F>
std::array<Complex<F>, 4> b_type_commutator_formula(const Complex<F>& tau) {
    using C = Complex<F>;
    C s = C(1) / tau;
    return {C(1) - C(4) * s, C(8) * s * s, C(-8) * s, C(1) + C(4) * s + C(16) * s * s};
}

// The commutator trace is a quadratic in s = 1/tau. Interpolate it from the matrices,
// solve trace = +-2 and keep the root with Im(tau) > 0.
inline CQ b_type_modulus() {
    auto tr = [](const CQ& s) {
        Moebius<Rational> y = lower_unipotent(CQ(2));
        Moebius<Rational> z = upper_unipotent(CQ(2) * s);
        return (y * z * y.inverse() * z.inverse()).trace();
    };
    CQ f0 = tr(CQ(0)), f1 = tr(CQ(1)), f2 = tr(CQ(2));
    CQ p2 = (f2 - CQ(2) * f1 + f0) / CQ(2);
    CQ p1 = f1 - f0 - p2;
    CQ p0 = f0;
    if (!(tr(CQ(3)) == p0 + CQ(3) * p1 + CQ(9) * p2)) throw std::logic_error("commutator trace is not quadratic in 1/tau");
    std::vector<CQ> taus;
    for (int target : {2, -2})
        for (const CQ& s : detail::gaussian_roots(p0 - CQ(target), p1, p2)) {
            if (s.is_zero()) continue;
            CQ tau = CQ(1) / s;
            if (tau.im.sign() > 0) taus.push_back(tau);
        }
    if (taus.size() != 1) throw std::logic_error("b-type modulus: expected a unique root in the upper half-plane");
    return taus.front();
}

}  // namespace tps
