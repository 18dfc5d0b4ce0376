#pragma once
// Volume constants and the quantitative bounds: disjoint pants count, the counting
// bound, filling length bounds and the Montesinos exclusion lists.

#include "tps/scalars.hpp"

#include <cmath>
#include <map>
#include <optional>
#include <string>

namespace tps {

inline double v_oct(long long terms = 1000000) {
    if (terms == 1000000) {
        static const double v = 8.0 * lobachevsky(std::numbers::pi / 4, terms);
        return v;
    }
    return 8.0 * lobachevsky(std::numbers::pi / 4, terms);
}

inline double v_3(long long terms = 1000000) {
    if (terms == 1000000) {
        static const double v = 3.0 * lobachevsky(std::numbers::pi / 3, terms);
        return v;
    }
    return 3.0 * lobachevsky(std::numbers::pi / 3, terms);
}

// Printed four-digit values the constants are checked against.
inline constexpr double kVOctPrinted = 3.6638;
inline constexpr double kV3Printed = 1.0149;
inline constexpr double kM3VolumePrinted = 5.3334;
inline constexpr double kPrintedTol = 1e-4;

// oct * V_oct + v3 * V_3, or a printed decimal carrying its tolerance.
struct Volume {
    long long oct = 0;
    long long v3 = 0;
    std::optional<double> printed;
    double tol = 0.0;

    static Volume of_oct(long long k) { return {k, 0, std::nullopt, 0.0}; }
    static Volume of_v3(long long k) { return {0, k, std::nullopt, 0.0}; }
    static Volume of_printed(double v, double tol) { return {0, 0, v, tol}; }

    bool is_oct_multiple() const { return !printed && v3 == 0; }
    double value() const { return printed ? *printed : double(oct) * v_oct() + double(v3) * v_3(); }
    std::string expr() const {
        if (printed) return std::to_string(*printed) + " (printed)";
        std::string s;
        if (oct) s += std::to_string(oct) + "*V_oct";
        if (v3) s += (s.empty() ? "" : " + ") + std::to_string(v3) + "*V_3";
        return s.empty() ? "0" : s;
    }
};

inline long long max_disjoint_pants(double vol) {
    if (!(vol > 0)) throw std::domain_error("max_disjoint_pants: volume must be positive");
    return static_cast<long long>(std::floor(vol / v_oct()));
}

inline long long max_disjoint_pants(const Volume& vol) {
    if (vol.is_oct_multiple()) {
        if (vol.oct <= 0) throw std::domain_error("max_disjoint_pants: volume must be positive");
        return vol.oct;
    }
    return max_disjoint_pants(vol.value());
}

// a[n] counts A_n, b[n] counts B_{2n}.
struct TypeCensus {
    std::map<long long, long long> a, b;
    long long t3 = 0, t4 = 0;
};

struct CountingResult {
    long long k = 0;
    long long disjoint_lb = 0;
    double bound = 0;           // 4 vol / V_oct
    bool ok = false;            // k <= bound
    bool equality = false;      // k == bound (exact for V_oct multiples)
    bool termwise = false;      // 4 * disjoint_lb > k
};

inline long long census_k(const TypeCensus& c) {
    long long k = 3 * c.t3 + 4 * c.t4;
    for (auto [n, cnt] : c.a) k += n * cnt;
    for (auto [n, cnt] : c.b) k += 2 * n * cnt;
    return k;
}

inline long long census_disjoint_lb(const TypeCensus& c) {
    long long d = c.t3 + 3 * c.t4;
    for (auto [n, cnt] : c.a) d += ((n + 1) / 2) * cnt;
    for (auto [n, cnt] : c.b) d += n * cnt;
    return d;
}

inline void check_census(const TypeCensus& c) {
    if (c.t3 < 0 || c.t4 < 0) throw std::domain_error("census: negative count");
    for (auto [n, cnt] : c.a)
        if (n < 1 || cnt < 0) throw std::domain_error("census: bad A_n entry");
    for (auto [n, cnt] : c.b)
        if (n < 1 || cnt < 0) throw std::domain_error("census: bad B_2n entry");
}

inline CountingResult counting_bound_check(const TypeCensus& census, const Volume& vol) {
    check_census(census);
    CountingResult r;
    r.k = census_k(census);
    r.disjoint_lb = census_disjoint_lb(census);
    r.termwise = 4 * r.disjoint_lb > r.k;
    double v = vol.value();
    if (vol.is_oct_multiple()) {
        if (vol.oct < r.disjoint_lb)
            throw std::domain_error("counting_bound_check: volume below disjoint_lb * V_oct");
        r.bound = 4.0 * double(vol.oct);
        r.ok = r.k <= 4 * vol.oct;
        r.equality = r.k == 4 * vol.oct;
        return r;
    }
    double slack = vol.printed ? vol.tol : 1e-9;
    if (v + slack < double(r.disjoint_lb) * v_oct())
        throw std::domain_error("counting_bound_check: volume below disjoint_lb * V_oct");
    r.bound = 4.0 * v / v_oct();
    double gap = r.bound - double(r.k);
    double band = 4.0 * slack / v_oct();
    if (std::abs(gap) <= band) throw std::domain_error("counting_bound_check: equality undecidable within volume tolerance");
    r.ok = gap > 0;
    r.equality = false;
    return r;
}

inline CountingResult counting_bound_check(const TypeCensus& census, double vol) {
    return counting_bound_check(census, Volume::of_printed(vol, 1e-12));
}

// Volumes of the special manifolds; n is used by the W families only.
inline Volume catalog_volume(const std::string& id, long long n = 0) {
    if (id == "W" || id == "WPrime") {
        if (n < 1) throw std::domain_error("catalog_volume: W family needs n >= 1");
        return Volume::of_oct(n);
    }
    if (id == "M3") return Volume::of_printed(kM3VolumePrinted, kPrintedTol);
    if (id == "M4") return Volume::of_oct(2);
    if (id == "M5") return Volume::of_v3(10);
    if (id == "M6") return Volume::of_oct(4);
    throw std::invalid_argument("catalog_volume: unknown manifold '" + id + "'");
}

struct CatalogEntry {
    std::string type;
    std::string manifold;
    long long n = 0;  // family parameter of the manifold, 0 if none
    long long k = 0;  // number of 3-punctured spheres in the union
    Volume vol;
};

// The determining types with their ambient manifolds, W families up to n_max.
inline std::vector<CatalogEntry> special_catalog(long long n_max = 8) {
    std::vector<CatalogEntry> out;
    for (long long n = 2; n <= n_max; ++n) out.push_back({"Whi_" + std::to_string(2 * n), "W", n, 2 * n, catalog_volume("W", n)});
    for (long long n = 2; n <= n_max; ++n)
        out.push_back({"WhiPrime_" + std::to_string(4 * n), "WPrime", 2 * n, 4 * n, catalog_volume("WPrime", 2 * n)});
    out.push_back({"Bor_6", "WPrime", 2, 6, catalog_volume("WPrime", 2)});
    out.push_back({"Mag_4", "M3", 0, 4, catalog_volume("M3")});
    out.push_back({"Tet_8", "M4", 0, 8, catalog_volume("M4")});
    out.push_back({"Pen_10", "M5", 0, 10, catalog_volume("M5")});
    out.push_back({"Oct_8", "M6", 0, 8, catalog_volume("M6")});
    return out;
}

struct CatalogBound {
    bool ok = false;
    bool equality = false;
    double bound = 0;
};

inline CatalogBound catalog_bound(const CatalogEntry& e) {
    CatalogBound r;
    r.bound = 4.0 * e.vol.value() / v_oct();
    if (e.vol.is_oct_multiple()) {
        r.ok = e.k <= 4 * e.vol.oct;
        r.equality = e.k == 4 * e.vol.oct;
        return r;
    }
    double band = 4.0 * (e.vol.printed ? e.vol.tol : 1e-9) / v_oct();
    if (std::abs(r.bound - double(e.k)) <= band) throw std::domain_error("catalog_bound: undecidable within tolerance");
    r.ok = double(e.k) < r.bound;
    return r;
}

struct LengthBound {
    Rational length_sq;    // (n + 1 + r)/4
    Rational meridian_sq;  // 4/(n + 1 + r)
    double length() const { return std::sqrt(length_sq.to_double()); }
    double meridian() const { return std::sqrt(meridian_sq.to_double()); }
};

inline LengthBound normalized_length_lower_bound(long long n, const Rational& r) {
    if (n < 1) throw std::domain_error("normalized_length_lower_bound: n must be >= 1");
    if (r.sign() < 0) throw std::domain_error("normalized_length_lower_bound: r must be >= 0");
    Rational s = Rational(n + 1) + r;
    return {s / Rational(4), Rational(4) / s};
}

inline double filling_threshold() { return 4.0 * std::sqrt(2.0) * std::numbers::pi; }

inline double core_length_bound(double L) {
    const double K = filling_threshold();
    if (!(L >= K * (1.0 - 1e-15))) throw std::domain_error("core_length_bound: L below 4*sqrt(2)*pi");
    const double pi = std::numbers::pi;
    return 2.0 * pi / (L * L - 16.0 * pi * pi);
}

// r = nullopt is the slope infinity.
inline bool montesinos_hyperbolic(long long n, const std::optional<Rational>& r) {
    if (n < 2) throw std::domain_error("montesinos_hyperbolic: n must be >= 2");
    if (!r) return false;
    if (n == 2) return !(*r == Rational(-2) || *r == Rational(-3, 2) || *r == Rational(-1));
    if (n == 3) return !(*r == Rational(-2));
    return true;
}

struct ConvergenceReport {
    double L_min = 0;
    Rational L_min_sq;
    std::optional<double> core_bound;
};

inline ConvergenceReport convergence_report(long long n) {
    if (n < 2) throw std::domain_error("convergence_report: n must be >= 2");
    ConvergenceReport r;
    auto lb = normalized_length_lower_bound(n, Rational(0));
    r.L_min_sq = lb.length_sq;
    r.L_min = lb.length();
    // L_min >= 4 sqrt(2) pi  <=>  (n + 1)/4 >= 32 pi^2
    if (r.L_min_sq.to_double() >= 32.0 * std::numbers::pi * std::numbers::pi) r.core_bound = core_length_bound(r.L_min);
    return r;
}

}  // namespace tps
