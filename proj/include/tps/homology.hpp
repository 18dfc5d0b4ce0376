#pragma once
// Relative second homology of the catalog manifolds: boundary classes, slope
// intersection numbers, the integer case enumerations and Thurston norm balls.

#include "tps/scalars.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <numeric>
#include <set>
#include <vector>

namespace tps {

enum class Manifold { W3, M4, M6, W2, WPrime2, M3, ChainFilled };

inline const char* to_string(Manifold m) {
    switch (m) {
        case Manifold::W3: return "W3";
        case Manifold::M4: return "M4";
        case Manifold::M6: return "M6";
        case Manifold::W2: return "W2";
        case Manifold::WPrime2: return "WPrime2";
        case Manifold::M3: return "M3";
        case Manifold::ChainFilled: return "ChainFilled";
    }
    return "?";
}

inline Manifold manifold_from_string(const std::string& s) {
    for (auto m : {Manifold::W3, Manifold::M4, Manifold::M6, Manifold::W2, Manifold::WPrime2, Manifold::M3,
                   Manifold::ChainFilled})
        if (s == to_string(m)) return m;
    throw std::invalid_argument("unknown manifold '" + s + "'");
}

inline std::size_t basis_rank(Manifold m) {
    switch (m) {
        case Manifold::W3:
        case Manifold::M4: return 4;
        case Manifold::M6: return 6;
        case Manifold::W2:
        case Manifold::WPrime2:
        case Manifold::M3: return 3;
        case Manifold::ChainFilled: return 2;
    }
    return 0;
}

inline const char* basis_doc(Manifold m) {
    switch (m) {
        case Manifold::W3: return "a,b,c,d over x,y,z,w; cusps 1..4 with meridian m_i and longitude l_i";
        case Manifold::M4: return "a,b,c,d over x,y,z,w (classes of Sigma_1..Sigma_4); cusps 1..4";
        case Manifold::M6: return "a_1..a_6 over x_1..x_6 (classes of Sigma_1..Sigma_6); cusps 1..6";
        case Manifold::W2:
        case Manifold::WPrime2: return "coefficients over x,y,z";
        case Manifold::M3: return "coefficients over x,y,z";
        case Manifold::ChainFilled: return "coefficients over x,y";
    }
    return "";
}

struct IntegerClass {
    Manifold manifold;
    std::vector<long long> coeffs;

    IntegerClass(Manifold m, std::vector<long long> c) : manifold(m), coeffs(std::move(c)) {
        if (coeffs.size() != basis_rank(m))
            throw std::invalid_argument(std::string("integer class: ") + to_string(m) + " needs " +
                                        std::to_string(basis_rank(m)) + " coefficients");
    }
};

// (meridian, longitude) coefficients for each cusp.
struct BoundaryClass {
    std::vector<std::pair<long long, long long>> cusps;

    BoundaryClass operator+(const BoundaryClass& o) const {
        BoundaryClass r = *this;
        for (std::size_t i = 0; i < cusps.size(); ++i) {
            r.cusps[i].first += o.cusps[i].first;
            r.cusps[i].second += o.cusps[i].second;
        }
        return r;
    }
    friend bool operator==(const BoundaryClass&, const BoundaryClass&) = default;
};

inline BoundaryClass boundary_class(const IntegerClass& c) {
    const auto& v = c.coeffs;
    switch (c.manifold) {
        case Manifold::M4: {
            long long a = v[0], b = v[1], cc = v[2], d = v[3];
            return {{{b - d, a}, {a + cc, b}, {b + d, cc}, {-a + cc, d}}};
        }
        case Manifold::W3: {
            long long a = v[0], b = v[1], cc = v[2], d = v[3];
            return {{{0, a}, {-cc - d, b}, {-b - d, cc}, {-b - cc, d}}};
        }
        case Manifold::M6: {
            auto a = [&](int i) { return v[i - 1]; };
            return {{{-a(6) + a(2), a(1)},
                     {a(1) - a(3), a(2)},
                     {-a(2) + a(4), a(3)},
                     {a(3) - a(5), a(4)},
                     {-a(4) + a(6), a(5)},
                     {a(5) - a(1), a(6)}}};
        }
        default: throw std::invalid_argument(std::string("boundary_class: unsupported manifold ") + to_string(c.manifold));
    }
}

// Geometric intersection number of the slopes p1 m + q1 l and p2 m + q2 l.
inline long long slope_intersection(long long p1, long long q1, long long p2, long long q2) {
    if ((p1 == 0 && q1 == 0) || (p2 == 0 && q2 == 0)) throw std::invalid_argument("slope_intersection: zero slope vector");
    long long det = p1 * q2 - q1 * p2;
    return det < 0 ? -det : det;
}

// Number of parallel boundary curves carried by the class (mu, lambda) on one cusp.
inline long long component_count(long long mu, long long lambda) { return std::gcd(mu < 0 ? -mu : mu, lambda < 0 ? -lambda : lambda); }

using Triple = std::array<int, 3>;
using Quad = std::array<int, 4>;

// (b, c, d) with a = 0, b + c + d odd, and all six printed bounds.
inline std::set<Triple> enumerate_whi3(int box = 2) {
    std::set<Triple> out;
    for (int b = -box; b <= box; ++b)
        for (int c = -box; c <= box; ++c)
            for (int d = -box; d <= box; ++d) {
                if (((b + c + d) % 2 + 2) % 2 != 1) continue;
                if (std::abs(b) <= 1 && std::abs(c) <= 1 && std::abs(d) <= 1 && std::abs(c + d) <= 1 &&
                    std::abs(b + d) <= 1 && std::abs(b + c) <= 1)
                    out.insert({b, c, d});
            }
    return out;
}

// Slopes (p, q) of the filling that are dropped before the parity argument: the
// non-hyperbolic fillings and those giving M3.
inline std::set<std::pair<long long, long long>> tet2_excluded_slopes() {
    return {{0, 1}, {1, 0}, {1, 1}, {2, 1}, {1, -1}, {1, 2}, {3, 1}, {3, 2}};
}

struct Tet2Case {
    Quad t;
    // filling slope p/q = (b - d)/a normalised with p >= 0, gcd = 1, and k = (b - d, a)/(p, q)
    long long p = 0, q = 0, k = 0;
    // (a+c, b), (b+d, c), (-a+c, d): the classes on cusps 2..4
    std::array<std::pair<long long, long long>, 3> cusp_classes{};
    long long components_off_filled = 0;
};

struct Tet2Result {
    std::set<Quad> raw;          // all six inequalities
    std::set<Quad> zero_case;    // (b - d, a) = (0, 0)
    std::set<Quad> zero_case_odd;  // zero case with n odd, i.e. a + b + c + d odd
    std::set<Quad> nonzero_case;   // (b - d, a) != (0, 0) and b - d >= 0
    std::vector<Tet2Case> filtered;  // nonzero case after the slope and parity filter
};

inline Tet2Case tet2_case(const Quad& t) {
    auto [a, b, c, d] = t;
    Tet2Case r;
    r.t = t;
    long long u = b - d, v = a;
    r.k = std::gcd(u < 0 ? -u : u, v < 0 ? -v : v);
    if (r.k) {
        r.p = u / r.k;
        r.q = v / r.k;
        if (r.p < 0 || (r.p == 0 && r.q < 0)) { r.p = -r.p; r.q = -r.q; }
    }
    r.cusp_classes = {{{a + c, b}, {b + d, c}, {-a + c, d}}};
    for (auto [mu, la] : r.cusp_classes) r.components_off_filled += component_count(mu, la);
    return r;
}

// slope_admissible decides which filling slopes (p, q) take part; the parity filter keeps
// tuples where k is odd exactly when n is even (n odd iff a + b + c + d odd).
inline Tet2Result enumerate_tet2(int search_bound,
                                 std::function<bool(long long, long long)> slope_admissible = {}) {
    if (search_bound < 3) throw std::invalid_argument("enumerate_tet2: search_bound must be >= 3");
    if (!slope_admissible) {
        auto ex = tet2_excluded_slopes();
        slope_admissible = [ex](long long p, long long q) { return !ex.count({p, q}); };
    }
    Tet2Result r;
    const int B = search_bound;
    for (int a = -B; a <= B; ++a)
        for (int b = -B; b <= B; ++b)
            for (int c = -B; c <= B; ++c)
                for (int d = -B; d <= B; ++d) {
                    if (std::abs(b) <= 2 && std::abs(a - b + c) <= 2 && std::abs(b + d) <= 2 &&
                        std::abs(b - 2 * c + d) <= 2 && std::abs(d) <= 2 && std::abs(a - c + d) <= 2)
                        r.raw.insert({a, b, c, d});
                }
    for (const Quad& t : r.raw) {
        auto [a, b, c, d] = t;
        bool n_odd = ((a + b + c + d) % 2 + 2) % 2 == 1;
        if (b - d == 0 && a == 0) {
            r.zero_case.insert(t);
            if (n_odd) r.zero_case_odd.insert(t);
            continue;
        }
        if (b - d < 0) continue;
        r.nonzero_case.insert(t);
        Tet2Case cs = tet2_case(t);
        if ((cs.k % 2 == 1) == !n_odd && slope_admissible(cs.p, cs.q)) r.filtered.push_back(cs);
    }
    return r;
}

struct ParityObstruction {
    long long sum = 0;
    long long abs_sum = 0;
    bool even = true;
};

// Signed and absolute sums of the eight coefficients on cusps 2, 3, 5, 6.
inline ParityObstruction m6_parity_obstruction(const IntegerClass& c) {
    if (c.manifold != Manifold::M6) throw std::invalid_argument("m6_parity_obstruction: class must live in M6");
    auto bc = boundary_class(c);
    ParityObstruction r;
    for (int i : {1, 2, 4, 5}) {
        auto [mu, la] = bc.cusps[i];
        r.sum += mu + la;
        r.abs_sum += std::abs(mu) + std::abs(la);
    }
    r.even = r.sum % 2 == 0;
    return r;
}

struct NormPolytope {
    Manifold manifold;
    std::vector<std::vector<long long>> vertices;
    std::string basis;
};

inline NormPolytope catalog_norm_ball(Manifold m) {
    auto sym = [](std::vector<std::vector<long long>> half) {
        std::vector<std::vector<long long>> all = half;
        for (auto v : half) {
            for (auto& x : v) x = -x;
            all.push_back(v);
        }
        return all;
    };
    switch (m) {
        case Manifold::W2:
        case Manifold::WPrime2: return {m, sym({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}), "x,y,z"};
        case Manifold::M3: return {m, sym({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}}), "x,y,z"};
        case Manifold::ChainFilled: return {m, sym({{1, 0}, {0, 1}}), "x,y"};
        case Manifold::M4:
            // x, y, z, w, y+z+w, -x+z+w, x+y-w, x+y+z in u_1 = (x+y)/2, u_2 = (y+z)/2,
            // u_3 = (z+w)/2, u_4 = (x-w)/2
            return {m,
                    sym({{1, -1, 1, 1}, {1, 1, -1, -1}, {-1, 1, 1, 1}, {1, -1, 1, -1},
                         {1, 1, 1, -1}, {-1, 1, 1, -1}, {1, 1, -1, 1}, {1, 1, 1, 1}}),
                    "u_1=(x+y)/2, u_2=(y+z)/2, u_3=(z+w)/2, u_4=(x-w)/2"};
        default: throw std::invalid_argument(std::string("catalog_norm_ball: unsupported manifold ") + to_string(m));
    }
}

// u-coordinates of a x + b y + c z + d w in M4.
inline std::vector<long long> m4_u_coordinates(const std::vector<long long>& abcd) {
    static const long long X[4][4] = {{1, -1, 1, 1}, {1, 1, -1, -1}, {-1, 1, 1, 1}, {1, -1, 1, -1}};
    std::vector<long long> u(4, 0);
    for (int k = 0; k < 4; ++k)
        for (int i = 0; i < 4; ++i) u[i] += abcd[k] * X[k][i];
    return u;
}

namespace detail {

// Exact two-phase simplex with Bland's rule: minimise sum(lambda) subject to
// V lambda = c, lambda >= 0. Returns nullopt when infeasible.
inline std::optional<Rational> min_weight_combination(const std::vector<std::vector<long long>>& V,
                                                      const std::vector<Rational>& c) {
    const std::size_t m = c.size(), nv = V.size(), n = nv + m;
    // tableau rows 0..m-1, columns 0..n-1 plus rhs at n
    std::vector<std::vector<Rational>> T(m, std::vector<Rational>(n + 1));
    for (std::size_t i = 0; i < m; ++i) {
        Rational s = c[i].sign() < 0 ? Rational(-1) : Rational(1);
        for (std::size_t j = 0; j < nv; ++j) T[i][j] = s * Rational(V[j][i]);
        T[i][nv + i] = Rational(1);
        T[i][n] = s * c[i];
    }
    std::vector<std::size_t> basis(m);
    for (std::size_t i = 0; i < m; ++i) basis[i] = nv + i;

    auto run = [&](const std::vector<Rational>& cost, std::size_t allowed) {
        for (;;) {
            // reduced costs
            std::size_t enter = n;
            for (std::size_t j = 0; j < allowed && enter == n; ++j) {
                if (std::find(basis.begin(), basis.end(), j) != basis.end()) continue;
                Rational rc = cost[j];
                for (std::size_t i = 0; i < m; ++i) rc -= cost[basis[i]] * T[i][j];
                if (rc.sign() < 0) enter = j;
            }
            if (enter == n) return true;
            std::size_t leave = m;
            Rational best;
            for (std::size_t i = 0; i < m; ++i) {
                if (T[i][enter].sign() <= 0) continue;
                Rational ratio = T[i][n] / T[i][enter];
                if (leave == m || ratio < best || (ratio == best && basis[i] < basis[leave])) {
                    leave = i;
                    best = ratio;
                }
            }
            if (leave == m) return false;  // unbounded
            Rational piv = T[leave][enter];
            for (auto& x : T[leave]) x /= piv;
            for (std::size_t i = 0; i < m; ++i) {
                if (i == leave || T[i][enter].is_zero()) continue;
                Rational f = T[i][enter];
                for (std::size_t j = 0; j <= n; ++j) T[i][j] -= f * T[leave][j];
            }
            basis[leave] = enter;
        }
    };

    std::vector<Rational> phase1(n, Rational(0));
    for (std::size_t i = 0; i < m; ++i) phase1[nv + i] = Rational(1);
    run(phase1, n);
    Rational art;
    for (std::size_t i = 0; i < m; ++i)
        if (basis[i] >= nv) art += T[i][n];
    if (!art.is_zero()) return std::nullopt;
    // drive remaining zero-level artificials out of the basis where possible
    for (std::size_t i = 0; i < m; ++i) {
        if (basis[i] < nv) continue;
        for (std::size_t j = 0; j < nv; ++j) {
            if (T[i][j].is_zero()) continue;
            Rational piv = T[i][j];
            for (auto& x : T[i]) x /= piv;
            for (std::size_t r = 0; r < m; ++r) {
                if (r == i || T[r][j].is_zero()) continue;
                Rational f = T[r][j];
                for (std::size_t k = 0; k <= n; ++k) T[r][k] -= f * T[i][k];
            }
            basis[i] = j;
            break;
        }
    }
    std::vector<Rational> phase2(n, Rational(0));
    for (std::size_t j = 0; j < nv; ++j) phase2[j] = Rational(1);
    if (!run(phase2, nv)) return std::nullopt;
    Rational total;
    for (std::size_t i = 0; i < m; ++i)
        if (basis[i] < nv) total += T[i][n];
    return total;
}

}  // namespace detail

// Minkowski functional of conv(vertices): min sum(lambda) with sum lambda_v v = c.
inline Rational thurston_norm(const NormPolytope& P, const std::vector<Rational>& c) {
    if (P.vertices.empty() || c.size() != P.vertices.front().size())
        throw std::invalid_argument("thurston_norm: dimension mismatch");
    bool zero = std::all_of(c.begin(), c.end(), [](const Rational& x) { return x.is_zero(); });
    if (zero) return Rational(0);
    auto r = detail::min_weight_combination(P.vertices, c);
    if (!r) throw std::domain_error("thurston_norm: class outside the span of the polytope");
    return *r;
}

inline Rational thurston_norm(const NormPolytope& P, const std::vector<long long>& c) {
    std::vector<Rational> q(c.begin(), c.end());
    return thurston_norm(P, q);
}

}  // namespace tps
