#pragma once
// Combinatorial unions of totally geodesic 3-punctured spheres: local rules,
// the classification decision tree and canonical configurations for every type.

#include "tps/homology.hpp"
#include "tps/scalars.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace tps {

enum class Slope { zero, one, inf };
enum class Side { N, S };

inline const char* to_string(Slope s) {
    switch (s) {
        case Slope::zero: return "0";
        case Slope::one: return "1";
        case Slope::inf: return "inf";
    }
    return "?";
}

inline Slope slope_from_string(const std::string& s) {
    if (s == "0") return Slope::zero;
    if (s == "1") return Slope::one;
    if (s == "inf" || s == "\xE2\x88\x9E") return Slope::inf;
    throw std::invalid_argument("slope must be one of 0, 1, inf; got '" + s + "'");
}

inline const char* to_string(Side s) { return s == Side::N ? "N" : "S"; }

inline Side side_from_string(const std::string& s) {
    if (s == "N") return Side::N;
    if (s == "S") return Side::S;
    throw std::invalid_argument("side label must be N or S; got '" + s + "'");
}

// Slope p/q as (p, q): 0 = 0/1, 1 = 1/1, inf = 1/0.
inline std::pair<long long, long long> slope_pq(Slope s) {
    switch (s) {
        case Slope::zero: return {0, 1};
        case Slope::one: return {1, 1};
        case Slope::inf: return {1, 0};
    }
    return {0, 0};
}

// |ps - qr| for loops of slopes p/q and r/s in one cusp.
inline long long slope_crossings(Slope a, Slope b) {
    auto [p, q] = slope_pq(a);
    auto [r, s] = slope_pq(b);
    long long d = p * s - q * r;
    return d < 0 ? -d : d;
}

// A boundary loop is the closed Euclidean geodesic y = o (slope 0), x = o (slope inf)
// or y - x = o (slope 1) in the cusp torus R^2 / Z^2, with 0 <= o < 1.
struct BoundaryLoop {
    std::string cusp;
    Slope slope = Slope::zero;
    Rational offset;
};

struct Geodesic {
    std::string p, q;
    Side side_p = Side::N, side_q = Side::N;
    std::optional<int> sign;  // crossing sign of the boundary loops at the endpoint, +1 or -1
};

struct PantsConfig {
    std::vector<std::string> pants;
    std::vector<std::string> cusps;
    std::map<std::string, std::vector<BoundaryLoop>> boundary;
    std::vector<Geodesic> geodesics;
    std::optional<int> framing;  // 0 = Whi neighbourhood, 1 = Whi' neighbourhood
    bool finite = true;
    int infinite_ends = 0;  // 1 or 2 when finite is false: the window is open on that many sides
};

enum class UnionKind {
    A, B, T3, T4, Whi, WhiPrime, Bor6, Mag4, Tet8, Pen10, Oct8,
    WhiHat, WhiPrimeHat, TetHat2, PenHat4, OctHat4, BInf, WhiInf
};

inline constexpr std::array<UnionKind, 18> kAllUnionKinds{
    UnionKind::A, UnionKind::B, UnionKind::T3, UnionKind::T4, UnionKind::Whi, UnionKind::WhiPrime,
    UnionKind::Bor6, UnionKind::Mag4, UnionKind::Tet8, UnionKind::Pen10, UnionKind::Oct8, UnionKind::WhiHat,
    UnionKind::WhiPrimeHat, UnionKind::TetHat2, UnionKind::PenHat4, UnionKind::OctHat4, UnionKind::BInf,
    UnionKind::WhiInf};

inline const char* to_string(UnionKind k) {
    switch (k) {
        case UnionKind::A: return "A";
        case UnionKind::B: return "B";
        case UnionKind::T3: return "T3";
        case UnionKind::T4: return "T4";
        case UnionKind::Whi: return "Whi";
        case UnionKind::WhiPrime: return "WhiPrime";
        case UnionKind::Bor6: return "Bor6";
        case UnionKind::Mag4: return "Mag4";
        case UnionKind::Tet8: return "Tet8";
        case UnionKind::Pen10: return "Pen10";
        case UnionKind::Oct8: return "Oct8";
        case UnionKind::WhiHat: return "WhiHat";
        case UnionKind::WhiPrimeHat: return "WhiPrimeHat";
        case UnionKind::TetHat2: return "TetHat2";
        case UnionKind::PenHat4: return "PenHat4";
        case UnionKind::OctHat4: return "OctHat4";
        case UnionKind::BInf: return "BInf";
        case UnionKind::WhiInf: return "WhiInf";
    }
    return "?";
}

inline UnionKind union_kind_from_string(const std::string& s) {
    for (UnionKind k : kAllUnionKinds)
        if (s == to_string(k)) return k;
    throw std::invalid_argument("unknown union type '" + s + "'");
}

// Subscript of the sporadic types; 0 for parametrised and infinite ones.
inline int fixed_index(UnionKind k) {
    switch (k) {
        case UnionKind::T3: return 3;
        case UnionKind::T4: return 4;
        case UnionKind::Bor6: return 6;
        case UnionKind::Mag4: return 4;
        case UnionKind::Tet8: return 8;
        case UnionKind::Pen10: return 10;
        case UnionKind::Oct8: return 8;
        case UnionKind::TetHat2: return 2;
        case UnionKind::PenHat4: return 4;
        case UnionKind::OctHat4: return 4;
        default: return 0;
    }
}

inline bool is_parametrised(UnionKind k) {
    return k == UnionKind::A || k == UnionKind::B || k == UnionKind::Whi || k == UnionKind::WhiPrime ||
           k == UnionKind::WhiHat || k == UnionKind::WhiPrimeHat;
}

// n is the subscript, i.e. the number of 3-punctured spheres (0 for the infinite types).
struct UnionType {
    UnionKind kind = UnionKind::A;
    int n = 1;

    static UnionType make(UnionKind k, int n = 0) {
        if (!is_parametrised(k)) {
            int f = fixed_index(k);
            if (n != 0 && n != f)
                throw std::domain_error(std::string(to_string(k)) + " has fixed subscript " + std::to_string(f));
            return {k, f};
        }
        auto bad = [&](const char* need) {
            throw std::domain_error(std::string(to_string(k)) + "_" + std::to_string(n) + ": subscript must be " + need);
        };
        switch (k) {
            case UnionKind::A:
                if (n < 1) bad(">= 1");
                break;
            case UnionKind::B:
                if (n < 2 || n % 2) bad("2n with n >= 1");
                break;
            case UnionKind::Whi:
                if (n < 4 || n % 2) bad("2n with n >= 2");
                break;
            case UnionKind::WhiPrime:
                if (n < 8 || n % 4) bad("4n with n >= 2");
                break;
            case UnionKind::WhiHat:
                if (n < 2) bad(">= 2");
                break;
            case UnionKind::WhiPrimeHat:
                if (n < 2 || n % 2) bad("2n with n >= 1");
                break;
            default: break;
        }
        return {k, n};
    }

    std::string str() const {
        switch (kind) {
            case UnionKind::BInf: return "B_inf";
            case UnionKind::WhiInf: return "Whi_inf";
            case UnionKind::T3: return "T_3";
            case UnionKind::T4: return "T_4";
            case UnionKind::Bor6: return "Bor_6";
            case UnionKind::Mag4: return "Mag_4";
            case UnionKind::Tet8: return "Tet_8";
            case UnionKind::Pen10: return "Pen_10";
            case UnionKind::Oct8: return "Oct_8";
            case UnionKind::TetHat2: return "TetHat_2";
            case UnionKind::PenHat4: return "PenHat_4";
            case UnionKind::OctHat4: return "OctHat_4";
            default: return std::string(to_string(kind)) + "_" + std::to_string(n);
        }
    }

    friend bool operator==(const UnionType&, const UnionType&) = default;
    friend auto operator<=>(const UnionType&, const UnionType&) = default;
};

// Every type with parameters up to n_max (parameter n as in A_n, B_2n, Whi_2n, WhiPrime_4n,
// WhiHat_n, WhiPrimeHat_2n), the sporadic types and the infinite types.
inline std::vector<UnionType> union_catalog(int n_max = 8) {
    std::vector<UnionType> out;
    for (int n = 1; n <= n_max; ++n) out.push_back(UnionType::make(UnionKind::A, n));
    for (int n = 1; n <= n_max; ++n) out.push_back(UnionType::make(UnionKind::B, 2 * n));
    for (int n = 2; n <= n_max; ++n) out.push_back(UnionType::make(UnionKind::Whi, 2 * n));
    for (int n = 2; n <= n_max; ++n) out.push_back(UnionType::make(UnionKind::WhiPrime, 4 * n));
    for (int n = 2; n <= n_max; ++n) out.push_back(UnionType::make(UnionKind::WhiHat, n));
    for (int n = 1; n <= n_max; ++n) out.push_back(UnionType::make(UnionKind::WhiPrimeHat, 2 * n));
    for (UnionKind k : kAllUnionKinds)
        if (!is_parametrised(k)) out.push_back(UnionType::make(k));
    return out;
}

namespace rule {
inline constexpr const char* kNoSS = "Lemma: no (S,S)-intersection";
inline constexpr const char* kThreeGeodesics = "Lemma: three-geodesic intersection forces a non-orientable octahedral manifold";
inline constexpr const char* kNNPlusSN = "Lemma: no (N,N)-intersection together with an (S,N)-intersection";
inline constexpr const char* kTwoSN = "Lemma: no two (S,N)-intersections";
inline constexpr const char* kLoopsOfOnePants = "Lemma: boundary loops of one 3-punctured sphere are disjoint";
inline constexpr const char* kLoopsCoincide = "Lemma: distinct boundary loops do not coincide";
inline constexpr const char* kLoopPair = "Lemma: two boundary loops meet in at most one point";
inline constexpr const char* kLoopTotal = "Lemma: a boundary loop meets the other loops in at most two points";
inline constexpr const char* kTypeIIIRight = "Lemma: two (N,N)-intersections never pair parallel loops of both spheres in one cusp";
inline constexpr const char* kTypeIIIGraph = "Lemma: crossed two (N,N)-intersections with opposite signs live in a graph manifold";
inline constexpr const char* kTypeIIIFamily = "Lemma: unions with two (N,N)-intersections are Whi_4, WhiHat_2, Bor_6, WhiPrimeHat_2, Tet_8, TetHat_2 or Mag_4";
inline constexpr const char* kBor6 = "Lemma: the Borromean rings complement carries Bor_6 instead of WhiPrime_4";
inline constexpr const char* kTypeII = "Lemma: unions with an (S,N)-intersection are B_2n, Whi_2n, WhiPrime_4n or Bor_6";
inline constexpr const char* kSpecialT3 = "Lemma: a union containing T_3 is T_3 or Pen_10";
inline constexpr const char* kSpecialPen = "Lemma: a union containing PenHat_4 is PenHat_4 or Pen_10";
inline constexpr const char* kSpecialOct = "Lemma: a union containing OctHat_4 is OctHat_4, Oct_8 or Pen_10";
inline constexpr const char* kTrivalent = "Lemma: a general union with a trivalent 3-punctured sphere is T_4";
inline constexpr const char* kLinearCyclic = "Lemma: general unions placed linearly are A_n, cyclically WhiHat_n or WhiPrimeHat_2n";
inline constexpr const char* kFraming = "Lemma: Whi and WhiPrime types are distinguished by their neighbourhoods (framing bit)";
inline constexpr const char* kInfinite = "Lemma: infinite unions are B_inf or Whi_inf";
inline constexpr const char* kSporadic = "Lemma: sporadic types are recognised up to isomorphism of the intersection graph";
}  // namespace rule

struct Violation {
    std::string rule;
    std::string detail;
};

struct Classification {
    enum class Status { ok, impossible, ambiguous };
    Status status = Status::impossible;
    std::optional<UnionType> type;
    std::vector<UnionType> candidates;
    std::string reason;
    std::vector<std::string> citations;

    static Classification ok(UnionType t, std::string cite) {
        Classification c;
        c.status = Status::ok;
        c.type = t;
        c.citations = {std::move(cite)};
        return c;
    }
    static Classification impossible(std::string reason, std::vector<std::string> cites) {
        Classification c;
        c.status = Status::impossible;
        c.reason = std::move(reason);
        c.citations = std::move(cites);
        return c;
    }
    static Classification ambiguous(std::vector<UnionType> cands, std::string reason, std::string cite) {
        Classification c;
        c.status = Status::ambiguous;
        c.candidates = std::move(cands);
        c.reason = std::move(reason);
        c.citations = {std::move(cite)};
        return c;
    }
};

inline const char* to_string(Classification::Status s) {
    switch (s) {
        case Classification::Status::ok: return "ok";
        case Classification::Status::impossible: return "impossible";
        case Classification::Status::ambiguous: return "ambiguous";
    }
    return "?";
}

struct Ambient {
    enum class Kind { determines, dehn_filling_of, general };
    Kind kind = Kind::general;
    std::string manifold;
    friend bool operator==(const Ambient&, const Ambient&) = default;
};

inline const char* to_string(Ambient::Kind k) {
    switch (k) {
        case Ambient::Kind::determines: return "determines";
        case Ambient::Kind::dehn_filling_of: return "dehn_filling_of";
        case Ambient::Kind::general: return "general";
    }
    return "?";
}

inline Ambient ambient_consequence(const UnionType& t) {
    using K = Ambient::Kind;
    switch (t.kind) {
        case UnionKind::Whi: return {K::determines, "W" + std::to_string(t.n / 2)};
        case UnionKind::WhiPrime: return {K::determines, "WPrime" + std::to_string(t.n / 2)};
        case UnionKind::Bor6: return {K::determines, "WPrime2"};
        case UnionKind::Mag4: return {K::determines, "M3"};
        case UnionKind::Tet8: return {K::determines, "M4"};
        case UnionKind::Pen10: return {K::determines, "M5"};
        case UnionKind::Oct8: return {K::determines, "M6"};
        case UnionKind::WhiInf: return {K::determines, "Winf"};
        case UnionKind::WhiHat: return {K::dehn_filling_of, "W" + std::to_string(t.n)};
        case UnionKind::WhiPrimeHat: return {K::dehn_filling_of, "WPrime" + std::to_string(t.n)};
        case UnionKind::TetHat2: return {K::dehn_filling_of, "M4"};
        case UnionKind::PenHat4: return {K::dehn_filling_of, "M5"};
        case UnionKind::OctHat4: return {K::dehn_filling_of, "M6"};
        default: return {K::general, ""};
    }
}

namespace detail {

inline Rational frac(const Rational& x) { return x - Rational(x.floor()); }

// Crossing point of two loops of different slopes, reduced into [0,1)^2.
inline std::pair<Rational, Rational> loop_crossing(const BoundaryLoop& a, const BoundaryLoop& b) {
    const BoundaryLoop* h = nullptr;  // slope 0: y = o
    const BoundaryLoop* v = nullptr;  // slope inf: x = o
    const BoundaryLoop* d = nullptr;  // slope 1: y - x = o
    for (const BoundaryLoop* l : {&a, &b}) {
        if (l->slope == Slope::zero) h = l;
        else if (l->slope == Slope::inf) v = l;
        else d = l;
    }
    if (h && v) return {frac(v->offset), frac(h->offset)};
    if (h && d) return {frac(h->offset - d->offset), frac(h->offset)};
    if (v && d) return {frac(v->offset), frac(v->offset + d->offset)};
    throw std::logic_error("loop_crossing: loops are parallel");
}

inline std::string loop_name(const std::string& p, std::size_t k) { return p + "[" + std::to_string(k) + "]"; }

// Per-pair aggregate of intersection geodesics; index i < j, "ij" means S in i, N in j.
struct PairData {
    int nn = 0, sn_ij = 0, sn_ji = 0, ss = 0;
    std::vector<std::optional<int>> signs;
    int count() const { return nn + sn_ij + sn_ji + ss; }
};

struct Indexed {
    std::map<std::string, int> index;
    std::map<std::pair<int, int>, PairData> pairs;
};

inline void require_structure(const PantsConfig& c) {
    auto fail = [](const std::string& m) { throw std::invalid_argument("malformed config: " + m); };
    std::set<std::string> P(c.pants.begin(), c.pants.end());
    std::set<std::string> C(c.cusps.begin(), c.cusps.end());
    if (c.pants.empty()) fail("no 3-punctured spheres");
    if (P.size() != c.pants.size()) fail("duplicate pants identifier");
    if (C.size() != c.cusps.size()) fail("duplicate cusp identifier");
    for (const auto& [p, loops] : c.boundary)
        if (!P.count(p)) fail("boundary given for unknown pants '" + p + "'");
    for (const auto& p : c.pants) {
        auto it = c.boundary.find(p);
        std::size_t k = it == c.boundary.end() ? 0 : it->second.size();
        if (k != 3) fail("pants '" + p + "' has " + std::to_string(k) + " boundary loops, expected 3");
        for (const auto& l : it->second) {
            if (!C.count(l.cusp)) fail("pants '" + p + "' has a loop on unknown cusp '" + l.cusp + "'");
            if (l.offset.sign() < 0 || l.offset >= Rational(1))
                fail("loop offset " + l.offset.str() + " of pants '" + p + "' is outside [0,1)");
        }
    }
    for (const auto& g : c.geodesics) {
        if (!P.count(g.p) || !P.count(g.q)) fail("geodesic references unknown pants '" + g.p + "'/'" + g.q + "'");
        if (g.p == g.q) fail("geodesic joins pants '" + g.p + "' to itself");
        if (g.sign && *g.sign != 1 && *g.sign != -1) fail("geodesic sign must be +1 or -1");
    }
    if (c.framing && *c.framing != 0 && *c.framing != 1) fail("framing must be 0 or 1");
    if (c.finite && c.infinite_ends != 0) fail("infinite_ends is only meaningful when finite is false");
    if (!c.finite && c.infinite_ends != 1 && c.infinite_ends != 2) fail("infinite windows need infinite_ends 1 or 2");
}

inline Indexed index_config(const PantsConfig& c) {
    Indexed ix;
    for (std::size_t i = 0; i < c.pants.size(); ++i) ix.index[c.pants[i]] = int(i);
    for (const auto& g : c.geodesics) {
        int i = ix.index.at(g.p), j = ix.index.at(g.q);
        Side si = g.side_p, sj = g.side_q;
        if (i > j) {
            std::swap(i, j);
            std::swap(si, sj);
        }
        auto& d = ix.pairs[{i, j}];
        if (si == Side::S && sj == Side::S) ++d.ss;
        else if (si == Side::S) ++d.sn_ij;
        else if (sj == Side::S) ++d.sn_ji;
        else ++d.nn;
        d.signs.push_back(g.sign);
    }
    return ix;
}

// Edge codes of the intersection graph: 0 none, 1 one (N,N), 2 two (N,N),
// 3 one (S,N) with S at the row vertex, 4 one (S,N) with N at the row vertex.
struct Graph {
    int n = 0;
    std::vector<std::vector<int>> e;

    int degree(int v) const {
        int d = 0;
        for (int w = 0; w < n; ++w) d += e[v][w] != 0;
        return d;
    }
    bool connected() const {
        if (n == 0) return true;
        std::vector<bool> seen(n, false);
        std::vector<int> st{0};
        seen[0] = true;
        int cnt = 1;
        while (!st.empty()) {
            int v = st.back();
            st.pop_back();
            for (int w = 0; w < n; ++w)
                if (e[v][w] && !seen[w]) {
                    seen[w] = true;
                    ++cnt;
                    st.push_back(w);
                }
        }
        return cnt == n;
    }
};

inline Graph graph_of(const PantsConfig& c, const Indexed& ix) {
    Graph g;
    g.n = int(c.pants.size());
    g.e.assign(g.n, std::vector<int>(g.n, 0));
    for (const auto& [ij, d] : ix.pairs) {
        auto [i, j] = ij;
        int code = 0;
        if (d.count() == 2 && d.nn == 2) code = 2;
        else if (d.count() == 1 && d.nn == 1) code = 1;
        else if (d.count() == 1 && d.sn_ij == 1) code = 3;
        else if (d.count() == 1 && d.sn_ji == 1) code = 4;
        else code = 9;  // only reachable for configs with violations
        g.e[i][j] = code;
        g.e[j][i] = code == 3 ? 4 : code == 4 ? 3 : code;
    }
    return g;
}

// Brute-force isomorphism with degree-signature pruning.
inline bool isomorphic(const Graph& a, const Graph& b) {
    if (a.n != b.n) return false;
    const int n = a.n;
    auto signature = [](const Graph& g, int v) {
        std::vector<int> s(g.e[v]);
        std::sort(s.begin(), s.end());
        return s;
    };
    std::vector<std::vector<int>> sa(n), sb(n);
    for (int v = 0; v < n; ++v) {
        sa[v] = signature(a, v);
        sb[v] = signature(b, v);
    }
    {
        auto x = sa, y = sb;
        std::sort(x.begin(), x.end());
        std::sort(y.begin(), y.end());
        if (x != y) return false;
    }
    std::vector<int> map(n, -1);
    std::vector<bool> used(n, false);
    std::function<bool(int)> extend = [&](int v) -> bool {
        if (v == n) return true;
        for (int w = 0; w < n; ++w) {
            if (used[w] || sa[v] != sb[w]) continue;
            bool okv = true;
            for (int u = 0; u < v && okv; ++u) okv = a.e[v][u] == b.e[w][map[u]];
            if (!okv) continue;
            map[v] = w;
            used[w] = true;
            if (extend(v + 1)) return true;
            used[w] = false;
            map[v] = -1;
        }
        return false;
    };
    return extend(0);
}

}  // namespace detail

// Local rules on pairs of 3-punctured spheres and on boundary loops. Loop-count rules
// follow from type (i) intersections only, so they are checked when no pair has a
// type (ii) or (iii) intersection.
inline std::vector<Violation> validate_local(const PantsConfig& c) {
    detail::require_structure(c);
    auto ix = detail::index_config(c);
    std::vector<Violation> out;
    bool type_ii_iii = false;
    for (const auto& [ij, d] : ix.pairs) {
        const std::string who = "'" + c.pants[ij.first] + "' and '" + c.pants[ij.second] + "'";
        if (d.ss) out.push_back({rule::kNoSS, who + " meet in a geodesic separating in both"});
        if (d.count() >= 3)
            out.push_back({rule::kThreeGeodesics, who + " meet in " + std::to_string(d.count()) + " geodesics"});
        else if (d.count() == 2 && d.ss == 0) {
            int sn = d.sn_ij + d.sn_ji;
            if (d.nn == 1 && sn == 1) out.push_back({rule::kNNPlusSN, who + " meet in one (N,N) and one (S,N) geodesic"});
            if (sn == 2) out.push_back({rule::kTwoSN, who + " meet in two (S,N) geodesics"});
        }
        if (d.sn_ij + d.sn_ji > 0 || d.count() >= 2) type_ii_iii = true;
    }

    // loops grouped by cusp, in pants order
    struct At {
        std::string pants;
        std::size_t k;
        const BoundaryLoop* loop;
    };
    std::map<std::string, std::vector<At>> by_cusp;
    for (const auto& p : c.pants) {
        const auto& loops = c.boundary.at(p);
        for (std::size_t k = 0; k < loops.size(); ++k) by_cusp[loops[k].cusp].push_back({p, k, &loops[k]});
    }
    for (const auto& cusp : c.cusps) {
        const auto& L = by_cusp[cusp];
        for (std::size_t a = 0; a < L.size(); ++a)
            for (std::size_t b = a + 1; b < L.size(); ++b) {
                const auto &la = *L[a].loop, &lb = *L[b].loop;
                std::string names = detail::loop_name(L[a].pants, L[a].k) + " and " + detail::loop_name(L[b].pants, L[b].k);
                if (L[a].pants == L[b].pants && la.slope != lb.slope)
                    out.push_back({rule::kLoopsOfOnePants, names + " cross in cusp '" + cusp + "'"});
                if (la.slope == lb.slope && la.offset == lb.offset)
                    out.push_back({rule::kLoopsCoincide, names + " coincide in cusp '" + cusp + "'"});
            }
        if (type_ii_iii) continue;
        for (std::size_t a = 0; a < L.size(); ++a) {
            std::set<std::pair<Rational, Rational>> pts;
            for (std::size_t b = 0; b < L.size(); ++b) {
                if (a == b || L[a].loop->slope == L[b].loop->slope) continue;
                if (a < b && slope_crossings(L[a].loop->slope, L[b].loop->slope) > 1)
                    out.push_back({rule::kLoopPair, detail::loop_name(L[a].pants, L[a].k) + " and " +
                                                        detail::loop_name(L[b].pants, L[b].k) + " meet twice"});
                pts.insert(detail::loop_crossing(*L[a].loop, *L[b].loop));
            }
            if (pts.size() > 2)
                out.push_back({rule::kLoopTotal, detail::loop_name(L[a].pants, L[a].k) + " meets other loops in " +
                                                     std::to_string(pts.size()) + " points"});
        }
    }
    return out;
}

namespace detail {

struct CuspPatterns {
    bool concurrent_triple = false;     // slopes 0, 1, inf through one point
    bool nonconcurrent_triple = false;  // slopes 0, 1, inf pairwise crossing at three points
    bool two_pairs = false;             // two parallel pairs of different slopes
};

inline CuspPatterns cusp_patterns(const PantsConfig& c) {
    CuspPatterns r;
    std::map<std::string, std::array<std::vector<const BoundaryLoop*>, 3>> by;
    for (const auto& p : c.pants)
        for (const auto& l : c.boundary.at(p)) by[l.cusp][int(l.slope)].push_back(&l);
    for (const auto& [cusp, s] : by) {
        int pairs = 0;
        for (const auto& v : s) pairs += v.size() >= 2;
        if (pairs >= 2) r.two_pairs = true;
        for (const auto* h : s[int(Slope::zero)])
            for (const auto* d : s[int(Slope::one)])
                for (const auto* v : s[int(Slope::inf)]) {
                    bool common = loop_crossing(*h, *v) == loop_crossing(*h, *d);
                    (common ? r.concurrent_triple : r.nonconcurrent_triple) = true;
                }
    }
    return r;
}

// Cusp multiset of a pants' loops: returns (doubled cusp or "", sorted distinct cusps).
inline std::pair<std::string, std::set<std::string>> cusp_profile(const PantsConfig& c, const std::string& p) {
    std::map<std::string, int> m;
    for (const auto& l : c.boundary.at(p)) ++m[l.cusp];
    std::string dbl;
    std::set<std::string> all;
    for (auto& [k, v] : m) {
        all.insert(k);
        if (v >= 2) dbl = k;
    }
    return {dbl, all};
}

enum class DoubleCase { left, center, right, other };

// The three orientation arrangements of two (N,N)-intersections, read off the cusps:
// left: each sphere has a parallel pair of loops in the cusp of the other's single loop;
// center: both spheres have loops in the same three distinct cusps;
// right: both spheres have their parallel pair in the same cusp.
inline DoubleCase double_case(const PantsConfig& c, const std::string& p, const std::string& q) {
    auto [dp, sp] = cusp_profile(c, p);
    auto [dq, sq] = cusp_profile(c, q);
    if (!dp.empty() && !dq.empty()) {
        if (dp == dq) return DoubleCase::right;
        if (sp == sq && sp.size() == 2) return DoubleCase::left;
        return DoubleCase::other;
    }
    if (dp.empty() && dq.empty() && sp.size() == 3 && sp == sq) return DoubleCase::center;
    return DoubleCase::other;
}

}  // namespace detail

PantsConfig canonical_config(const UnionType& t);

namespace detail {

inline const Graph& canonical_graph(UnionKind k) {
    static const std::map<UnionKind, Graph> cache = [] {
        std::map<UnionKind, Graph> m;
        for (UnionKind s : {UnionKind::Bor6, UnionKind::Mag4, UnionKind::Tet8, UnionKind::Pen10, UnionKind::Oct8,
                            UnionKind::T3, UnionKind::T4, UnionKind::PenHat4, UnionKind::OctHat4}) {
            PantsConfig c = canonical_config(UnionType::make(s));
            m[s] = graph_of(c, index_config(c));
        }
        PantsConfig w = canonical_config(UnionType::make(UnionKind::Whi, 4));
        m[UnionKind::Whi] = graph_of(w, index_config(w));
        return m;
    }();
    return cache.at(k);
}

inline Classification cyclic_by_framing(const PantsConfig& c, int m, UnionKind plain, UnionKind prime, int sub,
                                        const char* cite) {
    bool prime_ok = m % 2 == 0;
    if (!c.framing && prime_ok)
        return Classification::ambiguous({UnionType::make(plain, sub), UnionType::make(prime, sub)},
                                         "cyclic union of even length needs the framing bit", rule::kFraming);
    // for odd length the primed neighbourhood is the unprimed one with reversed orientation
    if (c.framing && *c.framing == 1 && prime_ok) return Classification::ok(UnionType::make(prime, sub), cite);
    return Classification::ok(UnionType::make(plain, sub), cite);
}

// Shape of the S-side chain in a union with (S,N)-intersections.
struct ChainShape {
    bool ok = false;
    std::string why;
    int m = 0;
    bool cycle = false;
};

inline ChainShape chain_shape(const Graph& g) {
    ChainShape r;
    std::vector<bool> blue(g.n, false);
    for (int v = 0; v < g.n; ++v)
        for (int w = 0; w < g.n; ++w)
            if (g.e[v][w] == 4) blue[v] = true;
    int edges = 0;
    for (int v = 0; v < g.n; ++v) {
        int s_side = 0, nn = 0;
        for (int w = 0; w < g.n; ++w) {
            s_side += g.e[v][w] == 3;
            if (g.e[v][w] == 1 && !blue[v] && !blue[w]) ++nn;
        }
        if (blue[v]) {
            if (s_side || g.degree(v) != 1) {
                r.why = "the N-side sphere of an (S,N)-intersection meets another sphere";
                return r;
            }
            continue;
        }
        if (s_side != 1) {
            r.why = s_side ? "a chain sphere carries two (S,N)-partners" : "a chain sphere carries no (S,N)-partner";
            return r;
        }
        if (nn > 2) {
            r.why = "a chain sphere meets three chain spheres";
            return r;
        }
        ++r.m;
        edges += nn;
    }
    edges /= 2;
    r.ok = true;
    r.cycle = edges == r.m;
    if (!r.cycle && edges != r.m - 1) {
        r.ok = false;
        r.why = "the chain is neither linear nor cyclic";
    }
    return r;
}

}  // namespace detail

inline Classification classify(const PantsConfig& c) {
    using detail::DoubleCase;
    auto violations = validate_local(c);
    auto ix = detail::index_config(c);
    auto g = detail::graph_of(c, ix);
    if (!g.connected()) throw std::invalid_argument("classify: the configuration is disconnected");
    if (!violations.empty()) {
        std::vector<std::string> cites;
        for (const auto& v : violations)
            if (std::find(cites.begin(), cites.end(), v.rule) == cites.end()) cites.push_back(v.rule);
        return Classification::impossible(violations.front().detail, cites);
    }
    const int n = g.n;
    bool any_double = false, any_sn = false;
    for (int v = 0; v < n; ++v)
        for (int w = 0; w < n; ++w) {
            any_double |= g.e[v][w] == 2;
            any_sn |= g.e[v][w] == 3;
        }

    if (!c.finite) {
        if (any_double) return Classification::impossible("an infinite union has no pair meeting in two geodesics", {rule::kInfinite});
        if (!any_sn)
            return Classification::impossible("an infinite linear union has a cusp bounding further 3-punctured spheres",
                                              {rule::kInfinite});
        auto sh = detail::chain_shape(g);
        if (!sh.ok) return Classification::impossible(sh.why, {rule::kTypeII, rule::kInfinite});
        if (sh.cycle) return Classification::impossible("a cyclic chain is finite", {rule::kInfinite});
        return Classification::ok(UnionType::make(c.infinite_ends == 1 ? UnionKind::BInf : UnionKind::WhiInf), rule::kInfinite);
    }

    if (any_double) {
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                if (g.e[i][j] != 2) continue;
                const auto &p = c.pants[i], &q = c.pants[j];
                switch (detail::double_case(c, p, q)) {
                    case DoubleCase::right:
                        return Classification::impossible("'" + p + "' and '" + q + "' pair parallel loops in one cusp",
                                                          {rule::kTypeIIIRight});
                    case DoubleCase::other:
                        return Classification::impossible(
                            "cusps of '" + p + "' and '" + q + "' match no arrangement of two (N,N)-intersections",
                            {rule::kTypeIIIFamily});
                    case DoubleCase::center: {
                        const auto& s = ix.pairs.at({i, j}).signs;
                        if (s[0] && s[1] && *s[0] != *s[1])
                            return Classification::impossible("'" + p + "' and '" + q + "' cross with opposite signs",
                                                              {rule::kTypeIIIGraph});
                        break;
                    }
                    case DoubleCase::left: break;
                }
            }
        if (n == 2) {
            const auto& p = c.pants[0];
            const auto& q = c.pants[1];
            if (detail::double_case(c, p, q) == DoubleCase::left)
                return detail::cyclic_by_framing(c, 2, UnionKind::WhiHat, UnionKind::WhiPrimeHat, 2, rule::kTypeIIIFamily);
            const auto& s = ix.pairs.at({0, 1}).signs;
            if (s[0] && s[1]) return Classification::ok(UnionType::make(UnionKind::TetHat2), rule::kTypeIIIFamily);
            return Classification::ambiguous({UnionType::make(UnionKind::TetHat2)},
                                             "crossing signs absent: equal signs give TetHat_2, opposite signs a graph manifold",
                                             rule::kTypeIIIGraph);
        }
        if (detail::isomorphic(g, detail::canonical_graph(UnionKind::Whi))) {
            if (c.framing && *c.framing == 1)
                return Classification::impossible("a Whi'-framed union of this shape occurs only where Bor_6 does", {rule::kBor6});
            return Classification::ok(UnionType::make(UnionKind::Whi, 4), rule::kSporadic);
        }
        for (UnionKind k : {UnionKind::Bor6, UnionKind::Tet8, UnionKind::Mag4})
            if (detail::isomorphic(g, detail::canonical_graph(k))) return Classification::ok(UnionType::make(k), rule::kSporadic);
        return Classification::impossible("no union with two (N,N)-intersections has this intersection graph",
                                          {rule::kTypeIIIFamily});
    }

    if (any_sn) {
        auto sh = detail::chain_shape(g);
        if (!sh.ok) return Classification::impossible(sh.why, {rule::kTypeII});
        if (!sh.cycle) return Classification::ok(UnionType::make(UnionKind::B, 2 * sh.m), rule::kTypeII);
        return detail::cyclic_by_framing(c, sh.m, UnionKind::Whi, UnionKind::WhiPrime, 2 * sh.m, rule::kTypeII);
    }

    for (UnionKind k : {UnionKind::Pen10, UnionKind::Oct8})
        if (detail::isomorphic(g, detail::canonical_graph(k))) return Classification::ok(UnionType::make(k), rule::kSporadic);
    auto pat = detail::cusp_patterns(c);
    auto special = [&](UnionKind k, const char* cite, const char* what) {
        if (detail::isomorphic(g, detail::canonical_graph(k))) return Classification::ok(UnionType::make(k), cite);
        return Classification::impossible(std::string("a cusp carries ") + what + " but the union is not " + UnionType::make(k).str(),
                                          {cite});
    };
    if (pat.concurrent_triple) return special(UnionKind::T3, rule::kSpecialT3, "loops of slopes 0, 1, inf through one point");
    if (pat.nonconcurrent_triple) return special(UnionKind::PenHat4, rule::kSpecialPen, "loops of slopes 0, 1, inf without a common point");
    if (pat.two_pairs) return special(UnionKind::OctHat4, rule::kSpecialOct, "two parallel pairs of loops");
    int maxdeg = 0, edges = 0;
    for (int v = 0; v < n; ++v) {
        maxdeg = std::max(maxdeg, g.degree(v));
        edges += g.degree(v);
    }
    edges /= 2;
    if (maxdeg >= 3) return special(UnionKind::T4, rule::kTrivalent, "a sphere meeting three others");
    if (edges == n - 1) return Classification::ok(UnionType::make(UnionKind::A, n), rule::kLinearCyclic);
    return detail::cyclic_by_framing(c, n, UnionKind::WhiHat, UnionKind::WhiPrimeHat, n, rule::kLinearCyclic);
}

namespace detail {

struct Builder {
    PantsConfig c;

    void add_pants(const std::string& p) { c.pants.push_back(p); }
    void add_cusp(const std::string& k) {
        if (std::find(c.cusps.begin(), c.cusps.end(), k) == c.cusps.end()) c.cusps.push_back(k);
    }
    void loop(const std::string& p, const std::string& cusp, Slope s, Rational off) {
        add_cusp(cusp);
        c.boundary[p].push_back({cusp, s, std::move(off)});
    }
    void geo(const std::string& p, const std::string& q, Side sp, Side sq, std::optional<int> sign = std::nullopt) {
        c.geodesics.push_back({p, q, sp, sq, sign});
    }
};

inline std::string pid(int i) { return "P" + std::to_string(i); }
inline std::string cid(int i) { return "C" + std::to_string(i); }

// Chain spheres a_i with a longitude loop in cusp c_i and meridian loops in c_{i-1}, c_{i+1};
// cyclic chains wrap the indices. Spheres meeting twice get two geodesics.
inline void chain(Builder& b, int m, bool cyclic, std::optional<int> sign = std::nullopt) {
    auto cusp = [&](int i) { return cyclic ? cid(((i % m) + m) % m) : cid(i + 1); };
    for (int i = 0; i < m; ++i) b.add_pants(pid(i));
    for (int i = 0; i < m; ++i) {
        b.loop(pid(i), cusp(i), Slope::inf, Rational(0));
        b.loop(pid(i), cusp(i + 1), Slope::zero, Rational(0));
        b.loop(pid(i), cusp(i - 1), Slope::zero, Rational(1, 2));
    }
    int links = cyclic ? m : m - 1;
    for (int i = 0; i < links; ++i) {
        int j = (i + 1) % m;
        b.geo(pid(i), pid(j), Side::N, Side::N, sign);
        if (cyclic && m == 2) b.geo(pid(i), pid(j), Side::N, Side::N, sign);
        if (cyclic && m == 2) break;
    }
}

// Blue spheres b_i: two parallel loops in the chain cusp of a_i, one in the shared cusp D.
inline void blues(Builder& b, int m, bool cyclic) {
    auto cusp = [&](int i) { return cyclic ? cid(i) : cid(i + 1); };
    for (int i = 0; i < m; ++i) {
        std::string q = "Q" + std::to_string(i);
        b.add_pants(q);
        b.loop(q, cusp(i), Slope::zero, Rational(1, 4));
        b.loop(q, cusp(i), Slope::zero, Rational(3, 4));
        b.loop(q, "D", Slope::zero, Rational(i, m));
        b.geo(pid(i), q, Side::S, Side::N);
    }
}

// Faces of the pentachoron on vertices 0..4; a face is a sphere with loops in its three
// vertex cusps. At cusp i with remaining vertices j<k<l<m the six faces are laid out as
// {j,k},{l,m}: slope 1 at offsets 0, 1/2; {j,l},{k,m}: slope inf; {j,m},{k,l}: slope 0.
inline PantsConfig pentachoron_faces(const std::function<bool(const std::array<int, 3>&)>& keep) {
    Builder b;
    std::vector<std::array<int, 3>> faces;
    for (int x = 0; x < 5; ++x)
        for (int y = x + 1; y < 5; ++y)
            for (int z = y + 1; z < 5; ++z)
                if (keep({x, y, z})) faces.push_back({x, y, z});
    auto name = [](const std::array<int, 3>& f) {
        return "F" + std::to_string(f[0]) + std::to_string(f[1]) + std::to_string(f[2]);
    };
    for (const auto& f : faces) b.add_pants(name(f));
    for (const auto& f : faces)
        for (int i : f) {
            std::vector<int> rest;
            for (int v = 0; v < 5; ++v)
                if (v != i) rest.push_back(v);
            std::set<int> pr;
            for (int v : f)
                if (v != i) pr.insert(v);
            int j = rest[0], k = rest[1], l = rest[2], mm = rest[3];
            auto is = [&](int u, int w) { return pr == std::set<int>{u, w}; };
            Slope s = Slope::zero;
            Rational off(0);
            if (is(j, k)) s = Slope::one;
            else if (is(l, mm)) s = Slope::one, off = Rational(1, 2);
            else if (is(j, l)) s = Slope::inf;
            else if (is(k, mm)) s = Slope::inf, off = Rational(1, 2);
            else if (is(j, mm)) s = Slope::zero;
            else s = Slope::zero, off = Rational(1, 2);
            b.loop(name(f), cid(i), s, off);
        }
    for (std::size_t a = 0; a < faces.size(); ++a)
        for (std::size_t c2 = a + 1; c2 < faces.size(); ++c2) {
            int common = 0;
            for (int u : faces[a])
                for (int w : faces[c2]) common += u == w;
            if (common == 2) b.geo(name(faces[a]), name(faces[c2]), Side::N, Side::N);
        }
    return b.c;
}

// Faces of the octahedron with vertices +-e_a, a = 1..3; a face is a sign vector and has
// loops in the cusps s_a e_a. At cusp (a, s_a), with the other coordinates b < c, the face
// loop has slope 0 when s_b = s_c and slope inf otherwise, at offset 0 when s_b = + else 1/2.
inline PantsConfig octahedron_faces(const std::function<bool(const std::array<int, 3>&)>& keep) {
    Builder b;
    std::vector<std::array<int, 3>> faces;
    for (int m = 0; m < 8; ++m) {
        std::array<int, 3> f{m & 1 ? -1 : 1, m & 2 ? -1 : 1, m & 4 ? -1 : 1};
        if (keep(f)) faces.push_back(f);
    }
    auto sg = [](int s) { return s > 0 ? "+" : "-"; };
    auto name = [&](const std::array<int, 3>& f) { return std::string("F") + sg(f[0]) + sg(f[1]) + sg(f[2]); };
    for (const auto& f : faces) b.add_pants(name(f));
    for (const auto& f : faces)
        for (int a = 0; a < 3; ++a) {
            int bb = a == 0 ? 1 : 0, cc = a == 2 ? 1 : 2;
            Slope s = f[bb] == f[cc] ? Slope::zero : Slope::inf;
            Rational off = f[bb] > 0 ? Rational(0) : Rational(1, 2);
            b.loop(name(f), std::string(sg(f[a])) + std::to_string(a + 1), s, off);
        }
    for (std::size_t i = 0; i < faces.size(); ++i)
        for (std::size_t j = i + 1; j < faces.size(); ++j) {
            int diff = 0;
            for (int a = 0; a < 3; ++a) diff += faces[i][a] != faces[j][a];
            if (diff == 1) b.geo(name(faces[i]), name(faces[j]), Side::N, Side::N);
        }
    return b.c;
}

// The eight spheres of M4 in the basis x, y, z, w; loops and geodesic counts come from
// the boundary formula and the slope intersection numbers.
inline PantsConfig m4_spheres() {
    const std::vector<std::pair<std::string, std::vector<long long>>> cls{
        {"x", {1, 0, 0, 0}},     {"y", {0, 1, 0, 0}},      {"z", {0, 0, 1, 0}},     {"w", {0, 0, 0, 1}},
        {"y+z+w", {0, 1, 1, 1}}, {"-x+z+w", {-1, 0, 1, 1}}, {"x+y-w", {1, 1, 0, -1}}, {"x+y+z", {1, 1, 1, 0}}};
    Builder b;
    std::vector<BoundaryClass> bd;
    for (const auto& [name, v] : cls) {
        b.add_pants(name);
        bd.push_back(boundary_class(IntegerClass(Manifold::M4, v)));
    }
    for (int k = 0; k < 4; ++k) b.add_cusp(cid(k + 1));
    std::map<std::string, int> used;
    for (std::size_t i = 0; i < cls.size(); ++i)
        for (int k = 0; k < 4; ++k) {
            auto [p, q] = bd[i].cusps[k];
            long long g = component_count(p, q);
            for (long long r = 0; r < g; ++r) {
                // labels are not faithful here: M4 cusps carry four slopes
                Slope s = q == 0 ? Slope::zero : p == 0 ? Slope::inf : Slope::one;
                int u = used[cid(k + 1)]++;
                b.loop(cls[i].first, cid(k + 1), s, Rational(u, 8));
            }
        }
    for (std::size_t i = 0; i < cls.size(); ++i)
        for (std::size_t j = i + 1; j < cls.size(); ++j) {
            long long pts = 0;
            for (int k = 0; k < 4; ++k) {
                auto [p1, q1] = bd[i].cusps[k];
                auto [p2, q2] = bd[j].cusps[k];
                if ((p1 == 0 && q1 == 0) || (p2 == 0 && q2 == 0)) continue;
                pts += slope_intersection(p1, q1, p2, q2);
            }
            if (pts % 2) throw std::logic_error("m4_spheres: odd number of boundary crossings");
            for (long long r = 0; r < pts / 2; ++r) b.geo(cls[i].first, cls[j].first, Side::N, Side::N, 1);
        }
    return b.c;
}

}  // namespace detail

inline PantsConfig canonical_config(const UnionType& t) {
    using detail::Builder;
    UnionType u = UnionType::make(t.kind, t.n);
    Builder b;
    switch (u.kind) {
        case UnionKind::A: detail::chain(b, u.n, false); break;
        case UnionKind::WhiHat:
            detail::chain(b, u.n, true);
            b.c.framing = 0;
            break;
        case UnionKind::WhiPrimeHat:
            detail::chain(b, u.n, true);
            b.c.framing = 1;
            break;
        case UnionKind::B:
            detail::chain(b, u.n / 2, false);
            detail::blues(b, u.n / 2, false);
            break;
        case UnionKind::Whi:
        case UnionKind::WhiPrime:
            detail::chain(b, u.n / 2, true);
            detail::blues(b, u.n / 2, true);
            b.c.framing = u.kind == UnionKind::Whi ? 0 : 1;
            break;
        case UnionKind::BInf:
        case UnionKind::WhiInf:
            detail::chain(b, 3, false);
            detail::blues(b, 3, false);
            b.c.finite = false;
            b.c.infinite_ends = u.kind == UnionKind::BInf ? 1 : 2;
            break;
        case UnionKind::TetHat2: {
            // the two spheres z and y+z+w of M4, disjoint from its first cusp
            PantsConfig m4 = detail::m4_spheres();
            for (std::string p : {"z", "y+z+w"}) {
                b.add_pants(p);
                for (const auto& l : m4.boundary.at(p)) b.loop(p, l.cusp, l.slope, l.offset);
            }
            for (const auto& g : m4.geodesics)
                if ((g.p == "z" && g.q == "y+z+w") || (g.p == "y+z+w" && g.q == "z")) b.c.geodesics.push_back(g);
            break;
        }
        case UnionKind::Tet8: return detail::m4_spheres();
        case UnionKind::Mag4: {
            // WhiHat_3 and a central sphere meeting each of them twice
            detail::chain(b, 3, true);
            b.add_pants("Z");
            for (int i = 0; i < 3; ++i) {
                b.loop("Z", detail::cid(i), Slope::one, Rational(1, 4));
                b.geo("Z", detail::pid(i), Side::N, Side::N, 1);
                b.geo("Z", detail::pid(i), Side::N, Side::N, 1);
            }
            break;
        }
        case UnionKind::Bor6: {
            // each ring X spans an inner sphere X_in and an outer sphere X_out in its plane;
            // A punctures B_in and C_out, B punctures C_in and A_out, C punctures A_in and B_out
            const std::array<std::string, 3> R{"A", "B", "C"};
            for (const auto& r : R)
                for (std::string io : {"_in", "_out"}) b.add_pants(r + io);
            for (const auto& r : R) b.add_cusp(r);
            std::map<std::string, int> used;
            auto mer = [&](const std::string& p, const std::string& ring) {
                for (int k = 0; k < 2; ++k) b.loop(p, ring, Slope::zero, Rational(used[ring]++, 4));
            };
            for (int i = 0; i < 3; ++i) {
                const auto &X = R[i], &Y = R[(i + 1) % 3], &Z = R[(i + 2) % 3];
                b.loop(X + "_in", X, Slope::inf, Rational(0));
                mer(X + "_in", Z);
                b.loop(X + "_out", X, Slope::inf, Rational(1, 2));
                mer(X + "_out", Y);
            }
            for (int i = 0; i < 3; ++i) {
                const auto &X = R[i], &Y = R[(i + 1) % 3];
                b.geo(X + "_out", Y + "_in", Side::N, Side::N);
                b.geo(X + "_out", Y + "_in", Side::N, Side::N);
                b.geo(X + "_in", Y + "_in", Side::S, Side::N);
                b.geo(Y + "_out", X + "_out", Side::S, Side::N);
            }
            break;
        }
        case UnionKind::Pen10: return detail::pentachoron_faces([](const auto&) { return true; });
        case UnionKind::T3:
            return detail::pentachoron_faces([](const auto& f) { return f[0] == 0 && f[1] == 1; });
        case UnionKind::PenHat4:
            return detail::pentachoron_faces([](const auto& f) { return f[2] != 4; });
        case UnionKind::Oct8: return detail::octahedron_faces([](const auto&) { return true; });
        case UnionKind::OctHat4: return detail::octahedron_faces([](const auto& f) { return f[0] < 0; });
        case UnionKind::T4:
            return detail::octahedron_faces([](const auto& f) { return f[0] + f[1] + f[2] <= -1; });
    }
    return b.c;
}

}  // namespace tps
