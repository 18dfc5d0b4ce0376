#pragma once
// Command-line surface: JSON I/O for pants configurations and results, and one handler
// per subcommand. run_cli is the whole program; the binary only forwards argv.

#include "tps/bounds.hpp"
#include "tps/holonomy.hpp"
#include "tps/homology.hpp"
#include "tps/pants.hpp"
#include "tps/region.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace tps {

using ojson = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

enum class ExitCode { ok = 0, error = 1, invalid_input = 2, not_ok = 3 };

struct InvalidInput : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// ---- JSON <-> PantsConfig ----

namespace json_detail {

[[noreturn]] inline void bad(const std::string& where, const std::string& what) {
    throw InvalidInput("invalid PantsConfig at " + where + ": " + what);
}

inline void only_keys(const ojson& j, const std::string& where, std::initializer_list<const char*> keys) {
    if (!j.is_object()) bad(where, "expected an object");
    for (auto it = j.begin(); it != j.end(); ++it) {
        bool known = false;
        for (const char* k : keys) known |= it.key() == k;
        if (!known) bad(where, "unknown field '" + it.key() + "'");
    }
}

inline const ojson& need(const ojson& j, const char* key, const std::string& where) {
    auto it = j.find(key);
    if (it == j.end()) bad(where, std::string("missing field '") + key + "'");
    return *it;
}

inline std::string str(const ojson& j, const std::string& where) {
    if (!j.is_string()) bad(where, "expected a string");
    return j.get<std::string>();
}

inline std::vector<std::string> str_list(const ojson& j, const std::string& where) {
    if (!j.is_array()) bad(where, "expected an array of strings");
    std::vector<std::string> out;
    for (std::size_t i = 0; i < j.size(); ++i) out.push_back(str(j[i], where + "[" + std::to_string(i) + "]"));
    return out;
}

}  // namespace json_detail

inline ojson to_json(const PantsConfig& c) {
    ojson j;
    j["schema"] = kSchemaVersion;
    j["pants"] = c.pants;
    j["cusps"] = c.cusps;
    ojson b = ojson::object();
    for (const auto& p : c.pants) {
        ojson loops = ojson::array();
        auto it = c.boundary.find(p);
        if (it != c.boundary.end())
            for (const auto& l : it->second)
                loops.push_back({{"cusp", l.cusp}, {"slope", to_string(l.slope)}, {"offset", l.offset.str()}});
        b[p] = loops;
    }
    j["boundary"] = b;
    ojson g = ojson::array();
    for (const auto& x : c.geodesics) {
        ojson e{{"pants", {x.p, x.q}}, {"sides", {to_string(x.side_p), to_string(x.side_q)}}};
        if (x.sign) e["sign"] = *x.sign;
        g.push_back(e);
    }
    j["geodesics"] = g;
    j["framing"] = c.framing ? ojson(*c.framing) : ojson(nullptr);
    j["finite"] = c.finite;
    j["infinite_ends"] = c.infinite_ends;
    return j;
}

inline PantsConfig pants_config_from_json(const ojson& j) {
    using namespace json_detail;
    only_keys(j, "$", {"schema", "pants", "cusps", "boundary", "geodesics", "framing", "finite", "infinite_ends"});
    const ojson& v = need(j, "schema", "$");
    if (!v.is_number_integer() || v.get<int>() != kSchemaVersion) bad("$.schema", "unsupported schema version");
    PantsConfig c;
    c.pants = str_list(need(j, "pants", "$"), "$.pants");
    c.cusps = str_list(need(j, "cusps", "$"), "$.cusps");
    const ojson& b = need(j, "boundary", "$");
    if (!b.is_object()) bad("$.boundary", "expected an object keyed by pants");
    for (auto it = b.begin(); it != b.end(); ++it) {
        std::string w = "$.boundary." + it.key();
        if (!it->is_array()) bad(w, "expected an array of loops");
        auto& loops = c.boundary[it.key()];
        for (std::size_t k = 0; k < it->size(); ++k) {
            const ojson& l = (*it)[k];
            std::string wl = w + "[" + std::to_string(k) + "]";
            only_keys(l, wl, {"cusp", "slope", "offset"});
            BoundaryLoop bl;
            bl.cusp = str(need(l, "cusp", wl), wl + ".cusp");
            try {
                bl.slope = slope_from_string(str(need(l, "slope", wl), wl + ".slope"));
                if (l.contains("offset")) bl.offset = Rational::parse(str(l["offset"], wl + ".offset"));
            } catch (const InvalidInput&) {
                throw;
            } catch (const std::exception& e) {
                bad(wl, e.what());
            }
            loops.push_back(bl);
        }
    }
    const ojson& g = need(j, "geodesics", "$");
    if (!g.is_array()) bad("$.geodesics", "expected an array");
    for (std::size_t k = 0; k < g.size(); ++k) {
        std::string w = "$.geodesics[" + std::to_string(k) + "]";
        only_keys(g[k], w, {"pants", "sides", "sign"});
        auto ps = str_list(need(g[k], "pants", w), w + ".pants");
        auto ss = str_list(need(g[k], "sides", w), w + ".sides");
        if (ps.size() != 2) bad(w + ".pants", "expected two pants");
        if (ss.size() != 2) bad(w + ".sides", "expected two side labels");
        Geodesic x;
        x.p = ps[0];
        x.q = ps[1];
        try {
            x.side_p = side_from_string(ss[0]);
            x.side_q = side_from_string(ss[1]);
        } catch (const std::exception& e) {
            bad(w + ".sides", e.what());
        }
        if (g[k].contains("sign")) {
            const ojson& s = g[k]["sign"];
            if (!s.is_number_integer() || (s.get<int>() != 1 && s.get<int>() != -1)) bad(w + ".sign", "expected 1 or -1");
            x.sign = s.get<int>();
        }
        c.geodesics.push_back(x);
    }
    if (j.contains("framing") && !j["framing"].is_null()) {
        const ojson& f = j["framing"];
        if (!f.is_number_integer() || (f.get<int>() != 0 && f.get<int>() != 1)) bad("$.framing", "expected 0, 1 or null");
        c.framing = f.get<int>();
    }
    if (j.contains("finite")) {
        if (!j["finite"].is_boolean()) bad("$.finite", "expected a boolean");
        c.finite = j["finite"].get<bool>();
    }
    if (j.contains("infinite_ends")) {
        const ojson& e = j["infinite_ends"];
        if (!e.is_number_integer()) bad("$.infinite_ends", "expected 0, 1 or 2");
        c.infinite_ends = e.get<int>();
    }
    return c;
}

// Parses text, turning syntax errors into InvalidInput with line, column and byte offset.
inline ojson parse_json_text(const std::string& text, const std::string& source) {
    try {
        return ojson::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        std::size_t byte = e.byte == 0 ? 0 : e.byte - 1;
        std::size_t line = 1, col = 1;
        for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
            if (text[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        throw InvalidInput("malformed JSON in " + source + " at line " + std::to_string(line) + ", column " +
                           std::to_string(col) + " (byte " + std::to_string(e.byte) + "): " + e.what());
    }
}

inline ojson union_type_json(const UnionType& t) {
    return {{"type", to_string(t.kind)}, {"n", t.kind == UnionKind::BInf || t.kind == UnionKind::WhiInf ? 0 : t.n}, {"name", t.str()}};
}

// ---- schema documentation ----

inline ojson pants_config_schema() {
    ojson loop = {
        {"type", "object"},
        {"description", "A boundary loop: a closed geodesic of the given slope in the cusp torus R^2/Z^2. "
                        "Slope 0 is y = offset, slope inf is x = offset, slope 1 is y - x = offset."},
        {"required", {"cusp", "slope"}},
        {"additionalProperties", false},
        {"properties",
         {{"cusp", {{"type", "string"}, {"description", "cusp identifier, one of $.cusps"}}},
          {"slope", {{"enum", {"0", "1", "inf"}}}},
          {"offset",
           {{"type", "string"},
            {"pattern", "^[0-9]+(/[0-9]+)?$"},
            {"description", "rational in [0,1), default 0; loops of one slope in one cusp need distinct offsets"}}}}}};
    ojson geo = {
        {"type", "object"},
        {"description", "One intersection geodesic of two 3-punctured spheres."},
        {"required", {"pants", "sides"}},
        {"additionalProperties", false},
        {"properties",
         {{"pants", {{"type", "array"}, {"items", {{"type", "string"}}}, {"minItems", 2}, {"maxItems", 2}}},
          {"sides",
           {{"type", "array"},
            {"items", {{"enum", {"N", "S"}}}},
            {"minItems", 2},
            {"maxItems", 2},
            {"description", "side label per pants, in the order of 'pants': N if the geodesic is non-separating "
                            "in that 3-punctured sphere, S if it is separating"}}},
          {"sign",
           {{"enum", {1, -1}},
            {"description", "optional crossing sign of the two boundary loops at the cusp end; decides hyperbolicity "
                            "of crossed double (N,N)-intersections"}}}}}};
    return {{"$schema", "https://json-schema.org/draft/2020-12/schema"},
            {"title", "PantsConfig"},
            {"type", "object"},
            {"required", {"schema", "pants", "cusps", "boundary", "geodesics"}},
            {"additionalProperties", false},
            {"properties",
             {{"schema", {{"const", kSchemaVersion}}},
              {"pants", {{"type", "array"}, {"items", {{"type", "string"}}}, {"description", "3-punctured sphere identifiers"}}},
              {"cusps", {{"type", "array"}, {"items", {{"type", "string"}}}, {"description", "cusp identifiers"}}},
              {"boundary",
               {{"type", "object"},
                {"description", "exactly three loops per pants"},
                {"additionalProperties", {{"type", "array"}, {"minItems", 3}, {"maxItems", 3}, {"items", loop}}}}},
              {"geodesics", {{"type", "array"}, {"items", geo}}},
              {"framing",
               {{"enum", {0, 1, nullptr}},
                {"description", "0 for Whi-type neighbourhoods of cyclic families, 1 for Whi'-type, null if unknown"}}},
              {"finite", {{"type", "boolean"}, {"description", "false for a window of an infinite union"}}},
              {"infinite_ends",
               {{"enum", {0, 1, 2}},
                {"description", "for finite = false: 1 if the union is infinite in one direction, 2 if in both"}}}}}};
}

inline ojson schema_docs() {
    ojson result = {
        {"type", "object"},
        {"required", {"schema", "command", "status", "payload", "citations", "reasons"}},
        {"properties",
         {{"schema", {{"const", kSchemaVersion}}},
          {"command", {{"type", "string"}}},
          {"status", {{"enum", {"ok", "invalid-input", "impossible", "ambiguous", "error"}}}},
          {"payload", {{"type", "object"}}},
          {"citations", {{"type", "array"}, {"items", {{"type", "string"}}}, {"description", "rules used in the decision"}}},
          {"reasons", {{"type", "array"}, {"items", {{"type", "string"}}}, {"description", "non-empty unless status is ok"}}}}}};
    ojson payloads = {
        {"classify", "ok: {type, n, name, ambient: general|determines|dehn_filling_of, manifold?}; "
                     "impossible: {reason}; ambiguous: {candidates: [{type, n, name}]}"},
        {"validate", "{violations: [{rule, detail}]}"},
        {"canonical", "a PantsConfig"},
        {"region", "{tau, backend, membership: inside|boundary|outside|indeterminate, violated, tight} | {arcs} | "
                   "{min_argument, max_argument} | {ok, points, feasible, exact_fallbacks, witness?}"},
        {"holonomy", "{residual, parabolic} | {meridian_normalization} | {modulus, commutator_trace}"},
        {"enumerate", "{case, tuples, count, ...}"},
        {"norm", "{manifold, class, norm, norm_decimal} | {manifold, class, sum, abs_sum, even}"},
        {"bounds", "{k, ok, equality, bound, disjoint_lb, termwise, volume} | {length_sq, length, meridian_sq, meridian} | "
                   "{core_bound} | {hyperbolic} | {max_disjoint} | {catalog} | {L_min_sq, L_min, core_bound}"},
        {"plot", "{path, bytes}"}};
    return {{"schema", kSchemaVersion}, {"pants_config", pants_config_schema()}, {"result", result}, {"payloads", payloads}};
}

// ---- results and output ----

struct CommandResult {
    std::string status = "ok";
    ojson payload = ojson::object();
    std::vector<std::string> citations;
    std::vector<std::string> reasons;

    ExitCode exit_code() const {
        if (status == "ok") return ExitCode::ok;
        if (status == "invalid-input") return ExitCode::invalid_input;
        if (status == "impossible" || status == "ambiguous") return ExitCode::not_ok;
        return ExitCode::error;
    }
};

inline std::string render(const std::string& command, const CommandResult& r) {
    ojson j;
    j["schema"] = kSchemaVersion;
    j["command"] = command;
    j["status"] = r.status;
    j["payload"] = r.payload;
    j["citations"] = r.citations;
    j["reasons"] = r.reasons;
    return j.dump(2) + "\n";
}

inline void atomic_write(const std::filesystem::path& path, const std::string& data) {
    std::filesystem::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
        if (!f) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
        f << data;
        f.flush();
        if (!f) throw std::runtime_error("write to " + tmp.string() + " failed");
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        std::filesystem::remove(tmp);
        throw std::runtime_error("cannot rename " + tmp.string() + " to " + path.string() + ": " + ec.message());
    }
}

inline double default_tolerance() {
    if (const char* s = std::getenv("TPS_FLOAT_TOL")) {
        char* end = nullptr;
        double v = std::strtod(s, &end);
        if (end == s || *end != '\0' || !(v > 0)) throw InvalidInput(std::string("TPS_FLOAT_TOL is not a positive number: ") + s);
        return v;
    }
    return kDefaultTol;
}

// ---- handlers ----

namespace cli_detail {

inline std::string read_input(const std::string& path, std::istream& in) {
    std::ostringstream ss;
    if (path.empty() || path == "-") {
        ss << in.rdbuf();
    } else {
        std::ifstream f(path, std::ios::binary);
        if (!f) throw InvalidInput("cannot read input file '" + path + "'");
        ss << f.rdbuf();
    }
    return ss.str();
}

inline PantsConfig load_config(const std::string& path, std::istream& in) {
    std::string src = path.empty() || path == "-" ? "<stdin>" : path;
    return pants_config_from_json(parse_json_text(read_input(path, in), src));
}

inline CommandResult classify_cmd(const PantsConfig& c) {
    Classification r = classify(c);
    CommandResult out;
    out.citations = r.citations;
    switch (r.status) {
        case Classification::Status::ok: {
            out.payload = union_type_json(*r.type);
            Ambient a = ambient_consequence(*r.type);
            out.payload["ambient"] = to_string(a.kind);
            if (a.kind != Ambient::Kind::general) out.payload["manifold"] = a.manifold;
            break;
        }
        case Classification::Status::impossible:
            out.status = "impossible";
            out.payload = {{"reason", r.reason}};
            out.reasons = {r.reason};
            break;
        case Classification::Status::ambiguous: {
            out.status = "ambiguous";
            ojson cands = ojson::array();
            for (const auto& t : r.candidates) cands.push_back(union_type_json(t));
            out.payload = {{"candidates", cands}};
            out.reasons = {r.reason};
            break;
        }
    }
    return out;
}

inline CommandResult validate_cmd(const PantsConfig& c) {
    CommandResult out;
    ojson vs = ojson::array();
    for (const auto& v : validate_local(c)) {
        vs.push_back({{"rule", v.rule}, {"detail", v.detail}});
        if (std::find(out.citations.begin(), out.citations.end(), v.rule) == out.citations.end()) out.citations.push_back(v.rule);
        out.reasons.push_back(v.detail);
    }
    if (!vs.empty()) out.status = "impossible";
    out.payload = {{"violations", vs}};
    return out;
}

inline ojson constraint_list(const std::vector<RegionConstraint>& cs) {
    ojson a = ojson::array();
    for (const auto& c : cs) a.push_back(c.str());
    return a;
}

inline ojson point_json(const ArcPoint& p) {
    return {{"x", p.x.str()}, {"y_squared", p.y2.str()}, {"exact", p.exact().str()}, {"x_decimal", p.xd()}, {"y_decimal", p.yd()}};
}

template <class F>
CommandResult membership_cmd(const Complex<F>& tau, const char* backend, double tol) {
    auto m = membership(tau, tol);
    CommandResult out;
    out.payload = {{"tau", tau.str()},
                   {"backend", backend},
                   {"membership", to_string(m.verdict)},
                   {"violated", constraint_list(m.violated)},
                   {"tight", constraint_list(m.tight)}};
    return out;
}

// A real component given as a rational string or as {"a": p, "b": q, "d": d} for p + q sqrt(d).
inline QuadExt quad_from_json(const ojson& j, const std::string& where) {
    if (j.is_string()) return QuadExt(Rational::parse(j.get<std::string>()));
    if (j.is_number_integer()) return QuadExt(Rational(j.get<long long>()));
    if (!j.is_object()) throw InvalidInput(where + ": expected a rational string or {a, b, d}");
    for (auto it = j.begin(); it != j.end(); ++it)
        if (it.key() != "a" && it.key() != "b" && it.key() != "d") throw InvalidInput(where + ": unknown field '" + it.key() + "'");
    auto rat = [&](const char* k) {
        if (!j.contains(k)) return Rational(0);
        const ojson& v = j[k];
        if (v.is_string()) return Rational::parse(v.get<std::string>());
        if (v.is_number_integer()) return Rational(v.get<long long>());
        throw InvalidInput(where + "." + k + ": expected a rational");
    };
    if (!j.contains("d") || !j["d"].is_number_integer() || j["d"].get<long long>() < 2)
        throw InvalidInput(where + ".d: expected a squarefree integer >= 2");
    long long d = j["d"].get<long long>();
    if (!is_squarefree(BigInt(d))) throw InvalidInput(where + ".d: " + std::to_string(d) + " is not squarefree");
    return QuadExt(rat("a"), rat("b"), d);
}

inline std::vector<Rational> rational_list(const std::string& s) {
    std::vector<Rational> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(Rational::parse(tok));
    if (out.empty()) throw InvalidInput("empty coefficient list");
    return out;
}

inline std::vector<long long> integer_list(const std::string& s) {
    std::vector<long long> out;
    for (const auto& r : rational_list(s)) {
        if (r.den() != 1) throw InvalidInput("coefficient " + r.str() + " is not an integer");
        out.push_back(static_cast<long long>(r.num()));
    }
    return out;
}

inline ojson rational_json(const Rational& r) { return {{"exact", r.str()}, {"decimal", r.to_double()}}; }

inline TypeCensus parse_census(const std::vector<std::string>& items) {
    TypeCensus c;
    for (const auto& item : items) {
        std::stringstream ss(item);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            auto eq = tok.find('=');
            if (eq == std::string::npos) throw InvalidInput("census entry '" + tok + "' is not key=count");
            std::string key = tok.substr(0, eq);
            long long cnt = 0;
            try {
                std::size_t used = 0;
                cnt = std::stoll(tok.substr(eq + 1), &used);
                if (used != tok.size() - eq - 1) throw std::invalid_argument("trailing characters");
            } catch (const std::exception&) {
                throw InvalidInput("census count in '" + tok + "' is not an integer");
            }
            auto sub = [&]() -> long long {
                std::string digits = key.substr(1);
                if (digits.empty() || !std::all_of(digits.begin(), digits.end(), ::isdigit))
                    throw InvalidInput("census key '" + key + "' needs a subscript, e.g. a3 or b4");
                return std::stoll(digits);
            };
            if (key == "t3") c.t3 += cnt;
            else if (key == "t4") c.t4 += cnt;
            else if (!key.empty() && key[0] == 'a') c.a[sub()] += cnt;
            else if (!key.empty() && key[0] == 'b') {
                long long s = sub();
                if (s % 2) throw InvalidInput("census key '" + key + "': B subscripts are even");
                c.b[s / 2] += cnt;
            } else {
                throw InvalidInput("unknown census key '" + key + "' (use t3, t4, a<n>, b<2n>)");
            }
        }
    }
    return c;
}

inline ojson volume_json(const Volume& v) { return {{"expr", v.expr()}, {"decimal", v.value()}}; }

inline std::optional<Rational> slope_or_inf(const std::string& s) {
    if (s == "inf") return std::nullopt;
    return Rational::parse(s);
}

}  // namespace cli_detail

// Runs one invocation. args excludes the program name.
inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, std::istream& in) {
    using namespace cli_detail;
    CLI::App app{"Unions of totally geodesic 3-punctured spheres: classification, cusp region, holonomy, "
                 "enumerations, norms and bounds"};
    app.require_subcommand(1);
    app.fallthrough();
    std::string json_out;
    std::optional<double> tol_flag;
    app.add_option("--json-out", json_out, "write the result document to this file (atomic) instead of stdout");
    app.add_option("--tol", tol_flag, "float tolerance (default: TPS_FLOAT_TOL or 1e-9)")->check(CLI::PositiveNumber);

    std::string input;
    auto* classify_c = app.add_subcommand("classify", "classify a PantsConfig document");
    classify_c->add_option("--input,-i", input, "PantsConfig JSON file, '-' or absent for stdin");
    auto* validate_c = app.add_subcommand("validate", "list local rule violations of a PantsConfig document");
    validate_c->add_option("--input,-i", input, "PantsConfig JSON file, '-' or absent for stdin");
    std::string type_name;
    int type_n = 0;
    auto* canonical_c = app.add_subcommand("canonical", "print the canonical PantsConfig of a union type");
    canonical_c->add_option("--type", type_name, "type name, e.g. A, Whi, Bor6, WhiInf")->required();
    canonical_c->add_option("--n", type_n, "subscript (number of 3-punctured spheres) for parametrised types");

    std::string tau_s, tau_json, tau_prime_s;
    bool use_float = false, arcs = false, extremes = false;
    std::vector<long> verify;
    auto* region_c = app.add_subcommand("region", "membership in the reduced cusp-modulus region and its boundary");
    auto* r_tau = region_c->add_option("--tau", tau_s, "modulus a+bi with rational a, b");
    auto* r_tauj = region_c->add_option("--tau-json", tau_json, "modulus {\"re\": q, \"im\": q} with q a rational or {a, b, d}");
    region_c->add_flag("--float", use_float, "use the floating-point backend with tolerance --tol");
    auto* r_arcs = region_c->add_flag("--arcs", arcs, "list the boundary arcs");
    auto* r_ext = region_c->add_flag("--extremes", extremes, "minimal and maximal argument on the region");
    auto* r_ver = region_c->add_option("--verify", verify, "DENSITY MN_BOUND: grid check of the reduction")->expected(2);
    r_tau->excludes(r_tauj)->excludes(r_arcs)->excludes(r_ext)->excludes(r_ver);
    r_tauj->excludes(r_arcs)->excludes(r_ext)->excludes(r_ver);
    r_arcs->excludes(r_ext)->excludes(r_ver);
    r_ext->excludes(r_ver);

    bool normalization = false, btype = false;
    auto* hol_c = app.add_subcommand("holonomy", "holonomy checks for adjacent cusp moduli");
    auto* h_tau = hol_c->add_option("--tau", tau_s, "modulus tau as a+bi");
    auto* h_taup = hol_c->add_option("--tau-prime", tau_prime_s, "modulus tau' as a+bi");
    auto* h_norm = hol_c->add_flag("--normalization", normalization, "solve the meridian normalization");
    auto* h_b = hol_c->add_flag("--b-type", btype, "modulus forced by the B-type commutator");
    hol_c->add_flag("--float", use_float, "use the floating-point backend for --tau/--tau-prime");
    h_tau->needs(h_taup);
    h_taup->needs(h_tau);
    h_tau->excludes(h_norm)->excludes(h_b);
    h_norm->excludes(h_b);

    std::string ecase;
    int bound = 0;
    auto* enum_c = app.add_subcommand("enumerate", "integer case enumerations");
    enum_c->add_option("--case", ecase, "whi3 or tet2")->required()->check(CLI::IsMember({"whi3", "tet2"}));
    enum_c->add_option("--bound", bound, "box (whi3, default 2) or search bound (tet2, default 3)");

    std::string manifold_s, class_s;
    bool xyzw = false;
    auto* norm_c = app.add_subcommand("norm", "Thurston norm of a class, or the M6 parity obstruction");
    norm_c->add_option("--manifold", manifold_s, "W2, WPrime2, M3, M4, ChainFilled or M6")->required();
    norm_c->add_option("--class", class_s, "comma-separated coefficients in the polytope basis")->required();
    norm_c->add_flag("--xyzw", xyzw, "M4 only: coefficients are in the x, y, z, w basis");

    std::vector<std::string> census;
    std::optional<long long> vol_mult, len_n, mont_n, conv_n, cat_n;
    std::optional<double> vol_dec, core_L, disjoint_vol;
    double vol_tol = kPrintedTol;
    std::string vol_manifold, r_s = "0";
    long long vol_manifold_n = 0;
    auto* bounds_c = app.add_subcommand("bounds", "volume counting bound, filling lengths and Montesinos exclusions");
    auto* b_census = bounds_c->add_option("--census", census, "type counts, e.g. t4=1,a3=2,b4=1")->take_all();
    auto* b_mult = bounds_c->add_option("--vol-mult-voct", vol_mult, "volume as an integer multiple of V_oct");
    auto* b_vol = bounds_c->add_option("--volume", vol_dec, "volume as a decimal");
    bounds_c->add_option("--vol-tol", vol_tol, "tolerance of --volume")->check(CLI::PositiveNumber);
    auto* b_man = bounds_c->add_option("--vol-manifold", vol_manifold, "volume of a catalog manifold: W, WPrime, M3..M6");
    bounds_c->add_option("--vol-n", vol_manifold_n, "family parameter for --vol-manifold W/WPrime");
    auto* b_len = bounds_c->add_option("--length", len_n, "N: normalized length lower bound for n = N, with --r");
    bounds_c->add_option("--r", r_s, "rational r for --length, rational or 'inf' for --montesinos");
    auto* b_core = bounds_c->add_option("--core", core_L, "L: core length bound for a slope of length L");
    auto* b_mont = bounds_c->add_option("--montesinos", mont_n, "N: is the Montesinos filling with --r hyperbolic");
    auto* b_disj = bounds_c->add_option("--disjoint", disjoint_vol, "VOL: maximal number of disjoint 3-punctured spheres");
    auto* b_conv = bounds_c->add_option("--convergence", conv_n, "N: length and core bounds for the n-th filling");
    auto* b_cat = bounds_c->add_option("--catalog", cat_n, "N_MAX: counting bound over the special catalog");
    b_mult->excludes(b_vol)->excludes(b_man);
    b_vol->excludes(b_man);
    for (auto* o : {b_len, b_core, b_mont, b_disj, b_conv, b_cat}) o->excludes(b_census);
    b_len->excludes(b_core)->excludes(b_mont)->excludes(b_disj)->excludes(b_conv)->excludes(b_cat);
    b_core->excludes(b_mont)->excludes(b_disj)->excludes(b_conv)->excludes(b_cat);
    b_mont->excludes(b_disj)->excludes(b_conv)->excludes(b_cat);
    b_disj->excludes(b_conv)->excludes(b_cat);
    b_conv->excludes(b_cat);

    std::string svg_path;
    int resolution = 800;
    auto* plot_c = app.add_subcommand("plot", "SVG plot of the cusp-modulus region");
    plot_c->add_option("--output,-o", svg_path, "SVG file to write")->required();
    plot_c->add_option("--resolution", resolution, "width in pixels (>= 100)");

    app.add_subcommand("schema", "print the versioned JSON schemas");

    std::string command = "?";
    auto emit = [&](const CommandResult& r) {
        std::string doc = render(command, r);
        if (json_out.empty()) out << doc;
        else atomic_write(json_out, doc);
        return int(r.exit_code());
    };
    auto invalid = [&](const std::string& msg) {
        CommandResult r;
        r.status = "invalid-input";
        r.reasons = {msg};
        err << "error: " << msg << "\n";
        return r;
    };

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        for (auto* s : app.get_subcommands()) command = s->get_name();
        return emit(invalid(e.what()));
    }
    command = app.get_subcommands().front()->get_name();

    try {
        double tol = tol_flag ? *tol_flag : default_tolerance();
        CommandResult r;
        if (command == "classify") {
            r = classify_cmd(load_config(input, in));
        } else if (command == "validate") {
            r = validate_cmd(load_config(input, in));
        } else if (command == "canonical") {
            r.payload = to_json(canonical_config(UnionType::make(union_kind_from_string(type_name), type_n)));
        } else if (command == "region") {
            if (!tau_s.empty()) {
                CQ tau = parse_complex(tau_s);
                r = use_float ? membership_cmd(CF(tau.re.to_double(), tau.im.to_double()), "float", tol)
                              : membership_cmd(tau, "rational", tol);
            } else if (!tau_json.empty()) {
                ojson j = parse_json_text(tau_json, "--tau-json");
                if (!j.is_object() || !j.contains("re") || !j.contains("im") || j.size() != 2)
                    throw InvalidInput("--tau-json: expected {\"re\": ..., \"im\": ...}");
                CQuad tau(quad_from_json(j["re"], "re"), quad_from_json(j["im"], "im"));
                r = use_float ? membership_cmd(CF(tau.re.to_double(), tau.im.to_double()), "float", tol)
                              : membership_cmd(tau, "quadratic", tol);
            } else if (arcs) {
                ojson a = ojson::array();
                for (const auto& arc : boundary_arcs())
                    a.push_back({{"constraint", arc.constraint.str()},
                                 {"center", arc.center.str()},
                                 {"radius", arc.radius.str()},
                                 {"start", point_json(arc.start.point)},
                                 {"end", point_json(arc.end.point)}});
                r.payload = {{"count", a.size()}, {"arcs", a}};
            } else if (extremes) {
                auto ext = [](const ArgumentExtreme& e) {
                    return ojson{{"value", e.value}, {"witness", point_json(e.witness)}, {"through", constraint_list(e.through)}};
                };
                r.payload = {{"min_argument", ext(min_argument())}, {"max_argument", ext(max_argument())}};
            } else if (!verify.empty()) {
                auto rep = verify_reduction_report(verify[0], verify[1], 1);
                r.payload = {{"ok", rep.ok}, {"points", rep.points}, {"feasible", rep.feasible}, {"exact_fallbacks", rep.exact_fallbacks}};
                if (!rep.ok) r.payload["witness"] = {{"i", rep.i}, {"j", rep.j}, {"constraint", rep.witness.str()}};
            } else {
                throw InvalidInput("region needs one of --tau, --tau-json, --arcs, --extremes, --verify");
            }
        } else if (command == "holonomy") {
            if (!tau_s.empty()) {
                CQ t = parse_complex(tau_s), tp = parse_complex(tau_prime_s);
                if (use_float) {
                    CuspModulus<double> a(CF(t.re.to_double(), t.im.to_double()), tol), b(CF(tp.re.to_double(), tp.im.to_double()), tol);
                    r.payload = {{"backend", "float"},
                                 {"residual", modulus_equality_residual(a, b).str()},
                                 {"parabolic", modulus_parabolic(a, b, tol)}};
                } else {
                    CuspModulus<Rational> a(t), b(tp);
                    r.payload = {{"backend", "rational"},
                                 {"residual", modulus_equality_residual(a, b).str()},
                                 {"parabolic", modulus_parabolic(a, b)}};
                }
            } else if (normalization) {
                r.payload = {{"meridian_normalization", solve_meridian_normalization().str()}};
            } else if (btype) {
                CQ tau = b_type_modulus();
                r.payload = {{"modulus", tau.str()}, {"commutator_trace", b_type_commutator(tau).trace().str()}};
            } else {
                throw InvalidInput("holonomy needs --tau/--tau-prime, --normalization or --b-type");
            }
        } else if (command == "enumerate") {
            if (ecase == "whi3") {
                ojson t = ojson::array();
                for (const auto& x : enumerate_whi3(bound ? bound : 2)) t.push_back(x);
                r.payload = {{"case", "whi3"}, {"count", t.size()}, {"tuples", t}};
            } else {
                auto res = enumerate_tet2(bound ? bound : 3);
                auto set_json = [](const std::set<std::array<int, 4>>& s) {
                    ojson a = ojson::array();
                    for (const auto& x : s) a.push_back(x);
                    return a;
                };
                ojson f = ojson::array();
                for (const auto& cs : res.filtered)
                    f.push_back({{"tuple", cs.t}, {"slope", {cs.p, cs.q}}, {"k", cs.k}, {"components_off_filled", cs.components_off_filled}});
                r.payload = {{"case", "tet2"},
                             {"raw_count", res.raw.size()},
                             {"zero_case", set_json(res.zero_case)},
                             {"zero_case_odd", set_json(res.zero_case_odd)},
                             {"nonzero_count", res.nonzero_case.size()},
                             {"filtered", f}};
            }
        } else if (command == "norm") {
            Manifold m = manifold_from_string(manifold_s);
            if (m == Manifold::M6) {
                auto p = m6_parity_obstruction(IntegerClass(m, integer_list(class_s)));
                r.payload = {{"manifold", manifold_s}, {"class", class_s}, {"sum", p.sum}, {"abs_sum", p.abs_sum}, {"even", p.even}};
            } else {
                std::vector<Rational> c;
                if (xyzw) {
                    if (m != Manifold::M4) throw InvalidInput("--xyzw applies to M4 only");
                    auto abcd = integer_list(class_s);
                    if (abcd.size() != 4) throw InvalidInput("--xyzw needs four coefficients");
                    for (long long u : m4_u_coordinates(abcd)) c.push_back(Rational(u));
                } else {
                    c = rational_list(class_s);
                }
                Rational nv = thurston_norm(catalog_norm_ball(m), c);
                r.payload = {{"manifold", manifold_s}, {"class", class_s}, {"norm", nv.str()}, {"norm_decimal", nv.to_double()}};
            }
        } else if (command == "bounds") {
            auto require_r = [&] {
                if (r_s == "inf") throw InvalidInput("--r inf is only meaningful for --montesinos");
                return Rational::parse(r_s);
            };
            if (!census.empty()) {
                Volume v;
                if (vol_mult) v = Volume::of_oct(*vol_mult);
                else if (vol_dec) v = Volume::of_printed(*vol_dec, vol_tol);
                else if (!vol_manifold.empty()) v = catalog_volume(vol_manifold, vol_manifold_n);
                else throw InvalidInput("--census needs --vol-mult-voct, --volume or --vol-manifold");
                auto cr = counting_bound_check(parse_census(census), v);
                r.payload = {{"k", cr.k},       {"ok", cr.ok},
                             {"equality", cr.equality}, {"bound", cr.bound},
                             {"disjoint_lb", cr.disjoint_lb}, {"termwise", cr.termwise},
                             {"volume", volume_json(v)}};
            } else if (len_n) {
                auto lb = normalized_length_lower_bound(*len_n, require_r());
                r.payload = {{"length_sq", rational_json(lb.length_sq)},
                             {"length", lb.length()},
                             {"meridian_sq", rational_json(lb.meridian_sq)},
                             {"meridian", lb.meridian()}};
            } else if (core_L) {
                r.payload = {{"L", *core_L}, {"core_bound", core_length_bound(*core_L)}};
            } else if (mont_n) {
                r.payload = {{"n", *mont_n}, {"r", r_s}, {"hyperbolic", montesinos_hyperbolic(*mont_n, slope_or_inf(r_s))}};
            } else if (disjoint_vol) {
                r.payload = {{"volume", *disjoint_vol}, {"max_disjoint", max_disjoint_pants(*disjoint_vol)}};
            } else if (conv_n) {
                auto cr = convergence_report(*conv_n);
                r.payload = {{"L_min_sq", rational_json(cr.L_min_sq)}, {"L_min", cr.L_min}};
                r.payload["core_bound"] = cr.core_bound ? ojson(*cr.core_bound) : ojson(nullptr);
            } else if (cat_n) {
                ojson a = ojson::array();
                for (const auto& e : special_catalog(*cat_n)) {
                    auto cb = catalog_bound(e);
                    a.push_back({{"type", e.type}, {"manifold", e.manifold}, {"n", e.n}, {"k", e.k},
                                 {"volume", volume_json(e.vol)}, {"bound", cb.bound}, {"ok", cb.ok}, {"equality", cb.equality}});
                }
                r.payload = {{"catalog", a}};
            } else {
                throw InvalidInput("bounds needs one of --census, --length, --core, --montesinos, --disjoint, --convergence, --catalog");
            }
        } else if (command == "plot") {
            std::string svg = render_svg(resolution);
            atomic_write(svg_path, svg);
            r.payload = {{"path", svg_path}, {"bytes", svg.size()}};
        } else if (command == "schema") {
            r.payload = schema_docs();
        }
        return emit(r);
    } catch (const std::invalid_argument& e) {
        return emit(invalid(e.what()));
    } catch (const std::domain_error& e) {
        return emit(invalid(e.what()));
    } catch (const std::exception& e) {
        CommandResult r;
        r.status = "error";
        r.reasons = {e.what()};
        err << "internal error: " << e.what() << "\n";
        try {
            return emit(r);
        } catch (...) {
            return int(ExitCode::error);
        }
    }
}

}  // namespace tps
