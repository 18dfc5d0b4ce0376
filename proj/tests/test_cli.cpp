#include "tps/cli.hpp"

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <sstream>

using namespace tps;

namespace {

struct Run {
    int code;
    std::string out, err;
    ojson doc() const { return ojson::parse(out); }
};

Run run(std::vector<std::string> args, const std::string& stdin_text = "") {
    std::ostringstream out, err;
    std::istringstream in(stdin_text);
    int code = run_cli(args, out, err, in);
    return {code, out.str(), err.str()};
}

std::string canonical_text(const UnionType& t) { return to_json(canonical_config(t)).dump(2); }

}  // namespace

TEST(Cli, ClassifyA3) {
    auto r = run({"classify"}, canonical_text(UnionType::make(UnionKind::A, 3)));
    ASSERT_EQ(r.code, 0) << r.err;
    auto d = r.doc();
    EXPECT_EQ(d["schema"], 1);
    EXPECT_EQ(d["status"], "ok");
    EXPECT_EQ(d["payload"]["type"], "A");
    EXPECT_EQ(d["payload"]["n"], 3);
    EXPECT_EQ(d["payload"]["ambient"], "general");
}

TEST(Cli, ClassifyFromFileAndJsonOut) {
    auto dir = std::filesystem::temp_directory_path() / "tps_cli_test";
    std::filesystem::create_directories(dir);
    auto in = dir / "tet8.json";
    {
        std::ofstream f(in);
        f << canonical_text(UnionType::make(UnionKind::Tet8));
    }
    auto outp = dir / "res.json";
    auto r = run({"--json-out", outp.string(), "classify", "--input", in.string()});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_TRUE(r.out.empty());
    std::ifstream f(outp);
    auto d = ojson::parse(f);
    EXPECT_EQ(d["payload"]["name"], "Tet_8");
    EXPECT_EQ(d["payload"]["ambient"], "determines");
    EXPECT_EQ(d["payload"]["manifold"], "M4");
    EXPECT_FALSE(std::filesystem::exists(outp.string() + ".tmp"));
    std::filesystem::remove_all(dir);
}

TEST(Cli, RegionTau) {
    auto r = run({"region", "--tau", "2i"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.doc()["payload"]["membership"], "inside");
    auto o = run({"region", "--tau", "0+1/8i"});
    EXPECT_EQ(o.code, 0);
    EXPECT_EQ(o.doc()["payload"]["membership"], "outside");
    auto w = run({"region", "--tau-json", R"({"re": "93/128", "im": {"a": "0", "b": "1/128", "d": 55}})"});
    ASSERT_EQ(w.code, 0) << w.err;
    EXPECT_EQ(w.doc()["payload"]["membership"], "boundary");
    EXPECT_EQ(run({"region", "--tau", "93/128+sqrt55/128i"}).code, 2);
    EXPECT_EQ(run({"region", "--tau", "1"}).code, 2);
}

TEST(Cli, BoundsCensus) {
    auto r = run({"bounds", "--census", "t4=1", "--vol-mult-voct", "3"});
    ASSERT_EQ(r.code, 0) << r.err;
    auto p = r.doc()["payload"];
    EXPECT_EQ(p["k"], 4);
    EXPECT_EQ(p["ok"], true);
    EXPECT_EQ(run({"bounds", "--census", "t4=1", "--vol-mult-voct", "2"}).code, 2);
    EXPECT_EQ(run({"bounds", "--census", "q7=1", "--vol-mult-voct", "2"}).code, 2);
}

TEST(Cli, ExitCodes) {
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"frobnicate"}).code, 2);
    EXPECT_EQ(run({"region", "--bogus"}).code, 2);
    auto bad = canonical_config(UnionType::make(UnionKind::A, 2));
    bad.geodesics[0].side_p = Side::S;
    bad.geodesics[0].side_q = Side::S;
    auto imp = run({"classify"}, to_json(bad).dump());
    EXPECT_EQ(imp.code, 3);
    auto d = imp.doc();
    EXPECT_EQ(d["status"], "impossible");
    EXPECT_NE(d["citations"].dump().find("Lemma: no (S,S)-intersection"), std::string::npos);
    EXPECT_FALSE(d["reasons"].empty());
    auto amb = canonical_config(UnionType::make(UnionKind::WhiHat, 4));
    amb.framing.reset();
    auto a = run({"classify"}, to_json(amb).dump());
    EXPECT_EQ(a.code, 3);
    EXPECT_EQ(a.doc()["status"], "ambiguous");
    EXPECT_FALSE(a.doc()["citations"].empty());
    EXPECT_FALSE(a.doc()["reasons"].empty());
}

TEST(Cli, JsonErrorPosition) {
    auto r = run({"classify"}, "{\n  \"pants\": [\"P\",\n}");
    EXPECT_EQ(r.code, 2);
    auto d = r.doc();
    EXPECT_EQ(d["status"], "invalid-input");
    std::string reason = d["reasons"][0];
    EXPECT_NE(reason.find("line 3"), std::string::npos) << reason;
    EXPECT_NE(reason.find("column"), std::string::npos) << reason;
    auto u = run({"classify"}, R"({"schema": 1, "pants": [], "extra": 1})");
    EXPECT_EQ(u.code, 2);
}

TEST(Cli, MalformedConfig) {
    auto c = canonical_config(UnionType::make(UnionKind::A, 2));
    c.boundary.begin()->second.pop_back();
    auto r = run({"classify"}, to_json(c).dump());
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.doc()["reasons"][0].get<std::string>().find("malformed config"), std::string::npos);
}

TEST(Cli, Deterministic) {
    for (std::vector<std::string> a :
         {std::vector<std::string>{"region", "--extremes"}, {"region", "--arcs"}, {"enumerate", "--case", "tet2"},
          {"bounds", "--catalog", "4"}, {"schema"}, {"canonical", "--type", "Bor6"}}) {
        auto x = run(a), y = run(a);
        EXPECT_EQ(x.code, 0) << a[0] << x.err;
        EXPECT_EQ(x.out, y.out) << a[0];
    }
}

TEST(Cli, FloatToleranceEnvironment) {
    // i/4 lies on the inner circle
    std::vector<std::string> a{"region", "--float", "--tau", "0+1/4i"};
    ::setenv("TPS_FLOAT_TOL", "1e-3", 1);
    auto loose = run(a);
    ::unsetenv("TPS_FLOAT_TOL");
    auto dflt = run(a);
    EXPECT_EQ(loose.doc()["payload"]["membership"], "indeterminate");
    EXPECT_EQ(dflt.doc()["payload"]["membership"], "indeterminate");
    // 0.26i is inside, but within a band of width 1 of several circles
    std::vector<std::string> b{"region", "--float", "--tau", "0+13/50i"};
    ::setenv("TPS_FLOAT_TOL", "1", 1);
    auto wide = run(b);
    auto flag = run({"--tol", "1e-12", "region", "--float", "--tau", "0+13/50i"});
    ::setenv("TPS_FLOAT_TOL", "garbage", 1);
    auto bad = run(b);
    ::unsetenv("TPS_FLOAT_TOL");
    EXPECT_EQ(wide.doc()["payload"]["membership"], "indeterminate");
    EXPECT_EQ(flag.doc()["payload"]["membership"], "inside");
    EXPECT_EQ(bad.code, 2);
}

TEST(Cli, Schema) {
    auto r = run({"schema"});
    ASSERT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("\"schema\": 1"), std::string::npos);
    EXPECT_NE(r.out.find("\"sides\""), std::string::npos);
    EXPECT_NE(r.out.find("\"N\""), std::string::npos);
    EXPECT_NE(r.out.find("\"S\""), std::string::npos);
}

TEST(Cli, ConfigJsonRoundTrip) {
    for (const auto& t : union_catalog(5)) {
        auto c = canonical_config(t);
        auto back = pants_config_from_json(to_json(c));
        EXPECT_EQ(to_json(back), to_json(c)) << t.str();
    }
}

TEST(Cli, PlotAtomic) {
    auto dir = std::filesystem::temp_directory_path() / "tps_plot_test";
    std::filesystem::create_directories(dir);
    auto p = dir / "region.svg";
    auto r = run({"plot", "--output", p.string(), "--resolution", "300"});
    ASSERT_EQ(r.code, 0) << r.err;
    std::ifstream f(p);
    std::string svg((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
    EXPECT_EQ(svg, render_svg(300));
    EXPECT_FALSE(std::filesystem::exists(p.string() + ".tmp"));
    EXPECT_EQ(run({"plot", "--output", (dir / "missing" / "x.svg").string()}).code, 1);
    std::filesystem::remove_all(dir);
}

TEST(Cli, OtherCommands) {
    auto h = run({"holonomy", "--b-type"});
    ASSERT_EQ(h.code, 0) << h.err;
    auto n = run({"holonomy", "--normalization"});
    EXPECT_EQ(n.code, 0);
    auto e = run({"enumerate", "--case", "whi3"});
    EXPECT_EQ(e.code, 0);
    auto m = run({"norm", "--manifold", "WPrime2", "--class", "1,1,1"});
    ASSERT_EQ(m.code, 0) << m.err;
    EXPECT_NE(m.out.find("\"3\""), std::string::npos);
    EXPECT_EQ(run({"norm", "--manifold", "M6", "--class", "1,0,0,0,0,0"}).code, 0);
    EXPECT_EQ(run({"norm", "--manifold", "WPrime2", "--class", "1,1"}).code, 2);
    EXPECT_EQ(run({"bounds", "--montesinos", "2", "--r", "-3/2"}).doc()["payload"]["hyperbolic"], false);
    EXPECT_EQ(run({"bounds", "--core", "1"}).code, 2);
    EXPECT_EQ(run({"canonical", "--type", "Whi", "--n", "2"}).code, 2);
    auto v = run({"validate"}, canonical_text(UnionType::make(UnionKind::B, 4)));
    EXPECT_EQ(v.code, 0);
}
