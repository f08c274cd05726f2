#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <sys/wait.h>

using json = nlohmann::ordered_json;

namespace {

struct Result {
    int code;
    std::string out;
};

Result run(const std::string& args)
{
    std::string cmd = std::string(MYC_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    while (std::size_t got = fread(buf, 1, sizeof buf, pipe))
        out.append(buf, got);
    int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string slurp(const std::string& path)
{
    std::ifstream in(path);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void spit(const std::string& path, const std::string& text) { std::ofstream(path) << text; }

json verify(const std::string& path, int expected = 0)
{
    auto r = run("verify " + path);
    CHECK(r.code == expected);
    return json::parse(r.out);
}

} // namespace

TEST_CASE("build")
{
    auto r = run("build 2,3");
    REQUIRE(r.code == 0);
    auto j = json::parse(r.out);
    CHECK(j["kind"] == "graph");
    CHECK(j["order"] == 16);
    auto dot = run("build 2,3 --format dot");
    CHECK(dot.code == 0);
    CHECK(dot.out.find("graph G {") == 0);
    spit("g23.json", r.out);
    verify("g23.json");
}

TEST_CASE("chi")
{
    auto r = run("chi complement:cycle:7 --out chi7.json");
    REQUIRE(r.code == 0);
    auto j = json::parse(slurp("chi7.json"));
    CHECK(j["chi"] == 4);
    CHECK(j["status"] == "exact");
    verify("chi7.json");

    REQUIRE(run("chi family:2,2 --out grotzsch.json").code == 0);
    CHECK(json::parse(slurp("grotzsch.json"))["chi"] == 4);
    verify("grotzsch.json");

    // A tampered certificate claiming chi = 3 with a 3-colouring that is not proper.
    auto bad = json::parse(slurp("grotzsch.json"));
    bad["chi"] = 3;
    bad["upper"] = 3;
    for (auto& c : bad["colouring"])
        if (c == 4)
            c = 3;
    spit("grotzsch_bad.json", bad.dump());
    auto v = verify("grotzsch_bad.json", 2);
    CHECK(v["ok"] == false);

    CHECK(run("chi cycle:70").code == 2);
    CHECK(run("chi cycle:70 --cap 80").code == 0);
}

TEST_CASE("embed")
{
    auto r = run("embed 16 --delta 0.1 --csv e16.csv");
    REQUIRE(r.code == 0);
    auto j = json::parse(r.out);
    CHECK(std::abs(j["defect"].get<double>() - 0.09519) < 1e-4);
    CHECK(j["check"]["ok"] == true);
    CHECK(slurp("e16.csv").rfind("u,v,plus_norm,minus_norm", 0) == 0);
    spit("e16.json", r.out);
    verify("e16.json");

    CHECK(run("embed 2 --delta 0.5").code == 2);
}

TEST_CASE("sphere model, lift, refute")
{
    REQUIRE(run("sphere-model 2 --out m2.json").code == 0);
    verify("m2.json");
    REQUIRE(run("lift m2.json 3 --out m23.json").code == 0);
    auto m = json::parse(slurp("m23.json"));
    CHECK(m["spec"] == json::array({2, 3}));
    CHECK(m["graph"]["order"] == 16);
    verify("m23.json");

    REQUIRE(run("refute m23.json --random 200 --seed 7 --out ref_a.json").code == 0);
    REQUIRE(run("refute m23.json --random 200 --seed 7 --out ref_b.json").code == 0);
    CHECK(slurp("ref_a.json") == slurp("ref_b.json"));
    CHECK(json::parse(slurp("ref_a.json"))["count"] == 200);
    verify("ref_a.json");

    auto tampered = json::parse(slurp("ref_a.json"));
    auto& cert = tampered["certificates"][0]["certificate"];
    cert["colour"] = cert["colour"].get<int>() % 3 + 1;
    spit("ref_bad.json", tampered.dump());
    verify("ref_bad.json", 2);

    spit("c.json", "[1,2,3,1,2,3,1,2,3,1,2,3,1,2,3,1]");
    auto one = run("refute m23.json c.json");
    CHECK(one.code == 0);
    CHECK(json::parse(one.out)["count"] == 1);

    // Palette 3 exceeds dim + 1 on the circle model.
    spit("c5.json", "[1,2,1,2,3]");
    CHECK(run("refute m2.json c5.json").code == 2);
    CHECK(run("refute m23.json").code == 1);
}

TEST_CASE("fan-count")
{
    spit("lam.json", R"({"kind":"labelling","k":3,"labels":[1,-1,2,-2,3,-3]})");
    auto r = run("fan-count cross:2 lam.json");
    REQUIRE(r.code == 0);
    auto j = json::parse(r.out);
    CHECK(j["positive"] == 1);
    CHECK(j["balanced_edge"].is_null());
    spit("fan.json", r.out);
    verify("fan.json");

    spit("lam_bad.json", "[1,1,2,-2,3,-3]");
    CHECK(run("fan-count cross:2 lam_bad.json").code == 2);
}

TEST_CASE("probe")
{
    auto r = run("probe sign --n 1");
    REQUIRE(r.code == 0);
    auto j = json::parse(r.out);
    CHECK(j["kind"] == "probe-report");
    CHECK(j["margin"].get<double>() > 0);
    spit("probe1.json", r.out);
    verify("probe1.json");

    auto d = run("probe drop-normalize --n 2");
    REQUIRE(d.code == 0);
    CHECK(json::parse(d.out)["margin"].get<double>() > 0);

    spit("table.json", R"({"points":[[1,0],[0,1],[-1,0],[0,-1]],"images":[[1],[1],[-1],[-1]],
                          "modulus":{"epsilon":1.0,"delta":0.5}})");
    auto t = run("probe table.json --n 1");
    CHECK(t.code == 0);
    CHECK(run("probe nope --n 1").code == 1);
}

TEST_CASE("usage and contract errors")
{
    CHECK(run("").code == 1);
    CHECK(run("frobnicate").code == 1);
    CHECK(run("build x,y").code == 1);
    CHECK(run("chi no-such-file.json").code == 1);
    spit("broken.json", "{not json");
    CHECK(run("verify broken.json").code == 2);
    spit("nokind.json", "{}");
    CHECK(run("verify nokind.json").code == 2);
}

TEST_CASE("determinism")
{
    for (const char* args : {"build 2,2,2", "sphere-model 1,2", "embed 3,4 --delta 1", "probe sign --n 1",
                             "fan-count circle:2 lam10.json"}) {
        spit("lam10.json", "[1,-2,1,-2,1,-1,2,-1,2,-1]");
        auto a = run(args);
        auto b = run(args);
        CHECK(a.code == b.code);
        CHECK(a.out == b.out);
    }
    auto a = json::parse(run("chi family:2,3").out);
    auto b = json::parse(run("chi family:2,3").out);
    a.erase("elapsed");
    b.erase("elapsed");
    CHECK(a == b);
}
