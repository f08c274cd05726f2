#include <doctest.h>

#include "myc/errors.hpp"
#include "myc/io.hpp"

using namespace myc;

TEST_CASE("graph json round-trip")
{
    for (const auto& g : {cycle(5), petersen(), build_family({{2, 3}}), complement_of(cycle(7))}) {
        auto j = io::to_json(g);
        CHECK(j["kind"] == "graph");
        auto back = io::graph_from_json(io::json::parse(j.dump()));
        CHECK(back == g);
        CHECK(io::to_json(back).dump() == j.dump());
    }
    CHECK_THROWS_AS(io::graph_from_json(io::json::parse(R"({"kind":"graph","order":2,"edges":[[0,0]]})")),
                    ContractError);
    CHECK_THROWS_AS(io::graph_from_json(io::json::parse(R"({"kind":"complex"})")), ContractError);
    CHECK_THROWS_AS(io::graph_from_json(io::json::parse(R"({"kind":"graph","edges":[]})")), ContractError);
}

TEST_CASE("dot output")
{
    auto dot = io::to_dot(cycle(3));
    CHECK(dot.find("graph G {") == 0);
    CHECK(dot.find("0 -- 1;") != std::string::npos);
    CHECK(dot.find("0 -- 2;") != std::string::npos);
}

TEST_CASE("sphere model round-trip")
{
    auto m = sphere_model({{2, 3}});
    auto j = io::to_json(m);
    auto back = io::model_from_json(io::json::parse(j.dump()));
    CHECK(back.complex == m.complex);
    CHECK(back.kappa == m.kappa);
    CHECK(back.flag == m.flag);
    CHECK(back.graph == m.graph);
    CHECK(back.projection == m.projection);
    CHECK(back.spec == m.spec);
    CHECK(verify_model(back).ok());
}

TEST_CASE("complex round-trip without kappa")
{
    auto c = cross_polytope(2);
    auto j = io::to_json(c.complex, &c.flag);
    CHECK_FALSE(j.contains("kappa"));
    CHECK(io::complex_from_json(j) == c.complex);
    CHECK(io::flag_from_json(j) == c.flag);
    CHECK(io::kappa_from_json(j).kappa.empty());
}

TEST_CASE("certificates")
{
    auto g = complement_of(cycle(7));
    auto cert = chi_exact(g);
    auto j = io::to_json(cert, g);
    CHECK(j["chi"] == 4);
    CHECK(j["status"] == "exact");
    CHECK(j.contains("elapsed"));
    CHECK_FALSE(io::to_json(cert, g, false).contains("elapsed"));

    KColouring c{{1, 2, 1, 2, 3}, 3};
    auto cj = io::to_json(c);
    auto c2 = io::colouring_from_json(cj);
    CHECK(c2.colours == c.colours);
    CHECK(c2.m == 3);
    CHECK(io::colouring_from_json(io::json::parse("[1,2,2]")).m == 2);

    Labelling lam{{1, -1, 2, -2}, 2};
    CHECK(io::labelling_from_json(io::to_json(lam)) == lam);

    MonochromeEdgeCert e{{0, 4}, 1, {0, 9}, {1, -1}};
    auto back = io::edge_cert_from_json(io::to_json(e));
    CHECK(back.g_edge == e.g_edge);
    CHECK(back.lifted_edge == e.lifted_edge);
    CHECK(back.labels == e.labels);
    CHECK(back.colour == 1);
}

TEST_CASE("embedding round-trip and csv")
{
    auto e = embed_family({{3, 2}});
    auto back = io::embedding_from_json(io::json::parse(io::to_json(e).dump()));
    CHECK(back.coords == e.coords);
    CHECK(back.defect == e.defect);
    CHECK(back.graph == e.graph);
    auto csv = io::edges_csv(e);
    CHECK(csv.rfind("u,v,plus_norm,minus_norm\n", 0) == 0);
    CHECK(static_cast<std::size_t>(std::count(csv.begin(), csv.end(), '\n')) == e.graph.size() + 1);
}

TEST_CASE("tabulated map json")
{
    auto j = io::json::parse(R"({"points":[[1,0],[-1,0]],"images":[[1],[-1]],
                                 "modulus":{"epsilon":0.5,"delta":0.2}})");
    auto m = io::candidate_map_from_json(j);
    CHECK(m.n == 1);
    CHECK(*m.modulus.delta_for(1.0) == doctest::Approx(0.2));
    auto bad = io::json::parse(R"({"points":[[1,0]],"images":[[3]],"modulus":{"lipschitz":1}})");
    CHECK_THROWS_AS(io::candidate_map_from_json(bad), ContractError);
}
