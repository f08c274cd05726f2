#include "myc/io.hpp"

#include "myc/errors.hpp"

#include <fstream>
#include <sstream>

namespace myc::io {

namespace {

void expect_kind(const json& j, const char* kind)
{
    if (!j.is_object())
        throw ContractError(std::string("expected a JSON object of kind '") + kind + "'");
    if (j.contains("kind") && j["kind"] != kind)
        throw ContractError(std::string("expected kind '") + kind + "', got " + j["kind"].dump());
}

template <class T>
T field(const json& j, const char* key)
{
    if (!j.contains(key))
        throw ContractError(std::string("missing field '") + key + "'");
    try {
        return j.at(key).get<T>();
    } catch (const json::exception& e) {
        throw ContractError(std::string("bad field '") + key + "': " + e.what());
    }
}

json edge_json(const Edge& e) { return json::array({e.first, e.second}); }

Edge edge_from(const json& j)
{
    if (!j.is_array() || j.size() != 2)
        throw ContractError("edge must be a pair");
    return {j[0].get<int>(), j[1].get<int>()};
}

std::string colour_text(Colour c) { return c == Colour::black ? "black" : "white"; }

} // namespace

// ---------------------------------------------------------------------------

json to_json(const Graph& g)
{
    json names = json::array();
    for (const auto& n : g.names())
        names.push_back(n.to_string());
    json edges = json::array();
    for (auto e : g.edges())
        edges.push_back(edge_json(e));
    return {{"kind", "graph"}, {"order", g.order()}, {"names", names}, {"edges", edges}};
}

Graph graph_from_json(const json& j)
{
    expect_kind(j, "graph");
    int order = field<int>(j, "order");
    std::vector<Edge> edges;
    for (const auto& e : field<json>(j, "edges"))
        edges.push_back(edge_from(e));
    std::vector<VertexName> names;
    if (j.contains("names"))
        for (const auto& n : j["names"]) {
            try {
                names.push_back(VertexName::parse(n.get<std::string>()));
            } catch (const DomainError& e) {
                throw ContractError(e.what());
            }
        }
    return Graph(order, std::move(edges), std::move(names));
}

std::string to_dot(const Graph& g)
{
    std::ostringstream os;
    os << "graph G {\n";
    for (int v = 0; v < g.order(); ++v)
        os << "  " << v << " [label=\"" << g.name(v).to_string() << "\"];\n";
    for (auto [u, v] : g.edges())
        os << "  " << u << " -- " << v << ";\n";
    os << "}\n";
    return os.str();
}

json to_json(const Report& rep)
{
    json out = {{"ok", rep.ok()}};
    json vs = json::array();
    for (const auto& v : rep.violations)
        vs.push_back({{"check", v.check}, {"detail", v.detail}, {"witness", v.witness}});
    out["violations"] = vs;
    return out;
}

json to_json(const SymmetricComplex& k, const HemisphereFlag* flag, const TwoColouring* kappa)
{
    json out = {{"kind", "complex"}, {"dim", k.dim}, {"vertices", k.names}, {"nu", k.nu},
                {"facets", k.facets}};
    if (flag && !flag->H.empty())
        out["flag"] = {{"H", flag->H}};
    if (kappa && !kappa->kappa.empty()) {
        json colours = json::array();
        for (auto c : kappa->kappa)
            colours.push_back(colour_text(c));
        out["kappa"] = colours;
    }
    return out;
}

SymmetricComplex complex_from_json(const json& j)
{
    if (!j.is_object())
        throw ContractError("expected a complex object");
    SymmetricComplex k;
    k.dim = field<int>(j, "dim");
    k.nu = field<std::vector<int>>(j, "nu");
    k.facets = field<std::vector<Simplex>>(j, "facets");
    if (j.contains("vertices"))
        k.names = field<std::vector<std::string>>(j, "vertices");
    else
        for (int v = 0; v < k.vertex_count(); ++v)
            k.names.push_back("v" + std::to_string(v));
    return k;
}

HemisphereFlag flag_from_json(const json& j)
{
    HemisphereFlag flag;
    if (j.contains("flag"))
        flag.H = field<std::vector<std::vector<Simplex>>>(j["flag"], "H");
    return flag;
}

TwoColouring kappa_from_json(const json& j)
{
    TwoColouring kappa;
    if (!j.contains("kappa"))
        return kappa;
    for (const auto& c : j["kappa"]) {
        if (c == "black" || c == 0)
            kappa.kappa.push_back(Colour::black);
        else if (c == "white" || c == 1)
            kappa.kappa.push_back(Colour::white);
        else
            throw ContractError("kappa entries must be \"black\" or \"white\"");
    }
    return kappa;
}

json to_json(const SphereModel& m)
{
    json out = to_json(m.complex, &m.flag, &m.kappa);
    out["kind"] = "sphere-model";
    out["graph"] = to_json(m.graph);
    out["projection"] = m.projection;
    out["spec"] = m.spec.rs;
    return out;
}

SphereModel model_from_json(const json& j)
{
    expect_kind(j, "sphere-model");
    SphereModel m;
    m.complex = complex_from_json(j);
    m.flag = flag_from_json(j);
    m.kappa = kappa_from_json(j);
    m.graph = graph_from_json(field<json>(j, "graph"));
    m.projection = field<std::vector<int>>(j, "projection");
    m.spec.rs = field<std::vector<int>>(j, "spec");
    return m;
}

json to_json(const KColouring& c) { return {{"kind", "colouring"}, {"m", c.m}, {"colours", c.colours}}; }

KColouring colouring_from_json(const json& j)
{
    if (j.is_array()) {
        KColouring c{j.get<std::vector<int>>(), 0};
        for (int x : c.colours)
            c.m = std::max(c.m, x);
        return c;
    }
    expect_kind(j, "colouring");
    KColouring c{field<std::vector<int>>(j, "colours"), 0};
    if (j.contains("m"))
        c.m = field<int>(j, "m");
    else
        for (int x : c.colours)
            c.m = std::max(c.m, x);
    return c;
}

json to_json(const Labelling& lam) { return {{"kind", "labelling"}, {"k", lam.k}, {"labels", lam.lambda}}; }

Labelling labelling_from_json(const json& j)
{
    if (j.is_array()) {
        Labelling lam{j.get<std::vector<int>>(), 0};
        for (int x : lam.lambda)
            lam.k = std::max(lam.k, std::abs(x));
        return lam;
    }
    expect_kind(j, "labelling");
    Labelling lam{field<std::vector<int>>(j, "labels"), 0};
    if (j.contains("k"))
        lam.k = field<int>(j, "k");
    else
        for (int x : lam.lambda)
            lam.k = std::max(lam.k, std::abs(x));
    return lam;
}

json to_json(const ChromaticCertificate& c, const Graph& g, bool with_timing)
{
    json out = {{"kind", "chi-certificate"}};
    out["status"] = c.exact() ? "exact" : "inconclusive";
    if (c.exact())
        out["chi"] = c.chi;
    else
        out["chi"] = nullptr;
    out["lower"] = c.lower;
    out["upper"] = c.upper;
    out["colouring"] = c.colouring.colours;
    out["method"] = "dsatur-branch-and-bound";
    json lb;
    if (c.witness.kind == LowerBoundWitness::Kind::clique)
        lb = {{"kind", "clique"}, {"clique", c.witness.clique}};
    else
        lb = {{"kind", "exhaustion"}, {"refuted_colours", c.witness.refuted_colours}, {"nodes", c.witness.nodes}};
    out["lower_bound"] = lb;
    out["nodes"] = c.nodes;
    if (with_timing)
        out["elapsed"] = c.elapsed_ms;
    out["graph"] = to_json(g);
    return out;
}

json to_json(const MonochromeEdgeCert& c)
{
    return {{"g_edge", edge_json(c.g_edge)},
            {"colour", c.colour},
            {"lifted_edge", edge_json(c.lifted_edge)},
            {"labels", json::array({c.labels.first, c.labels.second})}};
}

MonochromeEdgeCert edge_cert_from_json(const json& j)
{
    MonochromeEdgeCert c;
    c.g_edge = edge_from(field<json>(j, "g_edge"));
    c.colour = field<int>(j, "colour");
    c.lifted_edge = edge_from(field<json>(j, "lifted_edge"));
    auto labels = edge_from(field<json>(j, "labels"));
    c.labels = {labels.first, labels.second};
    return c;
}

json to_json(const EmbeddedGraph& e)
{
    return {{"kind", "embedding"}, {"n", e.n},         {"spec", e.spec.rs},
            {"defect", e.defect},  {"coords", e.coords}, {"graph", to_json(e.graph)}};
}

EmbeddedGraph embedding_from_json(const json& j)
{
    expect_kind(j, "embedding");
    EmbeddedGraph e;
    e.n = field<int>(j, "n");
    e.coords = field<std::vector<Vec>>(j, "coords");
    e.defect = field<double>(j, "defect");
    if (j.contains("spec"))
        e.spec.rs = field<std::vector<int>>(j, "spec");
    if (j.contains("graph"))
        e.graph = graph_from_json(j["graph"]);
    else
        e.graph = build_family(e.spec);
    return e;
}

std::string edges_csv(const EmbeddedGraph& e)
{
    std::ostringstream os;
    os.precision(17);
    os << "u,v,plus_norm,minus_norm\n";
    for (auto [u, v] : e.graph.edges())
        os << u << "," << v << "," << norm(add(e.coords[u], e.coords[v])) << ","
           << norm(sub(e.coords[u], e.coords[v])) << "\n";
    return os.str();
}

json to_json(const ProbeReport& r)
{
    return {{"kind", "probe-report"},
            {"map", r.map_name},
            {"declared_modulus", r.modulus},
            {"conditional_on", "the declared modulus; a map with a different modulus is not refuted"},
            {"epsilon", r.epsilon},
            {"delta", r.delta},
            {"spec", r.spec.rs},
            {"witness", edge_json(r.witness)},
            {"g_u", r.gu},
            {"g_v", r.gv},
            {"f_g_u", r.fu},
            {"f_g_v", r.fv},
            {"colour", r.colour},
            {"plus_norm", r.plus_norm},
            {"minus_norm", r.minus_norm},
            {"violated", to_string(r.tag)},
            {"margin", r.margin}};
}

CandidateMap candidate_map_from_json(const json& j)
{
    auto points = field<std::vector<Vec>>(j, "points");
    auto images = field<std::vector<Vec>>(j, "images");
    Modulus modulus;
    const json mod = field<json>(j, "modulus");
    auto read_entry = [](const json& e) {
        return Modulus::Entry{field<double>(e, "epsilon"), field<double>(e, "delta")};
    };
    if (mod.is_array()) {
        for (const auto& e : mod)
            modulus.table.push_back(read_entry(e));
    } else if (mod.contains("lipschitz")) {
        modulus.lipschitz = field<double>(mod, "lipschitz");
    } else {
        modulus.table.push_back(read_entry(mod));
    }
    try {
        return tabulated_map(std::move(points), std::move(images), std::move(modulus));
    } catch (const DomainError& e) {
        throw ContractError(e.what());
    }
}

json read_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw ContractError("cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw ContractError(path + ": " + e.what());
    }
}

void write_text(const std::string& path, const std::string& text)
{
    std::ofstream out(path);
    if (!out)
        throw ContractError("cannot write " + path);
    out << text;
}

} // namespace myc::io
