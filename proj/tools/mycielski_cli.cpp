#include "myc/borsuk.hpp"
#include "myc/chromatic.hpp"
#include "myc/errors.hpp"
#include "myc/fan.hpp"
#include "myc/io.hpp"
#include "myc/lift.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <filesystem>
#include <iostream>
#include <random>

using namespace myc;
using io::json;

namespace {

enum Exit { ok = 0, usage = 1, contract = 2, inconclusive = 3, violation = 4 };

struct RunConfig {
    std::uint64_t seed = 0;
    long long budget_ms = 60'000;
    int cap = kDefaultChiCap;
    std::string out;
};

class Usage : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

void emit(const RunConfig& cfg, const std::string& text)
{
    if (cfg.out.empty() || cfg.out == "-")
        std::cout << text;
    else
        io::write_text(cfg.out, text);
}

void emit(const RunConfig& cfg, const json& j) { emit(cfg, j.dump(2) + "\n"); }

bool starts_with(const std::string& s, const std::string& prefix) { return s.rfind(prefix, 0) == 0; }

int parse_count(const std::string& s, const char* what)
{
    try {
        std::size_t used = 0;
        int value = std::stoi(s, &used);
        if (used == s.size())
            return value;
    } catch (const std::exception&) {
    }
    throw Usage(std::string("bad ") + what + ": '" + s + "'");
}

/// cycle:N, complete:N, petersen, complement:<expr>, family:<rs>,
/// mycielski:R:<expr>, or a graph JSON file.
Graph graph_expr(const std::string& expr)
{
    if (starts_with(expr, "cycle:"))
        return cycle(parse_count(expr.substr(6), "cycle length"));
    if (starts_with(expr, "complete:"))
        return complete(parse_count(expr.substr(9), "clique size"));
    if (expr == "petersen")
        return petersen();
    if (starts_with(expr, "complement:"))
        return complement_of(graph_expr(expr.substr(11)));
    if (starts_with(expr, "family:"))
        return build_family(MycielskiSpec::parse(expr.substr(7)));
    if (starts_with(expr, "mycielski:")) {
        auto rest = expr.substr(10);
        auto colon = rest.find(':');
        if (colon == std::string::npos)
            throw Usage("expected mycielski:R:<graph>");
        return mycielski(graph_expr(rest.substr(colon + 1)),
                         parse_count(rest.substr(0, colon), "Mycielski parameter"));
    }
    if (std::filesystem::exists(expr)) {
        auto j = io::read_file(expr);
        if (j.contains("kind") && j["kind"] == "chi-certificate")
            return io::graph_from_json(j["graph"]);
        if (j.contains("kind") && j["kind"] == "sphere-model")
            return io::graph_from_json(j["graph"]);
        return io::graph_from_json(j);
    }
    throw Usage("unknown graph expression or missing file: '" + expr + "'");
}

MycielskiSpec spec_arg(const std::string& text)
{
    try {
        return MycielskiSpec::parse(text);
    } catch (const DomainError& e) {
        throw Usage(e.what());
    }
}

SphereModel load_model(const std::string& path)
{
    auto j = io::read_file(path);
    if (j.contains("kind") && j["kind"] == "refutation")
        j = j["model"];
    auto model = io::model_from_json(j);
    if (auto rep = verify_model(model); !rep.ok())
        throw ContractError("model rejected:\n" + rep.summary());
    return model;
}

struct LoadedComplex {
    SymmetricComplex complex;
    HemisphereFlag flag;
    TwoColouring kappa;
};

/// cross:N, circle:R, model:<spec>, or a complex / sphere-model JSON file.
LoadedComplex complex_expr(const std::string& expr)
{
    if (starts_with(expr, "cross:")) {
        auto c = cross_polytope(parse_count(expr.substr(6), "dimension"));
        return {c.complex, c.flag, {}};
    }
    if (starts_with(expr, "circle:")) {
        auto c = circle_complex(parse_count(expr.substr(7), "circle parameter"));
        return {c.complex, c.flag, c.kappa};
    }
    if (starts_with(expr, "model:")) {
        auto m = sphere_model(spec_arg(expr.substr(6)));
        return {m.complex, m.flag, m.kappa};
    }
    if (!std::filesystem::exists(expr))
        throw Usage("unknown complex expression or missing file: '" + expr + "'");
    auto j = io::read_file(expr);
    LoadedComplex out{io::complex_from_json(j), io::flag_from_json(j), io::kappa_from_json(j)};
    Report rep = verify_symmetric(out.complex);
    if (rep.ok())
        rep.merge(verify_sphere_necessary(out.complex));
    if (!rep.ok())
        throw ContractError("complex rejected:\n" + rep.summary());
    return out;
}

json refutation_entry(const KColouring& c, const MonochromeEdgeCert& cert)
{
    return {{"colouring", c.colours}, {"certificate", io::to_json(cert)}};
}

// ---------------------------------------------------------------------------
// Subcommands

int run_build(const RunConfig& cfg, const std::string& spec_text, const std::string& format)
{
    auto spec = spec_arg(spec_text);
    auto g = build_family(spec);
    if (format == "dot") {
        emit(cfg, io::to_dot(g));
        return ok;
    }
    auto j = io::to_json(g);
    j["spec"] = spec.rs;
    emit(cfg, j);
    return ok;
}

int run_chi(const RunConfig& cfg, const std::string& expr)
{
    auto g = graph_expr(expr);
    auto cert = chi_exact(g, {std::chrono::milliseconds(cfg.budget_ms), cfg.cap});
    emit(cfg, io::to_json(cert, g));
    return cert.exact() ? ok : inconclusive;
}

int run_sphere_model(const RunConfig& cfg, const std::string& spec_text)
{
    emit(cfg, io::to_json(sphere_model(spec_arg(spec_text))));
    return ok;
}

int run_lift(const RunConfig& cfg, const std::string& path, int r)
{
    emit(cfg, io::to_json(lift_model(load_model(path), r)));
    return ok;
}

int run_refute(const RunConfig& cfg, const std::string& path, const std::string& colouring_path,
               int random_count)
{
    if (colouring_path.empty() == (random_count <= 0))
        throw Usage("refute needs exactly one of a colouring file or --random N");
    auto model = load_model(path);
    Refuter refuter(model.complex, model.kappa, model.flag);
    json certs = json::array();
    if (!colouring_path.empty()) {
        auto c = io::colouring_from_json(io::read_file(colouring_path));
        certs.push_back(refutation_entry(c, refuter.refute(c)));
    } else {
        std::mt19937_64 rng(cfg.seed);
        const int palette = model.complex.dim + 1;
        std::uniform_int_distribution<int> pick(1, palette);
        for (int i = 0; i < random_count; ++i) {
            KColouring c{std::vector<int>(model.graph.order()), palette};
            for (int& x : c.colours)
                x = pick(rng);
            certs.push_back(refutation_entry(c, refuter.refute(c)));
        }
    }
    json out = {{"kind", "refutation"}, {"seed", cfg.seed}, {"count", certs.size()},
                {"certificates", certs}, {"model", io::to_json(model)}};
    emit(cfg, out);
    return ok;
}

int run_fan_count(const RunConfig& cfg, const std::string& complex_text, const std::string& labelling_path)
{
    auto loaded = complex_expr(complex_text);
    auto lam = io::labelling_from_json(io::read_file(labelling_path));
    if (auto rep = verify_labelling(loaded.complex, lam); !rep.ok())
        throw ContractError("labelling rejected:\n" + rep.summary());
    auto pos = positive_alternating_count(loaded.complex, lam);
    auto neg = negative_alternating_count(loaded.complex, lam);
    auto balanced = find_balanced_edge(loaded.complex, lam);
    json out = {{"kind", "fan-count"},
                {"positive", pos.count},
                {"negative", neg.count},
                {"positive_facets", pos.facets},
                {"negative_facets", neg.facets},
                {"balanced_edge", balanced ? json::array({balanced->first, balanced->second}) : json(nullptr)},
                {"complex", io::to_json(loaded.complex, &loaded.flag)},
                {"labelling", io::to_json(lam)}};
    emit(cfg, out);
    return ok;
}

int run_embed(const RunConfig& cfg, const std::string& spec_text, std::optional<double> delta,
              const std::string& csv_path)
{
    auto spec = spec_arg(spec_text);
    auto e = embed_family(spec);
    auto j = io::to_json(e);
    int code = ok;
    if (delta) {
        auto rep = verify_embedding(e, *delta);
        j["delta"] = *delta;
        j["check"] = io::to_json(rep);
        if (!rep.ok())
            code = contract;
    }
    if (!csv_path.empty())
        io::write_text(csv_path, io::edges_csv(e));
    emit(cfg, j);
    return code;
}

CandidateMap map_arg(const std::string& name, int n)
{
    if (std::filesystem::exists(name))
        return io::candidate_map_from_json(io::read_file(name));
    try {
        return builtin_map(name, n);
    } catch (const DomainError& e) {
        throw Usage(e.what());
    }
}

int run_probe(const RunConfig& cfg, const std::string& name, int n)
{
    auto m = map_arg(name, n);
    emit(cfg, io::to_json(probe_map(m, n)));
    return ok;
}

// ---------------------------------------------------------------------------
// verify

Report verify_chi_certificate(const json& j, const RunConfig& cfg, bool& timed_out)
{
    Report rep;
    auto g = io::graph_from_json(j.at("graph"));
    KColouring c{j.at("colouring").get<std::vector<int>>(), j.at("upper").get<int>()};
    try {
        if (!verify_colouring(g, c).empty())
            rep.fail("colouring", "stored colouring is not proper");
    } catch (const DomainError& e) {
        rep.fail("colouring", e.what());
    }
    if (j.at("status") != "exact")
        return rep;
    const int chi = j.at("chi").get<int>();
    if (chi != c.m)
        rep.fail("chi", "chi differs from the colours used");
    const auto& lb = j.at("lower_bound");
    if (lb.at("kind") == "clique") {
        auto clique = lb.at("clique").get<std::vector<int>>();
        if (static_cast<int>(clique.size()) != chi)
            rep.fail("lower-bound", "clique size differs from chi");
        for (std::size_t a = 0; a < clique.size(); ++a)
            for (std::size_t b = a + 1; b < clique.size(); ++b)
                if (clique[a] < 0 || clique[b] < 0 || clique[a] >= g.order() || clique[b] >= g.order() ||
                    !g.has_edge(clique[a], clique[b]))
                    rep.fail("lower-bound", "clique witness is not a clique");
    } else if (chi > 1) {
        auto deadline = std::chrono::steady_clock::now() + std::chrono::milliseconds(cfg.budget_ms);
        try {
            if (find_k_colouring(g, chi - 1, deadline))
                rep.fail("lower-bound", "a colouring with fewer colours exists");
        } catch (const std::runtime_error&) {
            timed_out = true;
        }
    }
    return rep;
}

Report verify_refutation(const json& j)
{
    Report rep;
    auto model = io::model_from_json(j.at("model"));
    rep.merge(verify_model(model));
    if (!rep.ok())
        return rep;
    Quotient q{model.graph, model.projection};
    for (const auto& entry : j.at("certificates")) {
        auto colours = entry.at("colouring").get<std::vector<int>>();
        KColouring c{colours, model.complex.dim + 1};
        auto cert = io::edge_cert_from_json(entry.at("certificate"));
        bool good = false;
        try {
            auto lam = labelling_from_colouring(model.complex, model.kappa, c, q.projection);
            good = self_verify(cert, lam, q.projection, q.graph, c);
        } catch (const DomainError&) {
        }
        if (!good)
            rep.fail("certificate", "certificate does not self-verify", {cert.g_edge.first, cert.g_edge.second});
    }
    return rep;
}

Report verify_fan_count(const json& j)
{
    Report rep;
    auto k = io::complex_from_json(j.at("complex"));
    auto lam = io::labelling_from_json(j.at("labelling"));
    rep.merge(verify_labelling(k, lam));
    if (!rep.ok())
        return rep;
    if (positive_alternating_count(k, lam).count != j.at("positive").get<long long>())
        rep.fail("positive", "positive alternating count differs");
    if (negative_alternating_count(k, lam).count != j.at("negative").get<long long>())
        rep.fail("negative", "negative alternating count differs");
    return rep;
}

Report verify_probe_report(const json& j)
{
    Report rep;
    auto spec = MycielskiSpec{j.at("spec").get<std::vector<int>>()};
    auto e = embed_family(spec);
    auto [u, v] = std::pair{j.at("witness")[0].get<int>(), j.at("witness")[1].get<int>()};
    if (u < 0 || v < 0 || u >= e.graph.order() || v >= e.graph.order() || !e.graph.has_edge(u, v)) {
        rep.fail("witness", "witness is not an edge of the probe graph");
        return rep;
    }
    auto close = [](const Vec& a, const Vec& b) { return a.size() == b.size() && norm(sub(a, b)) <= 1e-9; };
    if (!close(e.coords[u], j.at("g_u").get<Vec>()) || !close(e.coords[v], j.at("g_v").get<Vec>()))
        rep.fail("embedding", "witness coordinates differ from the embedding");
    auto fu = j.at("f_g_u").get<Vec>();
    auto fv = j.at("f_g_v").get<Vec>();
    if (simplex_colouring(fu) != simplex_colouring(fv))
        rep.fail("monochromatic", "witness endpoints have different colours");
    if (!(j.at("margin").get<double>() > 0))
        rep.fail("margin", "violated inequality has no positive margin");
    if (auto e2 = verify_embedding(e, j.at("delta").get<double>()); !e2.ok())
        rep.merge(e2);
    return rep;
}

int run_verify(const RunConfig& cfg, const std::string& path)
{
    auto j = io::read_file(path);
    if (!j.is_object() || !j.contains("kind"))
        throw ContractError("artifact has no kind field");
    const std::string kind = j["kind"];
    Report rep;
    bool timed_out = false;
    try {
        if (kind == "graph") {
            io::graph_from_json(j);
        } else if (kind == "complex") {
            auto k = io::complex_from_json(j);
            rep.merge(verify_symmetric(k));
            if (rep.ok())
                rep.merge(verify_sphere_necessary(k));
            if (rep.ok() && j.contains("flag"))
                rep.merge(verify_flag(k, io::flag_from_json(j)));
            if (rep.ok() && j.contains("kappa"))
                rep.merge(verify_two_colouring(k, io::kappa_from_json(j)));
        } else if (kind == "sphere-model") {
            rep.merge(verify_model(io::model_from_json(j)));
        } else if (kind == "chi-certificate") {
            rep.merge(verify_chi_certificate(j, cfg, timed_out));
        } else if (kind == "refutation") {
            rep.merge(verify_refutation(j));
        } else if (kind == "fan-count") {
            rep.merge(verify_fan_count(j));
        } else if (kind == "embedding") {
            auto e = io::embedding_from_json(j);
            double delta = j.contains("delta") ? j["delta"].get<double>() : 2.0;
            rep.merge(verify_embedding(e, delta));
            if (!(e.graph == build_family(e.spec)) && !is_isomorphic(e.graph, build_family(e.spec)))
                rep.fail("provenance", "graph is not build_family(spec)");
        } else if (kind == "probe-report") {
            rep.merge(verify_probe_report(j));
        } else {
            throw ContractError("unknown artifact kind '" + kind + "'");
        }
    } catch (const json::exception& e) {
        throw ContractError(std::string("malformed artifact: ") + e.what());
    }
    json out = {{"kind", "verification"}, {"artifact", kind}, {"ok", rep.ok() && !timed_out},
                {"inconclusive", timed_out}, {"report", io::to_json(rep)}};
    emit(cfg, out);
    if (!rep.ok())
        return contract;
    return timed_out ? inconclusive : ok;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Generalised Mycielski graphs, sphere models and Borsuk-graph probes"};
    app.require_subcommand(1);
    app.fallthrough();
    RunConfig cfg;
    app.add_option("--seed", cfg.seed, "Random seed")->default_val(0);
    app.add_option("--budget-ms", cfg.budget_ms, "Time budget per solver call")->default_val(60000);
    app.add_option("--cap", cfg.cap, "Largest graph order chi accepts")->default_val(kDefaultChiCap);
    app.add_option("--out", cfg.out, "Output file (default stdout)");

    std::string spec_text, format = "json", graph_text, path, colouring_path, complex_text,
                labelling_path, csv_path, map_name;
    int r = 0, random_count = 0, n = 1;
    std::optional<double> delta;

    auto* build = app.add_subcommand("build", "Graph of a member of M_k as JSON or DOT");
    build->add_option("spec", spec_text, "Comma-separated r list, e.g. 2,3")->required();
    build->add_option("--format", format)->check(CLI::IsMember({"json", "dot"}));

    auto* chi = app.add_subcommand("chi", "Exact chromatic number with certificate");
    chi->add_option("graph", graph_text, "cycle:N, complete:N, petersen, complement:G, family:R, "
                                         "mycielski:R:G or a graph JSON file")->required();

    auto* model = app.add_subcommand("sphere-model", "Aligned symmetric sphere for a spec");
    model->add_option("spec", spec_text)->required();

    auto* lift = app.add_subcommand("lift", "Lift a sphere model by one Mycielski step");
    lift->add_option("model", path)->required();
    lift->add_option("r", r)->required()->check(CLI::PositiveNumber);

    auto* refute = app.add_subcommand("refute", "Monochromatic-edge certificates for colourings");
    refute->add_option("model", path)->required();
    refute->add_option("colouring", colouring_path);
    refute->add_option("--random", random_count, "Refute N uniformly random colourings");

    auto* fan = app.add_subcommand("fan-count", "Alternating facet counts of a labelling");
    fan->add_option("complex", complex_text, "cross:N, circle:R, model:SPEC or a complex JSON file")->required();
    fan->add_option("labelling", labelling_path)->required();

    auto* embed = app.add_subcommand("embed", "Embed a member of M_{n+2} into S^n");
    embed->add_option("spec", spec_text)->required();
    embed->add_option("--delta", delta, "Check the embedding against this target");
    embed->add_option("--csv", csv_path, "Write per-edge norms as CSV");

    auto* verify = app.add_subcommand("verify", "Re-check any emitted artifact");
    verify->add_option("artifact", path)->required();

    auto* probe = app.add_subcommand("probe", "Refute a candidate antipodal map S^n -> S^{n-1}");
    probe->add_option("map", map_name, "sign, drop-normalize or a tabulated map JSON file")->required();
    probe->add_option("--n", n)->required()->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return usage;
    }

    try {
        if (*build)
            return run_build(cfg, spec_text, format);
        if (*chi)
            return run_chi(cfg, graph_text);
        if (*model)
            return run_sphere_model(cfg, spec_text);
        if (*lift)
            return run_lift(cfg, path, r);
        if (*refute)
            return run_refute(cfg, path, colouring_path, random_count);
        if (*fan)
            return run_fan_count(cfg, complex_text, labelling_path);
        if (*embed)
            return run_embed(cfg, spec_text, delta, csv_path);
        if (*verify)
            return run_verify(cfg, path);
        if (*probe)
            return run_probe(cfg, map_name, n);
    } catch (const Usage& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return usage;
    } catch (const TheoremViolation& e) {
        std::cerr << "THEOREM-VIOLATION: " << e.what() << "\n";
        return violation;
    } catch (const SamplingFailure& e) {
        std::cerr << "inconclusive: " << e.what() << "\n";
        return inconclusive;
    } catch (const std::exception& e) {
        std::cerr << "input rejected: " << e.what() << "\n";
        return contract;
    }
    return usage;
}
