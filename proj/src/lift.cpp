#include "myc/lift.hpp"

#include "myc/errors.hpp"

#include <algorithm>
#include <map>

namespace myc {

namespace {

void require_aligned(const SymmetricComplex& k, const TwoColouring& kappa, const HemisphereFlag& flag,
                     const char* op)
{
    Report rep = verify_symmetric(k);
    if (rep.ok()) {
        rep.merge(verify_sphere_necessary(k));
        rep.merge(verify_flag(k, flag));
        rep.merge(verify_two_colouring(k, kappa));
    }
    if (!rep.ok())
        throw ContractError(std::string(op) + ": input rejected:\n" + rep.summary());
}

/// Sweep construction, unchecked. Level-i copy of v is i * |V| + v.
AlignedSphere build_lift(const SymmetricComplex& k, const TwoColouring& kappa,
                         const HemisphereFlag& flag, int r)
{
    const int n = k.vertex_count();
    const int top = k.dim + 1;
    const int zplus = r * n, zminus = r * n + 1;

    AlignedSphere out;
    SymmetricComplex& lifted = out.complex;
    lifted.dim = top;
    lifted.names.resize(r * n + 2);
    lifted.nu.resize(r * n + 2);
    out.kappa.kappa.resize(r * n + 2);
    for (int i = 0; i < r; ++i)
        for (int v = 0; v < n; ++v) {
            int id = i * n + v;
            lifted.names[id] = level_text(k.names.at(v), i);
            lifted.nu[id] = i * n + k.nu[v];
            out.kappa.kappa[id] = kappa.kappa[v];
        }
    lifted.names[zplus] = "z+" + std::to_string(top);
    lifted.names[zminus] = "z-" + std::to_string(top);
    lifted.nu[zplus] = zminus;
    lifted.nu[zminus] = zplus;
    out.kappa.kappa[zplus] = Colour::black;
    out.kappa.kappa[zminus] = Colour::white;

    // The moving frontier starts as K itself.
    std::vector<Simplex> frontier = k.facets;
    std::vector<int> current(n);
    for (int v = 0; v < n; ++v)
        current[v] = v;
    std::vector<Simplex> ball;

    for (int i = 1; i < r; ++i) {
        const Colour moving = (r - 1 - i) % 2 == 0 ? Colour::white : Colour::black;
        for (int v = 0; v < n; ++v) {
            if (kappa.kappa[v] != moving)
                continue;
            const int from = current[v], to = i * n + v;
            for (auto& f : frontier) {
                if (!std::binary_search(f.begin(), f.end(), from))
                    continue;
                Simplex swept = f;
                swept.insert(std::upper_bound(swept.begin(), swept.end(), to), to);
                ball.push_back(std::move(swept));
                std::replace(f.begin(), f.end(), from, to);
                std::sort(f.begin(), f.end());
            }
            current[v] = to;
        }
    }
    for (const auto& f : frontier) {
        Simplex cone = f;
        cone.push_back(zplus);
        ball.push_back(std::move(cone));
    }

    for (const auto& f : ball) {
        lifted.facets.push_back(f);
        lifted.facets.push_back(lifted.image(f));
    }
    lifted.canonicalize();

    out.flag.H = flag.H;
    std::sort(ball.begin(), ball.end());
    out.flag.H.push_back(std::move(ball));
    return out;
}

} // namespace

Report verify_model(const SphereModel& model)
{
    Report rep = verify_symmetric(model.complex);
    if (!rep.ok())
        return rep;
    rep.merge(verify_sphere_necessary(model.complex));
    rep.merge(verify_flag(model.complex, model.flag));
    rep.merge(verify_two_colouring(model.complex, model.kappa));
    if (!rep.ok())
        return rep;
    Quotient q = quotient_graph(model.complex, model.kappa);
    if (q.projection != model.projection)
        rep.fail("projection", "stored projection differs from the recomputed quotient map");
    if (q.graph.order() != model.graph.order() ||
        !std::equal(q.graph.edges().begin(), q.graph.edges().end(), model.graph.edges().begin(),
                    model.graph.edges().end()))
        rep.fail("quotient", "stored graph differs from G(K, kappa)");
    if (!model.spec.rs.empty()) {
        if (model.complex.dim != model.spec.k() - 2)
            rep.fail("dimension", "dim(K) = " + std::to_string(model.complex.dim) + ", expected " +
                                      std::to_string(model.spec.k() - 2));
        if (!is_isomorphic(q.graph, build_family(model.spec)))
            rep.fail("provenance", "G(K, kappa) is not isomorphic to build_family(" +
                                       model.spec.to_string() + ")");
    }
    return rep;
}

AlignedSphere suspension_lift(const SymmetricComplex& k, const TwoColouring& kappa,
                              const HemisphereFlag& flag)
{
    require_aligned(k, kappa, flag, "suspension_lift");
    return build_lift(k, kappa, flag, 1);
}

AlignedSphere general_lift(const SymmetricComplex& k, const TwoColouring& kappa,
                           const HemisphereFlag& flag, int r)
{
    if (r < 1)
        throw ContractError("general_lift needs r >= 1");
    require_aligned(k, kappa, flag, "general_lift");
    AlignedSphere out = build_lift(k, kappa, flag, r);

    Report rep = verify_symmetric(out.complex);
    if (rep.ok()) {
        rep.merge(verify_sphere_necessary(out.complex));
        rep.merge(verify_flag(out.complex, out.flag));
        rep.merge(verify_two_colouring(out.complex, out.kappa));
    }
    if (rep.ok() && out.complex.dim != k.dim + 1)
        rep.fail("dimension", "lifted complex has the wrong dimension");
    if (rep.ok()) {
        Graph lifted = quotient_graph(out.complex, out.kappa).graph;
        Graph expected = mycielski(quotient_graph(k, kappa).graph, r);
        if (!is_isomorphic(lifted, expected))
            rep.fail("quotient-isomorphism", "G(K', kappa') is not isomorphic to M_r(G(K, kappa))");
    }
    if (!rep.ok())
        throw ContractError("general_lift produced an invalid complex:\n" + rep.summary());
    return out;
}

SphereModel lift_model(const SphereModel& model, int r)
{
    AlignedSphere lifted = general_lift(model.complex, model.kappa, model.flag, r);
    Quotient q = quotient_graph(lifted.complex, lifted.kappa);
    SphereModel out{std::move(lifted.complex), std::move(lifted.kappa), std::move(lifted.flag),
                    std::move(q.graph), std::move(q.projection), model.spec};
    out.spec.rs.push_back(r);
    return out;
}

SphereModel sphere_model(const MycielskiSpec& spec)
{
    if (spec.rs.empty())
        throw ContractError("sphere_model needs at least one Mycielski step (K2 has no model)");
    AlignedSphere base = circle_complex(spec.rs[0]);
    Quotient q = quotient_graph(base.complex, base.kappa);
    SphereModel model{std::move(base.complex), std::move(base.kappa), std::move(base.flag),
                      std::move(q.graph), std::move(q.projection), MycielskiSpec{{spec.rs[0]}}};
    for (std::size_t i = 1; i < spec.rs.size(); ++i)
        model = lift_model(model, spec.rs[i]);
    if (auto rep = verify_model(model); !rep.ok())
        throw ContractError("sphere_model failed verification:\n" + rep.summary());
    return model;
}

} // namespace myc
