#include "myc/fan.hpp"

#include <algorithm>
#include <cstdlib>

namespace myc {

namespace {

std::vector<Edge> colex_edges(const SymmetricComplex& complex)
{
    auto edges = skeleton_edges(complex);
    std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
        return std::tie(a.second, a.first) < std::tie(b.second, b.first);
    });
    return edges;
}

std::optional<Edge> first_balanced(const std::vector<Edge>& edges, const Labelling& lam)
{
    for (auto e : edges)
        if (lam.lambda[e.first] + lam.lambda[e.second] == 0)
            return e;
    return std::nullopt;
}

AlternatingCount count_alternating(const SymmetricComplex& complex, const Labelling& lam, int leading)
{
    AlternatingCount out;
    for (const auto& f : complex.facets)
        if (is_alternating(f, lam, leading)) {
            ++out.count;
            out.facets.push_back(f);
        }
    return out;
}

} // namespace

Report verify_labelling(const SymmetricComplex& complex, const Labelling& lam)
{
    Report rep;
    if (static_cast<int>(lam.lambda.size()) != complex.vertex_count()) {
        rep.fail("lambda-size", "labelling does not cover every vertex");
        return rep;
    }
    for (int v = 0; v < complex.vertex_count(); ++v) {
        int x = lam.lambda[v];
        if (x == 0 || std::abs(x) > lam.k)
            rep.fail("range", "label " + std::to_string(x) + " outside ±{1.." + std::to_string(lam.k) + "}", {v});
        if (lam.lambda[complex.nu[v]] != -x && v < complex.nu[v])
            rep.fail("antisymmetric", "lambda(nu(v)) != -lambda(v)", {v, complex.nu[v]});
    }
    return rep;
}

Labelling mu_transform(const Labelling& lam)
{
    Labelling mu = lam;
    for (int& x : mu.lambda)
        if (std::abs(x) % 2 == 1)
            x = -x;
    return mu;
}

bool is_alternating(const Simplex& facet, const Labelling& lam, int leading)
{
    std::vector<int> labels;
    labels.reserve(facet.size());
    for (int v : facet)
        labels.push_back(lam.lambda[v]);
    std::sort(labels.begin(), labels.end(), [](int a, int b) { return std::abs(a) < std::abs(b); });
    int sign = leading;
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (i > 0 && std::abs(labels[i]) == std::abs(labels[i - 1]))
            return false;
        if ((labels[i] > 0 ? 1 : -1) != sign)
            return false;
        sign = -sign;
    }
    return true;
}

AlternatingCount positive_alternating_count(const SymmetricComplex& complex, const Labelling& lam)
{
    return count_alternating(complex, lam, +1);
}

AlternatingCount negative_alternating_count(const SymmetricComplex& complex, const Labelling& lam)
{
    return count_alternating(complex, lam, -1);
}

std::optional<Edge> find_balanced_edge(const SymmetricComplex& complex, const Labelling& lam)
{
    return first_balanced(colex_edges(complex), lam);
}

Labelling labelling_from_colouring(const SymmetricComplex& complex, const TwoColouring& kappa,
                                   const KColouring& c, const std::vector<int>& projection)
{
    Labelling lam;
    lam.k = c.m;
    lam.lambda.resize(complex.vertex_count());
    for (int v = 0; v < complex.vertex_count(); ++v) {
        int g = projection.at(v);
        if (g < 0 || g >= static_cast<int>(c.colours.size()))
            throw DomainError("colouring misses quotient vertex " + std::to_string(g));
        int colour = c.colours[g];
        if (colour < 1 || colour > c.m)
            throw DomainError("quotient vertex " + std::to_string(g) + " uncoloured or outside palette");
        lam.lambda[v] = kappa.kappa.at(v) == Colour::black ? colour : -colour;
    }
    return lam;
}

bool self_verify(const MonochromeEdgeCert& cert, const Labelling& lam,
                 const std::vector<int>& projection, const Graph& g, const KColouring& c)
{
    auto [u, v] = cert.lifted_edge;
    if (lam.lambda.at(u) + lam.lambda.at(v) != 0)
        return false;
    if (cert.labels != std::make_pair(lam.lambda[u], lam.lambda[v]))
        return false;
    Edge projected{std::min(projection.at(u), projection.at(v)), std::max(projection[u], projection[v])};
    if (projected != cert.g_edge || !g.has_edge(projected.first, projected.second))
        return false;
    return c.colours.at(projected.first) == cert.colour && c.colours.at(projected.second) == cert.colour;
}

BalancedEdgeMissing::BalancedEdgeMissing(SymmetricComplex k, HemisphereFlag f, Labelling lam)
    : TheoremViolation("THEOREM-VIOLATION: labelling from a colouring has no balanced edge"),
      complex(std::move(k)), flag(std::move(f)), lambda(std::move(lam))
{
}

Refuter::Refuter(SymmetricComplex complex, TwoColouring kappa, HemisphereFlag flag)
    : complex_(std::move(complex)), kappa_(std::move(kappa)), flag_(std::move(flag))
{
    if (auto rep = verify_symmetric(complex_); !rep.ok())
        throw ContractError("refute_colouring: " + rep.summary());
    if (auto rep = verify_flag(complex_, flag_); !rep.ok())
        throw ContractError("refute_colouring: flag invalid: " + rep.summary());
    quotient_ = quotient_graph(complex_, kappa_);
    edges_ = colex_edges(complex_);
}

MonochromeEdgeCert Refuter::refute(const KColouring& c) const
{
    if (c.m > complex_.dim + 1)
        throw ContractError("refute_colouring: palette " + std::to_string(c.m) +
                            " exceeds dim(K)+1 = " + std::to_string(complex_.dim + 1));
    if (static_cast<int>(c.colours.size()) != quotient_.graph.order())
        throw DomainError("colouring does not cover the quotient graph");
    Labelling lam = labelling_from_colouring(complex_, kappa_, c, quotient_.projection);
    auto edge = first_balanced(edges_, lam);
    if (!edge)
        throw BalancedEdgeMissing(complex_, flag_, lam);

    MonochromeEdgeCert cert;
    auto [u, v] = *edge;
    int a = quotient_.projection[u], b = quotient_.projection[v];
    cert.g_edge = {std::min(a, b), std::max(a, b)};
    cert.colour = c.colours[a];
    cert.lifted_edge = *edge;
    cert.labels = {lam.lambda[u], lam.lambda[v]};
    if (!self_verify(cert, lam, quotient_.projection, quotient_.graph, c))
        throw TheoremViolation("THEOREM-VIOLATION: certificate failed self-verification");
    return cert;
}

MonochromeEdgeCert refute_colouring(const SymmetricComplex& complex, const TwoColouring& kappa,
                                    const HemisphereFlag& flag, const KColouring& c)
{
    return Refuter(complex, kappa, flag).refute(c);
}

Labelling random_labelling(const SymmetricComplex& complex, int k, std::mt19937_64& rng)
{
    std::uniform_int_distribution<int> draw(0, 2 * k - 1);
    Labelling lam{std::vector<int>(complex.vertex_count(), 0), k};
    for (int v = 0; v < complex.vertex_count(); ++v) {
        if (lam.lambda[v] != 0)
            continue;
        int x = draw(rng);
        int label = x < k ? x + 1 : -(x - k + 1);
        lam.lambda[v] = label;
        lam.lambda[complex.nu[v]] = -label;
    }
    return lam;
}

Labelling sample_balanced_free(const SymmetricComplex& complex, int k, std::mt19937_64& rng,
                               int max_retries)
{
    auto edges = colex_edges(complex);
    for (int attempt = 0; attempt < max_retries; ++attempt) {
        Labelling lam = random_labelling(complex, k, rng);
        if (!first_balanced(edges, lam))
            return lam;
    }
    throw SamplingFailure("no balanced-edge-free labelling after " + std::to_string(max_retries) +
                          " draws");
}

} // namespace myc
