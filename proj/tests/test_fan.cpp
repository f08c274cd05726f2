#include <doctest.h>

#include "myc/errors.hpp"
#include "myc/fan.hpp"
#include "myc/lift.hpp"

#include <random>

using namespace myc;

namespace {

Labelling octa_identity() { return {{1, -1, 2, -2, 3, -3}, 3}; }

Labelling negate(Labelling lam)
{
    for (int& x : lam.lambda)
        x = -x;
    return lam;
}

} // namespace

TEST_CASE("mu transform")
{
    CHECK(mu_transform({{1}, 1}).lambda == std::vector<int>{-1});
    CHECK(mu_transform({{-2}, 2}).lambda == std::vector<int>{-2});
    CHECK(mu_transform({{3}, 3}).lambda == std::vector<int>{-3});

    std::mt19937_64 rng(3);
    auto k = cross_polytope(3).complex;
    for (int i = 0; i < 100; ++i) {
        auto lam = random_labelling(k, 4, rng);
        CHECK(verify_labelling(k, lam).ok());
        CHECK(mu_transform(mu_transform(lam)) == lam);
        CHECK(verify_labelling(k, mu_transform(lam)).ok());
    }
}

TEST_CASE("alternating counts on the octahedron")
{
    auto k = cross_polytope(2).complex;
    auto pos = positive_alternating_count(k, octa_identity());
    CHECK(pos.count == 1);
    REQUIRE(pos.facets.size() == 1);
    CHECK(pos.facets[0] == Simplex{0, 3, 4});

    auto neg = positive_alternating_count(k, negate(octa_identity()));
    CHECK(neg.count == 1);
    REQUIRE(neg.facets.size() == 1);
    CHECK(neg.facets[0] == Simplex{1, 2, 5});
}

TEST_CASE("alternating count on C6")
{
    auto c6 = circle_complex(1).complex;
    Labelling lam{{1, 2, -1, -1, -2, 1}, 2};
    REQUIRE(verify_labelling(c6, lam).ok());
    auto pos = positive_alternating_count(c6, lam);
    CHECK(pos.count == 1);
    REQUIRE(pos.facets.size() == 1);
    CHECK(pos.facets[0] == Simplex{4, 5});
}

TEST_CASE("negation swaps positive and negative counts")
{
    std::mt19937_64 rng(5);
    for (int n = 1; n <= 3; ++n) {
        auto k = cross_polytope(n).complex;
        for (int i = 0; i < 50; ++i) {
            auto lam = random_labelling(k, n + 2, rng);
            CHECK(positive_alternating_count(k, lam).count ==
                  negative_alternating_count(k, negate(lam)).count);
        }
    }
}

TEST_CASE("balanced edges")
{
    auto c6 = circle_complex(1).complex;
    auto e = find_balanced_edge(c6, {{1, 2, 1, -1, -2, -1}, 2});
    REQUIRE(e.has_value());
    CHECK(*e == Edge{2, 3});
    CHECK_FALSE(find_balanced_edge(cross_polytope(2).complex, octa_identity()).has_value());
}

TEST_CASE("labelling from colouring")
{
    auto s1 = circle_complex(1);
    auto q1 = quotient_graph(s1.complex, s1.kappa);
    auto lam = labelling_from_colouring(s1.complex, s1.kappa, {{1, 1, 1}, 1}, q1.projection);
    for (int v = 0; v < 6; ++v)
        CHECK(lam.lambda[v] == (v % 2 == 0 ? 1 : -1));

    auto s2 = circle_complex(2);
    auto q2 = quotient_graph(s2.complex, s2.kappa);
    // A proper 3-colouring of the quotient C5 in its own vertex order.
    auto c = chi_exact(q2.graph).colouring;
    REQUIRE(c.m == 3);
    auto lam2 = labelling_from_colouring(s2.complex, s2.kappa, c, q2.projection);
    CHECK(verify_labelling(s2.complex, lam2).ok());
    for (int v = 0; v < 10; ++v)
        CHECK((lam2.lambda[v] > 0) == (s2.kappa.kappa[v] == Colour::black));
    CHECK_FALSE(find_balanced_edge(s2.complex, lam2).has_value());

    KColouring seven{std::vector<int>(5, 7), 7};
    auto lam7 = labelling_from_colouring(s2.complex, s2.kappa, seven, q2.projection);
    for (int x : lam7.lambda)
        CHECK(std::abs(x) == 7);
    CHECK(find_balanced_edge(s2.complex, lam7).has_value());

    CHECK_THROWS_AS(labelling_from_colouring(s2.complex, s2.kappa, {{1, 2}, 2}, q2.projection),
                    DomainError);
}

TEST_CASE("refuting colourings")
{
    auto s3 = circle_complex(3);
    Refuter refuter(s3.complex, s3.kappa, s3.flag);
    const auto& q = refuter.quotient();
    CHECK(is_isomorphic(q.graph, cycle(7)));
    // Every 2-colouring of C7.
    for (int mask = 0; mask < (1 << 7); ++mask) {
        KColouring c{std::vector<int>(7), 2};
        for (int v = 0; v < 7; ++v)
            c.colours[v] = 1 + ((mask >> v) & 1);
        auto cert = refuter.refute(c);
        auto lam = labelling_from_colouring(s3.complex, s3.kappa, c, q.projection);
        CHECK(self_verify(cert, lam, q.projection, q.graph, c));
        CHECK(q.graph.has_edge(cert.g_edge.first, cert.g_edge.second));
        CHECK(c.colours[cert.g_edge.first] == c.colours[cert.g_edge.second]);
    }

    auto s2 = circle_complex(2);
    CHECK_THROWS_AS(refute_colouring(s2.complex, s2.kappa, s2.flag, {{1, 2, 1, 2, 3}, 3}),
                    ContractError);

    auto broken = s2.flag;
    broken.H[1].resize(1);
    CHECK_THROWS_AS(refute_colouring(s2.complex, s2.kappa, broken, {{1, 2, 1, 2, 1}, 2}),
                    ContractError);
}

TEST_CASE("self_verify rejects tampered certificates")
{
    auto s = circle_complex(2);
    auto q = quotient_graph(s.complex, s.kappa);
    KColouring c{{1, 2, 1, 2, 1}, 2};
    auto cert = refute_colouring(s.complex, s.kappa, s.flag, c);
    auto lam = labelling_from_colouring(s.complex, s.kappa, c, q.projection);
    CHECK(self_verify(cert, lam, q.projection, q.graph, c));
    auto tampered = cert;
    tampered.labels.second = tampered.labels.first;
    CHECK_FALSE(self_verify(tampered, lam, q.projection, q.graph, c));
    tampered = cert;
    tampered.colour = 3 - cert.colour;
    CHECK_FALSE(self_verify(tampered, lam, q.projection, q.graph, c));
}

TEST_CASE("fan parity on small spheres")
{
    std::mt19937_64 rng(17);
    for (int n = 1; n <= 3; ++n) {
        auto k = cross_polytope(n).complex;
        for (int i = 0; i < 100; ++i) {
            auto lam = sample_balanced_free(k, n + 1, rng);
            CHECK_FALSE(find_balanced_edge(k, lam).has_value());
            CHECK(positive_alternating_count(k, lam).count % 2 == 1);
        }
    }
    for (int r = 1; r <= 3; ++r) {
        auto s = circle_complex(r);
        for (int i = 0; i < 100; ++i) {
            auto lam = sample_balanced_free(s.complex, 2, rng);
            CHECK(positive_alternating_count(s.complex, lam).count % 2 == 1);
        }
    }
}

TEST_CASE("sampling gives up when no balanced-free labelling exists")
{
    std::mt19937_64 rng(1);
    // With a single label every antipodal path on the circle changes sign.
    CHECK_THROWS_AS(sample_balanced_free(circle_complex(2).complex, 1, rng, 50), SamplingFailure);
}
