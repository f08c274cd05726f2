#include <doctest.h>

#include "myc/errors.hpp"
#include "myc/simplicial.hpp"

#include <algorithm>

using namespace myc;

namespace {

SymmetricComplex octahedron() { return cross_polytope(2).complex; }

} // namespace

TEST_CASE("cross polytopes")
{
    auto c1 = cross_polytope(1);
    CHECK(c1.complex.vertex_count() == 4);
    CHECK(c1.complex.facets.size() == 4);
    CHECK(c1.complex.nu == std::vector<int>{1, 0, 3, 2});

    auto c2 = cross_polytope(2);
    CHECK(c2.complex.vertex_count() == 6);
    CHECK(c2.complex.facets.size() == 8);
    auto r2 = verify_sphere_necessary(c2.complex);
    CHECK(r2.ok());
    CHECK(r2.euler == 2);

    auto c3 = cross_polytope(3);
    CHECK(c3.complex.vertex_count() == 8);
    CHECK(c3.complex.facets.size() == 16);
    auto r3 = verify_sphere_necessary(c3.complex);
    CHECK(r3.ok());
    CHECK(r3.euler == 0);

    for (int n = 1; n <= 5; ++n) {
        auto c = cross_polytope(n);
        CHECK(verify_symmetric(c.complex).ok());
        CHECK(verify_sphere_necessary(c.complex).ok());
        INFO(verify_flag(c.complex, c.flag).summary());
        CHECK(verify_flag(c.complex, c.flag).ok());
        auto f = f_vector(c.complex);
        CHECK(f.size() == static_cast<std::size_t>(n + 1));
        CHECK(f[0] == 2 * (n + 1));
        CHECK(f[n] == (1LL << (n + 1)));
    }
}

TEST_CASE("circle complexes")
{
    for (int r = 1; r <= 6; ++r) {
        auto s = circle_complex(r);
        CHECK(s.complex.vertex_count() == 4 * r + 2);
        CHECK(s.complex.dim == 1);
        CHECK(verify_symmetric(s.complex).ok());
        CHECK(verify_sphere_necessary(s.complex).ok());
        CHECK(verify_flag(s.complex, s.flag).ok());
        CHECK(verify_two_colouring(s.complex, s.kappa).ok());
        auto q = quotient_graph(s.complex, s.kappa);
        CHECK(is_isomorphic(q.graph, cycle(2 * r + 1)));
        // Every edge bichromatic.
        CHECK(bichromatic_skeleton(s.complex, s.kappa).size() == skeleton_edges(s.complex).size());
    }
    CHECK(is_isomorphic(quotient_graph(circle_complex(1).complex, circle_complex(1).kappa).graph,
                        complete(3)));
}

TEST_CASE("verify_symmetric failures")
{
    CHECK(verify_symmetric(octahedron()).ok());

    auto missing = octahedron();
    missing.facets.pop_back();
    CHECK(verify_symmetric(missing).has("closure-under-nu"));

    auto pair = octahedron();
    pair.facets.push_back({0, 1, 2});
    pair.canonicalize();
    CHECK(verify_symmetric(pair).has("antipodal-pair-free"));

    auto fixed = octahedron();
    fixed.nu[0] = 0;
    fixed.nu[1] = 1;
    CHECK_FALSE(verify_symmetric(fixed).ok());
}

TEST_CASE("verify_sphere_necessary failures")
{
    // Two disjoint octahedra.
    auto two = octahedron();
    int n = two.vertex_count();
    for (int v = 0; v < n; ++v) {
        two.nu.push_back(two.nu[v] + n);
        two.names.push_back(two.names[v] + "'");
    }
    auto count = two.facets.size();
    for (std::size_t i = 0; i < count; ++i) {
        auto f = two.facets[i];
        for (int& v : f)
            v += n;
        two.facets.push_back(f);
    }
    two.canonicalize();
    CHECK(verify_sphere_necessary(two).has("connected"));

    // Dangling triangle on fresh vertices attached along an edge.
    auto dangling = octahedron();
    dangling.nu.push_back(7);
    dangling.nu.push_back(6);
    dangling.names.push_back("a");
    dangling.names.push_back("b");
    dangling.facets.push_back({0, 2, 6});
    dangling.canonicalize();
    CHECK(verify_sphere_necessary(dangling).has("ridge-degree-2"));

    auto impure = octahedron();
    impure.facets.push_back({0, 2});
    impure.canonicalize();
    CHECK(verify_sphere_necessary(impure).has("purity"));
}

TEST_CASE("verify_flag failures")
{
    auto c = cross_polytope(2);
    CHECK(verify_flag(c.complex, c.flag).ok());

    // H_1 as an arc that does not close: only one of the two edges.
    auto arc = c.flag;
    arc.H[1].resize(1);
    CHECK(verify_flag(c.complex, arc).has("boundary-identity"));

    auto full = c.flag;
    full.H[2] = c.complex.facets;
    CHECK(verify_flag(c.complex, full).has("intersection"));

    auto shortf = c.flag;
    shortf.H.pop_back();
    CHECK(verify_flag(c.complex, shortf).has("flag-length"));
}

TEST_CASE("two-colouring checks")
{
    auto s = circle_complex(2);
    auto same = s.kappa;
    same.kappa[0] = opposite(same.kappa[0]);
    CHECK(verify_two_colouring(s.complex, same).has("antisymmetric"));

    // Flipping an antipodal pair keeps antisymmetry but creates monochromatic facets.
    auto flipped = s.kappa;
    flipped.kappa[0] = opposite(flipped.kappa[0]);
    flipped.kappa[s.complex.nu[0]] = opposite(flipped.kappa[s.complex.nu[0]]);
    CHECK(verify_two_colouring(s.complex, flipped).has("proper"));
    CHECK_THROWS_AS(quotient_graph(s.complex, flipped), ContractError);
}

TEST_CASE("face utilities")
{
    std::vector<Simplex> tri{{0, 1, 2}};
    CHECK(all_faces(tri).size() == 7);
    CHECK(faces_of_dim(tri, 1).size() == 3);
    CHECK(boundary(tri).size() == 3);
    CHECK(boundary(octahedron().facets).empty());
    CHECK(skeleton_edges(octahedron()).size() == 12);
}

TEST_CASE("bichromatic skeleton is the double cover of the quotient")
{
    for (int r = 1; r <= 5; ++r) {
        auto s = circle_complex(r);
        auto q = quotient_graph(s.complex, s.kappa);
        auto cover = bichromatic_skeleton(s.complex, s.kappa);
        CHECK(bipartition(cover).has_value());
        CHECK(is_isomorphic(double_cover(q.graph), cover));
        // Projection: two preimages per vertex, antipodal.
        std::vector<int> count(q.graph.order());
        for (int v = 0; v < s.complex.vertex_count(); ++v) {
            ++count[q.projection[v]];
            CHECK(q.projection[v] == q.projection[s.complex.nu[v]]);
        }
        CHECK(std::all_of(count.begin(), count.end(), [](int c) { return c == 2; }));
    }
}
