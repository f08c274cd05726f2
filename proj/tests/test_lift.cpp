#include <doctest.h>

#include "myc/chromatic.hpp"
#include "myc/errors.hpp"
#include "myc/lift.hpp"

#include <algorithm>

using namespace myc;

namespace {

void check_aligned(const AlignedSphere& s)
{
    INFO(verify_symmetric(s.complex).summary());
    CHECK(verify_symmetric(s.complex).ok());
    INFO(verify_sphere_necessary(s.complex).summary());
    CHECK(verify_sphere_necessary(s.complex).ok());
    INFO(verify_flag(s.complex, s.flag).summary());
    CHECK(verify_flag(s.complex, s.flag).ok());
    CHECK(verify_two_colouring(s.complex, s.kappa).ok());
}

Graph quotient_of(const AlignedSphere& s) { return quotient_graph(s.complex, s.kappa).graph; }

} // namespace

TEST_CASE("suspension lift")
{
    auto c1 = circle_complex(1);
    auto s = suspension_lift(c1.complex, c1.kappa, c1.flag);
    check_aligned(s);
    CHECK(s.complex.vertex_count() == 8);
    CHECK(s.complex.facets.size() == 12);
    CHECK(is_isomorphic(quotient_of(s), complete(4)));

    auto ss = suspension_lift(s.complex, s.kappa, s.flag);
    check_aligned(ss);
    CHECK(ss.complex.dim == 3);
    CHECK(is_isomorphic(quotient_of(ss), complete(5)));

    auto c2 = circle_complex(2);
    auto w = suspension_lift(c2.complex, c2.kappa, c2.flag);
    check_aligned(w);
    CHECK(is_isomorphic(quotient_of(w), mycielski(cycle(5), 1)));
}

TEST_CASE("general lift contract")
{
    auto c2 = circle_complex(2);
    for (int r = 1; r <= 4; ++r) {
        auto l = general_lift(c2.complex, c2.kappa, c2.flag, r);
        check_aligned(l);
        CHECK(l.complex.dim == 2);
        CHECK(l.complex.vertex_count() == r * 10 + 2);
        CHECK(is_isomorphic(quotient_of(l), mycielski(cycle(5), r)));
    }
    auto fig = general_lift(c2.complex, c2.kappa, c2.flag, 3);
    CHECK(is_isomorphic(quotient_of(fig), build_family({{2, 3}})));

    auto c1 = circle_complex(1);
    auto one = general_lift(c1.complex, c1.kappa, c1.flag, 1);
    auto susp = suspension_lift(c1.complex, c1.kappa, c1.flag);
    CHECK(one.complex == susp.complex);
    CHECK(one.kappa == susp.kappa);
    CHECK(one.flag == susp.flag);

    auto two = general_lift(c1.complex, c1.kappa, c1.flag, 2);
    auto q = quotient_of(two);
    CHECK(q.order() == 7);
    CHECK(is_isomorphic(q, mycielski(complete(3), 2)));
    CHECK(chi_exact(q).chi == 4);

    CHECK_THROWS_AS(general_lift(c2.complex, c2.kappa, c2.flag, 0), ContractError);
    auto bad = c2.kappa;
    bad.kappa[0] = opposite(bad.kappa[0]);
    CHECK_THROWS_AS(general_lift(c2.complex, bad, c2.flag, 2), ContractError);
}

TEST_CASE("lifts of lifts")
{
    auto c2 = circle_complex(2);
    auto a = general_lift(c2.complex, c2.kappa, c2.flag, 2);
    auto b = general_lift(a.complex, a.kappa, a.flag, 3);
    check_aligned(b);
    CHECK(b.complex.dim == 3);
    CHECK(is_isomorphic(quotient_of(b), build_family({{2, 2, 3}})));
}

TEST_CASE("lifted names and quotient names")
{
    auto c2 = circle_complex(2);
    auto l = general_lift(c2.complex, c2.kappa, c2.flag, 3);
    int n = c2.complex.vertex_count();
    CHECK(l.complex.names[0] == level_text(c2.complex.names[0], 0));
    CHECK(l.complex.names[2 * n + 1] == level_text(c2.complex.names[1], 2));
    CHECK(l.complex.names[3 * n] == "z+2");
    CHECK(l.complex.names[3 * n + 1] == "z-2");
    auto q = quotient_graph(l.complex, l.kappa);
    for (auto name : q.graph.names())
        CHECK(VertexName::parse(name.to_string()) == name);

    auto twice = general_lift(l.complex, l.kappa, l.flag, 2);
    auto names = twice.complex.names;
    std::sort(names.begin(), names.end());
    CHECK(std::adjacent_find(names.begin(), names.end()) == names.end());
}

TEST_CASE("sphere models")
{
    auto m2 = sphere_model({{2}});
    CHECK(m2.complex.dim == 1);
    CHECK(is_isomorphic(m2.graph, cycle(5)));
    CHECK(verify_model(m2).ok());

    auto m23 = sphere_model({{2, 3}});
    CHECK(m23.complex.dim == 2);
    CHECK(m23.graph.order() == 16);
    CHECK(verify_model(m23).ok());

    auto m11 = sphere_model({{1, 1}});
    CHECK(is_isomorphic(m11.graph, complete(4)));

    auto m123 = sphere_model({{1, 2, 3}});
    CHECK(m123.complex.dim == 3);
    CHECK(verify_model(m123).ok());

    auto m222 = sphere_model({{2, 2, 2}});
    CHECK(m222.graph.order() == 23);
    CHECK(verify_model(m222).ok());

    CHECK_THROWS_AS(sphere_model({}), ContractError);

    auto tampered = m23;
    tampered.spec = {{2, 2}};
    CHECK_FALSE(verify_model(tampered).ok());
    tampered = m23;
    tampered.projection[0] = tampered.projection[1];
    CHECK(verify_model(tampered).has("projection"));
}

TEST_CASE("bichromatic skeleton is the double cover on lifted complexes")
{
    for (auto spec : {MycielskiSpec{{1, 1}}, MycielskiSpec{{2, 3}}, MycielskiSpec{{2, 2, 2}}}) {
        auto m = sphere_model(spec);
        auto cover = bichromatic_skeleton(m.complex, m.kappa);
        CHECK(bipartition(cover).has_value());
        CHECK(is_isomorphic(double_cover(m.graph), cover));
    }
}
