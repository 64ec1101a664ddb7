#include <algorithm>

#include "doctest.h"
#include "hopfchi/polytope.hpp"
#include "test_support.hpp"

using namespace hopfchi;
using hopfchi::testing::deterministic_hypergraphs;
using hopfchi::testing::hg;

namespace {

HypergraphicPolytope gp_example() {
    // Minkowski sum of the triangle on {1,2,3} and the segment {1,4}
    return HypergraphicPolytope(hg(4, {{1, 2, 3}, {1, 4}}));
}

}  // namespace

TEST_CASE("face enumeration") {
    HypergraphicPolytope segment(hg(2, {{1, 2}}));
    auto fs = faces(segment);
    CHECK(fs.size() == 3);
    std::vector<int> dims;
    for (const auto& f : fs) dims.push_back(f.dimension);
    std::sort(dims.begin(), dims.end());
    CHECK(dims == std::vector<int>{0, 0, 1});

    CHECK(faces(HypergraphicPolytope(hg(3, {{1, 2, 3}}))).size() == 7);

    // exactly three 2-dimensional faces whose images have only size-2 edges
    int rectangles = 0;
    for (const auto& f : faces(gp_example())) {
        bool graphic = std::all_of(f.image.edges().begin(), f.image.edges().end(),
                                   [](Subset e) { return popcount(e) == 2; });
        if (f.dimension == 2 && graphic) ++rectangles;
    }
    CHECK(rectangles == 3);
}

TEST_CASE("dimension equals |V| minus component count") {
    for (const auto& h : deterministic_hypergraphs(4, 3, 40)) {
        HypergraphicPolytope p(h);
        for (const auto& f : faces(p))
            CHECK(h.vertex_count() - f.dimension == component_count(f.image));
    }
}

TEST_CASE("euler relation on the face lattice") {
    for (const auto& h : deterministic_hypergraphs(4, 3, 40)) {
        HypergraphicPolytope p(h);
        Integer euler = 0;
        for (const auto& f : faces(p)) euler += (f.dimension % 2 == 0) ? 1 : -1;
        CHECK(euler == 1);
    }
}

TEST_CASE("maximal face selection") {
    HypergraphicPolytope segment(hg(2, {{1, 2}}));
    Face v = maximal_face(segment, Coloring(segment.generator().ground(), {1, 2}, 2));
    CHECK(v.dimension == 0);
    CHECK(v.image == hg(2, {{2}}));

    Face whole = maximal_face(segment, Coloring(segment.generator().ground(), {1, 1}, 2));
    CHECK(whole.image == segment.generator());
    CHECK(whole.dimension == 1);

    // the coloring 2e1*+2e2*+e3*+2e4* picks the rectangle with image {{1,2},{1,4}}
    HypergraphicPolytope p = gp_example();
    Face rect = maximal_face(p, Coloring(p.generator().ground(), {2, 2, 1, 2}, 2));
    CHECK(rect.image == hg(4, {{1, 2}, {1, 4}}));
    CHECK(rect.dimension == 2);
}

TEST_CASE("maximal face depends only on the induced order") {
    for (const auto& h : deterministic_hypergraphs(4, 2, 20)) {
        HypergraphicPolytope p(h);
        for (const Coloring& c : ColoringRange(h.ground(), 2)) {
            // stretch the palette by an order-preserving map 1->2, 2->5
            std::vector<int> stretched;
            for (int v = 0; v < h.vertex_count(); ++v) stretched.push_back(c.color(v) == 1 ? 2 : 5);
            Face a = maximal_face(p, c);
            Face b = maximal_face(p, Coloring(h.ground(), stretched, 5));
            CHECK(a.orientation == b.orientation);
        }
    }
}

TEST_CASE("chi_gp on the worked example") {
    HypergraphicPolytope p = gp_example();
    CHECK(chi_gp(p, character_zeta_graphic(), 2) == Rational(3));
    CHECK(chi_gp(p, character_zeta_graphic(), -2) == Rational(9));
    CHECK(zeta_faces_even(p, character_zeta_graphic()));
}

TEST_CASE("chi_gp with the point character equals the hypergraph chi") {
    for (const auto& h : deterministic_hypergraphs(4, 3, 30)) {
        HypergraphicPolytope p(h);
        for (int n = -2; n <= 2; ++n)
            CHECK(chi_gp(p, character_zeta1(), Integer(n)) == chi_orientation(h, character_zeta1(), Integer(n)));
    }
}

TEST_CASE("vertex count sums") {
    HypergraphicPolytope segment(hg(2, {{1, 2}}));
    CHECK(vertex_count_sum(segment, 1) == 2);
    CHECK(vertex_count_sum(segment, 2) == 6);  // brute force over the 4 colorings: 2+2+1+1

    // equality with (-1)^{|V|} chi^{zeta1}(-n)
    for (const Hypergraph& h : {hg(2, {{1, 2}}), hg(3, {{1, 2, 3}}), hg(4, {{1, 2, 3}, {2, 3, 4}})}) {
        HypergraphicPolytope p(h);
        RationalPolynomial chi = chi_gp_polynomial(p, character_zeta1());
        Rational parity = (h.vertex_count() % 2 == 0) ? 1 : -1;
        for (int n = 1; n <= 2; ++n)
            CHECK(Rational(vertex_count_sum(p, n)) == parity * chi(Rational(-n)));
    }
}

TEST_CASE("vertex coordinates for display") {
    HypergraphicPolytope p = gp_example();
    for (const auto& f : faces(p)) {
        if (f.dimension != 0) continue;
        auto coords = vertex_coordinates(f);
        int total = 0;
        for (int c : coords) total += c;
        CHECK(total == p.generator().edge_count());  // one indicator per edge
    }
    Face whole = maximal_face(p, Coloring(p.generator().ground(), {1, 1, 1, 1}, 1));
    CHECK_THROWS(vertex_coordinates(whole));
}
