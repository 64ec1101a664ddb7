#include "doctest.h"
#include "hopfchi/errors.hpp"
#include "hopfchi/invariant.hpp"
#include "test_support.hpp"

using namespace hopfchi;
using hopfchi::testing::deterministic_hypergraphs;
using hopfchi::testing::hg;

namespace {

const Hypergraph& paper_instance() {
    static const Hypergraph h = hg(4, {{1, 2, 3}, {2, 3, 4}});
    return h;
}

}  // namespace

TEST_CASE("chi oracle pinned values") {
    CHECK(chi_oracle(paper_instance(), character_zeta1(), 2) == Rational(3));
    CHECK(chi_oracle(hg(2, {}), character_zeta1(), 3) == Rational(9));
    for (const Character* zeta : character_registry())
        CHECK(chi_oracle(paper_instance(), *zeta, 1) == evaluate_character(*zeta, paper_instance()));
}

TEST_CASE("chi orientation formula pinned values") {
    CHECK(chi_orientation(paper_instance(), character_zeta1(), -1) == Rational(7));
    CHECK(chi_orientation(hg(2, {{1, 2}}), character_zeta1(), 2) == Rational(2));
    CHECK(chi_orientation(paper_instance(), character_zeta1(), 2) == Rational(3));
}

TEST_CASE("oracle and orientation formula agree on the instance family") {
    for (const auto& h : deterministic_hypergraphs(4, 3, 60)) {
        for (const Character* zeta : character_registry()) {
            for (int n = 1; n <= 3; ++n) {
                CHECK(chi_oracle(h, *zeta, n) == chi_orientation(h, *zeta, Integer(n)));
            }
        }
    }
}

TEST_CASE("chi polynomial of the paper instance") {
    InvariantResult r = chi_polynomial(paper_instance(), character_zeta1());
    CHECK(r.polynomial.coefficients() ==
          std::vector<Rational>{Rational(0), Rational(-5, 6), Rational(5, 2), Rational(-8, 3), Rational(1)});
    CHECK(r.polynomial(Rational(2)) == Rational(3));
    CHECK(r.method == ChiMethod::orientation_formula);
    // one breakdown row per zeta-orientation, summing back to chi
    RationalPolynomial sum;
    for (const auto& row : r.breakdown) sum = sum + row.strict_count_poly.scaled(row.zeta_value);
    CHECK(sum == r.polynomial);
}

TEST_CASE("chi polynomial basics") {
    Hypergraph vertex(GroundSet({"1"}), {});
    CHECK(chi_polynomial(vertex, character_zeta1()).polynomial.coefficients() ==
          std::vector<Rational>{Rational(0), Rational(1)});

    CHECK(chi_polynomial(Hypergraph(), character_zeta1()).polynomial ==
          RationalPolynomial::constant(1));

    // disjoint union of two single edges: multiplicativity gives (n^2 - n)^2
    Hypergraph two = product(hg(2, {{1, 2}}), make_hypergraph({"a", "b"}, {{"a", "b"}}));
    RationalPolynomial edge_poly({Rational(0), Rational(-1), Rational(1)});
    CHECK(chi_polynomial(two, character_zeta1()).polynomial == edge_poly * edge_poly);
}

TEST_CASE("chi is multiplicative as a polynomial identity") {
    auto family = deterministic_hypergraphs(3, 2, 25);
    int pairs = 0;
    for (std::size_t i = 0; i < family.size() && pairs < 50; ++i) {
        std::vector<std::string> labels;
        for (const auto& l : family[i].ground().labels()) labels.push_back("p" + l);
        Hypergraph shifted(GroundSet(labels), family[i].edges());
        for (std::size_t j = 0; j < family.size() && pairs < 50; ++j) {
            Hypergraph joined = product(family[j], shifted);
            ++pairs;
            for (const Character* zeta : {&character_zeta1(), &character_zeta_3()}) {
                CHECK(chi_polynomial(joined, *zeta).polynomial ==
                      chi_polynomial(family[j], *zeta).polynomial * chi_polynomial(shifted, *zeta).polynomial);
            }
        }
    }
    CHECK(pairs == 50);
}

TEST_CASE("degree bounds") {
    for (const auto& h : deterministic_hypergraphs(4, 3, 30)) {
        InvariantResult r = chi_polynomial(h, character_zeta1());
        CHECK(r.polynomial.degree() == h.vertex_count());  // zeta1 keeps the top term
        for (const Character* zeta : character_registry())
            CHECK(chi_polynomial(h, *zeta).polynomial.degree() <= h.vertex_count());
    }
}

TEST_CASE("negative evaluation via antipode") {
    CHECK(chi_negative_via_antipode(paper_instance(), character_zeta1(), 1) == Rational(7));
    CHECK(chi_negative_via_antipode(hg(2, {{1, 2}}), character_zeta1(), 1) == Rational(2));

    // (-1)^4 chi(-n) expands to n^4 + 8/3 n^3 + 5/2 n^2 + 5/6 n
    RationalPolynomial flipped = chi_polynomial(paper_instance(), character_zeta1()).polynomial.negated_argument();
    CHECK(flipped.coefficients() ==
          std::vector<Rational>{Rational(0), Rational(5, 6), Rational(5, 2), Rational(8, 3), Rational(1)});
    for (int n = 1; n <= 3; ++n)
        CHECK(chi_negative_via_antipode(paper_instance(), character_zeta1(), n) == flipped(Rational(n)));
}

TEST_CASE("negative-route agreement across the family") {
    for (const auto& h : deterministic_hypergraphs(4, 3, 30)) {
        for (const Character* zeta : character_registry()) {
            RationalPolynomial chi = chi_polynomial(h, *zeta).polynomial;
            for (int n = 1; n <= 3; ++n) {
                Rational expected = chi(Rational(-n));
                CHECK(chi_orientation(h, *zeta, Integer(-n)) == expected);
                CHECK(chi_negative_via_antipode(h, *zeta, n) == expected);
            }
        }
    }
}

TEST_CASE("reciprocity report") {
    ReciprocityReport r = reciprocity_report(paper_instance(), character_zeta1(), 3);
    CHECK(r.rows.size() == 3);
    CHECK(r.rows[0].polynomial_route == Rational(7));
    CHECK(r.oddness_applicable);
    CHECK(r.strict_weak_inequality_holds);

    Hypergraph vertex(GroundSet({"1"}), {});
    ReciprocityReport rv = reciprocity_report(vertex, character_zeta1(), 3);
    for (const auto& row : rv.rows) CHECK(row.polynomial_route == Rational(-row.n));

    ReciprocityReport re = reciprocity_report(hg(2, {{1, 2}}), character_zeta1(), 1);
    CHECK(re.rows[0].polynomial_route == Rational(2));
    CHECK(re.rows[0].orientation_route == Rational(2));
    CHECK(re.rows[0].antipode_route == Rational(2));
    CHECK(re.strict_weak_inequality_holds);  // strict pairs embed into compatible pairs
}

TEST_CASE("budget errors surface") {
    CHECK_THROWS_AS(chi_oracle(paper_instance(), character_zeta1(), 3, Budget{10}), BudgetError);
}
