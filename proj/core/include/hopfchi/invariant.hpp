#pragma once

#include <vector>

#include "hopfchi/budget.hpp"
#include "hopfchi/character.hpp"
#include "hopfchi/hypergraph.hpp"
#include "hopfchi/orientation.hpp"
#include "hopfchi/polynomial.hpp"

namespace hopfchi {

enum class ChiMethod { oracle, orientation_formula };

struct OrientationContribution {
    Orientation orientation;
    Rational zeta_value;
    RationalPolynomial strict_count_poly;  // strict coloring count of f as a polynomial in n
};

struct InvariantResult {
    RationalPolynomial polynomial;
    std::vector<OrientationContribution> breakdown;
    ChiMethod method = ChiMethod::orientation_formula;
};

// Definition-level oracle: sum zeta(mu_D Delta_D(h)) over all n^{|V|}
// colorings. Exponential in |V|; guarded by the budget.
Rational chi_oracle(const Hypergraph& h, const Character& zeta, int n, Budget budget = {});

// Orientation formula. For n >= 0 sums zeta(f(h)) * |strict colorings|; for
// n < 0 sums (-1)^{cc(f(h))} zeta(f(h)) * |compatible colorings at -n|.
// Coloring counts go through the Faulhaber path, so cost does not grow with n.
Rational chi_orientation(const Hypergraph& h, const Character& zeta, const Integer& n, Budget budget = {},
                         int jobs = 1);

// Interpolates chi_orientation at n = 0..|V| and cross-checks chi_oracle at
// n = 1, 2 when that fits the budget; a mismatch raises DisagreementError.
InvariantResult chi_polynomial(const Hypergraph& h, const Character& zeta, Budget budget = {}, int jobs = 1);

// chi(-n) computed through the cancellation-free antipode: sum over antipode
// terms of coefficient * chi(term)(n).
Rational chi_negative_via_antipode(const Hypergraph& h, const Character& zeta, int n, Budget budget = {});

struct ReciprocityRow {
    int n = 0;
    Rational polynomial_route;   // chi evaluated at -n via the interpolated polynomial
    Rational orientation_route;  // reciprocity formula at -n
    Rational antipode_route;     // chi(S(h))(n)
};

struct ReciprocityReport {
    std::vector<ReciprocityRow> rows;
    bool oddness_applicable = false;        // zeta was declared odd
    bool strict_weak_inequality_holds = false;  // chi(n) <= (-1)^{|V|} chi(-n) over the rows
};

// Checks the three negative-evaluation routes for n = 1..n_max; any
// disagreement raises DisagreementError naming the first failing row.
ReciprocityReport reciprocity_report(const Hypergraph& h, const Character& zeta, int n_max, Budget budget = {});

}  // namespace hopfchi
