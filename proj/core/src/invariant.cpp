#include "hopfchi/invariant.hpp"

#include "hopfchi/parallel.hpp"

namespace hopfchi {

Rational chi_oracle(const Hypergraph& h, const Character& zeta, int n, Budget budget) {
    if (n < 0) throw ValidationError("chi_oracle: n must be nonnegative");
    StepCounter steps(budget);
    Rational total = 0;
    for (const Coloring& c : ColoringRange(h.ground(), n)) {
        steps.charge();
        total += evaluate_character(zeta, mu_delta(h, coloring_to_decomposition(c)));
    }
    return total;
}

namespace {

Rational orientation_sum(const Hypergraph& h, const Character& zeta, int n, bool negative, Budget budget,
                         int jobs) {
    std::vector<Orientation> acyclic = enumerate_acyclic(h, budget);
    Rational total = 0;
    parallel_chunks(
        acyclic.size(), jobs,
        [&](std::size_t begin, std::size_t end) {
            Rational partial = 0;
            for (std::size_t i = begin; i < end; ++i) {
                const Orientation& f = acyclic[i];
                Hypergraph image = image_hypergraph(f);
                Rational zeta_value = evaluate_character(zeta, image);
                if (zeta_value == 0) continue;
                if (negative) {
                    Rational sign = (component_count(image) % 2 == 0) ? 1 : -1;
                    partial += sign * zeta_value * Rational(count_compatible_colorings_faulhaber(f, n));
                } else {
                    partial += zeta_value * Rational(count_strict_colorings_faulhaber(f, n));
                }
            }
            return partial;
        },
        [&](Rational&& partial) { total += partial; });
    return total;
}

}  // namespace

Rational chi_orientation(const Hypergraph& h, const Character& zeta, const Integer& n, Budget budget, int jobs) {
    int n_ll = n.convert_to<int>();
    if (n_ll >= 0) return orientation_sum(h, zeta, n_ll, false, budget, jobs);
    return orientation_sum(h, zeta, -n_ll, true, budget, jobs);
}

InvariantResult chi_polynomial(const Hypergraph& h, const Character& zeta, Budget budget, int jobs) {
    int v = h.vertex_count();
    InvariantResult result;
    result.method = ChiMethod::orientation_formula;

    std::vector<Orientation> acyclic = enumerate_acyclic(h, budget);
    RationalPolynomial chi;
    struct Partial {
        RationalPolynomial sum;
        std::vector<OrientationContribution> rows;
    };
    parallel_chunks(
        acyclic.size(), jobs,
        [&](std::size_t begin, std::size_t end) {
            Partial partial;
            for (std::size_t i = begin; i < end; ++i) {
                const Orientation& f = acyclic[i];
                Rational zeta_value = evaluate_character(zeta, image_hypergraph(f));
                if (zeta_value == 0) continue;
                // the strict count is a polynomial of degree <= |V|; nodes 0..|V| pin it
                std::vector<std::pair<Integer, Rational>> points;
                points.reserve(static_cast<std::size_t>(v) + 1);
                for (int n = 0; n <= v; ++n)
                    points.push_back({Integer(n), Rational(count_strict_colorings_faulhaber(f, n))});
                RationalPolynomial count_poly = lagrange_interpolate(points);
                partial.sum = partial.sum + count_poly.scaled(zeta_value);
                partial.rows.push_back({f, zeta_value, std::move(count_poly)});
            }
            return partial;
        },
        [&](Partial&& partial) {
            chi = chi + partial.sum;
            for (auto& row : partial.rows) result.breakdown.push_back(std::move(row));
        });
    result.polynomial = std::move(chi);

    if (result.polynomial.degree() > v)
        throw DisagreementError("chi_polynomial: degree exceeds the vertex count");

    // double-entry check against the definition oracle where affordable
    for (int n = 1; n <= 2; ++n) {
        Integer colorings = int_pow(Integer(n), static_cast<unsigned>(v));
        if (colorings > Integer(budget.steps)) break;
        Rational via_oracle = chi_oracle(h, zeta, n, budget);
        if (via_oracle != result.polynomial(Rational(n)))
            throw DisagreementError("chi_polynomial: oracle and orientation formula disagree at n=" +
                                    std::to_string(n));
    }
    return result;
}

Rational chi_negative_via_antipode(const Hypergraph& h, const Character& zeta, int n, Budget budget) {
    if (n < 1) throw ValidationError("chi_negative_via_antipode: n must be positive");
    FormalSum antipode = cancellation_free_antipode(h, budget);
    Rational total = 0;
    for (const auto& [edges, coeff] : antipode.terms()) {
        Hypergraph term = antipode.term_hypergraph(edges);
        total += coeff * chi_orientation(term, zeta, Integer(n), budget);
    }
    return total;
}

ReciprocityReport reciprocity_report(const Hypergraph& h, const Character& zeta, int n_max, Budget budget) {
    if (n_max < 1) throw ValidationError("reciprocity_report: n_max must be at least 1");
    InvariantResult invariant = chi_polynomial(h, zeta, budget);

    ReciprocityReport report;
    report.oddness_applicable = zeta.declared_odd;
    bool inequality = true;
    Rational parity_sign = (h.vertex_count() % 2 == 0) ? 1 : -1;

    for (int n = 1; n <= n_max; ++n) {
        ReciprocityRow row;
        row.n = n;
        row.polynomial_route = invariant.polynomial(Rational(-n));
        row.orientation_route = chi_orientation(h, zeta, Integer(-n), budget);
        row.antipode_route = chi_negative_via_antipode(h, zeta, n, budget);
        if (row.polynomial_route != row.orientation_route || row.polynomial_route != row.antipode_route)
            throw DisagreementError("reciprocity routes disagree at n=" + std::to_string(n));
        if (invariant.polynomial(Rational(n)) > parity_sign * row.polynomial_route) inequality = false;
        report.rows.push_back(std::move(row));
    }
    report.strict_weak_inequality_holds = report.oddness_applicable && inequality;
    return report;
}

}  // namespace hopfchi
