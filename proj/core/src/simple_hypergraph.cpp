#include "hopfchi/simple_hypergraph.hpp"

#include <algorithm>

namespace hopfchi {

namespace {

std::vector<Subset> dedup(std::vector<Subset> edges) {
    std::sort(edges.begin(), edges.end(), lex_less);
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return edges;
}

}  // namespace

SimpleHypergraph::SimpleHypergraph(GroundSet ground, std::vector<Subset> edges)
    : ground_(std::move(ground)), edges_(dedup(std::move(edges))) {
    for (Subset e : edges_) {
        if (e == 0) throw ValidationError("simple hypergraph edge is empty");
        if (!subset_of(e, ground_.full_mask())) throw ValidationError("simple hypergraph edge exceeds ground set");
    }
}

SimpleHypergraph shg_restrict(const SimpleHypergraph& h, Subset w) {
    Hypergraph r = restrict_to(h.as_hypergraph(), w);
    return SimpleHypergraph(r.ground(), r.edges());
}

SimpleHypergraph shg_contract(const SimpleHypergraph& h, Subset w) {
    Hypergraph c = contract(h.as_hypergraph(), w);
    return SimpleHypergraph(c.ground(), c.edges());
}

SimpleHypergraph shg_product(const SimpleHypergraph& a, const SimpleHypergraph& b) {
    Hypergraph p = product(a.as_hypergraph(), b.as_hypergraph());
    return SimpleHypergraph(p.ground(), p.edges());
}

SimpleHypergraph shg_mu_delta(const SimpleHypergraph& h, const Decomposition& d) {
    Hypergraph m = mu_delta(h.as_hypergraph(), d);
    return SimpleHypergraph(m.ground(), m.edges());
}

Character dedup_character(const Character& zeta) {
    Character wrapped = zeta;
    wrapped.name = zeta.name + "(set)";
    wrapped.connected_value = [inner = zeta.connected_value](const Hypergraph& comp) {
        std::vector<Subset> edges = comp.edges();
        edges.erase(std::unique(edges.begin(), edges.end()), edges.end());  // already sorted
        return inner(Hypergraph(comp.ground(), edges));
    };
    return wrapped;
}

Rational simple_chi(const SimpleHypergraph& h, const Character& zeta, const Integer& n, Budget budget) {
    return chi_orientation(h.as_hypergraph(), dedup_character(zeta), n, budget);
}

RationalPolynomial simple_chi_polynomial(const SimpleHypergraph& h, const Character& zeta, Budget budget) {
    return chi_polynomial(h.as_hypergraph(), dedup_character(zeta), budget).polynomial;
}

Rational simple_chi_oracle(const SimpleHypergraph& h, const Character& zeta, int n, Budget budget) {
    if (n < 0) throw ValidationError("simple_chi_oracle: n must be nonnegative");
    StepCounter steps(budget);
    Rational total = 0;
    for (const Coloring& c : ColoringRange(h.ground(), n)) {
        steps.charge();
        total += evaluate_character(zeta, shg_mu_delta(h, coloring_to_decomposition(c)).as_hypergraph());
    }
    return total;
}

}  // namespace hopfchi
