#pragma once

#include "hopfchi/character.hpp"
#include "hopfchi/invariant.hpp"

namespace hopfchi {

// Hypergraph with set semantics: duplicate edges collapse, in particular
// under contraction.
class SimpleHypergraph {
public:
    SimpleHypergraph() = default;
    SimpleHypergraph(GroundSet ground, std::vector<Subset> edges);  // dedups

    const GroundSet& ground() const { return ground_; }
    const std::vector<Subset>& edges() const { return edges_; }
    Hypergraph as_hypergraph() const { return Hypergraph(ground_, edges_); }

    friend bool operator==(const SimpleHypergraph&, const SimpleHypergraph&) = default;

private:
    GroundSet ground_;
    std::vector<Subset> edges_;
};

SimpleHypergraph shg_restrict(const SimpleHypergraph& h, Subset w);
SimpleHypergraph shg_contract(const SimpleHypergraph& h, Subset w);  // traces deduplicate
SimpleHypergraph shg_product(const SimpleHypergraph& a, const SimpleHypergraph& b);
SimpleHypergraph shg_mu_delta(const SimpleHypergraph& h, const Decomposition& d);

// Character evaluated on the support of a multiset image; this is how a
// character of the set-semantics monoid pulls back to multiset machinery.
Character dedup_character(const Character& zeta);

// chi over set semantics: orientations and coloring counts coincide with the
// multiset hypergraph on the same edges, only the character sees deduplicated
// images.
Rational simple_chi(const SimpleHypergraph& h, const Character& zeta, const Integer& n, Budget budget = {});
RationalPolynomial simple_chi_polynomial(const SimpleHypergraph& h, const Character& zeta, Budget budget = {});

// Definition-level oracle using the set-semantics structure maps.
Rational simple_chi_oracle(const SimpleHypergraph& h, const Character& zeta, int n, Budget budget = {});

}  // namespace hopfchi
