#pragma once

#include "hopfchi/building_set.hpp"
#include "hopfchi/graph.hpp"

namespace hopfchi {

// The second Hopf structure on simple graphs: restriction is the induced
// subgraph (ripping out), contraction joins vertices connected through the
// removed set (sewing through).
Graph rs_restrict(const Graph& g, Subset w);
Graph rs_contract(const Graph& g, Subset w);
Graph rs_product(const Graph& a, const Graph& b);
Graph rs_mu_delta(const Graph& g, const Decomposition& d);

// Graphical building set: all vertex subsets inducing a connected subgraph.
BuildingSet tubes(const Graph& g);

// Partitioning forests are exactly the B-forests of the tube building set.
std::vector<BForest> partitioning_forests(const Graph& g, Budget budget = {});

// g_F: apply rip/sew along the blocks of the forest, leaves first.
Graph ripped_sewed(const Graph& g, const BForest& forest);

Rational ripsew_chi(const Graph& g, const Character& zeta, const Integer& n, Budget budget = {});
RationalPolynomial ripsew_chi_polynomial(const Graph& g, const Character& zeta, Budget budget = {});

// Definition-level oracle over colorings and iterated rip/sew.
Rational ripsew_chi_oracle(const Graph& g, const Character& zeta, int n, Budget budget = {});

// Independent description of the basic-character invariant: colorings where
// every path with equally colored ends passes a strictly greater color.
Integer ripsew_zeta1_coloring_count(const Graph& g, int n, Budget budget = {});

}  // namespace hopfchi
