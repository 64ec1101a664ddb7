#pragma once

#include "hopfchi/simple_hypergraph.hpp"

namespace hopfchi {

// Building set: contains every singleton and is closed under unions of
// intersecting members.
class BuildingSet {
public:
    BuildingSet() = default;
    BuildingSet(GroundSet ground, std::vector<Subset> connected_sets);  // validates

    const GroundSet& ground() const { return ground_; }
    const std::vector<Subset>& connected_sets() const { return sets_; }
    SimpleHypergraph as_simple_hypergraph() const { return SimpleHypergraph(ground_, sets_); }
    Hypergraph as_hypergraph() const { return Hypergraph(ground_, sets_); }

    // Maximal connected sets contained in `within` (the vertex components of
    // the restricted building set).
    std::vector<Subset> components_within(Subset within) const;

    friend bool operator==(const BuildingSet&, const BuildingSet&) = default;

private:
    GroundSet ground_;
    std::vector<Subset> sets_;
};

// Rooted forest on the blocks of a partition of the ground set, stored as
// (block, parent block) pairs in canonical block order; roots carry parent 0.
class BForest {
public:
    BForest(GroundSet ground, std::vector<std::pair<Subset, Subset>> nodes);

    const GroundSet& ground() const { return ground_; }
    const std::vector<std::pair<Subset, Subset>>& nodes() const { return nodes_; }
    int node_count() const { return static_cast<int>(nodes_.size()); }

    // Depth-sorted traversal helpers.
    std::vector<int> parents() const;        // node index -> parent index or -1
    std::vector<int> depths() const;         // node index -> distance from its root
    std::vector<Subset> blocks() const;

    friend bool operator==(const BForest&, const BForest&) = default;
    friend bool operator<(const BForest& a, const BForest& b) { return a.nodes_ < b.nodes_; }

private:
    GroundSet ground_;
    std::vector<std::pair<Subset, Subset>> nodes_;
};

// All B-forests: per connected component, choose a root block, recurse on the
// maximal connected sets avoiding it.
std::vector<BForest> enumerate_bforests(const BuildingSet& b, Budget budget = {});

// The bijection with acyclic orientations of the building set seen as a
// simple hypergraph: every connected set is oriented onto its trace in the
// highest forest node it meets; the induced building set B∩F is the
// orientation image.
Orientation bforest_to_orientation(const BuildingSet& b, const BForest& forest);
BForest orientation_to_bforest(const BuildingSet& b, const Orientation& f);
SimpleHypergraph induced_building_set(const BuildingSet& b, const BForest& forest);

// Colorings constant on blocks and increasing towards the root; strictly or
// weakly.
Integer forest_strict_colorings(const BForest& forest, int n);
Integer forest_compatible_colorings(const BForest& forest, int n);

Rational bs_chi(const BuildingSet& b, const Character& zeta, const Integer& n, Budget budget = {});
RationalPolynomial bs_chi_polynomial(const BuildingSet& b, const Character& zeta, Budget budget = {});

}  // namespace hopfchi
