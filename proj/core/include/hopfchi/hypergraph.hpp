#pragma once

#include <vector>

#include "hopfchi/ground_set.hpp"
#include "hopfchi/setcomb.hpp"

namespace hopfchi {

// Labeled hypergraph: a ground set plus a multiset of nonempty edges. Edges
// are held sorted in canonical order, so equality is plain member equality
// and carries both the ground set and edge multiplicities (two hypergraphs
// with the same edges over different sets are distinct).
class Hypergraph {
public:
    Hypergraph() = default;  // empty hypergraph over the empty set
    Hypergraph(GroundSet ground, std::vector<Subset> edges);

    const GroundSet& ground() const { return ground_; }
    const std::vector<Subset>& edges() const { return edges_; }
    int vertex_count() const { return ground_.size(); }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    Subset edge(int i) const { return edges_[static_cast<std::size_t>(i)]; }

    // Vertices covered by at least one edge, and their complement.
    Subset non_isolated() const;
    Subset isolated() const { return ground_.full_mask() & ~non_isolated(); }

    friend bool operator==(const Hypergraph&, const Hypergraph&) = default;

private:
    GroundSet ground_;
    std::vector<Subset> edges_;
};

// Convenience constructor from label lists.
Hypergraph make_hypergraph(const std::vector<std::string>& vertices,
                           const std::vector<std::vector<std::string>>& edges);

// h|_W: ground W, the sub-multiset of edges contained in W.
Hypergraph restrict_to(const Hypergraph& h, Subset w);

// h/_W: ground V\W, traces e ∩ (V\W) of the edges not contained in W,
// multiplicities preserved.
Hypergraph contract(const Hypergraph& h, Subset w);

// Disjoint union; ground sets must not overlap.
Hypergraph product(const Hypergraph& a, const Hypergraph& b);

// mu_D ∘ Delta_D: every edge is replaced by its subset of part-maximal
// vertices. `mu_delta_iterated` computes the same map by actually iterating
// restrict/contract and merging; the two are compared in tests.
Hypergraph mu_delta(const Hypergraph& h, const Decomposition& d);
Hypergraph mu_delta_iterated(const Hypergraph& h, const Decomposition& d);

struct ConnectedComponentSplit {
    std::vector<Subset> components;  // partition of the ground set, canonical order
    Subset isolated;                 // vertices in no edge (singleton components)
};

ConnectedComponentSplit connected_components(const Hypergraph& h);
int component_count(const Hypergraph& h);

// Sub-hypergraph induced on one component (all its incident edges).
Hypergraph component_hypergraph(const Hypergraph& h, Subset component);

}  // namespace hopfchi
