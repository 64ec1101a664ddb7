#pragma once

#include <optional>

#include "hopfchi/character.hpp"
#include "hopfchi/invariant.hpp"

namespace hopfchi {

// Simple graph: a set of 2-element edges over a ground set.
class Graph {
public:
    Graph() = default;
    Graph(GroundSet ground, std::vector<Subset> edges);  // validates size-2, dedups

    const GroundSet& ground() const { return ground_; }
    const std::vector<Subset>& edges() const { return edges_; }
    int vertex_count() const { return ground_.size(); }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    Subset edge(int i) const { return edges_[static_cast<std::size_t>(i)]; }
    Hypergraph as_hypergraph() const { return Hypergraph(ground_, edges_); }
    bool has_edge(Subset e) const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    GroundSet ground_;
    std::vector<Subset> edges_;
};

// Discrete orientation of a subset of the edges; undirected edges keep their
// full image under the kappa bijection with admissible orientations.
struct PartialOrientation {
    Graph host;
    std::vector<int> head;  // per edge: the directed-to vertex, or -1 when undirected

    friend bool operator==(const PartialOrientation&, const PartialOrientation&) = default;
};

Orientation kappa(const PartialOrientation& f);
PartialOrientation kappa_inverse(const Graph& g, const Orientation& f);
bool is_acyclic(const PartialOrientation& f);

// The undirected edges of an acyclic partial orientation always form a flat:
// the full induced subgraph on the vertex blocks they span. The pair
// (flat, discrete acyclic orientation of the quotient) is the classical view.
struct FlatDecomposition {
    std::vector<Subset> blocks;  // vertex blocks of the flat, singletons included
    Graph flat;                  // union of induced subgraphs on the blocks
    Graph quotient;              // one vertex per block, labelled by its least element
    std::vector<int> quotient_head;  // discrete orientation of the quotient edges
};

FlatDecomposition flat_decomposition(const PartialOrientation& f);
PartialOrientation from_flat(const Graph& g, const std::vector<Subset>& blocks,
                             const std::vector<int>& quotient_head);

// Character of the graph monoid applied to an image hypergraph: size-1 edges
// are forgotten before evaluation.
Character graph_character(const Character& zeta);

struct GraphChiRow {
    PartialOrientation orientation;
    Rational zeta_value;
    RationalPolynomial strict_count_poly;
    FlatDecomposition flat;
};

struct GraphInvariantResult {
    RationalPolynomial polynomial;
    std::vector<GraphChiRow> breakdown;
};

Rational graph_chi(const Graph& g, const Character& zeta, const Integer& n, Budget budget = {});
GraphInvariantResult graph_chi_polynomial(const Graph& g, const Character& zeta, Budget budget = {});

// Classical chromatic-polynomial recursion T(g) = T(g - e) - T(g / e); the
// independent oracle for chi with the basic character.
RationalPolynomial deletion_contraction_chromatic(const Graph& g);

}  // namespace hopfchi
