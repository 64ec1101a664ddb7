#pragma once

#include "hopfchi/graph.hpp"
#include "hopfchi/simple_hypergraph.hpp"

namespace hopfchi {

// Abstract simplicial complex: faces closed under nonempty subsets.
class SimplicialComplex {
public:
    SimplicialComplex() = default;
    SimplicialComplex(GroundSet ground, std::vector<Subset> faces);  // validates downward closure

    const GroundSet& ground() const { return ground_; }
    const std::vector<Subset>& faces() const { return faces_; }
    SimpleHypergraph as_simple_hypergraph() const { return SimpleHypergraph(ground_, faces_); }

    friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

private:
    GroundSet ground_;
    std::vector<Subset> faces_;
};

// Downward closure of a set of generating faces (document loading helper).
std::vector<Subset> downward_closure(const std::vector<Subset>& faces);

Graph one_skeleton(const SimplicialComplex& c);

// Extend an acyclic orientation of the 1-skeleton to every face: a vertex
// belongs to the image of a face when it wins or ties every 2-face inside it.
// This is the only extension compatible with the inclusion constraints.
std::vector<Subset> extend_orientation(const SimplicialComplex& c, const Orientation& skeleton_f);

// chi over the complex: skeleton orientations carry the coloring counts, the
// character sees the extended face images.
Rational sc_chi(const SimplicialComplex& c, const Character& zeta, const Integer& n, Budget budget = {});
RationalPolynomial sc_chi_polynomial(const SimplicialComplex& c, const Character& zeta, Budget budget = {});

// Cross-check of the extension rule: the extended orientations must be
// exactly the acyclic orientations of the full face set, and sc_chi must
// match the direct set-semantics chi. Throws DisagreementError on mismatch.
void validate_extension(const SimplicialComplex& c, Budget budget = {});

}  // namespace hopfchi
