#pragma once

#include <vector>

#include "hopfchi/budget.hpp"
#include "hopfchi/character.hpp"
#include "hopfchi/invariant.hpp"
#include "hopfchi/orientation.hpp"

namespace hopfchi {

// Minkowski sum of standard simplices, one per generator edge. Never
// materialized as coordinates: every face question is answered through the
// correspondence with acyclic orientations of the generator.
class HypergraphicPolytope {
public:
    explicit HypergraphicPolytope(Hypergraph generator) : generator_(std::move(generator)) {}
    const Hypergraph& generator() const { return generator_; }

    friend bool operator==(const HypergraphicPolytope&, const HypergraphicPolytope&) = default;

private:
    Hypergraph generator_;
};

// One face per acyclic orientation; |V| - dimension = cc(image).
struct Face {
    Orientation orientation;
    Hypergraph image;
    int dimension = 0;
};

Face face_of(const HypergraphicPolytope& p, const Orientation& f);
std::vector<Face> faces(const HypergraphicPolytope& p, Budget budget = {});

// The face maximizing the coloring seen as a direction, i.e. the face whose
// orientation is max_orientation(generator, y).
Face maximal_face(const HypergraphicPolytope& p, const Coloring& y);

// chi of the polytope for a character on faces (evaluated on image
// hypergraphs). n >= 0 counts strictly compatible cone colorings; n < 0
// weighs compatible ones by (-1)^{|V| - dim}.
Rational chi_gp(const HypergraphicPolytope& p, const Character& face_zeta, const Integer& n, Budget budget = {});

// Polynomial in n via interpolation of chi_gp at 0..|V|.
RationalPolynomial chi_gp_polynomial(const HypergraphicPolytope& p, const Character& face_zeta,
                                     Budget budget = {});

// Sum over all colorings c of the number of vertices (0-faces) of the
// c-maximal face; equals (-1)^{|V|} chi^{zeta1}(-n), which the verification
// suite asserts.
Integer vertex_count_sum(const HypergraphicPolytope& p, int n, Budget budget = {});

// Number of vertices of the subpolytope spanned by `image` (its discrete
// acyclic orientation count).
Integer polytope_vertex_count(const Hypergraph& image, Budget budget = {});

// Display-only coordinates of a 0-dimensional face: entry v counts the
// generator edges oriented onto v.
std::vector<int> vertex_coordinates(const Face& face);

// True when every zeta-support face of p has even dimension; the reciprocity
// count interpretation needs this (checked per instance).
bool zeta_faces_even(const HypergraphicPolytope& p, const Character& face_zeta, Budget budget = {});

}  // namespace hopfchi
