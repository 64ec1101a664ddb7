#include "hopfchi/polytope.hpp"

namespace hopfchi {

Face face_of(const HypergraphicPolytope& p, const Orientation& f) {
    Hypergraph image = image_hypergraph(f);
    int dim = p.generator().vertex_count() - component_count(image);
    return Face{f, std::move(image), dim};
}

std::vector<Face> faces(const HypergraphicPolytope& p, Budget budget) {
    std::vector<Face> out;
    for (const Orientation& f : enumerate_acyclic(p.generator(), budget)) out.push_back(face_of(p, f));
    return out;
}

Face maximal_face(const HypergraphicPolytope& p, const Coloring& y) {
    return face_of(p, max_orientation(p.generator(), y));
}

Rational chi_gp(const HypergraphicPolytope& p, const Character& face_zeta, const Integer& n, Budget budget) {
    // identical to the hypergraph orientation formula; the sign
    // (-1)^{|V| - dim Q} equals (-1)^{cc(image)}
    return chi_orientation(p.generator(), face_zeta, n, budget);
}

RationalPolynomial chi_gp_polynomial(const HypergraphicPolytope& p, const Character& face_zeta, Budget budget) {
    int v = p.generator().vertex_count();
    std::vector<std::pair<Integer, Rational>> points;
    for (int n = 0; n <= v; ++n) points.push_back({Integer(n), chi_gp(p, face_zeta, Integer(n), budget)});
    return lagrange_interpolate(points);
}

Integer polytope_vertex_count(const Hypergraph& image, Budget budget) {
    Integer count = 0;
    for_each_acyclic(image, [&](const std::vector<Subset>& images) {
        for (Subset s : images)
            if (popcount(s) != 1) return;
        ++count;
    }, budget);
    return count;
}

Integer vertex_count_sum(const HypergraphicPolytope& p, int n, Budget budget) {
    if (n < 1) throw ValidationError("vertex_count_sum: n must be positive");
    StepCounter steps(budget);
    Integer total = 0;
    for (const Coloring& c : ColoringRange(p.generator().ground(), n)) {
        steps.charge();
        total += polytope_vertex_count(maximal_face(p, c).image, budget);
    }
    return total;
}

std::vector<int> vertex_coordinates(const Face& face) {
    if (face.dimension != 0) throw ValidationError("vertex_coordinates: face is not a vertex");
    std::vector<int> coords(static_cast<std::size_t>(face.orientation.host().vertex_count()), 0);
    for (Subset img : face.orientation.images()) ++coords[static_cast<std::size_t>(lowest_bit(img))];
    return coords;
}

bool zeta_faces_even(const HypergraphicPolytope& p, const Character& face_zeta, Budget budget) {
    for (const Face& face : faces(p, budget))
        if (evaluate_character(face_zeta, face.image) != 0 && face.dimension % 2 != 0) return false;
    return true;
}

}  // namespace hopfchi
