#include "hopfchi/simplicial_complex.hpp"

#include <algorithm>
#include <set>

namespace hopfchi {

SimplicialComplex::SimplicialComplex(GroundSet ground, std::vector<Subset> faces)
    : ground_(std::move(ground)), faces_(std::move(faces)) {
    std::sort(faces_.begin(), faces_.end(), lex_less);
    faces_.erase(std::unique(faces_.begin(), faces_.end()), faces_.end());
    for (Subset f : faces_) {
        if (f == 0) throw ValidationError("simplicial complex face is empty");
        if (!subset_of(f, ground_.full_mask())) throw ValidationError("face exceeds ground set");
    }
    for (Subset f : faces_)
        for (Subset sub : submasks(f, false))
            if (!std::binary_search(faces_.begin(), faces_.end(), sub, lex_less))
                throw ValidationError("simplicial complex is not downward closed (missing a subset of a face)");
}

std::vector<Subset> downward_closure(const std::vector<Subset>& faces) {
    std::set<Subset> closed;
    for (Subset f : faces)
        for (Subset sub : submasks(f, false)) closed.insert(sub);
    return {closed.begin(), closed.end()};
}

Graph one_skeleton(const SimplicialComplex& c) {
    std::vector<Subset> edges;
    for (Subset f : c.faces())
        if (popcount(f) == 2) edges.push_back(f);
    return Graph(c.ground(), edges);
}

std::vector<Subset> extend_orientation(const SimplicialComplex& c, const Orientation& skeleton_f) {
    const Graph skeleton = one_skeleton(c);
    if (skeleton_f.host() != skeleton.as_hypergraph())
        throw ValidationError("extend_orientation: orientation of a different skeleton");

    auto pair_image = [&](Subset pair) {
        for (int i = 0; i < skeleton.edge_count(); ++i)
            if (skeleton.edge(i) == pair) return skeleton_f.image(i);
        throw ValidationError("extend_orientation: missing 2-face");  // unreachable on valid complexes
    };

    std::vector<Subset> images;
    images.reserve(c.faces().size());
    for (Subset face : c.faces()) {
        if (popcount(face) == 1) {
            images.push_back(face);
            continue;
        }
        Subset image = 0;
        for (int v : bits_of(face)) {
            bool wins = true;
            for (int u : bits_of(face)) {
                if (u == v) continue;
                Subset pair = (Subset{1} << v) | (Subset{1} << u);
                if ((pair_image(pair) & (Subset{1} << v)) == 0) {
                    wins = false;
                    break;
                }
            }
            if (wins) image |= Subset{1} << v;
        }
        images.push_back(image);
    }
    return images;
}

namespace {

// zeta(f(C)) with counts from the skeleton orientation: wrap a character map
// so the machinery on the skeleton evaluates the extended face images.
Rational chi_via_skeleton(const SimplicialComplex& c, const Character& zeta, const Integer& n, Budget budget) {
    Graph skeleton = one_skeleton(c);
    Hypergraph host = skeleton.as_hypergraph();
    bool negative = n < 0;
    int m = negative ? (-n).convert_to<int>() : n.convert_to<int>();

    Rational total = 0;
    for (const Orientation& f : enumerate_acyclic(host, budget)) {
        // f(C) is a set of faces, so duplicate images collapse
        Hypergraph face_image = SimpleHypergraph(c.ground(), extend_orientation(c, f)).as_hypergraph();
        Rational zeta_value = evaluate_character(zeta, face_image);
        if (zeta_value == 0) continue;
        if (negative) {
            Rational sign = (component_count(image_hypergraph(f)) % 2 == 0) ? 1 : -1;
            total += sign * zeta_value * Rational(count_compatible_colorings_faulhaber(f, m));
        } else {
            total += zeta_value * Rational(count_strict_colorings_faulhaber(f, m));
        }
    }
    return total;
}

}  // namespace

Rational sc_chi(const SimplicialComplex& c, const Character& zeta, const Integer& n, Budget budget) {
    return chi_via_skeleton(c, zeta, n, budget);
}

RationalPolynomial sc_chi_polynomial(const SimplicialComplex& c, const Character& zeta, Budget budget) {
    int v = c.ground().size();
    std::vector<std::pair<Integer, Rational>> points;
    for (int n = 0; n <= v; ++n) points.push_back({Integer(n), sc_chi(c, zeta, Integer(n), budget)});
    return lagrange_interpolate(points);
}

void validate_extension(const SimplicialComplex& c, Budget budget) {
    Hypergraph full = c.as_simple_hypergraph().as_hypergraph();
    std::vector<Orientation> direct = enumerate_acyclic(full, budget);

    std::vector<std::vector<Subset>> extended;
    for (const Orientation& f : enumerate_acyclic(one_skeleton(c).as_hypergraph(), budget))
        extended.push_back(extend_orientation(c, f));
    std::sort(extended.begin(), extended.end());

    std::vector<std::vector<Subset>> expected;
    for (const Orientation& f : direct) expected.push_back(f.images());
    std::sort(expected.begin(), expected.end());

    if (extended != expected)
        throw DisagreementError("simplicial complex extension rule disagrees with direct enumeration");

    for (const Character* zeta : character_registry()) {
        for (int n = -2; n <= 2; ++n) {
            Rational via_skeleton = sc_chi(c, *zeta, Integer(n), budget);
            Rational via_faces = simple_chi(c.as_simple_hypergraph(), *zeta, Integer(n), budget);
            if (via_skeleton != via_faces)
                throw DisagreementError("sc_chi disagrees with the direct face-set evaluation");
        }
    }
}

}  // namespace hopfchi
